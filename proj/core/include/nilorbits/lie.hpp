#pragma once

#include <random>
#include <utility>
#include <vector>

#include "nilorbits/matrix.hpp"
#include "nilorbits/partition.hpp"

namespace nilorbits {

// Commutator [a, b] = ab - ba.
Mat bracket(const Mat& a, const Mat& b);

// Upper triangular Jordan block of size j with ones on the superdiagonal.
Mat jordan_block(int j);

// Block matrices for a partition, blocks in decreasing part order:
//   jordan_nilpotent: direct sum of Jordan blocks (the X of the triple),
//   weight_diagonal:  diag(j-1, j-3, ..., 1-j) per block (the H),
//   lowering_matrix:  subdiagonal entries k(j-k) per block (the Y).
Mat jordan_nilpotent(const Partition& lambda);
Mat weight_diagonal(const Partition& lambda);
Mat lowering_matrix(const Partition& lambda);

struct LieTriple {
  Mat Y, H, X;
};

// Exact check of [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H.
bool is_lie_triple(const LieTriple& t);

// Jordan type of a nilpotent matrix, from the rank sequence of its powers.
// Throws when X is not nilpotent.
Partition jordan_partition(const Mat& x);

// Invertible C with C^(-1) X C = jordan_nilpotent(jordan_partition(X)),
// built from Jordan chains chosen deterministically.
Mat jordan_basis(const Mat& x);

// The alternating form [[0, I], [-I, 0]] in the basis (p_1..p_n, q_1..q_n).
Mat symplectic_form(int n);

// Membership tests for sp(2n) and Sp(2n) with respect to symplectic_form.
bool in_sp(const Mat& a);
bool in_sp_group(const Mat& g);

// Basis of sp(2n) in a fixed deterministic order.
std::vector<Mat> sp_basis(int n);

// Lie triple through a nilpotent X, from two exact linear solves: first
// H = [X, W] with [[X, W], X] = 2X, then Y with [X, Y] = H and [H, Y] = -2Y.
// With symplectic set, all parameters range over sp and the triple lies in
// sp. Deterministic: free variables of each solve are set to zero.
LieTriple jacobson_morozov(const Mat& x, bool symplectic);

// The second solve alone, for a prescribed semisimple H.
LieTriple complete_triple(const Mat& x, const Mat& h, bool symplectic);

// Random elements of SL_n(Q) and Sp_2n(Q) as products of elementary
// matrices / symplectic transvections; returns (g, g^(-1)) exactly.
std::pair<Mat, Mat> random_sl_element(int n, std::mt19937_64& rng, int factors = 10);
std::pair<Mat, Mat> random_sp_element(int n, std::mt19937_64& rng, int factors = 8);

}  // namespace nilorbits
