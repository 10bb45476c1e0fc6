#include "nilorbits/local_field.hpp"

#include <numeric>
#include <stdexcept>

namespace nilorbits {

namespace {

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

long val_of_long(long n, long p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long pow_long(long b, long e) {
  long r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > (1L << 62) / b) throw std::overflow_error("modulus too large");
    r *= b;
  }
  return r;
}

long modpow(long base, long exp, long mod) {
  mpz_class b(base), e(exp), m(mod), r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r.get_si();
}

}  // namespace

std::string to_string(SquareClass c) {
  switch (c) {
    case SquareClass::One:
      return "1";
    case SquareClass::Eps:
      return "eps";
    case SquareClass::Pi:
      return "pi";
    case SquareClass::EpsPi:
      return "eps*pi";
  }
  return "?";
}

LocalField::LocalField(long p) : p_(p) {
  if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
  m1sq_ = (p % 4 == 1);
  if (m1sq_) {
    long e = 2;
    while (modpow(e, (p - 1) / 2, p) == 1) ++e;
    eps_ = Rat(e);
  } else {
    eps_ = Rat(-1);
  }
}

long LocalField::val(const Rat& a) const {
  if (a == 0) throw std::invalid_argument("valuation of zero");
  mpz_class pz(p_), tmp;
  long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), a.get_num_mpz_t(), pz.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), a.get_den_mpz_t(), pz.get_mpz_t()));
  return vn - vd;
}

std::optional<long> LocalField::valuation(const Rat& a) const {
  if (a == 0) return std::nullopt;
  return val(a);
}

Rat LocalField::unit_part(const Rat& a) const {
  long v = val(a);
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p_),
                static_cast<unsigned long>(v >= 0 ? v : -v));
  return v >= 0 ? Rat(a / Rat(pw)) : Rat(a * Rat(pw));
}

long LocalField::residue(const Rat& unit, long modulus) const {
  mpz_class m(modulus);
  mpz_class num = mpz_class(unit.get_num()) % m;
  mpz_class den = mpz_class(unit.get_den()) % m;
  mpz_class deninv;
  if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::invalid_argument("denominator not invertible mod p^k");
  mpz_class r = (num * deninv) % m;
  if (r < 0) r += m;
  return r.get_si();
}

int LocalField::legendre(const Rat& unit) const {
  long r = residue(unit, p_);
  if (r == 0) throw std::invalid_argument("legendre of non-unit");
  return modpow(r, (p_ - 1) / 2, p_) == 1 ? 1 : -1;
}

SquareClass LocalField::square_class(const Rat& a) const {
  if (a == 0) throw std::invalid_argument("square class of zero");
  long v = ((val(a) % 2) + 2) % 2;
  bool nonsq = legendre(unit_part(a)) < 0;
  if (v == 0) return nonsq ? SquareClass::Eps : SquareClass::One;
  return nonsq ? SquareClass::EpsPi : SquareClass::Pi;
}

Rat LocalField::class_representative(SquareClass c) const {
  switch (c) {
    case SquareClass::One:
      return Rat(1);
    case SquareClass::Eps:
      return eps_;
    case SquareClass::Pi:
      return Rat(p_);
    case SquareClass::EpsPi:
      return eps_ * Rat(p_);
  }
  throw std::logic_error("bad square class");
}

SquareClass LocalField::square_class_mul(SquareClass a, SquareClass b) {
  int x = static_cast<int>(a), y = static_cast<int>(b);
  // Encoding: bit 0 = non-square unit part, bit 1 = odd valuation.
  int ax = (x == 1 || x == 3) ? 1 : 0, av = (x >= 2) ? 1 : 0;
  int bx = (y == 1 || y == 3) ? 1 : 0, bv = (y >= 2) ? 1 : 0;
  int cx = ax ^ bx, cv = av ^ bv;
  if (cv == 0) return cx ? SquareClass::Eps : SquareClass::One;
  return cx ? SquareClass::EpsPi : SquareClass::Pi;
}

int LocalField::hilbert(SquareClass a, SquareClass b) const {
  // Rows/columns ordered (1, eps, pi, eps*pi); first table for -1 a square.
  static const int table_m1_square[4][4] = {
      {1, 1, 1, 1},
      {1, 1, -1, -1},
      {1, -1, 1, -1},
      {1, -1, -1, 1},
  };
  static const int table_m1_nonsquare[4][4] = {
      {1, 1, 1, 1},
      {1, 1, -1, -1},
      {1, -1, -1, 1},
      {1, -1, 1, -1},
  };
  int i = static_cast<int>(a), j = static_cast<int>(b);
  return m1sq_ ? table_m1_square[i][j] : table_m1_nonsquare[i][j];
}

int LocalField::hilbert(const Rat& a, const Rat& b) const {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol of zero");
  return hilbert(square_class(a), square_class(b));
}

LocalField::PowerClassCount LocalField::power_class_count(long m) const {
  if (m < 1) throw std::invalid_argument("m must be positive");
  long unit = std::gcd(m, p_ - 1) * pow_long(p_, val_of_long(m, p_));
  return {unit, m * unit};
}

const std::set<long>& LocalField::mth_power_residues(long m) const {
  auto it = power_residues_.find(m);
  if (it != power_residues_.end()) return it->second;
  long modulus = pow_long(p_, 2 * val_of_long(m, p_) + 1);
  if (modulus > 10'000'000L) throw std::overflow_error("p^(2 val(m)+1) too large to enumerate");
  std::set<long> s;
  for (long w = 1; w < modulus; ++w) {
    if (w % p_ == 0) continue;
    s.insert(modpow(w, m, modulus));
  }
  return power_residues_.emplace(m, std::move(s)).first->second;
}

bool LocalField::unit_is_mth_power(const Rat& w, long m) const {
  if (m == 1) return true;
  if (m % p_ != 0) {
    long r = residue(w, p_);
    return modpow(r, (p_ - 1) / std::gcd(m, p_ - 1), p_) == 1;
  }
  long modulus = pow_long(p_, 2 * val_of_long(m, p_) + 1);
  return mth_power_residues(m).count(residue(w, modulus)) > 0;
}

bool LocalField::same_unit_class(const Rat& u, const Rat& v, long m) const {
  if (u == 0 || v == 0 || val(u) != 0 || val(v) != 0)
    throw std::invalid_argument("unit class comparison needs valuation-0 elements");
  return unit_is_mth_power(u / v, m);
}

const std::vector<long>& LocalField::unit_class_reps(long m) const {
  auto it = unit_reps_.find(m);
  if (it != unit_reps_.end()) return it->second;
  long target = power_class_count(m).unit_classes;
  std::vector<long> reps;
  for (long t = 1; static_cast<long>(reps.size()) < target; ++t) {
    if (t % p_ == 0) continue;
    bool fresh = true;
    for (long r : reps)
      if (same_unit_class(Rat(t), Rat(r), m)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(t);
  }
  return unit_reps_.emplace(m, std::move(reps)).first->second;
}

std::vector<Rat> LocalField::class_reps(long m) const {
  const std::vector<long>& units = unit_class_reps(m);
  std::vector<Rat> out;
  Rat pw(1);
  for (long a = 0; a < m; ++a) {
    for (long u : units) out.push_back(pw * Rat(u));
    pw *= Rat(p_);
  }
  return out;
}

PowerClass LocalField::power_class(const Rat& a, long m) const {
  if (a == 0) throw std::invalid_argument("power class of zero");
  if (m < 1) throw std::invalid_argument("m must be positive");
  long v = ((val(a) % m) + m) % m;
  Rat u = unit_part(a);
  const std::vector<long>& reps = unit_class_reps(m);
  for (size_t i = 0; i < reps.size(); ++i)
    if (same_unit_class(u, Rat(reps[i]), m)) return {m, v, static_cast<long>(i)};
  throw std::logic_error("unit class representative search failed");
}

Rat LocalField::representative(const PowerClass& c) const {
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p_),
                static_cast<unsigned long>(c.val_mod));
  return Rat(pw) * Rat(unit_class_reps(c.m).at(c.unit_index));
}

}  // namespace nilorbits
