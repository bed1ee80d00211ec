#include "qmhs/rings.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace qmhs {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

RatPoly q_int_poly(long k) {
  // [k]_q = 1 + q + ... + q^(k-1)
  return RatPoly(std::vector<Rat>(static_cast<std::size_t>(k), Rat(1)));
}

}  // namespace

std::shared_ptr<const Modulus> Modulus::make(long prime, int exponent) {
  if (!is_prime(prime)) throw RingError("modulus base must be prime, got " + std::to_string(prime));
  if (exponent < 1) throw RingError("modulus exponent must be >= 1");
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::shared_ptr<const Modulus>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = table[{prime, exponent}];
  if (!slot) {
    RatPoly base = q_int_poly(prime);
    RatPoly poly = RatPoly::one();
    for (int i = 0; i < exponent; ++i) poly = poly * base;
    slot.reset(new Modulus(prime, exponent, std::move(poly)));
  }
  return slot;
}

RatPoly Modulus::reduce_rep(const RatPoly& f) const {
  if (f.degree() < degree()) return f;
  if (exponent_ == 1) {
    // q^p = 1 folds every exponent into 0..p-1; then q^(p-1) = -[p-1]_q
    // clears the top slot.
    const long p = prime_;
    std::vector<Rat> c(static_cast<std::size_t>(p));
    for (long j = 0; j <= f.degree(); ++j) {
      const Rat& v = f.coeff(static_cast<std::size_t>(j));
      if (v != 0) c[static_cast<std::size_t>(j % p)] += v;
    }
    const Rat top = c.back();
    c.pop_back();
    if (top != 0)
      for (auto& v : c) v -= top;
    return RatPoly(std::move(c));
  }
  return divrem(f, poly_).second;
}

bool Modulus::cache_get(long key, RatPoly& out) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto it = inv_cache_.find(key);
  if (it == inv_cache_.end()) return false;
  out = it->second;
  return true;
}

void Modulus::cache_put(long key, RatPoly rep) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  inv_cache_.emplace(key, std::move(rep));
}

Residue::Residue(const RatPoly& f, ModulusPtr m) : mod_(std::move(m)) {
  if (!mod_) throw RingError("residue without a modulus");
  rep_ = mod_->reduce_rep(f);
}

Rat Residue::constant_value() const {
  if (!is_constant()) throw RingError("residue is not a rational constant");
  return rep_.coeff(0);
}

void Residue::check_same(const Residue& o) const {
  if (!mod_->same_as(*o.mod_)) throw RingError("residues under different moduli");
}

Residue Residue::operator+(const Residue& o) const {
  check_same(o);
  return Residue(rep_ + o.rep_, mod_);
}

Residue Residue::operator-(const Residue& o) const {
  check_same(o);
  return Residue(rep_ - o.rep_, mod_);
}

Residue Residue::operator*(const Residue& o) const {
  check_same(o);
  return Residue(rep_ * o.rep_, mod_);
}

Residue Residue::operator-() const { return Residue(-rep_, mod_); }

Residue Residue::scaled(const Rat& v) const { return Residue(rep_.scaled(v), mod_); }

Residue Residue::inv() const {
  auto [d, a, b] = ext_gcd(rep_, mod_->poly());
  if (d.degree() != 0)
    throw NonUnitError("residue is not invertible; gcd with the modulus is " + d.str("q"), d);
  return Residue(a, mod_);
}

Residue Residue::pow(long e) const {
  Residue base = e < 0 ? inv() : *this;
  if (e < 0) e = -e;
  if (e == 0) return Residue::one(mod_);
  while (!(e & 1)) {
    base = base * base;
    e >>= 1;
  }
  Residue out = base;
  e >>= 1;
  while (e > 0) {
    base = base * base;
    if (e & 1) out = out * base;
    e >>= 1;
  }
  return out;
}

bool Residue::operator==(const Residue& o) const {
  check_same(o);
  return rep_ == o.rep_;
}

Residue reduce(const RatPoly& f, const ModulusPtr& m) { return Residue(f, m); }

Residue q_int(long k, const ModulusPtr& m) {
  if (k < 1) throw RingError("q-integer index must be >= 1");
  return Residue(q_int_poly(k), m);
}

namespace {

// Newton steps x <- x(2 - ax) until ax = 1 holds at the full exponent; each
// step doubles the [p]_q-adic precision of the seed.
Residue lift_inverse(const Residue& a, Residue x, const ModulusPtr& m) {
  const Residue two = Residue::from_rat(Rat(2), m);
  for (int have = 1; have < m->exponent(); have *= 2) x = x * (two - a * x);
  return x;
}

}  // namespace

Residue q_int_inv(long k, const ModulusPtr& m) {
  if (k < 1) throw RingError("q-integer index must be >= 1");
  const long p = m->prime();
  if (k % p == 0)
    throw NonUnitError("residue is not invertible; gcd with the modulus is " +
                           q_int_poly(p).str("q"),
                       q_int_poly(p));
  RatPoly rep;
  if (!m->cache_get(k, rep)) {
    const long kp = k % p;
    long a = kp, b = p, x0 = 1, x1 = 0;
    while (b != 0) {
      const long t = a / b;
      a -= t * b;
      std::swap(a, b);
      x0 -= t * x1;
      std::swap(x0, x1);
    }
    const long kinv = ((x0 % p) + p) % p;
    // [kinv]_{q^k} = sum of q^(i*k), exponents folded by q^p = 1.
    std::vector<Rat> c(static_cast<std::size_t>(p));
    for (long i = 0; i < kinv; ++i) c[static_cast<std::size_t>((i * kp) % p)] += Rat(1);
    Residue x(RatPoly(std::move(c)), m);
    rep = lift_inverse(q_int(k, m), x, m).rep();
    m->cache_put(k, rep);
  }
  return Residue(rep, m);
}

Residue one_minus_q_inv(const ModulusPtr& m) {
  RatPoly rep;
  if (!m->cache_get(0, rep)) {
    const long p = m->prime();
    // (q - 1) sum_j j q^j = p mod [p]_q, so the seed is -(1/p) sum_j j q^j.
    std::vector<Rat> c(static_cast<std::size_t>(p));
    for (long j = 0; j < p; ++j) c[static_cast<std::size_t>(j)] = make_rat(Int(-j), Int(p));
    Residue x(RatPoly(std::move(c)), m);
    Residue a(RatPoly(std::vector<Rat>{Rat(1), Rat(-1)}), m);
    rep = lift_inverse(a, x, m).rep();
    m->cache_put(0, rep);
  }
  return Residue(rep, m);
}

IntPoly cyclotomic(long s) {
  if (s < 1) throw RingError("cyclotomic index must be >= 1");
  static std::mutex mu;
  static std::map<long, IntPoly> table;
  std::lock_guard<std::mutex> lock(mu);
  auto it = table.find(s);
  if (it != table.end()) return it->second;

  // Phi_s = (t^s - 1) / prod of Phi_d over proper divisors d of s; compute
  // recursively with the table already holding every proper divisor needed.
  std::vector<long> divisors;
  for (long d = 1; d < s; ++d)
    if (s % d == 0) divisors.push_back(d);

  std::map<long, IntPoly>& memo = table;
  // fill missing divisors bottom-up; divisor list is ascending
  for (long d : divisors) {
    if (memo.count(d)) continue;
    RatPoly num = to_rat_poly(IntPoly::monomial(Int(1), static_cast<std::size_t>(d)) -
                              IntPoly::one());
    for (long dd = 1; dd < d; ++dd)
      if (d % dd == 0) {
        auto [quo, rem] = divrem(num, to_rat_poly(memo.at(dd)));
        if (!rem.is_zero()) throw RingError("cyclotomic division left a remainder");
        num = quo;
      }
    std::vector<Int> c;
    for (const auto& v : num.coeffs()) {
      if (!is_integer(v)) throw RingError("cyclotomic polynomial with fractional coefficient");
      c.push_back(rat_num(v));
    }
    memo.emplace(d, IntPoly(std::move(c)));
  }

  RatPoly num = to_rat_poly(IntPoly::monomial(Int(1), static_cast<std::size_t>(s)) -
                            IntPoly::one());
  for (long d : divisors) {
    auto [quo, rem] = divrem(num, to_rat_poly(memo.at(d)));
    if (!rem.is_zero()) throw RingError("cyclotomic division left a remainder");
    num = quo;
  }
  std::vector<Int> c;
  for (const auto& v : num.coeffs()) {
    if (!is_integer(v)) throw RingError("cyclotomic polynomial with fractional coefficient");
    c.push_back(rat_num(v));
  }
  auto [pos, inserted] = table.emplace(s, IntPoly(std::move(c)));
  (void)inserted;
  return pos->second;
}

}  // namespace qmhs
