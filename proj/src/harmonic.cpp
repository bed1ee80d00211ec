#include "qmhs/harmonic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>
#include <utility>
#include <vector>

#include "qmhs/combinat.hpp"
#include "qmhs/series.hpp"

namespace qmhs {

Index::Index(std::vector<long> s, std::vector<long> t) : s_(std::move(s)), t_(std::move(t)) {
  if (s_.size() != t_.size()) throw RingError("exponents and modifier differ in length");
  for (long v : s_)
    if (v < 1) throw RingError("exponents must be positive");
  for (long v : t_)
    if (v < 0) throw RingError("modifier entries must be nonnegative");
}

namespace {

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw RingError("malformed integer list: " + text);
    }
    if (used != item.size()) throw RingError("malformed integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw RingError("empty integer list");
  return out;
}

}  // namespace

Index Index::parse(const std::string& s_text, const std::string& t_text) {
  std::vector<long> s = parse_long_list(s_text);
  std::vector<long> t;
  if (t_text.empty())
    t.assign(s.size(), 0);
  else
    t = parse_long_list(t_text);
  return Index(std::move(s), std::move(t));
}

Index Index::repeat(long s, long t, long depth) {
  return Index(std::vector<long>(static_cast<std::size_t>(depth), s),
               std::vector<long>(static_cast<std::size_t>(depth), t));
}

long Index::weight() const {
  long w = 0;
  for (long v : s_) w += v;
  return w;
}

bool Index::trivial_modifier() const {
  for (long v : t_)
    if (v != 0) return false;
  return true;
}

bool Index::operator<(const Index& o) const {
  if (s_ != o.s_) return s_ < o.s_;
  return t_ < o.t_;
}

std::string Index::str() const {
  std::string out;
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s_[i]);
  }
  if (!trivial_modifier()) {
    out += "@";
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(t_[i]);
    }
  }
  return out;
}

namespace {

// q^e as a residue; a monomial reduces in one fold or division pass, cheaper
// than a power chain.
Residue q_power(long e, const ModulusPtr& m) {
  return Residue(RatPoly::monomial(Rat(1), static_cast<std::size_t>(e)), m);
}

struct SumKey {
  long prime;
  int exponent;
  long n;
  std::vector<long> s, t;
  bool operator<(const SumKey& o) const {
    return std::tie(prime, exponent, n, s, t) < std::tie(o.prime, o.exponent, o.n, o.s, o.t);
  }
};

// Evaluated sums recur heavily across checks and sweeps; the representative
// is canonical, so sharing it keeps results identical under any schedule.
std::mutex sum_memo_mu;
std::map<SumKey, RatPoly> sum_memo;

Residue h_sum_fresh(const Index& idx, long n, const ModulusPtr& m) {
  const long ell = idx.depth();

  std::vector<Residue> inv;
  inv.reserve(static_cast<std::size_t>(n) + 1);
  inv.push_back(Residue::one(m));  // index 0 unused
  for (long k = 1; k <= n; ++k) inv.push_back(q_int_inv(k, m));

  long max_s = 1;
  for (long v : idx.s()) max_s = std::max(max_s, v);

  std::vector<Residue> acc;
  acc.reserve(static_cast<std::size_t>(ell) + 1);
  acc.push_back(Residue::one(m));
  for (long j = 1; j <= ell; ++j) acc.push_back(Residue::zero(m));

  std::vector<Residue> ipow;  // ipow[s] = [k]_q^(-s), rebuilt per k
  for (long k = 1; k <= n; ++k) {
    ipow.assign(1, Residue::one(m));
    ipow.push_back(inv[static_cast<std::size_t>(k)]);
    for (long s = 2; s <= max_s; ++s) ipow.push_back(ipow.back() * ipow[1]);
    for (long j = ell; j >= 1; --j) {
      const std::size_t uj = static_cast<std::size_t>(j);
      Residue factor = ipow[static_cast<std::size_t>(idx.s()[uj - 1])];
      if (idx.t()[uj - 1] != 0) factor = factor * q_power(k * idx.t()[uj - 1], m);
      acc[uj] = acc[uj] + acc[uj - 1] * factor;
    }
  }
  return acc[static_cast<std::size_t>(ell)];
}

}  // namespace

Residue h_sum(const Index& idx, long n, const ModulusPtr& m) {
  if (idx.depth() == 0) return Residue::one(m);
  if (n < idx.depth()) return Residue::zero(m);

  SumKey key{m->prime(), m->exponent(), n, idx.s(), idx.t()};
  {
    std::lock_guard<std::mutex> lock(sum_memo_mu);
    auto it = sum_memo.find(key);
    if (it != sum_memo.end()) return Residue(it->second, m);
  }
  Residue out = h_sum_fresh(idx, n, m);
  std::lock_guard<std::mutex> lock(sum_memo_mu);
  sum_memo.emplace(std::move(key), out.rep());
  return out;
}

Residue h_norm(const Index& idx, long n, const ModulusPtr& m) {
  return h_sum(idx, n, m) * one_minus_q_inv(m).pow(idx.weight());
}

namespace {

using TermMap = std::map<Index, Int>;

Index prepend(long s_head, long t_head, const Index& rest) {
  std::vector<long> s{s_head}, t{t_head};
  s.insert(s.end(), rest.s().begin(), rest.s().end());
  t.insert(t.end(), rest.t().begin(), rest.t().end());
  return Index(std::move(s), std::move(t));
}

Index tail(const Index& idx) {
  return Index(std::vector<long>(idx.s().begin() + 1, idx.s().end()),
               std::vector<long>(idx.t().begin() + 1, idx.t().end()));
}

TermMap stuffle_map(const Index& a, const Index& b) {
  if (a.depth() == 0) return {{b, Int(1)}};
  if (b.depth() == 0) return {{a, Int(1)}};
  TermMap out;
  auto absorb = [&out](long s_head, long t_head, const TermMap& sub) {
    for (const auto& [idx, mult] : sub) out[prepend(s_head, t_head, idx)] += mult;
  };
  absorb(a.s()[0], a.t()[0], stuffle_map(tail(a), b));
  absorb(b.s()[0], b.t()[0], stuffle_map(a, tail(b)));
  absorb(a.s()[0] + b.s()[0], a.t()[0] + b.t()[0], stuffle_map(tail(a), tail(b)));
  return out;
}

}  // namespace

std::vector<StuffleTerm> stuffle_expand(const Index& a, const Index& b) {
  std::vector<StuffleTerm> out;
  for (auto& [idx, mult] : stuffle_map(a, b)) out.push_back(StuffleTerm{idx, mult});
  return out;
}

Residue homo_recursion(long s, long ell, const ModulusPtr& m) {
  if (s < 1) throw RingError("homogeneous exponent must be positive");
  if (ell < 0) throw RingError("depth must be nonnegative");
  const long n = m->prime() - 1;

  std::vector<Residue> depth1;  // depth1[w] = hnorm(w*s; n), w = 1..ell
  depth1.reserve(static_cast<std::size_t>(ell) + 1);
  depth1.push_back(Residue::one(m));  // index 0 unused
  for (long w = 1; w <= ell; ++w)
    depth1.push_back(h_norm(Index({w * s}, {0}), n, m));

  std::vector<Residue> v;
  v.reserve(static_cast<std::size_t>(ell) + 1);
  v.push_back(Residue::one(m));
  for (long j = 1; j <= ell; ++j) {
    Residue acc = Residue::zero(m);
    for (long k = 0; k < j; ++k) {
      Residue term = depth1[static_cast<std::size_t>(j - k)] * v[static_cast<std::size_t>(k)];
      if ((j - k - 1) % 2 != 0) term = -term;
      acc = acc + term;
    }
    v.push_back(acc.scaled(Rat(1) / Rat(j)));
  }
  return v[static_cast<std::size_t>(ell)];
}

std::vector<Rat> p_series(long p, long order) {
  if (!is_prime(p)) throw RingError("p must be prime");
  if (order < 0) throw RingError("negative truncation order");
  std::vector<Rat> num, den;
  num.reserve(static_cast<std::size_t>(order) + 1);
  den.reserve(static_cast<std::size_t>(order) + 1);
  for (long j = 0; j <= order; ++j) {
    const Rat sign = j % 2 == 0 ? Rat(1) : Rat(-1);
    num.push_back(sign * Rat(binom(Int(p - 1), j)));  // (1-x)^(p-1)
    den.push_back(sign * Rat(binom(Int(p), j + 1)));  // (1-(1-x)^p)/x, constant p
  }
  Series d = series_div(Series(std::move(num), order), Series(std::move(den), order));
  std::vector<Rat> out(d.coeffs());
  for (auto& v : out) v *= Rat(-p);
  out[0] += Rat(p);
  return out;
}

std::vector<Rat> homo_product_coeffs(long s, long p, long lmax) {
  if (s < 1) throw RingError("homogeneous exponent must be positive");
  if (!is_prime(p)) throw RingError("p must be prime");
  const RatPoly phi = to_rat_poly(cyclotomic(s));
  auto red_t = [&phi](const RatPoly& f) { return divrem(f, phi).second; };

  // y-coefficients of the product; each coefficient is a reduced poly in t.
  std::vector<RatPoly> w{RatPoly::one()};
  for (long a = 0; a < s; ++a) {
    std::vector<RatPoly> factor(static_cast<std::size_t>(p) + 1);
    for (long j = 1; j <= p; ++j) {
      Rat c = Rat(binom(Int(p), j));
      if (j % 2 == 0) c = -c;  // 1 - (1 - eta^a y)^p termwise
      factor[static_cast<std::size_t>(j)] =
          red_t(RatPoly::monomial(c, static_cast<std::size_t>((a * j) % s)));
    }
    std::vector<RatPoly> next(w.size() + factor.size() - 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].is_zero()) continue;
      for (std::size_t j = 0; j < factor.size(); ++j) {
        if (factor[j].is_zero()) continue;
        next[i + j] = red_t(next[i + j] + w[i] * factor[j]);
      }
    }
    w = std::move(next);
  }

  std::vector<Rat> out(static_cast<std::size_t>(lmax) + 1, Rat(0));
  const Rat scale = rat_pow(Rat(1) / Rat(p), s) * (s % 2 == 0 ? Rat(1) : Rat(-1));
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_zero()) continue;
    if (i % static_cast<std::size_t>(s) != 0)
      throw ConsistencyError("product coefficient at an exponent not divisible by s");
    if (w[i].degree() > 0)
      throw ConsistencyError("product coefficient is not rational");
    if (i == 0) throw ConsistencyError("product has a nonzero constant term");
    const long mx = static_cast<long>(i) / s;  // substitute y^s = -x
    const long ell = mx - 1;
    if (ell > lmax) continue;
    Rat v = w[i].coeff(0) * scale;
    if (mx % 2 != 0) v = -v;
    out[static_cast<std::size_t>(ell)] = v;
  }
  return out;
}

namespace {

// Drops the k lowest coefficients after verifying they vanish: exact
// division by p^k for polynomials in the symbol p.
RatPoly exact_shift_down(const RatPoly& f, long k, const char* what) {
  for (long i = 0; i < k; ++i)
    if (f.coeff(static_cast<std::size_t>(i)) != 0)
      throw ConsistencyError(std::string(what) + ": division by p^" + std::to_string(k) +
                             " is not exact");
  if (f.is_zero()) return f;
  std::vector<Rat> c(f.coeffs().begin() + k, f.coeffs().end());
  return RatPoly(std::move(c));
}

// C(p-1, l) as a polynomial in p.
RatPoly binomial_pm1_poly(long ell) {
  RatPoly out = RatPoly::one();
  for (long i = 1; i <= ell; ++i) out = out.shifted(1) - out.scaled(Rat(i));
  return out.scaled(Rat(1) / Rat(factorial(ell)));
}

}  // namespace

RatPoly closed_form_w2(long ell) {
  if (ell < 1) throw RingError("depth must be positive");
  RatPoly br;
  for (long j = 0; j <= ell; ++j)
    br = br + binomial_poly(2 * j + 1) * binomial_poly(2 * (ell - j) + 1);
  for (long j = 1; j <= ell; ++j)
    br = br - binomial_poly(2 * j) * binomial_poly(2 * (ell + 1 - j));
  if (ell % 2 != 0) br = -br;
  return exact_shift_down(br, 2, "weight-2 closed form");
}

RatPoly closed_form_w3(long ell) {
  if (ell < 1) throw RingError("depth must be positive");
  const long L = 3 * ell + 3;
  RatPoly br = binomial_poly(ell + 1);
  if (ell % 2 == 0) br = br + binomial_poly(L).scaled(Rat(6));
  RatPoly mid;
  for (long k = 1; 2 * k <= L; ++k)
    mid = mid + binomial_poly(L - k).scaled(Rat(binom(Int(L - k), k)));
  br = br + mid.scaled(ell % 2 == 0 ? Rat(3) : Rat(-3));
  return exact_shift_down(br, 3, "weight-3 closed form");
}

RatPoly extract_f2(long ell) {
  RatPoly value = closed_form_w2(ell);
  Rat pre = Rat(2) * Rat(factorial(ell)) / Rat(factorial(2 * ell + 2));
  if (ell % 2 != 0) pre = -pre;
  auto [f, rem] = divrem(value.scaled(Rat(1) / pre), binomial_pm1_poly(ell));
  if (!rem.is_zero())
    throw ConsistencyError("weight-2 closed form: C(p-1,l) prefactor does not divide");
  if (f.degree() != ell || f.leading() != Rat(1))
    throw ConsistencyError("weight-2 reduced polynomial is not monic of degree l");
  return f;
}

RatPoly extract_f3(long ell) {
  RatPoly value = closed_form_w3(ell);
  const bool odd = ell % 2 != 0;
  const Rat pre = odd ? Rat(-3) * Rat(factorial(ell)) / Rat(factorial(3 * ell + 1))
                      : Rat(6) * Rat(factorial(ell)) / Rat(factorial(3 * ell + 3));
  auto [f, rem] = divrem(value.scaled(Rat(1) / pre), binomial_pm1_poly(ell));
  if (!rem.is_zero())
    throw ConsistencyError("weight-3 closed form: C(p-1,l) prefactor does not divide");
  const long want = odd ? 2 * ell - 1 : 2 * ell;
  if (f.degree() != want || f.leading() != Rat(1))
    throw ConsistencyError("weight-3 reduced polynomial has wrong degree or is not monic");
  return f;
}

Rat depth2_f_coeff(long n, long p) {
  if (n < 1) throw RingError("order must be positive");
  Rat acc(0);
  for (long i = 0; i < n; ++i) {
    Rat term = Rat(binom(Int(n - 1), i)) * k_value(2 * n - i, p);
    acc += i % 2 == 0 ? term : -term;
  }
  return acc;
}

}  // namespace qmhs
