#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "qmhs/polynomial.hpp"
#include "qmhs/rational.hpp"
#include "qmhs/series.hpp"

namespace qmhs {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw ArithmeticError("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    return make_rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ArithmeticError("malformed rational literal: " + text);
  }
}

Int int_pow(Int base, unsigned long e) {
  Int out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Rat rat_pow(Rat base, long e) {
  if (e < 0) {
    if (base == 0) throw ArithmeticError("inverse of zero");
    base = Rat(1) / base;
    e = -e;
  }
  Rat out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Int factorial(long n) {
  if (n < 0) throw ArithmeticError("factorial of a negative integer");
  Int out(1);
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

Int binom(const Int& n, long k) {
  if (k < 0 || n < 0) return Int(0);
  if (n < k) return Int(0);
  Int num(1);
  for (long i = 0; i < k; ++i) num *= n - i;
  return num / factorial(k);
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& f, const RatPoly& m) {
  if (m.is_zero()) throw PolyError("division by the zero polynomial");
  if (f.degree() < m.degree()) return {RatPoly(), f};
  std::vector<Rat> rem(f.coeffs());
  std::vector<Rat> quo(static_cast<std::size_t>(f.degree() - m.degree()) + 1, Rat(0));
  const Rat lc_inv = Rat(1) / m.leading();
  for (long i = f.degree(); i >= m.degree(); --i) {
    Rat c = rem[static_cast<std::size_t>(i)] * lc_inv;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - m.degree())] = c;
    for (long j = 0; j <= m.degree(); ++j)
      rem[static_cast<std::size_t>(i - m.degree() + j)] -= c * m.coeff(static_cast<std::size_t>(j));
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

std::tuple<RatPoly, RatPoly, RatPoly> ext_gcd(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() && g.is_zero()) throw PolyError("gcd of two zero polynomials");
  RatPoly r0 = f, r1 = g;
  RatPoly a0 = RatPoly::one(), a1;
  RatPoly b0, b1 = RatPoly::one();
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::exchange(r1, r);
    a0 = std::exchange(a1, a0 - q * a1);
    b0 = std::exchange(b1, b0 - q * b1);
  }
  const Rat lc_inv = Rat(1) / r0.leading();
  return {r0.scaled(lc_inv), a0.scaled(lc_inv), b0.scaled(lc_inv)};
}

RatPoly binomial_poly(long k) {
  if (k < 0) throw PolyError("binomial polynomial with negative lower index");
  RatPoly out = RatPoly::one();
  for (long i = 0; i < k; ++i) {
    // multiply by (p - i)
    out = out.shifted(1) - out.scaled(Rat(i));
  }
  return out.scaled(Rat(1) / Rat(factorial(k)));
}

Series series_div(const Series& f, const Series& g) {
  if (f.order() != g.order()) throw SeriesError("truncation order mismatch");
  if (g.coeff(0) == 0) throw SeriesError("series division by a non-unit");
  const long n = f.order();
  std::vector<Rat> h(static_cast<std::size_t>(n) + 1, Rat(0));
  const Rat g0_inv = Rat(1) / g.coeff(0);
  for (long k = 0; k <= n; ++k) {
    Rat acc = f.coeff(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i)
      acc -= h[static_cast<std::size_t>(i)] * g.coeff(static_cast<std::size_t>(k - i));
    h[static_cast<std::size_t>(k)] = acc * g0_inv;
  }
  return Series(std::move(h), n);
}

}  // namespace qmhs
