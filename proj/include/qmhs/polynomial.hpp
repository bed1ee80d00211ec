#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qmhs/rational.hpp"

namespace qmhs {

struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense univariate polynomial over an exact commutative ring T.
// Canonical form: no trailing zero coefficients; zero is the empty sequence,
// so structural equality is value equality.
template <typename T>
class UniPoly {
 public:
  UniPoly() = default;

  explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(T v) { return UniPoly(std::vector<T>{std::move(v)}); }

  static UniPoly monomial(T v, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = std::move(v);
    return UniPoly(std::move(c));
  }

  static UniPoly one() { return constant(T(1)); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  const T& leading() const {
    if (c_.empty()) throw PolyError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  UniPoly operator-() const {
    std::vector<T> c(c_);
    for (auto& v : c) v = -v;
    return UniPoly(std::move(c));
  }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<T> c(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return UniPoly(std::move(c));
  }

  UniPoly operator-(const UniPoly& o) const {
    std::vector<T> c(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return UniPoly(std::move(c));
  }

  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<T> c(c_.size() + o.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(c));
  }

  UniPoly scaled(const T& v) const {
    std::vector<T> c(c_);
    for (auto& x : c) x *= v;
    return UniPoly(std::move(c));
  }

  // Multiplication by x^k.
  UniPoly shifted(std::size_t k) const {
    if (is_zero()) return UniPoly();
    std::vector<T> c(c_.size() + k, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return UniPoly(std::move(c));
  }

  T eval(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  // Ascending-power rendering, e.g. "2 - 2q + (3/2)q^2".
  std::string str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == T(0)) continue;
      T a = c_[i];
      bool neg = a < T(0);
      if (neg) a = -a;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mag = to_string(a);
      if (mag.find('/') != std::string::npos) mag = "(" + mag + ")";
      if (i == 0) {
        out += mag;
      } else {
        if (a != T(1)) out += mag;
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using RatPoly = UniPoly<Rat>;
using IntPoly = UniPoly<Int>;

inline RatPoly to_rat_poly(const IntPoly& f) {
  std::vector<Rat> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

// Quotient and remainder with degree(r) < degree(m); exact over the field Q.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& f, const RatPoly& m);

// (d, a, b) with a*f + b*g = d and d the monic gcd; f, g not both zero.
std::tuple<RatPoly, RatPoly, RatPoly> ext_gcd(const RatPoly& f, const RatPoly& g);

// C(p, k) as a degree-k polynomial in the symbol p.
RatPoly binomial_poly(long k);

}  // namespace qmhs
