#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qmhs/polynomial.hpp"
#include "qmhs/rational.hpp"

namespace qmhs {

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated formal power series over Q with an explicit order N: exactly the
// coefficients of x^0..x^N are stored and consulted. Operations demand equal
// orders; there is no implicit re-truncation.
class Series {
 public:
  explicit Series(long order) : c_(static_cast<std::size_t>(order) + 1, Rat(0)) {
    if (order < 0) throw SeriesError("negative truncation order");
  }

  Series(std::vector<Rat> coeffs, long order) : Series(order) {
    if (coeffs.size() != c_.size())
      throw SeriesError("coefficient count does not match the declared order");
    c_ = std::move(coeffs);
  }

  static Series from_poly(const RatPoly& f, long order) {
    Series out(order);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = f.coeff(i);
    return out;
  }

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const Rat& coeff(std::size_t i) const { return c_.at(i); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Series operator+(const Series& o) const {
    check_order(o);
    Series out(order());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
  }

  Series operator-(const Series& o) const {
    check_order(o);
    Series out(order());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
  }

  Series operator*(const Series& o) const {
    check_order(o);
    Series out(order());
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; i + j < c_.size(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
    return out;
  }

  Series scaled(const Rat& v) const {
    Series out(order());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * v;
    return out;
  }

  bool operator==(const Series& o) const { return c_ == o.c_; }

 private:
  void check_order(const Series& o) const {
    if (order() != o.order()) throw SeriesError("truncation order mismatch");
  }

  std::vector<Rat> c_;
};

// h with h*g = f through the shared order; g must have a nonzero constant term.
Series series_div(const Series& f, const Series& g);

}  // namespace qmhs
