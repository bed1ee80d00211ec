#include "qmhs/combinat.hpp"

#include <mutex>
#include <utility>
#include <vector>

#include "qmhs/series.hpp"

namespace qmhs {

namespace {

std::mutex table_mutex;

// Coefficients of x/(e^x - 1) = 1 / sum_{k>=0} x^k/(k+1)!.
const std::vector<Rat>& bernoulli_series(long order) {
  static std::vector<Rat> coeffs;
  if (static_cast<long>(coeffs.size()) <= order) {
    const long n = order + 8;
    std::vector<Rat> den;
    den.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) den.push_back(Rat(1) / Rat(factorial(k + 1)));
    Series one = Series::from_poly(RatPoly::one(), n);
    coeffs = series_div(one, Series(std::move(den), n)).coeffs();
  }
  return coeffs;
}

// Coefficients of x/log(1+x) = 1 / sum_{k>=0} (-1)^k x^k/(k+1).
const std::vector<Rat>& bernoulli2_series(long order) {
  static std::vector<Rat> coeffs;
  if (static_cast<long>(coeffs.size()) <= order) {
    const long n = order + 8;
    std::vector<Rat> den;
    den.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
      Rat v = Rat(1) / Rat(k + 1);
      den.push_back(k % 2 == 0 ? v : -v);
    }
    Series one = Series::from_poly(RatPoly::one(), n);
    coeffs = series_div(one, Series(std::move(den), n)).coeffs();
  }
  return coeffs;
}

// Row n of the first-kind Stirling triangle: x(x-1)...(x-n+1).
const IntPoly& stirling_row(long n) {
  static std::vector<IntPoly> rows{IntPoly::one()};
  while (static_cast<long>(rows.size()) <= n) {
    const long k = static_cast<long>(rows.size()) - 1;
    // multiply by (x - k)
    const IntPoly& prev = rows.back();
    rows.push_back(prev.shifted(1) - prev.scaled(Int(k)));
  }
  return rows[static_cast<std::size_t>(n)];
}

}  // namespace

Rat bernoulli(long n) {
  if (n < 0) throw ArithmeticError("Bernoulli index must be >= 0");
  std::lock_guard<std::mutex> lock(table_mutex);
  return bernoulli_series(n)[static_cast<std::size_t>(n)] * Rat(factorial(n));
}

Rat bernoulli2(long n) {
  if (n < 0) throw ArithmeticError("second-kind Bernoulli index must be >= 0");
  std::lock_guard<std::mutex> lock(table_mutex);
  return bernoulli2_series(n)[static_cast<std::size_t>(n)] * Rat(factorial(n));
}

Int stirling1(long n, long j) {
  if (n < 0) throw ArithmeticError("Stirling index must be >= 0");
  if (j < 0 || j > n) return Int(0);
  std::lock_guard<std::mutex> lock(table_mutex);
  return stirling_row(n).coeff(static_cast<std::size_t>(j));
}

KSpec k_poly(long n) {
  if (n < 2) throw ArithmeticError("K_n requires n >= 2");
  const Rat sign = n % 2 == 0 ? Rat(-1) : Rat(1);  // (-1)^(n-1) = -(-1)^n
  RatPoly out = RatPoly::constant(sign * bernoulli2(n) / Rat(factorial(n)));
  const Rat outer = sign / Rat(factorial(n - 1));
  for (long j = 1; 2 * j <= n; ++j) {
    Rat c = outer * bernoulli(2 * j) / Rat(2 * j) * Rat(stirling1(n - 1, 2 * j - 1));
    out = out + RatPoly::monomial(c, static_cast<std::size_t>(2 * j));
  }
  return KSpec{n, std::move(out)};
}

Rat k_value(long n, long p) { return k_poly(n).as_poly.eval(Rat(p)); }

}  // namespace qmhs
