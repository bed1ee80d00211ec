#pragma once

#include "qmhs/polynomial.hpp"
#include "qmhs/rational.hpp"

namespace qmhs {

// Classical number families, all derived from their defining series or
// products with exact arithmetic. Values are memoized; tables only grow.

// B_n from x/(e^x - 1); B_n = 0 for odd n >= 3.
Rat bernoulli(long n);

// b_n (second kind) with x/log(1+x) = sum b_n x^n / n!.
Rat bernoulli2(long n);

// s(n, j): coefficient of x^j in x(x-1)...(x-n+1); zero outside 0 <= j <= n.
Int stirling1(long n, long j);

// K_n(p) = (-1)^(n-1) b_n/n! - ((-1)^n/(n-1)!) sum_{j=1}^{floor(n/2)}
//          (B_{2j}/(2j)) s(n-1, 2j-1) p^(2j),  n >= 2.
Rat k_value(long n, long p);

// K_n symbolically in p: even-degree terms beyond the constant, degree
// at most 2*floor(n/2).
struct KSpec {
  long n;
  RatPoly as_poly;
};

KSpec k_poly(long n);

}  // namespace qmhs
