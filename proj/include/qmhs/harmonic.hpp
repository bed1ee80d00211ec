#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qmhs/polynomial.hpp"
#include "qmhs/rational.hpp"
#include "qmhs/rings.hpp"

namespace qmhs {

// An internal identity that must hold by construction failed; signals an
// implementation bug, never a refuted congruence.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Composition (s_1,...,s_l) with modifier (t_1,...,t_l): s_i >= 1, t_i >= 0,
// equal lengths. l = 0 is the empty index.
class Index {
 public:
  Index() = default;
  Index(std::vector<long> s, std::vector<long> t);

  // "2,2" with optional modifier text "1,1"; empty modifier means all zeros.
  static Index parse(const std::string& s_text, const std::string& t_text = "");

  static Index repeat(long s, long t, long depth);

  const std::vector<long>& s() const { return s_; }
  const std::vector<long>& t() const { return t_; }
  long depth() const { return static_cast<long>(s_.size()); }
  long weight() const;
  bool trivial_modifier() const;

  bool operator==(const Index& o) const { return s_ == o.s_ && t_ == o.t_; }
  bool operator<(const Index& o) const;

  // "2,2@1,1"; the "@t" part is omitted for a trivial modifier.
  std::string str() const;

 private:
  std::vector<long> s_;
  std::vector<long> t_;
};

struct StuffleTerm {
  Index index;
  Int multiplicity;
};

// H(s,t; n) = sum over 1 <= k_1 < ... < k_l <= n of
// q^(sum k_i t_i) / prod [k_i]^(s_i), as a residue. Empty index gives 1;
// n < depth gives 0. Throws NonUnitError when some [k]_q shares a factor
// with the modulus (k a multiple of p).
Residue h_sum(const Index& idx, long n, const ModulusPtr& m);

// h_sum divided by (1-q)^weight.
Residue h_norm(const Index& idx, long n, const ModulusPtr& m);

// Quasi-shuffle expansion: H(a)H(b) = sum multiplicity * H(term) for every n
// and modulus. A merged slot adds both exponent and modifier entries. Terms
// come back sorted by index with positive multiplicities.
std::vector<StuffleTerm> stuffle_expand(const Index& a, const Index& b);

// Depth-l homogeneous value rebuilt from depth-1 values only:
// v_l = (1/l) sum_{k=0}^{l-1} (-1)^(l-k-1) * hnorm((l-k)s) * v_k, v_0 = 1,
// with all depth-1 sums taken at n = p - 1.
Residue homo_recursion(long s, long ell, const ModulusPtr& m);

// P_0..P_N for P_n = sum_{j=1}^{p-1} (1 - z^j)^(-n) over the p-th roots of
// unity z != 1, from the exact generating function
// p - p(1-x)^(p-1) / u(x) with u(x) = (1 - (1-x)^p)/x. P_0 = p - 1.
std::vector<Rat> p_series(long p, long order);

// Predicted values of hnorm({s}^l; p-1) for l = 0..lmax, from the product
// prod_{a=0}^{s-1} (1 - (1 - eta^a y)^p) expanded over Q[t]/Phi_s(t) with
// y^s = -x. Nonzero y-coefficients must sit at s-divisible exponents and be
// rational; violations throw ConsistencyError.
std::vector<Rat> homo_product_coeffs(long s, long p, long lmax);

// Weight-2 closed form, symbolic in p: the bracket
//   sum_{j+k=l} C(p,2j+1)C(p,2k+1) - sum_{j+k=l+1, j,k>=1} C(p,2j)C(p,2k)
// times (-1)^l with p^2 divided out exactly.
RatPoly closed_form_w2(long ell);

// Weight-3 closed form, symbolic in p: the bracket
//   3*(1+(-1)^l)*C(p,L) + (-1)^l * 3 * sum_{k=1}^{floor(L/2)} C(p,L-k)C(L-k,k)
//   + C(p,l+1),  L = 3l+3,
// with p^3 divided out exactly.
RatPoly closed_form_w3(long ell);

// F_{2,l}: closed_form_w2 with the prefactor
// (-1)^l * 2*l!/(2l+2)! * C(p-1,l) divided out; monic of degree l.
RatPoly extract_f2(long ell);

// F_{3,l}: closed_form_w3 with the prefactor -3*l!/(3l+1)! * C(p-1,l) (odd l)
// or 6*l!/(3l+3)! * C(p-1,l) (even l) divided out; monic of degree 2l-1
// (odd l) or 2l (even l).
RatPoly extract_f3(long ell);

// sum_{i=0}^{N-1} C(N-1,i) (-1)^i K_{2N-i}(p): the depth-one building block
// of the depth-2 and half-range congruences (scaled by (1-q)^(2N) there).
Rat depth2_f_coeff(long n, long p);

}  // namespace qmhs
