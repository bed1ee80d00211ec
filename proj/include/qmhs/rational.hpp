#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qmhs {

// Exact scalars. Expression templates are disabled so values behave like
// plain numbers in generic code (auto, containers, std algorithms).
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rat keeps denominator > 0 and gcd(num, den) = 1 by construction.
inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }
inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  if (den < 0) return Rat(Int(-num), Int(-den));  // backend wants den > 0
  return Rat(num, den);
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& r) {
  std::string out = rat_num(r).str();
  if (!is_integer(r)) out += "/" + rat_den(r).str();
  return out;
}

Rat parse_rat(const std::string& text);

Int int_pow(Int base, unsigned long e);
Rat rat_pow(Rat base, long e);  // negative e requires base != 0

Int factorial(long n);
// C(n, k) for arbitrary integer n >= 0 and k >= 0; zero when k > n.
Int binom(const Int& n, long k);

}  // namespace qmhs
