#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "qmhs/polynomial.hpp"
#include "qmhs/rational.hpp"

namespace qmhs {

struct RingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inversion of a zero divisor; carries the offending gcd with the modulus.
struct NonUnitError : std::runtime_error {
  NonUnitError(const std::string& what, RatPoly gcd_poly)
      : std::runtime_error(what), gcd(std::move(gcd_poly)) {}
  RatPoly gcd;
};

bool is_prime(long n);

class Modulus;
using ModulusPtr = std::shared_ptr<const Modulus>;
class Residue;

// The modulus ([p]_q)^e with [p]_q = 1 + q + ... + q^{p-1}; monic of degree
// e*(p-1). make() hands out one shared instance per (prime, exponent), so the
// unit-inverse cache inside it is shared too. Safe to use across threads.
class Modulus {
 public:
  static std::shared_ptr<const Modulus> make(long prime, int exponent);

  long prime() const { return prime_; }
  int exponent() const { return exponent_; }
  const RatPoly& poly() const { return poly_; }
  long degree() const { return poly_.degree(); }

  bool same_as(const Modulus& o) const {
    return prime_ == o.prime_ && exponent_ == o.exponent_;
  }

  // Canonical representative of f: degree below e*(p-1). For e = 1 this folds
  // exponents with q^p = 1 instead of long division.
  RatPoly reduce_rep(const RatPoly& f) const;

 private:
  Modulus(long prime, int exponent, RatPoly poly)
      : prime_(prime), exponent_(exponent), poly_(std::move(poly)) {}

  bool cache_get(long key, RatPoly& out) const;
  void cache_put(long key, RatPoly rep) const;

  friend Residue q_int_inv(long k, const ModulusPtr& m);
  friend Residue one_minus_q_inv(const ModulusPtr& m);

  long prime_;
  int exponent_;
  RatPoly poly_;

  // Representatives of unit inverses, keyed by k for [k]_q and by 0 for 1 - q.
  mutable std::mutex cache_mu_;
  mutable std::map<long, RatPoly> inv_cache_;
};

// Canonical coset representative in Q[q]/(([p]_q)^e): the unique remainder of
// degree < e*(p-1). Residues of different moduli never mix.
class Residue {
 public:
  Residue(const RatPoly& f, ModulusPtr m);

  static Residue zero(ModulusPtr m) { return Residue(RatPoly(), std::move(m)); }
  static Residue one(ModulusPtr m) { return Residue(RatPoly::one(), std::move(m)); }
  static Residue from_rat(const Rat& v, ModulusPtr m) {
    return Residue(RatPoly::constant(v), std::move(m));
  }

  const RatPoly& rep() const { return rep_; }
  const ModulusPtr& modulus() const { return mod_; }
  bool is_zero() const { return rep_.is_zero(); }

  // Nonempty exactly when the residue is the class of a rational constant.
  bool is_constant() const { return rep_.degree() <= 0; }
  Rat constant_value() const;

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  Residue scaled(const Rat& v) const;

  // Extended-Euclid inverse; throws NonUnitError (with the gcd) otherwise.
  Residue inv() const;

  // Integer exponent; negative e inverts first.
  Residue pow(long e) const;

  bool operator==(const Residue& o) const;
  bool operator!=(const Residue& o) const { return !(*this == o); }

  std::string str() const { return rep_.str("q"); }

 private:
  void check_same(const Residue& o) const;

  RatPoly rep_;
  ModulusPtr mod_;
};

Residue reduce(const RatPoly& f, const ModulusPtr& m);

// Residue of [k]_q = 1 + q + ... + q^{k-1}.
Residue q_int(long k, const ModulusPtr& m);

// Inverse of [k]_q without extended Euclid: with k' the inverse of k mod p,
// [k']_{q^k} inverts [k]_q modulo [p]_q, and a Newton step x(2 - [k]_q x)
// doubles the exponent. Cached per modulus; throws NonUnitError with gcd
// [p]_q when p divides k.
Residue q_int_inv(long k, const ModulusPtr& m);

// Inverse of 1 - q, seeded by (q-1) sum_j j q^j = p mod [p]_q and lifted the
// same way. Cached per modulus.
Residue one_minus_q_inv(const ModulusPtr& m);

// The s-th cyclotomic polynomial in t, by iterated exact division of t^s - 1.
IntPoly cyclotomic(long s);

}  // namespace qmhs
