#include <map>
#include <vector>

#include "doctest.h"
#include "qmhs/combinat.hpp"
#include "qmhs/harmonic.hpp"
#include "test_util.hpp"

using namespace qmhs;

namespace {

RatPoly P(std::vector<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return RatPoly(std::move(c));
}

RatPoly one_minus_q_pow(long e) {
  RatPoly out = RatPoly::one();
  for (long i = 0; i < e; ++i) out = out * P({1, -1});
  return out;
}

// The defining nested sum, written as naive nested loops; deliberately
// independent of the dynamic program in h_sum.
Residue brute_force(const Index& idx, long n, const ModulusPtr& m) {
  const long ell = idx.depth();
  std::vector<long> k(static_cast<std::size_t>(ell), 0);
  Residue total = Residue::zero(m);
  if (ell == 0) return Residue::one(m);
  const Residue q1 = reduce(RatPoly::monomial(Rat(1), 1), m);
  for (;;) {
    // advance the strictly increasing tuple 1 <= k_1 < ... < k_l <= n
    long pos = ell - 1;
    for (;;) {
      ++k[static_cast<std::size_t>(pos)];
      if (k[static_cast<std::size_t>(pos)] <= n - (ell - 1 - pos)) break;
      if (--pos < 0) return total;
    }
    for (long i = pos + 1; i < ell; ++i)
      k[static_cast<std::size_t>(i)] = k[static_cast<std::size_t>(i - 1)] + 1;
    if (k[0] < 1) continue;
    Residue term = Residue::one(m);
    for (long i = 0; i < ell; ++i) {
      const long ki = k[static_cast<std::size_t>(i)];
      term = term * q1.pow(ki * idx.t()[static_cast<std::size_t>(i)]) *
             q_int(ki, m).pow(-idx.s()[static_cast<std::size_t>(i)]);
    }
    total = total + term;
  }
}

}  // namespace

TEST_CASE("index construction, parsing, and rendering") {
  Index a = Index::parse("2,2", "1,1");
  CHECK(a.depth() == 2);
  CHECK(a.weight() == 4);
  CHECK_FALSE(a.trivial_modifier());
  CHECK(a.str() == "2,2@1,1");

  Index b = Index::parse("3");
  CHECK(b.t() == std::vector<long>{0});
  CHECK(b.trivial_modifier());
  CHECK(b.str() == "3");

  CHECK(Index().depth() == 0);
  CHECK(Index().weight() == 0);
  CHECK(Index::repeat(2, 0, 3) == Index({2, 2, 2}, {0, 0, 0}));

  CHECK_THROWS_AS(Index::parse("2,0"), RingError);       // s_i must be >= 1
  CHECK_THROWS_AS(Index::parse("2,,1"), RingError);
  CHECK_THROWS_AS(Index::parse("2", "1,1"), RingError);  // length mismatch
  CHECK_THROWS_AS(Index({1}, {-1}), RingError);
  CHECK_THROWS_AS(Index::parse("x"), RingError);

  CHECK(Index({1}, {0}) < Index({2}, {0}));
  CHECK(Index({1}, {0}) < Index({1, 1}, {0, 0}));
}

TEST_CASE("empty and short-range conventions") {
  auto m = Modulus::make(7, 1);
  CHECK(h_sum(Index(), 5, m) == Residue::one(m));
  CHECK(h_norm(Index(), 5, m) == Residue::one(m));
  CHECK(h_sum(Index::parse("2"), 0, m).is_zero());
  CHECK(h_sum(Index::parse("1,2"), 1, m).is_zero());
  CHECK(h_sum(Index::parse("1,2,1"), 2, m).is_zero());
}

TEST_CASE("depth-one residues match the published constants") {
  auto m5 = Modulus::make(5, 1);
  CHECK(h_sum(Index::parse("1"), 4, m5) == reduce(P({2, -2}), m5));
  CHECK(h_norm(Index::parse("3"), 4, m5) ==
        Residue::from_rat(Rat(-1), m5));
  CHECK(h_norm(Index::parse("2"), 4, m5).is_zero());

  auto m7 = Modulus::make(7, 1);
  CHECK(h_sum(Index::parse("2"), 6, m7) == reduce(-one_minus_q_pow(2), m7));
}

TEST_CASE("depth-one residue modulo the squared modulus") {
  auto m = Modulus::make(5, 2);
  Residue r = h_sum(Index::parse("1"), 4, m);
  CHECK(r.rep() == P({3, -3, 0, 0, 0, -1, 1}));
  CHECK(r.str() == "3 - 3q - q^5 + q^6");
}

TEST_CASE("the dynamic program agrees with the defining nested sum") {
  auto m = Modulus::make(7, 1);
  for (const char* text : {"1", "3", "2,1", "1,1,2"}) {
    Index idx = Index::parse(text);
    for (long n = 0; n <= 6; ++n)
      CHECK(h_sum(idx, n, m) == brute_force(idx, n, m));
  }
  Index mod_idx = Index::parse("2,1", "1,2");
  for (long n = 0; n <= 6; ++n)
    CHECK(h_sum(mod_idx, n, m) == brute_force(mod_idx, n, m));
  auto m2 = Modulus::make(5, 2);
  Index deep = Index::parse("1,2", "1,0");
  for (long n = 0; n <= 4; ++n)
    CHECK(h_sum(deep, n, m2) == brute_force(deep, n, m2));
}

TEST_CASE("non-invertible q-integers are reported") {
  auto m = Modulus::make(5, 1);
  CHECK_THROWS_AS(h_sum(Index::parse("1"), 5, m), NonUnitError);
  CHECK_THROWS_AS(h_sum(Index::parse("1,1"), 10, m), NonUnitError);
}

TEST_CASE("quasi-shuffle expansion structure") {
  // (1) * (1) = 2*(1,1) + (2)
  auto terms = stuffle_expand(Index::parse("1"), Index::parse("1"));
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].index == Index({1, 1}, {0, 0}));
  CHECK(terms[0].multiplicity == 2);
  CHECK(terms[1].index == Index({2}, {0}));
  CHECK(terms[1].multiplicity == 1);

  // The empty index is the unit of the product.
  auto unit = stuffle_expand(Index(), Index::parse("2,1", "1,0"));
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].index == Index({2, 1}, {1, 0}));
  CHECK(unit[0].multiplicity == 1);

  // Modifiers add in the merged slot: (2)@(1) * (4)@(2).
  auto dep = stuffle_expand(Index({2}, {1}), Index({4}, {2}));
  REQUIRE(dep.size() == 3);
  CHECK(dep[0].index == Index({2, 4}, {1, 2}));
  CHECK(dep[1].index == Index({4, 2}, {2, 1}));
  CHECK(dep[2].index == Index({6}, {3}));
  for (const auto& term : dep) CHECK(term.multiplicity == 1);

  // Total count equals the number of quasi-shuffle interleavings: the
  // depth-(1,1) product always has 2 interleavings plus 1 merge.
  Int count(0);
  for (const auto& term : dep) count += term.multiplicity;
  CHECK(count == 3);
}

TEST_CASE("stuffle expansion is the product identity") {
  for (long p : {5L, 7L}) {
    auto m = Modulus::make(p, 1);
    qtest::SplitMix rng{static_cast<std::uint64_t>(100 + p)};
    for (int i = 0; i < 30; ++i) {
      auto draw_index = [&]() {
        const long depth = 1 + rng.below(3);
        std::vector<long> s, t;
        for (long j = 0; j < depth; ++j) {
          s.push_back(1 + rng.below(3));
          t.push_back(rng.below(3));
        }
        return Index(std::move(s), std::move(t));
      };
      Index a = draw_index();
      Index b = draw_index();
      auto terms = stuffle_expand(a, b);
      for (long n : {3L, p - 1}) {
        Residue lhs = h_sum(a, n, m) * h_sum(b, n, m);
        Residue rhs = Residue::zero(m);
        for (const auto& term : terms)
          rhs = rhs + h_sum(term.index, n, m).scaled(Rat(term.multiplicity));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("homogeneous recursion rebuilds the direct values") {
  auto m11 = Modulus::make(11, 1);
  CHECK(homo_recursion(2, 0, m11) == Residue::one(m11));
  CHECK(homo_recursion(3, 1, m11) == h_norm(Index::parse("3"), 10, m11));
  CHECK(homo_recursion(2, 3, m11) ==
        h_norm(Index::repeat(2, 0, 3), 10, m11));
  for (long p : {5L, 13L}) {
    auto m = Modulus::make(p, 1);
    for (long s = 1; s <= 3; ++s)
      for (long ell = 0; ell <= 5; ++ell)
        CHECK(homo_recursion(s, ell, m) ==
              h_norm(Index::repeat(s, 0, ell), p - 1, m));
  }
}

TEST_CASE("root-sum constants") {
  CHECK(p_series(5, 3) == std::vector<Rat>{Rat(4), Rat(2), Rat(0), Rat(-1)});
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L}) {
    auto coeffs = p_series(p, 4);
    CHECK(coeffs[0] == Rat(p - 1));
    CHECK(coeffs[1] == Rat(p - 1) / Rat(2));
  }
  // sH(n) is the constant P_n.
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    auto m = Modulus::make(p, 1);
    auto coeffs = p_series(p, 4);
    for (long n = 1; n <= 4; ++n) {
      Residue v = h_norm(Index({n}, {0}), p - 1, m);
      CHECK(v.is_constant());
      CHECK(v.constant_value() == coeffs[static_cast<std::size_t>(n)]);
    }
  }
  CHECK_THROWS_AS(p_series(6, 3), RingError);
}

TEST_CASE("root-of-unity product expansion predicts homogeneous values") {
  // s = 1 collapses to the binomial formula.
  auto c1 = homo_product_coeffs(1, 11, 5);
  for (long ell = 0; ell <= 5; ++ell)
    CHECK(c1[static_cast<std::size_t>(ell)] ==
          Rat(binom(Int(10), ell)) / Rat(ell + 1));
  CHECK(homo_product_coeffs(1, 7, 0)[0] == Rat(1));

  // s = 2 at p = 7, depth 1 reproduces the weight-2 constant -1.
  CHECK(homo_product_coeffs(2, 7, 1)[1] == Rat(-1));

  for (long s = 2; s <= 4; ++s) {
    auto m = Modulus::make(7, 1);
    auto pred = homo_product_coeffs(s, 7, 3);
    for (long ell = 0; ell <= 3; ++ell) {
      Residue v = h_norm(Index::repeat(s, 0, ell), 6, m);
      CHECK(v.is_constant());
      CHECK(v.constant_value() == pred[static_cast<std::size_t>(ell)]);
    }
  }
}

TEST_CASE("weight-2 closed form and its monic core") {
  CHECK(extract_f2(1) == P({-5, 1}));
  CHECK(extract_f2(2) == P({47, -12, 1}));
  CHECK(extract_f2(3) == P({-638, 179, -22, 1}));
  CHECK(extract_f2(4) == P({11274, -3325, 485, -35, 1}));
  CHECK(extract_f2(5) == P({-245004, 74524, -11985, 1075, -51, 1}));
  CHECK(extract_f2(6) ==
        P({6314664, -1961470, 336049, -34300, 2086, -70, 1}));
  for (long ell = 1; ell <= 6; ++ell) {
    RatPoly f = extract_f2(ell);
    CHECK(f.degree() == ell);
    CHECK(f.leading() == Rat(1));
  }

  // Evaluating the closed form at a prime matches the direct sum.
  for (long ell : {1L, 2L}) {
    RatPoly form = closed_form_w2(ell);
    for (long p : {7L, 11L, 13L}) {
      if (p < 3 * ell + 3) continue;
      auto m = Modulus::make(p, 1);
      Residue v = h_norm(Index::repeat(2, 0, ell), p - 1, m);
      CHECK(v.constant_value() == form.eval(Rat(p)));
    }
  }
}

TEST_CASE("weight-3 closed form and its monic core") {
  CHECK(extract_f3(1) == P({-3, 1}));
  CHECK(extract_f3(2) == P({6898, -2883, 301, 3, 1}));
  CHECK(extract_f3(3) == P({-32986, 15019, -2290, 100, -4, 1}));
  CHECK(extract_f3(4) == P({1157817876, -551374960, 99197195, -7406910,
                            360423, -53340, 3705, 10, 1}));
  for (long ell = 1; ell <= 4; ++ell) {
    RatPoly f = extract_f3(ell);
    CHECK(f.degree() == (ell % 2 ? 2 * ell - 1 : 2 * ell));
    CHECK(f.leading() == Rat(1));
  }

  RatPoly form = closed_form_w3(1);
  for (long p : {7L, 11L, 13L}) {
    auto m = Modulus::make(p, 1);
    Residue v = h_norm(Index::parse("3"), p - 1, m);
    CHECK(v.constant_value() == form.eval(Rat(p)));
    CHECK(v.constant_value() == -Rat((p - 1) * (p - 3)) / Rat(8));
  }
}

TEST_CASE("depth-two coefficient building block") {
  for (long p : {5L, 7L, 11L}) {
    CHECK(depth2_f_coeff(1, p) == k_value(2, p));
    CHECK(depth2_f_coeff(2, p) == k_value(4, p) - k_value(3, p));
    CHECK(depth2_f_coeff(3, p) ==
          k_value(6, p) - Rat(2) * k_value(5, p) + k_value(4, p));
  }
  CHECK(depth2_f_coeff(1, 7) == Rat(-4));
  CHECK(depth2_f_coeff(2, 7) == Rat(4));

  // H^(1,1)(2,2; 6) mod [7]_q = 6(1-q)^4: the worked product-identity value.
  auto m = Modulus::make(7, 1);
  Residue v = h_sum(Index::parse("2,2", "1,1"), 6, m);
  CHECK(v == reduce(one_minus_q_pow(4).scaled(Rat(6)), m));
  CHECK(v.str() == "6 - 24q + 36q^2 - 24q^3 + 6q^4");

  // Half-range depth-one value at p=7, n=1: -2(1-q)^2.
  Residue half = h_sum(Index::parse("2", "1"), 3, m);
  CHECK(half == reduce(one_minus_q_pow(2).scaled(Rat(-2)), m));
}
