// Acceptance gate: one line per criterion, exact equality throughout.
// Exit status 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qmhs/combinat.hpp"
#include "qmhs/harmonic.hpp"
#include "qmhs/series.hpp"
#include "qmhs/verify.hpp"
#include "test_util.hpp"

using namespace qmhs;

namespace {

struct Gate {
  int criterion = 0;
  long checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& detail) {
    ++checks;
    if (!ok && failures.size() < 10) failures.push_back(detail);
    if (!ok && failures.size() == 10) failures.push_back("(more suppressed)");
  }
};

bool run(int number, const std::string& label, void (*body)(Gate&)) {
  Gate gate;
  gate.criterion = number;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(gate);
  } catch (const std::exception& e) {
    gate.expect(false, std::string("unexpected exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool ok = gate.failures.empty();
  std::printf("criterion %d: %s  %s  (%ld checks, %.2fs)\n", number,
              ok ? "PASS" : "FAIL", label.c_str(), gate.checks, secs);
  for (const auto& f : gate.failures) std::printf("    %s\n", f.c_str());
  std::fflush(stdout);
  return ok;
}

RatPoly P1mq(long e) {
  RatPoly base(std::vector<Rat>{Rat(1), Rat(-1)});
  RatPoly out = RatPoly::one();
  for (long i = 0; i < e; ++i) out = out * base;
  return out;
}

void criterion1(Gate& g) {
  for (long p : {5L, 7L, 11L, 13L}) {
    auto m = Modulus::make(p, 2);
    Residue lhs = h_sum(Index({1}, {0}), p - 1, m);
    RatPoly qp(std::vector<Rat>(static_cast<std::size_t>(p), Rat(1)));
    RatPoly rhs = P1mq(1).scaled(Rat(p - 1) / Rat(2)) +
                  (P1mq(2) * qp).scaled(Rat(p * p - 1) / Rat(24));
    Residue diff = lhs - reduce(rhs, m);
    g.expect(diff.is_zero(),
             "p=" + std::to_string(p) + " residue " + diff.str());
  }
}

void criterion2(Gate& g) {
  for (long p : primes_in(5, 31)) {
    auto m = Modulus::make(p, 1);
    Residue two = h_norm(Index({2}, {0}), p - 1, m);
    Residue three = h_norm(Index({3}, {0}), p - 1, m);
    Rat want2 = -Rat((p - 1) * (p - 5)) / Rat(12);
    Rat want3 = -Rat((p - 1) * (p - 3)) / Rat(8);
    g.expect(two == Residue::from_rat(want2, m),
             "weight 2 at p=" + std::to_string(p));
    g.expect(three == Residue::from_rat(want3, m),
             "weight 3 at p=" + std::to_string(p));
    if (p == 5) {
      g.expect(two.is_zero(), "p=5 weight-2 spot value");
      g.expect(three == Residue::from_rat(Rat(-1), m), "p=5 weight-3 spot value");
    }
    if (p == 7) {
      g.expect(two == Residue::from_rat(Rat(-1), m), "p=7 weight-2 spot value");
      g.expect(three == Residue::from_rat(Rat(-3), m), "p=7 weight-3 spot value");
    }
  }
}

void criterion3(Gate& g) {
  // Symbolic K_2, K_3 and the triangle linking them to criterion 2.
  RatPoly k2 = k_poly(2).as_poly, k3 = k_poly(3).as_poly;
  RatPoly want2(std::vector<Rat>{make_rat(1, 12), Rat(0), make_rat(-1, 12)});
  RatPoly want3(std::vector<Rat>{make_rat(1, 24), Rat(0), make_rat(-1, 24)});
  g.expect(k2 == want2, "K_2 symbolic form");
  g.expect(k3 == want3, "K_3 symbolic form");
  for (long p : primes_in(5, 31)) {
    Rat base = Rat(p - 1) / Rat(2);
    g.expect(base + k_value(2, p) == -Rat((p - 1) * (p - 5)) / Rat(12),
             "triangle weight 2 at p=" + std::to_string(p));
    g.expect(base + k_value(2, p) + k_value(3, p) ==
                 -Rat((p - 1) * (p - 3)) / Rat(8),
             "triangle weight 3 at p=" + std::to_string(p));
  }

  for (long p : primes_in(5, 19)) {
    auto m = Modulus::make(p, 1);
    for (long n = 2; n <= 8; ++n) {
      for (long t = 0; t < n; ++t) {
        Residue lhs = h_sum(Index({n}, {t}), p - 1, m);
        Rat c(0);
        if (t == 0) {
          c = Rat(p - 1) / Rat(2);
          for (long j = 2; j <= n; ++j) c += k_value(j, p);
        } else {
          for (long i = 0; i < t; ++i) {
            Rat term = Rat(binom(Int(t - 1), i)) * k_value(n - i, p);
            c += i % 2 == 0 ? term : -term;
          }
        }
        Residue diff = lhs - reduce(P1mq(n).scaled(c), m);
        g.expect(diff.is_zero(), "p=" + std::to_string(p) +
                                     " n=" + std::to_string(n) +
                                     " t=" + std::to_string(t));
      }
    }
  }
}

void criterion4(Gate& g) {
  for (long p : {5L, 7L, 11L, 13L}) {
    auto m = Modulus::make(p, 1);
    for (long s = 1; s <= 4; ++s) {
      std::vector<Rat> pred = homo_product_coeffs(s, p, 5);
      for (long ell = 0; ell <= 5; ++ell) {
        const std::string at = "p=" + std::to_string(p) + " s=" +
                               std::to_string(s) + " l=" + std::to_string(ell);
        Residue direct = h_norm(Index::repeat(s, 0, ell), p - 1, m);
        Residue recursed = homo_recursion(s, ell, m);
        g.expect(direct == recursed, "recursion vs direct at " + at);
        g.expect(direct ==
                     Residue::from_rat(pred[static_cast<std::size_t>(ell)], m),
                 "product expansion vs direct at " + at);
      }
    }
    for (long ell = 1; ell <= 5 && ell < p; ++ell) {
      Residue v = h_norm(Index::repeat(1, 0, ell), p - 1, m);
      Rat want = Rat(binom(Int(p - 1), ell)) / Rat(ell + 1);
      g.expect(v == Residue::from_rat(want, m),
               "binomial value p=" + std::to_string(p) + " l=" +
                   std::to_string(ell));
    }
  }
  auto m7 = Modulus::make(7, 1);
  g.expect(h_norm(Index::repeat(1, 0, 3), 6, m7) ==
               Residue::from_rat(Rat(5), m7),
           "p=7 l=3 value 5");
}

void criterion5(Gate& g) {
  for (long ell = 1; ell <= 6; ++ell) {
    RatPoly f = extract_f2(ell);
    g.expect(f.degree() == ell, "weight-2 core degree at l=" + std::to_string(ell));
    g.expect(!f.is_zero() && f.leading() == Rat(1),
             "weight-2 core monic at l=" + std::to_string(ell));
    RatPoly form = closed_form_w2(ell);
    for (long p : primes_in(3 * ell + 3, 31)) {
      auto m = Modulus::make(p, 1);
      Residue direct = h_norm(Index::repeat(2, 0, ell), p - 1, m);
      Rat predicted = form.eval(Rat(p));
      g.expect(direct == Residue::from_rat(predicted, m),
               "weight-2 l=" + std::to_string(ell) + " p=" + std::to_string(p) +
                   ": closed form " + to_string(predicted) + " vs direct " +
                   direct.str());
    }
  }
  for (long ell = 1; ell <= 4; ++ell) {
    RatPoly f = extract_f3(ell);
    const long want_deg = ell % 2 ? 2 * ell - 1 : 2 * ell;
    g.expect(f.degree() == want_deg,
             "weight-3 core degree at l=" + std::to_string(ell));
    g.expect(!f.is_zero() && f.leading() == Rat(1),
             "weight-3 core monic at l=" + std::to_string(ell));
    RatPoly form = closed_form_w3(ell);
    for (long p : primes_in(3 * ell + 3, 31)) {
      auto m = Modulus::make(p, 1);
      Residue direct = h_norm(Index::repeat(3, 0, ell), p - 1, m);
      Rat predicted = form.eval(Rat(p));
      g.expect(direct == Residue::from_rat(predicted, m),
               "weight-3 l=" + std::to_string(ell) + " p=" + std::to_string(p) +
                   ": closed form " + to_string(predicted) + " vs direct " +
                   direct.str());
    }
  }
}

void criterion6(Gate& g) {
  for (long p : primes_in(2, 19)) {
    auto m = Modulus::make(p, 1);
    for (long a = 1; a <= 3; ++a) {
      for (long b = 1; b <= 3; ++b) {
        Residue lhs = h_sum(Index({2 * a, 2 * b}, {a, b}), p - 1, m);
        Rat c = (depth2_f_coeff(a, p) * depth2_f_coeff(b, p) -
                 depth2_f_coeff(a + b, p)) /
                Rat(2);
        Residue rhs = reduce(P1mq(2 * (a + b)).scaled(c), m);
        g.expect(lhs == rhs, "depth-2 p=" + std::to_string(p) + " m=" +
                                 std::to_string(a) + " n=" + std::to_string(b));
        Residue rev = h_sum(Index({2 * b, 2 * a}, {b, a}), p - 1, m);
        g.expect(lhs == rev, "reversal p=" + std::to_string(p) + " m=" +
                                 std::to_string(a) + " n=" + std::to_string(b));
      }
    }
  }
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    auto m = Modulus::make(p, 1);
    const Residue q1 = reduce(RatPoly::monomial(Rat(1), 1), m);
    Residue acc = Residue::zero(m);
    Residue qk = Residue::one(m);
    for (long k = 1; k <= p - 1; ++k) {
      qk = qk * q1;
      acc = acc + (qk * q_int(k, m).pow(-2)).scaled(Rat(k));
    }
    Rat c = -Rat(p) * Rat(p - 1) * Rat(p + 1) / Rat(24);
    g.expect(acc == reduce(P1mq(2).scaled(c), m),
             "k q^k sum at p=" + std::to_string(p));
  }
  for (long p : primes_in(3, 19)) {
    auto m = Modulus::make(p, 1);
    for (long n = 1; n <= 3; ++n) {
      Residue lhs = h_sum(Index({2 * n}, {n}), (p - 1) / 2, m);
      Residue rhs =
          reduce(P1mq(2 * n).scaled(depth2_f_coeff(n, p) / Rat(2)), m);
      g.expect(lhs == rhs, "half-range p=" + std::to_string(p) + " n=" +
                               std::to_string(n));
    }
  }
}

void criterion7(Gate& g) {
  // Stuffle product identity: 100 random pairs per prime, two ranges each.
  for (long p : {7L, 11L}) {
    auto m = Modulus::make(p, 1);
    qtest::SplitMix rng{static_cast<std::uint64_t>(5000 + p)};
    for (int i = 0; i < 100; ++i) {
      auto draw = [&]() {
        const long depth = 1 + rng.below(3);
        std::vector<long> s, t;
        for (long j = 0; j < depth; ++j) {
          s.push_back(1 + rng.below(3));
          t.push_back(rng.below(3));
        }
        return Index(std::move(s), std::move(t));
      };
      Index a = draw();
      Index b = draw();
      auto terms = stuffle_expand(a, b);
      for (long n : {3L, p - 1}) {
        Residue lhs = h_sum(a, n, m) * h_sum(b, n, m);
        Residue rhs = Residue::zero(m);
        for (const auto& term : terms)
          rhs = rhs + h_sum(term.index, n, m).scaled(Rat(term.multiplicity));
        g.expect(lhs == rhs, "stuffle p=" + std::to_string(p) + " pair " +
                                 a.str() + " * " + b.str() + " at n=" +
                                 std::to_string(n));
      }
    }
  }

  // Ring axioms, polynomial layer and residue layer.
  {
    qtest::SplitMix rng{60001};
    for (int i = 0; i < 100; ++i) {
      RatPoly f = qtest::random_poly(rng, 6);
      RatPoly h = qtest::random_poly(rng, 6);
      RatPoly k = qtest::random_poly(rng, 6);
      g.expect((f + h) * k == f * k + h * k, "distributivity draw");
      g.expect(f * h == h * f, "commutativity draw");
      g.expect((f * h) * k == f * (h * k), "associativity draw");
    }
    auto m = Modulus::make(7, 1);
    qtest::SplitMix rng2{60002};
    for (int i = 0; i < 100; ++i) {
      Residue f = reduce(qtest::random_poly(rng2, 9), m);
      Residue h = reduce(qtest::random_poly(rng2, 9), m);
      Residue k = reduce(qtest::random_poly(rng2, 9), m);
      g.expect((f + h) * k == f * k + h * k, "residue distributivity draw");
      g.expect((f * h) * k == f * (h * k), "residue associativity draw");
    }
  }

  // Extended-gcd certificates.
  {
    qtest::SplitMix rng{60003};
    for (int i = 0; i < 100; ++i) {
      RatPoly f = qtest::random_poly(rng, 7);
      RatPoly h = qtest::random_poly(rng, 7);
      if (f.is_zero() && h.is_zero()) continue;
      auto [d, a, b] = ext_gcd(f, h);
      g.expect(a * f + b * h == d, "gcd certificate draw");
      g.expect(!d.is_zero() && d.leading() == Rat(1), "gcd monic draw");
      if (!f.is_zero())
        g.expect(divrem(f, d).second.is_zero(), "gcd divides first draw");
      if (!h.is_zero())
        g.expect(divrem(h, d).second.is_zero(), "gcd divides second draw");
    }
  }

  // Series division reconstructs the dividend.
  {
    qtest::SplitMix rng{60004};
    for (int i = 0; i < 100; ++i) {
      Series f = Series::from_poly(qtest::random_poly(rng, 6), 6);
      std::vector<Rat> gc;
      gc.push_back(Rat(1 + rng.below(5)));
      for (int j = 0; j < 6; ++j) gc.push_back(qtest::random_rat(rng));
      Series den(std::move(gc), 6);
      g.expect(series_div(f, den) * den == f, "series reconstruction draw");
    }
  }

  // Bernoulli recurrence, independent of the generating series.
  for (long n = 1; n <= 30; ++n) {
    Rat acc(0);
    for (long k = 0; k <= n; ++k)
      acc += Rat(binom(Int(n + 1), k)) * bernoulli(k);
    g.expect(acc == Rat(0), "recurrence at n=" + std::to_string(n));
  }
}

void criterion8(Gate& g) {
  VerifyConfig cfg;  // default sweep: primes 2..31, depth 5, order 8
  cfg.jobs = 1;
  Report serial = run_all(cfg);
  cfg.jobs = 8;
  Report parallel = run_all(cfg);
  const std::string a = to_json(serial);
  const std::string b = to_json(parallel);
  g.expect(a == b, "reports differ between jobs=1 and jobs=8");
  g.expect(!serial.results.empty(), "default sweep produced no results");
  g.expect(!any_failed(serial), "default sweep has failing checks");
}

}  // namespace

int main() {
  int failed = 0;
  failed += !run(1, "depth-one value modulo [p]_q^2 at p in {5,7,11,13}", criterion1);
  failed += !run(2, "weight-2 and weight-3 depth-one constants, 5 <= p <= 31", criterion2);
  failed += !run(3, "modifier sweep against K-value right sides, 5 <= p <= 19", criterion3);
  failed += !run(4, "homogeneous family three-way agreement, s <= 4, l <= 5", criterion4);
  failed += !run(5, "monic cores and closed-form evaluation, weights 2 and 3", criterion5);
  failed += !run(6, "depth-two, reversal, k q^k sum, half-range sums", criterion6);
  failed += !run(7, "algebraic property suites, 200+ random draws", criterion7);
  failed += !run(8, "report determinism across worker counts", criterion8);
  if (failed) std::printf("%d criterion(s) failed\n", failed);
  return failed ? 1 : 0;
}
