#include "qmhs/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <utility>

#include "qmhs/combinat.hpp"

namespace qmhs {

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> order{
      CheckId::sp1,     CheckId::sp2,            CheckId::dilcher, CheckId::modifier_t,
      CheckId::t0,      CheckId::stuffle,        CheckId::homo_recursion,
      CheckId::homoall, CheckId::cor1,           CheckId::cor2,    CheckId::cor3,
      CheckId::depth2,  CheckId::reversal,       CheckId::phi2,    CheckId::h3,
      CheckId::lehmer,  CheckId::pn_bridge,
  };
  return order;
}

std::string to_string(CheckId id) {
  switch (id) {
    case CheckId::sp1: return "sp1";
    case CheckId::sp2: return "sp2";
    case CheckId::dilcher: return "dilcher";
    case CheckId::modifier_t: return "modifier_t";
    case CheckId::t0: return "t0";
    case CheckId::stuffle: return "stuffle";
    case CheckId::homo_recursion: return "homo_recursion";
    case CheckId::homoall: return "homoall";
    case CheckId::cor1: return "cor1";
    case CheckId::cor2: return "cor2";
    case CheckId::cor3: return "cor3";
    case CheckId::depth2: return "depth2";
    case CheckId::reversal: return "reversal";
    case CheckId::phi2: return "phi2";
    case CheckId::h3: return "h3";
    case CheckId::lehmer: return "lehmer";
    case CheckId::pn_bridge: return "pn_bridge";
  }
  return "?";
}

std::optional<CheckId> parse_check_id(const std::string& name) {
  for (CheckId id : all_checks())
    if (to_string(id) == name) return id;
  return std::nullopt;
}

std::string check_description(CheckId id) {
  switch (id) {
    case CheckId::sp1:
      return "H(1; p-1) = (p-1)/2 (1-q) + (p^2-1)/24 (1-q)^2 [p]_q  mod [p]_q^2, p >= 5";
    case CheckId::sp2:
      return "sH(2) = -(p-1)(p-5)/12  mod [p]_q, p >= 5";
    case CheckId::dilcher:
      return "Dilcher-type: sum q^j/[j]^n = K_n(p) (1-q)^n  mod [p]_q, p > 3, 2 <= n <= nmax";
    case CheckId::modifier_t:
      return "sum q^(tj)/[j]^n = (1-q)^n sum_i C(t-1,i)(-1)^i K_(n-i)(p)  mod [p]_q, n > t >= 1";
    case CheckId::t0:
      return "sum 1/[j]^n = (1-q)^n ((p-1)/2 + sum_(j=2..n) K_j(p))  mod [p]_q, p > 3";
    case CheckId::stuffle:
      return "H(a)H(b) = sum mult * H(term) over the quasi-shuffle expansion; random pairs";
    case CheckId::homo_recursion:
      return "depth-l homogeneous value rebuilt from depth-1 values equals the direct sum, s <= 4";
    case CheckId::homoall:
      return "root-of-unity product expansion predicts sH({s}^l) for s <= 4";
    case CheckId::cor1:
      return "sH({1}^l) = C(p-1,l)/(l+1)  mod [p]_q, 1 <= l < p";
    case CheckId::cor2:
      return "sH({2}^l) matches the symbolic-in-p binomial bracket / p^2, 1 <= l < p";
    case CheckId::cor3:
      return "sH({3}^l) matches the symbolic-in-p binomial bracket / p^3, p >= 3l+3";
    case CheckId::depth2:
      return "H^(m,n)(2m,2n) = 1/2 (f(m)f(n) - f(m+n)) via K-values, two independent paths";
    case CheckId::reversal:
      return "H^(m,n)(2m,2n) = H^(n,m)(2n,2m)  mod [p]_q";
    case CheckId::phi2:
      return "sum k q^k/[k]^2 = -p(p-1)(p+1)/24 (1-q)^2  mod [p]_q, every prime";
    case CheckId::h3:
      return "sH(3) = -(p-1)(p-3)/8  mod [p]_q, p >= 5";
    case CheckId::lehmer:
      return "half-range H^(n)(2n; (p-1)/2) = 1/2 (1-q)^(2n) sum_j C(n-1,j)(-1)^j K_(2n-j)(p), odd p";
    case CheckId::pn_bridge:
      return "sH(n) is the constant P_n from the root-sum generating function";
  }
  return "";
}

std::vector<long> primes_in(long lo, long hi) {
  std::vector<long> out;
  for (long p = std::max<long>(2, lo); p <= hi; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

namespace {

constexpr const char* kB4Note =
    "uses b4 = -19/30 from x/log(1+x); some sources print -19/24";

// Deterministic generator for the stuffle draws; independent of any stdlib
// engine so reports never drift across platforms.
struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }
};

Index random_index(SplitMix& rng) {
  const long depth = 1 + rng.below(3);
  std::vector<long> s, t;
  for (long i = 0; i < depth; ++i) {
    s.push_back(1 + rng.below(3));
    t.push_back(rng.below(3));
  }
  return Index(std::move(s), std::move(t));
}

struct Sweep {
  explicit Sweep(CheckId check) : id(check) {}

  void pass(std::string params, std::string note = "") {
    rows.push_back({id, std::move(params), Status::passed, "", std::move(note)});
  }
  void fail(std::string params, std::string witness, std::string note = "") {
    rows.push_back({id, std::move(params), Status::failed, std::move(witness), std::move(note)});
  }
  void skip(std::string params, const std::string& reason) {
    rows.push_back({id, std::move(params), Status::skipped, "", "skipped: " + reason});
  }

  // Records reduce(lhs - rhs) = 0, with the nonzero difference as witness.
  void equal(std::string params, const Residue& lhs, const Residue& rhs,
             std::string note = "") {
    Residue diff = lhs - rhs;
    if (diff.is_zero())
      pass(std::move(params), std::move(note));
    else
      fail(std::move(params), diff.str(), std::move(note));
  }

  CheckId id;
  std::vector<CheckResult> rows;
};

RatPoly one_minus_q_pow(long e) {
  RatPoly base(std::vector<Rat>{Rat(1), Rat(-1)});
  RatPoly out = RatPoly::one();
  for (long i = 0; i < e; ++i) out = out * base;
  return out;
}

std::string pstr(long p) { return "p=" + std::to_string(p); }

std::vector<CheckResult> check_sp1(const VerifyConfig& cfg) {
  Sweep sw(CheckId::sp1);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    if (p < 5) {
      sw.skip(pstr(p), "requires p >= 5");
      continue;
    }
    auto m = Modulus::make(p, 2);
    Residue lhs = h_sum(Index({1}, {0}), p - 1, m);
    RatPoly qp(std::vector<Rat>(static_cast<std::size_t>(p), Rat(1)));  // [p]_q
    RatPoly rhs_poly = one_minus_q_pow(1).scaled(Rat(p - 1) / Rat(2)) +
                       (one_minus_q_pow(2) * qp).scaled(Rat(p * p - 1) / Rat(24));
    sw.equal(pstr(p), lhs, reduce(rhs_poly, m));
  }
  return sw.rows;
}

std::vector<CheckResult> check_sp2(const VerifyConfig& cfg) {
  Sweep sw(CheckId::sp2);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    if (p < 5) {
      sw.skip(pstr(p), "requires p >= 5");
      continue;
    }
    auto m = Modulus::make(p, 1);
    Residue lhs = h_norm(Index({2}, {0}), p - 1, m);
    Rat want = -Rat((p - 1) * (p - 5)) / Rat(12);
    sw.equal(pstr(p), lhs, Residue::from_rat(want, m));
  }
  return sw.rows;
}

std::vector<CheckResult> check_dilcher(const VerifyConfig& cfg) {
  Sweep sw(CheckId::dilcher);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    for (long n = 2; n <= cfg.n_max; ++n) {
      std::string params = pstr(p) + ",n=" + std::to_string(n);
      if (p <= 3) {
        sw.skip(params, "requires p > 3");
        continue;
      }
      auto m = Modulus::make(p, 1);
      Residue lhs = h_sum(Index({n}, {1}), p - 1, m);
      Residue rhs = reduce(one_minus_q_pow(n).scaled(k_value(n, p)), m);
      sw.equal(params, lhs, rhs, kB4Note);
    }
  }
  return sw.rows;
}

std::vector<CheckResult> check_modifier_t(const VerifyConfig& cfg) {
  Sweep sw(CheckId::modifier_t);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    for (long n = 2; n <= cfg.n_max; ++n) {
      for (long t = 1; t < n; ++t) {
        std::string params = pstr(p) + ",n=" + std::to_string(n) + ",t=" + std::to_string(t);
        if (p <= 3) {
          sw.skip(params, "requires p > 3");
          continue;
        }
        auto m = Modulus::make(p, 1);
        Residue lhs = h_sum(Index({n}, {t}), p - 1, m);
        Rat c(0);
        for (long i = 0; i < t; ++i) {
          Rat term = Rat(binom(Int(t - 1), i)) * k_value(n - i, p);
          c += i % 2 == 0 ? term : -term;
        }
        Residue rhs = reduce(one_minus_q_pow(n).scaled(c), m);
        sw.equal(params, lhs, rhs, kB4Note);
      }
    }
  }
  return sw.rows;
}

std::vector<CheckResult> check_t0(const VerifyConfig& cfg) {
  Sweep sw(CheckId::t0);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    for (long n = 1; n <= cfg.n_max; ++n) {
      std::string params = pstr(p) + ",n=" + std::to_string(n);
      if (p <= 3) {
        sw.skip(params, "requires p > 3");
        continue;
      }
      auto m = Modulus::make(p, 1);
      Residue lhs = h_sum(Index({n}, {0}), p - 1, m);
      Rat c = Rat(p - 1) / Rat(2);
      for (long j = 2; j <= n; ++j) c += k_value(j, p);
      Residue rhs = reduce(one_minus_q_pow(n).scaled(c), m);
      sw.equal(params, lhs, rhs, kB4Note);
    }
  }
  return sw.rows;
}

std::vector<CheckResult> check_stuffle(const VerifyConfig& cfg) {
  Sweep sw(CheckId::stuffle);
  constexpr long kDraws = 12;
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    auto m = Modulus::make(p, 1);
    for (long draw = 0; draw < kDraws; ++draw) {
      SplitMix rng{0x7173ull * 1000003ull + static_cast<std::uint64_t>(p) * 7919ull +
                   static_cast<std::uint64_t>(draw)};
      Index a = random_index(rng);
      Index b = random_index(rng);
      std::vector<StuffleTerm> terms = stuffle_expand(a, b);
      std::vector<long> uppers{std::min<long>(3, p - 1), p - 1};
      if (uppers[0] == uppers[1]) uppers.pop_back();
      std::string params = pstr(p) + ",draw=" + std::to_string(draw);
      std::string note = "a=" + a.str() + " b=" + b.str();
      bool ok = true;
      std::string witness;
      for (long n : uppers) {
        Residue lhs = h_sum(a, n, m) * h_sum(b, n, m);
        Residue rhs = Residue::zero(m);
        for (const auto& term : terms)
          rhs = rhs + h_sum(term.index, n, m).scaled(Rat(term.multiplicity));
        Residue diff = lhs - rhs;
        if (!diff.is_zero()) {
          ok = false;
          witness = diff.str();
          note += " n=" + std::to_string(n);
          break;
        }
      }
      if (ok)
        sw.pass(params, note);
      else
        sw.fail(params, witness, note);
    }
  }
  return sw.rows;
}

std::vector<CheckResult> check_homo_recursion(const VerifyConfig& cfg) {
  Sweep sw(CheckId::homo_recursion);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    auto m = Modulus::make(p, 1);
    for (long s = 1; s <= 4; ++s) {
      for (long ell = 0; ell <= cfg.depth_max; ++ell) {
        std::string params =
            pstr(p) + ",s=" + std::to_string(s) + ",l=" + std::to_string(ell);
        Residue lhs = homo_recursion(s, ell, m);
        Residue rhs = h_norm(Index::repeat(s, 0, ell), p - 1, m);
        sw.equal(params, lhs, rhs);
      }
    }
  }
  return sw.rows;
}

std::vector<CheckResult> check_homoall(const VerifyConfig& cfg) {
  Sweep sw(CheckId::homoall);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    auto m = Modulus::make(p, 1);
    for (long s = 1; s <= 4; ++s) {
      std::vector<Rat> predicted;
      try {
        predicted = homo_product_coeffs(s, p, cfg.depth_max);
      } catch (const ConsistencyError& e) {
        sw.fail(pstr(p) + ",s=" + std::to_string(s), e.what());
        continue;
      }
      for (long ell = 0; ell <= cfg.depth_max; ++ell) {
        std::string params =
            pstr(p) + ",s=" + std::to_string(s) + ",l=" + std::to_string(ell);
        Residue lhs = h_norm(Index::repeat(s, 0, ell), p - 1, m);
        sw.equal(params, lhs,
                 Residue::from_rat(predicted[static_cast<std::size_t>(ell)], m));
      }
    }
  }
  return sw.rows;
}

std::vector<CheckResult> check_cor1(const VerifyConfig& cfg) {
  Sweep sw(CheckId::cor1);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    for (long ell = 1; ell <= cfg.depth_max; ++ell) {
      std::string params = pstr(p) + ",l=" + std::to_string(ell);
      if (ell >= p) {
        sw.skip(params, "requires l < p");
        continue;
      }
      auto m = Modulus::make(p, 1);
      Residue lhs = h_norm(Index::repeat(1, 0, ell), p - 1, m);
      Rat want = Rat(binom(Int(p - 1), ell)) / Rat(ell + 1);
      sw.equal(params, lhs, Residue::from_rat(want, m));
    }
  }
  return sw.rows;
}

// The symbolic closed forms are p-independent; build each level once and
// remember a structural failure as a per-level error message.
struct ClosedFormCache {
  std::map<long, RatPoly> value;
  std::map<long, std::string> error;

  const RatPoly* get(long ell, RatPoly (*form)(long), RatPoly (*extract)(long)) {
    if (auto it = value.find(ell); it != value.end()) return &it->second;
    if (error.count(ell)) return nullptr;
    try {
      extract(ell);  // monicity and degree are part of the claim
      auto [it, fresh] = value.emplace(ell, form(ell));
      (void)fresh;
      return &it->second;
    } catch (const ConsistencyError& e) {
      error.emplace(ell, e.what());
      return nullptr;
    }
  }
};

std::vector<CheckResult> check_cor2(const VerifyConfig& cfg) {
  Sweep sw(CheckId::cor2);
  ClosedFormCache cache;
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    for (long ell = 1; ell <= cfg.depth_max; ++ell) {
      std::string params = pstr(p) + ",l=" + std::to_string(ell);
      if (ell >= p) {
        sw.skip(params, "requires l < p");
        continue;
      }
      const RatPoly* form = cache.get(ell, closed_form_w2, extract_f2);
      if (!form) {
        sw.fail(params, cache.error.at(ell));
        continue;
      }
      auto m = Modulus::make(p, 1);
      Residue lhs = h_norm(Index::repeat(2, 0, ell), p - 1, m);
      sw.equal(params, lhs, Residue::from_rat(form->eval(Rat(p)), m));
    }
  }
  return sw.rows;
}

std::vector<CheckResult> check_cor3(const VerifyConfig& cfg) {
  Sweep sw(CheckId::cor3);
  ClosedFormCache cache;
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    for (long ell = 1; ell <= cfg.depth_max; ++ell) {
      std::string params = pstr(p) + ",l=" + std::to_string(ell);
      if (p < 3 * ell + 3) {
        sw.skip(params, "requires p >= 3l+3");
        continue;
      }
      const RatPoly* form = cache.get(ell, closed_form_w3, extract_f3);
      if (!form) {
        sw.fail(params, cache.error.at(ell));
        continue;
      }
      auto m = Modulus::make(p, 1);
      Residue lhs = h_norm(Index::repeat(3, 0, ell), p - 1, m);
      sw.equal(params, lhs, Residue::from_rat(form->eval(Rat(p)), m));
    }
  }
  return sw.rows;
}

std::vector<CheckResult> check_depth2(const VerifyConfig& cfg) {
  Sweep sw(CheckId::depth2);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    auto m = Modulus::make(p, 1);
    const Residue one_minus_q = reduce(one_minus_q_pow(1), m);
    for (long a = 1; a <= 3; ++a) {
      for (long b = 1; b <= 3; ++b) {
        std::string params =
            pstr(p) + ",m=" + std::to_string(a) + ",n=" + std::to_string(b);
        const long w = 2 * (a + b);
        Residue lhs = h_sum(Index({2 * a, 2 * b}, {a, b}), p - 1, m);
        Rat c = (depth2_f_coeff(a, p) * depth2_f_coeff(b, p) - depth2_f_coeff(a + b, p)) /
                Rat(2);
        Residue rhs = reduce(one_minus_q_pow(w).scaled(c), m);

        // Same right side along an independent path: normalized depth-one
        // sums combined by the quasi-shuffle identity.
        Residue sh_a = h_norm(Index({2 * a}, {a}), p - 1, m);
        Residue sh_b = h_norm(Index({2 * b}, {b}), p - 1, m);
        Residue sh_ab = h_norm(Index({2 * (a + b)}, {a + b}), p - 1, m);
        Residue rhs2 =
            (sh_a * sh_b - sh_ab).scaled(Rat(1) / Rat(2)) * one_minus_q.pow(w);

        Residue paths = rhs - rhs2;
        if (!paths.is_zero()) {
          sw.fail(params, paths.str(),
                  std::string("the two right-side paths disagree; ") + kB4Note);
          continue;
        }
        sw.equal(params, lhs, rhs, kB4Note);
      }
    }
  }
  return sw.rows;
}

std::vector<CheckResult> check_reversal(const VerifyConfig& cfg) {
  Sweep sw(CheckId::reversal);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    auto m = Modulus::make(p, 1);
    for (long a = 1; a <= 3; ++a) {
      for (long b = a + 1; b <= 3; ++b) {
        std::string params =
            pstr(p) + ",m=" + std::to_string(a) + ",n=" + std::to_string(b);
        Residue lhs = h_sum(Index({2 * a, 2 * b}, {a, b}), p - 1, m);
        Residue rhs = h_sum(Index({2 * b, 2 * a}, {b, a}), p - 1, m);
        sw.equal(params, lhs, rhs);
      }
    }
  }
  return sw.rows;
}

std::vector<CheckResult> check_phi2(const VerifyConfig& cfg) {
  Sweep sw(CheckId::phi2);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    auto m = Modulus::make(p, 1);
    const Residue q1 = reduce(RatPoly::monomial(Rat(1), 1), m);
    Residue acc = Residue::zero(m);
    Residue qk = Residue::one(m);
    for (long k = 1; k <= p - 1; ++k) {
      qk = qk * q1;
      acc = acc + (qk * q_int_inv(k, m).pow(2)).scaled(Rat(k));
    }
    Rat c = -Rat(p) * Rat(p - 1) * Rat(p + 1) / Rat(24);
    Residue rhs = reduce(one_minus_q_pow(2).scaled(c), m);
    sw.equal(pstr(p), acc, rhs);
  }
  return sw.rows;
}

std::vector<CheckResult> check_h3(const VerifyConfig& cfg) {
  Sweep sw(CheckId::h3);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    if (p < 5) {
      sw.skip(pstr(p), "requires p >= 5");
      continue;
    }
    auto m = Modulus::make(p, 1);
    Residue lhs = h_norm(Index({3}, {0}), p - 1, m);
    Rat want = -Rat((p - 1) * (p - 3)) / Rat(8);
    sw.equal(pstr(p), lhs, Residue::from_rat(want, m));
  }
  return sw.rows;
}

std::vector<CheckResult> check_lehmer(const VerifyConfig& cfg) {
  Sweep sw(CheckId::lehmer);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    for (long n = 1; n <= std::min<long>(3, cfg.n_max); ++n) {
      std::string params = pstr(p) + ",n=" + std::to_string(n);
      if (p == 2) {
        sw.skip(params, "requires odd p");
        continue;
      }
      auto m = Modulus::make(p, 1);
      Residue lhs = h_sum(Index({2 * n}, {n}), (p - 1) / 2, m);
      Residue rhs =
          reduce(one_minus_q_pow(2 * n).scaled(depth2_f_coeff(n, p) / Rat(2)), m);
      sw.equal(params, lhs, rhs, kB4Note);
    }
  }
  return sw.rows;
}

std::vector<CheckResult> check_pn_bridge(const VerifyConfig& cfg) {
  Sweep sw(CheckId::pn_bridge);
  for (long p : primes_in(cfg.prime_min, cfg.prime_max)) {
    auto m = Modulus::make(p, 1);
    std::vector<Rat> pn = p_series(p, cfg.n_max);
    for (long n = 1; n <= cfg.n_max; ++n) {
      std::string params = pstr(p) + ",n=" + std::to_string(n);
      Residue lhs = h_norm(Index({n}, {0}), p - 1, m);
      sw.equal(params, lhs,
               Residue::from_rat(pn[static_cast<std::size_t>(n)], m));
    }
  }
  return sw.rows;
}

std::vector<CheckId> configured_checks(const VerifyConfig& cfg) {
  if (cfg.checks.empty()) return all_checks();
  std::vector<CheckId> out;
  for (CheckId id : all_checks())
    if (std::find(cfg.checks.begin(), cfg.checks.end(), id) != cfg.checks.end())
      out.push_back(id);
  return out;
}

}  // namespace

std::vector<CheckResult> run_check(CheckId id, const VerifyConfig& cfg) {
  switch (id) {
    case CheckId::sp1: return check_sp1(cfg);
    case CheckId::sp2: return check_sp2(cfg);
    case CheckId::dilcher: return check_dilcher(cfg);
    case CheckId::modifier_t: return check_modifier_t(cfg);
    case CheckId::t0: return check_t0(cfg);
    case CheckId::stuffle: return check_stuffle(cfg);
    case CheckId::homo_recursion: return check_homo_recursion(cfg);
    case CheckId::homoall: return check_homoall(cfg);
    case CheckId::cor1: return check_cor1(cfg);
    case CheckId::cor2: return check_cor2(cfg);
    case CheckId::cor3: return check_cor3(cfg);
    case CheckId::depth2: return check_depth2(cfg);
    case CheckId::reversal: return check_reversal(cfg);
    case CheckId::phi2: return check_phi2(cfg);
    case CheckId::h3: return check_h3(cfg);
    case CheckId::lehmer: return check_lehmer(cfg);
    case CheckId::pn_bridge: return check_pn_bridge(cfg);
  }
  throw RingError("unknown check");
}

Report run_all(const VerifyConfig& cfg) {
  const std::vector<CheckId> checks = configured_checks(cfg);
  std::vector<std::vector<CheckResult>> slots(checks.size());

  const int jobs = std::max(1, std::min(cfg.jobs, 64));
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= checks.size()) return;
      try {
        slots[i] = run_check(checks[i], cfg);
      } catch (const std::exception& e) {
        slots[i] = {{checks[i], "internal", Status::failed,
                     std::string("unexpected error: ") + e.what(), ""}};
      }
    }
  };
  if (jobs == 1 || checks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int width = static_cast<int>(std::min<std::size_t>(jobs, checks.size()));
    pool.reserve(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Report report;
  report.environment = {
      {"tool", "qmhs"},
      {"version", "1.0.0"},
      {"primes", std::to_string(cfg.prime_min) + ".." + std::to_string(cfg.prime_max)},
      {"depth_max", std::to_string(cfg.depth_max)},
      {"n_max", std::to_string(cfg.n_max)},
  };
  std::string names;
  if (cfg.checks.empty()) {
    names = "all";
  } else {
    for (std::size_t i = 0; i < checks.size(); ++i)
      names += (i ? "," : "") + to_string(checks[i]);
  }
  report.environment.emplace_back("checks", names);

  for (std::size_t i = 0; i < checks.size(); ++i) {
    Summary s;
    for (const CheckResult& r : slots[i]) {
      switch (r.status) {
        case Status::passed: ++s.passed; break;
        case Status::failed: ++s.failed; break;
        case Status::skipped: ++s.skipped; break;
      }
      report.results.push_back(r);
    }
    report.summary.emplace_back(checks[i], s);
  }
  return report;
}

bool any_failed(const Report& report) {
  for (const auto& [id, s] : report.summary)
    if (s.failed > 0) return true;
  for (const auto& r : report.results)
    if (r.status == Status::failed) return true;
  return false;
}

}  // namespace qmhs
