#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmhs/combinat.hpp"
#include "qmhs/harmonic.hpp"
#include "qmhs/verify.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inclusive "a..b" (or a single value) filtered to primes by the caller.
std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t used = 0;
      long v = std::stol(text, &used);
      if (used != text.size()) throw UsageError("bad range: " + text);
      return {v, v};
    }
    std::size_t used = 0;
    long lo = std::stol(text.substr(0, dots), &used);
    if (used != dots) throw UsageError("bad range: " + text);
    std::string hi_text = text.substr(dots + 2);
    long hi = std::stol(hi_text, &used);
    if (used != hi_text.size()) throw UsageError("bad range: " + text);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw UsageError("bad range: " + text);
  } catch (const std::out_of_range&) {
    throw UsageError("bad range: " + text);
  }
}

std::vector<qmhs::CheckId> parse_check_list(const std::string& text) {
  std::vector<qmhs::CheckId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string name = text.substr(start, comma - start);
    if (!name.empty()) {
      auto id = qmhs::parse_check_id(name);
      if (!id) throw UsageError("unknown check: " + name);
      out.push_back(*id);
    }
    start = comma + 1;
  }
  if (out.empty()) throw UsageError("empty check list");
  return out;
}

int cmd_compute(long prime, const std::string& index_text,
                const std::string& modifier_text, int exponent, long upper,
                bool normalized) {
  if (!qmhs::is_prime(prime))
    throw UsageError("--prime must be prime, got " + std::to_string(prime));
  if (exponent != 1 && exponent != 2)
    throw UsageError("--exponent must be 1 or 2");
  qmhs::Index idx = qmhs::Index::parse(index_text, modifier_text);
  if (upper < 0) upper = prime - 1;
  auto m = qmhs::Modulus::make(prime, exponent);
  qmhs::Residue r = normalized ? qmhs::h_norm(idx, upper, m)
                               : qmhs::h_sum(idx, upper, m);
  std::cout << r.str() << "\n";
  if (!normalized && idx.weight() > 0 && !r.is_zero()) {
    qmhs::Residue base =
        qmhs::reduce(qmhs::RatPoly(std::vector<qmhs::Rat>{qmhs::Rat(1), qmhs::Rat(-1)}),
                     m);
    qmhs::Residue c = r * base.pow(-idx.weight());
    if (c.is_constant())
      std::cout << "= " << qmhs::to_string(c.constant_value()) << " * (1-q)^"
                << idx.weight() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& primes_text, const std::string& checks_text,
               long depth_max, long n_max, int jobs, const std::string& format,
               const std::string& output) {
  qmhs::VerifyConfig cfg;
  std::tie(cfg.prime_min, cfg.prime_max) = parse_range(primes_text);
  if (qmhs::primes_in(cfg.prime_min, cfg.prime_max).empty())
    throw UsageError("no primes in range " + primes_text);
  if (!checks_text.empty()) cfg.checks = parse_check_list(checks_text);
  if (depth_max < 0 || n_max < 1) throw UsageError("bad sweep bounds");
  cfg.depth_max = depth_max;
  cfg.n_max = n_max;
  cfg.jobs = jobs;

  qmhs::Report report = qmhs::run_all(cfg);
  std::string rendered;
  if (format == "json")
    rendered = qmhs::to_json(report);
  else if (format == "csv")
    rendered = qmhs::to_csv(report);
  else if (format == "text")
    rendered = qmhs::to_text(report);
  else
    throw UsageError("unknown format: " + format);

  if (output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + output);
    out << rendered;
    if (!out) throw UsageError("write failed: " + output);
  }
  return qmhs::any_failed(report) ? 1 : 0;
}

int cmd_series(bool pn, bool bernoulli, bool bernoulli2, long prime,
               long order) {
  const int chosen = int(pn) + int(bernoulli) + int(bernoulli2);
  if (chosen != 1)
    throw UsageError("choose exactly one of --pn, --bernoulli, --bernoulli2");
  if (order < 0) throw UsageError("--order must be >= 0");
  if (pn) {
    if (!qmhs::is_prime(prime))
      throw UsageError("--pn needs a prime --prime, got " + std::to_string(prime));
    std::vector<qmhs::Rat> coeffs = qmhs::p_series(prime, order);
    for (long n = 0; n <= order; ++n)
      std::cout << "P_" << n << " = "
                << qmhs::to_string(coeffs[static_cast<std::size_t>(n)]) << "\n";
    return 0;
  }
  for (long n = 0; n <= order; ++n) {
    qmhs::Rat v = bernoulli ? qmhs::bernoulli(n) : qmhs::bernoulli2(n);
    std::cout << (bernoulli ? "B_" : "b_") << n << " = " << qmhs::to_string(v)
              << "\n";
  }
  if (bernoulli2 && order >= 4)
    std::cout << "note: b_4 = -19/30 from x/log(1+x); some sources print -19/24\n";
  return 0;
}

int cmd_list_checks() {
  for (qmhs::CheckId id : qmhs::all_checks()) {
    std::string name = qmhs::to_string(id);
    name.resize(16, ' ');
    std::cout << name << qmhs::check_description(id) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-analog multiple harmonic sums: compute residues, "
               "verify congruences, expand series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qmhs 1.0.0");

  long prime = 0;
  std::string index_text, modifier_text;
  int exponent = 1;
  long upper = -1;
  bool normalized = false;
  CLI::App* compute = app.add_subcommand(
      "compute", "evaluate one sum as a residue modulo [p]_q^e");
  compute->add_option("--prime", prime, "prime p")->required();
  compute->add_option("--index", index_text, "comma list of exponents s_i >= 1")
      ->required();
  compute->add_option("--modifier", modifier_text,
                      "comma list of q-power modifiers t_i >= 0 (default all 0)");
  compute->add_option("--exponent", exponent, "modulus exponent e in {1,2}");
  compute->add_option("--upper", upper, "upper summation bound n (default p-1)");
  compute->add_flag("--normalized", normalized,
                    "divide by (1-q)^weight before printing");

  std::string primes_text = "2..31", checks_text, format = "json", output;
  long depth_max = 5, n_max = 8;
  int jobs = 1;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the congruence check catalog over a prime range");
  verify->add_option("--primes", primes_text, "inclusive range a..b, primes kept");
  verify->add_option("--checks", checks_text, "comma list of check ids (default all)");
  verify->add_option("--depth-max", depth_max, "largest depth swept");
  verify->add_option("--n-max", n_max, "largest exponent / order swept");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--format", format, "json, csv, or text");
  verify->add_option("--output", output, "write report here instead of stdout");

  bool pn = false, bern = false, bern2 = false;
  long s_prime = 0, s_order = 8;
  CLI::App* series = app.add_subcommand("series", "print exact coefficient tables");
  series->add_flag("--pn", pn, "root-sum constants P_0..P_order for --prime");
  series->add_flag("--bernoulli", bern, "Bernoulli numbers B_0..B_order");
  series->add_flag("--bernoulli2", bern2,
                   "coefficients b_n of x/log(1+x), times n!");
  series->add_option("--prime", s_prime, "prime for --pn");
  series->add_option("--order", s_order, "last index printed");

  CLI::App* list = app.add_subcommand("list-checks", "describe every check id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed())
      return cmd_compute(prime, index_text, modifier_text, exponent, upper,
                         normalized);
    if (verify->parsed())
      return cmd_verify(primes_text, checks_text, depth_max, n_max, jobs, format,
                        output);
    if (series->parsed()) return cmd_series(pn, bern, bern2, s_prime, s_order);
    if (list->parsed()) return cmd_list_checks();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
