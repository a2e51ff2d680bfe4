#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "necklace/bundles.hpp"
#include "necklace/chern.hpp"
#include "necklace/io.hpp"
#include "necklace/parallel.hpp"
#include "necklace/suites.hpp"

using namespace necklace;

namespace {

enum exit_code { kOk = 0, kCheckFailed = 1, kInputError = 2, kResource = 3 };

/// Collects report lines; a run succeeds iff no check failed.
class Report {
 public:
  void line(const std::string& s) { std::cout << s << "\n"; }

  void check(bool pass, const std::string& name, const std::string& witness = {}) {
    if (pass) {
      line("PASS " + name);
    } else {
      failed_ = true;
      line("FAIL " + name + (witness.empty() ? "" : ": " + witness));
    }
  }

  void suite(const std::vector<suites::Check>& checks) {
    for (const auto& c : checks) check(c.pass, c.name + " [" + std::to_string(c.cases) + " cases]", c.witness);
  }

  int code() const { return failed_ ? kCheckFailed : kOk; }

 private:
  bool failed_ = false;
};

int exit_code_of(errc code) {
  switch (code) {
    case errc::invalid_bundle:
    case errc::invalid_decoration:
    case errc::inconsistent_orientation:
    case errc::non_integral:
      return kCheckFailed;
    case errc::resource_limit:
      return kResource;
    default:
      return kInputError;
  }
}

std::string join_set(const std::set<long>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

void run_parity(Report& r, const std::vector<int>& letters) {
  const Word w(letters);
  const Rational brute = rational_parity(w);
  const Rational minors = sum_maximal_minors(normalized_word_matrix(w));
  r.line("word " + w.str() + " over " + std::to_string(w.alphabet_size()) + " letters");
  r.line("brute force: " + to_string(brute));
  r.line("minor sum: " + to_string(minors));
  r.check(brute == minors, "brute force equals minor sum");
  const Necklace n = canonical_necklace(w);
  if (w.alphabet_size() % 2 == 0) {
    r.line("necklace " + n.canonical_word.str() + ": " + errc_name(errc::even_alphabet));
    r.line("P = " + to_string(brute) + " (not rotation-invariant: even alphabet)");
  } else {
    const Rational np = necklace_parity(n);
    r.line("necklace " + n.canonical_word.str() + ": " + to_string(np));
    r.check(np == brute, "necklace parity equals word parity");
    r.line("P = " + to_string(brute));
  }
}

void run_extract(Report& r, const std::string& bundle_path, const std::string& out_path) {
  const BundleMap b = io::bundle_from_json(io::read_json(bundle_path));
  const auto report = validate_bundle(b);
  for (const auto& issue : report.issues) r.check(false, "bundle", issue.str());
  if (!report.ok()) return;
  r.check(true, "bundle validates");
  const Decoration d = extract_decoration(b, default_sections(b));
  const auto& base = d.complex();
  for (int u = 0; u < base.size(); ++u) r.line("word " + simplex_str(base[u]) + " = " + d.words[u].str());
  if (!out_path.empty()) {
    io::write_json(out_path, io::decoration_to_json(d));
    const Decoration back = io::decoration_from_json(io::read_json(out_path));
    const auto dr = validate_decoration(back);
    r.check(dr.ok() && back == d, "decoration round trip", dr.ok() ? "" : dr.issues.front().str());
  } else {
    const auto dr = validate_decoration(d);
    r.check(dr.ok(), "decoration validates", dr.ok() ? "" : dr.issues.front().str());
  }
}

void run_chern(Report& r, const std::string& path, int h, const std::string& cycle) {
  if (h < 1) throw error(errc::malformed_input, "--h must be >= 1");
  const Decoration d = io::decoration_from_json(io::read_json(path));
  const auto dr = validate_decoration(d);
  for (const auto& issue : dr.issues) r.check(false, "decoration", issue.str());
  if (!dr.ok()) return;
  const auto& base = d.complex();
  const RationalCochain c = chern_cochain(d, h);
  for (const auto& [t, v] : c.values) r.line("c(" + simplex_str(base[t]) + ") = " + to_string(v));
  if (base.dimension() > 2 * h) {
    r.check(coboundary(c).is_zero(), "coboundary vanishes");
  }
  if (h != 1 || base.dimension() != 2) return;
  const FundamentalCycle fc = cycle == "auto" ? fundamental_cycle(base) : io::cycle_from_json(io::read_json(cycle));
  r.line("c" + std::to_string(h) + " = " + chern_number(d, fc).get_str());
}

void run_range(Report& r, const std::string& path, int max_len, int threads) {
  EnumerationOptions opts;
  opts.max_len = max_len;
  opts.max_candidates = max_candidates_from_env();
  opts.threads = threads;
  const auto base = std::make_shared<const LocallyOrderedComplex>(io::load_base(path));
  r.line(join_set(achievable_chern_numbers(base, opts)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local combinatorial formulas for Chern classes of triangulated circle bundles"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  int threads = default_thread_count();
  bool no_timing = false;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", no_timing, "Omit the timing line");

  std::vector<int> letters;
  auto* parity = app.add_subcommand("parity", "Rational parity of a word");
  parity->add_option("letters", letters, "Letters of the word")->required();

  std::string suite;
  int max_k = 6, rows = 6, cols = 4, samples = 500, n = 4, h = 1;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "identities|forms|okada")
      ->required()
      ->check(CLI::IsMember({"identities", "forms", "okada"}));
  verify->add_option("--max-k", max_k, "Largest alphabet for identities")->check(CLI::Range(1, 8));
  verify->add_option("--rows", rows, "Rows for okada")->check(CLI::Range(1, 12));
  verify->add_option("--cols", cols, "Columns for okada")->check(CLI::Range(1, 12));
  verify->add_option("--samples", samples, "Random samples")->check(CLI::NonNegativeNumber);
  verify->add_option("--n", n, "Largest simplex dimension for forms")->check(CLI::Range(0, 8));
  verify->add_option("--h", h, "Largest curvature power for forms")->check(CLI::Range(1, 4));
  verify->add_option("--seed", seed, "Random seed");

  auto* forms_verify = app.add_subcommand("forms-verify", "Run the forms suite");
  int forms_samples = 20;
  forms_verify->add_option("--n", n, "Largest simplex dimension")->check(CLI::Range(0, 8));
  forms_verify->add_option("--h", h, "Largest curvature power")->check(CLI::Range(1, 4));
  forms_verify->add_option("--samples", forms_samples, "Stochastic matrices per shape")->check(CLI::NonNegativeNumber);
  forms_verify->add_option("--seed", seed, "Random seed");

  std::string bundle_path, out_path;
  auto* extract = app.add_subcommand("extract", "Extract the decoration of a bundle");
  extract->add_option("--bundle", bundle_path, "Bundle file")->required();
  extract->add_option("--out", out_path, "Decoration file to write");

  std::string decoration_path, cycle = "auto";
  int power = 1;
  auto* chern = app.add_subcommand("chern", "Chern cochain and number of a decoration");
  chern->add_option("--decoration", decoration_path, "Decoration file")->required();
  chern->add_option("--h", power, "Power of the first Chern class");
  chern->add_option("--cycle", cycle, "auto or a fundamental cycle file");

  std::string base_path;
  int max_len = 0;
  auto* range = app.add_subcommand("range", "Chern numbers achieved by decorations of a surface");
  range->add_option("--base", base_path, "Complex, bundle or decoration file")->required();
  range->add_option("--max-len", max_len, "Longest word on a triangle")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  std::string echo = "necklace";
  for (int i = 1; i < argc; ++i) echo += std::string(" ") + argv[i];
  std::cout << echo << "\n";

  const auto start = std::chrono::steady_clock::now();
  Report r;
  int rc = kOk;
  try {
    if (*parity) {
      run_parity(r, letters);
    } else if (*verify) {
      if (suite == "identities") r.suite(suites::identities(max_k));
      if (suite == "okada") r.suite(suites::okada(rows, cols, samples, seed));
      if (suite == "forms") r.suite(suites::forms(n, h, samples, seed));
    } else if (*forms_verify) {
      r.suite(suites::forms(n, h, forms_samples, seed));
    } else if (*extract) {
      run_extract(r, bundle_path, out_path);
    } else if (*chern) {
      run_chern(r, decoration_path, power, cycle);
    } else if (*range) {
      run_range(r, base_path, max_len, threads);
    }
    rc = r.code();
  } catch (const error& e) {
    std::cout << "FAIL " << e.what() << "\n";
    rc = exit_code_of(e.code());
  } catch (const std::exception& e) {
    std::cout << "FAIL " << e.what() << "\n";
    rc = kInputError;
  }
  if (!no_timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << "time: " << ms.count() << " ms\n";
  }
  return rc;
}
