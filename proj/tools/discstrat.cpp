// discstrat: classify monic polynomials by distinct-root count, print generic
// (sub)discriminants, sample coincident root loci, run the verification suite,
// the ideal-membership experiments and export discriminant grids.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error,
// 3 conjecture mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "discstrat/discstrat.hpp"

namespace ds = discstrat;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kConjectureMismatch = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ds::CoefficientPoint classifiable_point(const std::string& text) {
  const ds::ParsedPolynomial parsed = ds::parse_monic_polynomial(text);
  if (parsed.warning) std::cerr << "warning: " << *parsed.warning << '\n';
  if (parsed.monic.degree() < 2) throw UsageError("classification needs degree >= 2");
  return ds::CoefficientPoint::from_monic(parsed.monic);
}

int cmd_classify(const std::string& poly, const std::string& method) {
  const ds::CoefficientPoint gamma = classifiable_point(poly);
  if (method == "all") {
    std::cout << ds::to_json(ds::stratum_report(gamma)).dump(2) << '\n';
    return kOk;
  }
  std::size_t m = 0;
  if (method == "gcd") m = ds::classify_by_gcd(gamma);
  else if (method == "subdisc") m = ds::classify_by_subdiscriminants(gamma);
  else if (method == "order") m = ds::classify_by_order(gamma);
  else if (method == "tval") m = ds::classify_by_t_valuation(gamma);
  ordered_json j;
  j["n"] = gamma.degree();
  j["method"] = method;
  j["m"] = m;
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_generic(std::size_t n, const std::string& what) {
  if (n < 2 || n > ds::kMaxSymbolicDegree)
    throw UsageError("generic supports degrees 2.." + std::to_string(ds::kMaxSymbolicDegree));
  if (what == "discriminant") {
    std::cout << ds::discriminant(n).to_string() << '\n';
  } else {
    for (std::size_t k = 0; k < n; ++k) std::cout << "D_" << k << " = " << ds::subdiscriminant(n, k).to_string() << '\n';
  }
  return kOk;
}

int cmd_sample(const std::string& partition, std::uint64_t seed, std::size_t count) {
  ds::Partition mu;
  try {
    mu = ds::Partition::parse(partition);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid partition: ") + e.what());
  }
  if (mu.total() < 2 || mu.total() > ds::kMaxSymbolicDegree)
    throw UsageError("partition must sum to 2.." + std::to_string(ds::kMaxSymbolicDegree));
  bool all_consistent = true;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = ds::trial_seed(seed, 0, i);
    const ds::CoefficientPoint gamma = ds::sample_coincident_locus(mu, s);
    const ds::StratumReport report = ds::stratum_report(gamma);
    all_consistent = all_consistent && report.consistent;
    ordered_json j;
    j["mu"] = mu.to_string();
    j["seed"] = s;
    j["gamma"] = ds::to_json(gamma);
    j["report"] = ds::to_json(report);
    std::cout << j.dump() << '\n';
  }
  return all_consistent ? kOk : kVerifyFailed;
}

int cmd_verify(std::size_t n, std::size_t trials, std::uint64_t seed, unsigned threads, bool elapsed) {
  if (n < ds::kMinVerifyDegree || n > ds::kMaxVerifyDegree)
    throw UsageError("verify supports degrees " + std::to_string(ds::kMinVerifyDegree) + ".." +
                     std::to_string(ds::kMaxVerifyDegree));
  if (trials == 0) throw UsageError("--trials must be positive");
  const ds::SuiteReport report = ds::run_suite(n, trials, seed, threads);
  std::cout << ds::to_json(report, elapsed).dump(2) << '\n';
  return report.passed() ? kOk : kVerifyFailed;
}

// Instances where D_k vanishes on Z_k (k <= n-k-1) and the basis is cheap.
bool conjecture_whitelisted(std::size_t n, std::size_t k) { return n >= 2 && n <= 4 && 2 * k + 1 <= n; }

int cmd_conjecture(std::size_t n, std::size_t k, unsigned s_max) {
  if (!conjecture_whitelisted(n, k))
    throw UsageError("conjecture runs only for n <= 4 and k <= n-k-1 (D_k must vanish on Z_k)");
  if (s_max < 1) throw UsageError("--s-max must be at least 1");
  const std::size_t bound = n - k - 1;
  const auto gens = ds::derivative_ideal_generators(n, bound);
  const ds::GroebnerBasis gb = ds::buchberger(gens);
  const auto ladder = ds::power_membership_ladder(ds::subdiscriminant(n, k), gb, s_max);

  ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["derivative_order_bound"] = bound;
  j["generators"] = gens.size();
  j["basis_size"] = gb.generators().size();
  ordered_json lad = ordered_json::object();
  std::optional<unsigned> minimal;
  for (unsigned s = 1; s <= s_max; ++s) {
    lad[std::to_string(s)] = static_cast<bool>(ladder[s - 1]);
    if (!minimal && ladder[s - 1]) minimal = s;
  }
  j["ladder"] = std::move(lad);
  j["minimal_s"] = minimal ? ordered_json(*minimal) : ordered_json(nullptr);
  j["conjectured_s"] = k + 1;
  j["not_radical_witness"] = minimal.has_value() && *minimal >= 2;
  j["ideals_equal"] = ds::ideals_equal(ds::subdiscriminant_ideal_generators(n, k), gens);
  std::cout << j.dump(2) << '\n';
  return minimal && *minimal == k + 1 ? kOk : kConjectureMismatch;
}

std::pair<ds::BigRational, ds::BigRational> parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("range must look like LO:HI, got '" + text + "'");
  try {
    return {ds::parse_rational(text.substr(0, colon)), ds::parse_rational(text.substr(colon + 1))};
  } catch (const std::exception& e) {
    throw UsageError("bad range '" + text + "': " + e.what());
  }
}

std::size_t parse_coefficient_name(const std::string& name) {
  if (name.size() < 3 || name.rfind("a_", 0) != 0) throw UsageError("expected a coefficient name a_i, got '" + name + "'");
  try {
    return std::stoul(name.substr(2));
  } catch (const std::exception&) {
    throw UsageError("expected a coefficient name a_i, got '" + name + "'");
  }
}

int cmd_surface(std::size_t n, const std::vector<std::string>& ranges, const std::vector<std::string>& fixes,
                std::size_t resolution, const std::string& out_path, std::size_t cap, int digits) {
  std::map<std::size_t, ds::BigRational> fixed;
  for (const auto& f : fixes) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw UsageError("--fix expects a_i=VALUE, got '" + f + "'");
    try {
      fixed[parse_coefficient_name(f.substr(0, eq))] = ds::parse_rational(f.substr(eq + 1));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError("bad --fix '" + f + "': " + e.what());
    }
  }
  if (n == 4 && fixed.empty()) fixed[3] = 0;  // the a_3 = 0 cross-section
  ds::SurfaceGrid grid = ds::SurfaceGrid::uniform(n, -4, 4, resolution, fixed);
  grid.cap = cap;
  for (const auto& r : ranges) {
    const auto eq = r.find('=');
    if (eq == std::string::npos) {
      const auto [lo, hi] = parse_interval(r);
      for (auto& [i, axis] : grid.free_axes) axis.lo = lo, axis.hi = hi;
    } else {
      const std::size_t i = parse_coefficient_name(r.substr(0, eq));
      if (!grid.free_axes.contains(i)) throw UsageError("range given for a coefficient that is not free: " + r);
      const auto [lo, hi] = parse_interval(r.substr(eq + 1));
      grid.free_axes[i].lo = lo;
      grid.free_axes[i].hi = hi;
    }
  }
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::size_t rows = 0;
  if (out_path.empty() || out_path == "-") {
    rows = ds::write_surface_csv(grid, std::cout, digits);
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open " + out_path);
    rows = ds::write_surface_csv(grid, out, digits);
    std::cerr << "wrote " << rows << " rows to " << out_path << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discriminant stratification of monic polynomials over Q", "discstrat"};
  app.require_subcommand(1);

  std::string poly, method = "all";
  auto* classify = app.add_subcommand("classify", "Distinct-root count of a polynomial in x by four methods");
  classify->add_option("polynomial", poly, "e.g. \"x^4+2*x^2+8*x+5\"")->required();
  classify->add_option("--method", method, "all, gcd, subdisc, order or tval")
      ->check(CLI::IsMember({"all", "gcd", "subdisc", "order", "tval"}));

  std::size_t generic_n = 0;
  std::string what;
  auto* generic = app.add_subcommand("generic", "Generic discriminant or subdiscriminants of degree N");
  generic->add_option("N", generic_n, "degree, 2..7")->required();
  generic->add_option("what", what, "discriminant or subdiscriminants")
      ->required()
      ->check(CLI::IsMember({"discriminant", "subdiscriminants"}));

  std::string partition;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  auto* sample = app.add_subcommand("sample", "Sample points of a coincident root locus");
  sample->add_option("partition", partition, "comma list, e.g. 2,1,1")->required();
  sample->add_option("--seed", seed, "RNG seed");
  sample->add_option("--count", count, "number of points")->check(CLI::PositiveNumber);

  std::size_t degree = 0, trials = 25;
  unsigned threads = 0;
  bool no_elapsed = false;
  auto* verify = app.add_subcommand("verify", "Randomized exact verification over all partitions of n");
  verify->add_option("--degree", degree, "2..6")->required();
  verify->add_option("--trials", trials, "trials per partition");
  verify->add_option("--seed", seed, "base seed");
  verify->add_option("--threads", threads, "worker threads, 0 = hardware concurrency");
  verify->add_flag("--no-elapsed", no_elapsed, "omit elapsed_ms from the report");

  std::size_t conj_n = 3, conj_k = 1;
  unsigned s_max = 4;
  auto* conjecture = app.add_subcommand("conjecture", "Smallest s with D_k^s in <d_delta D : |delta| <= n-k-1>");
  conjecture->add_option("--degree", conj_n, "n");
  conjecture->add_option("--k", conj_k, "subdiscriminant index");
  conjecture->add_option("--s-max", s_max, "largest power tried");

  std::size_t surf_n = 3, resolution = 33, cap = 1'000'000;
  int digits = 12;
  std::vector<std::string> ranges, fixes;
  std::string out_path;
  auto* surface = app.add_subcommand("surface", "CSV samples of D and m on a rational grid");
  surface->add_option("--degree", surf_n, "3 or 4");
  surface->add_option("--range", ranges, "LO:HI for all free axes, or a_i=LO:HI (repeatable)");
  surface->add_option("--fix", fixes, "a_i=VALUE (degree 4 needs exactly one; default a_3=0)");
  surface->add_option("--resolution", resolution, "points per free axis");
  surface->add_option("--out", out_path, "output file, default stdout");
  surface->add_option("--cap", cap, "maximum number of grid points");
  surface->add_option("--digits", digits, "significant digits in the CSV")->check(CLI::Range(1, 60));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) return cmd_classify(poly, method);
    if (*generic) return cmd_generic(generic_n, what);
    if (*sample) return cmd_sample(partition, seed, count);
    if (*verify) return cmd_verify(degree, trials, seed, threads, !no_elapsed);
    if (*conjecture) return cmd_conjecture(conj_n, conj_k, s_max);
    if (*surface) return cmd_surface(surf_n, ranges, fixes, resolution, out_path, cap, digits);
  } catch (const ds::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
