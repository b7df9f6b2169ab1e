#include "hsearch/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "hsearch/classify.hpp"
#include "hsearch/corpus.hpp"
#include "hsearch/error.hpp"
#include "hsearch/harmonic.hpp"
#include "hsearch/modmath.hpp"
#include "hsearch/report.hpp"
#include "hsearch/search.hpp"

namespace hsearch::cli {

namespace {

std::atomic<bool> g_stop{false};

// Usage errors detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_threads() {
  if (const char* env = std::getenv("HARMONIC_THREADS"); env != nullptr && *env != '\0') {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw UsageError(fmt::format("HARMONIC_THREADS must be a positive integer, got '{}'", env));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct SearchArgs {
  std::string n_list = "2..46";
  u64 from = kPipelineFloor;
  u64 to = kPipelineFloor;
  int threads = 0;
  u64 chunk_size = 10000;
  std::string checkpoint;
  std::string out;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  SearchConfig config;
  config.n_set = parse_n_list(a.n_list);
  config.lo = a.from;
  config.hi = a.to;
  config.worker_count = a.threads > 0 ? a.threads : default_threads();
  config.chunk_size = a.chunk_size;
  config.checkpoint_path = a.checkpoint;
  config.output_path = a.out;

  g_stop = false;
  SearchOptions options;
  options.should_stop = [] { return g_stop.load(); };
  options.progress = &err;
  const SearchResult result = run_search(config, options);
  if (a.out.empty()) {
    out << "p,N,m\n";
    for (const Hit& h : result.hits) fmt::print(out, "{},{},{}\n", h.p, h.N, h.m);
  }
  fmt::print(err, "[search] {} through {}: {} hits\n",
             result.completed ? "completed" : "stopped", result.checkpoint.completed_through,
             result.hits.size());
  return kExitOk;
}

struct EvalArgs {
  u64 p = 0;
  int n = 0;
  std::string method = "pipeline";
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (!is_prime(a.p)) throw UsageError(fmt::format("--p {} is not prime", a.p));
  if (a.n < kMinN || a.n > kMaxN) throw UsageError("--n must lie in [2, 46]");
  if (a.p <= static_cast<u64>(a.n)) throw UsageError("--p must exceed --n");
  const u64 m = a.p / static_cast<u64>(a.n);
  u64 residue = 0;
  if (a.method == "formula") {
    if (!has_formula(a.n)) {
      throw UsageError(fmt::format("no formula for N = {}; supported: {}", a.n,
                                   fmt::join(kFormulaNs, ", ")));
    }
    residue = h_formula(a.n, a.p).residue;
  } else if (a.method == "pipeline") {
    const int ns[] = {a.n};
    residue = h_select(a.p, ns).at(a.n).residue;
  } else if (a.method == "direct") {
    residue = h_direct(m, a.p);
  } else {
    residue = h_oracle(m, a.p);
  }
  fmt::print(out, "{} {} {} {} {}\n", a.p, a.n, m, residue, a.method);
  return kExitOk;
}

struct VerifyArgs {
  u64 max_p = 1'000'000;
  bool deep = false;
};

constexpr u64 kOracleCrossCheckLimit = 1'000'000;

int cmd_verify_known(const VerifyArgs& a, std::ostream& out) {
  std::vector<std::string> failures;
  std::size_t checked = 0;
  for (const KnownHit& k : known_hits()) {
    const bool in_range = k.p <= a.max_p;
    if (!in_range && !a.deep) continue;
    const u64 m = k.p / static_cast<u64>(k.N);
    std::vector<std::string> paths;
    bool ok = true;
    const auto check = [&](const char* name, u64 residue) {
      paths.emplace_back(name);
      if (residue != 0) {
        ok = false;
        paths.back() += fmt::format("={}", residue);
      }
    };
    switch (k.method) {
      case VerifyMethod::formula:
        check("formula", h_formula(k.N, k.p).residue);
        break;
      case VerifyMethod::pipeline: {
        const int ns[] = {k.N};
        check("pipeline", h_select(k.p, ns).at(k.N).residue);
        if (!in_range) check("direct", h_direct(m, k.p));
        break;
      }
      case VerifyMethod::oracle:
        break;
    }
    if (k.method == VerifyMethod::oracle || k.p <= kOracleCrossCheckLimit) {
      check("oracle", h_oracle(m, k.p));
    }
    ++checked;
    const std::string line =
        fmt::format("N={} p={} m={} via {}", k.N, k.p, m, fmt::join(paths, "+"));
    fmt::print(out, "{} {}\n", ok ? "PASS" : "FAIL", line);
    if (!ok) failures.push_back(line);
  }
  fmt::print(out, "verified {} entries, {} failures\n", checked, failures.size());
  for (const std::string& f : failures) fmt::print(out, "failure: {}\n", f);
  return failures.empty() ? kExitOk : kExitFailure;
}

struct ScanArgs {
  u64 k = 0;
  u64 r = 0;
  u64 n_max = 0;
  bool primes_only = false;
};

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  out << "k,r,n,divisor,prime\n";
  for (const LinearFormHit& h : linear_form_scan(a.k, a.r, a.n_max, a.primes_only)) {
    fmt::print(out, "{},{},{},{},{}\n", h.k, h.r, h.n, h.divisor, h.divisor_is_prime ? 1 : 0);
  }
  return kExitOk;
}

struct ReportArgs {
  std::string hits;
  std::string format = "csv";
  bool figure_data = false;
};

int cmd_report(const ReportArgs& a, std::ostream& out) {
  const std::vector<Hit> hits = read_hits_csv(std::filesystem::path(a.hits));
  const ReportFormat format = a.format == "json" ? ReportFormat::json : ReportFormat::csv;
  out << render_report(build_report(hits), format, a.figure_data);
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::internal_consistency:
      return kExitInternal;
    case ErrorKind::invalid_argument:
    case ErrorKind::inapplicable_prime:
    case ErrorKind::config_mismatch:
    case ErrorKind::resource_limit:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

}  // namespace

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  const auto parse_int = [&](std::string_view s) {
    const u128 v = parse_u128(s);
    if (v < kMinN || v > kMaxN) {
      throw Error(ErrorKind::invalid_argument,
                  fmt::format("N = {} outside [2, 46]", std::string(s)));
    }
    return static_cast<int>(v);
  };
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string_view item(text.data() + start, end - start);
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const int lo = parse_int(item.substr(0, dots));
      const int hi = parse_int(item.substr(dots + 2));
      if (lo > hi) throw Error(ErrorKind::invalid_argument, "descending N range");
      for (int n = lo; n <= hi; ++n) out.push_back(n);
    } else {
      out.push_back(parse_int(item));
    }
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Search for primes p dividing H_{floor(p/N)}, 2 <= N <= 46"};
  app.require_subcommand(1);

  SearchArgs search;
  auto* s = app.add_subcommand("search", "scan a prime range for zeros of H_{floor(p/N)} mod p");
  s->add_option("--n-list", search.n_list, "N values, e.g. 2..46 or 5,12,24")
      ->capture_default_str();
  s->add_option("--from", search.from, "first integer of the range (>= 47)")->required();
  s->add_option("--to", search.to, "end of the range (exclusive)")->required();
  s->add_option("--threads", search.threads, "worker threads (default: $HARMONIC_THREADS)")
      ->check(CLI::PositiveNumber);
  s->add_option("--chunk-size", search.chunk_size, "integers per work unit")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  s->add_option("--checkpoint", search.checkpoint, "checkpoint file (resumed when present)");
  s->add_option("--out", search.out, "hit log CSV (default: standard output)");

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "evaluate H_{floor(p/N)} mod p");
  e->add_option("--p", eval.p, "prime")->required();
  e->add_option("--n", eval.n, "N in [2, 46]")->required();
  e->add_option("--method", eval.method, "formula | pipeline | direct | oracle")
      ->capture_default_str()
      ->check(CLI::IsMember({"formula", "pipeline", "direct", "oracle"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify-known", "re-verify the published divisors");
  v->add_option("--max-p", verify.max_p, "largest p to verify")->capture_default_str();
  v->add_flag("--deep", verify.deep, "also spot-check every larger published zero");

  ScanArgs scan;
  auto* sc = app.add_subcommand("scan", "find n with k*n + r dividing the numerator of H_n");
  sc->add_option("--k", scan.k)->required();
  sc->add_option("--r", scan.r)->required();
  sc->add_option("--n-max", scan.n_max)->required();
  sc->add_flag("--primes-only", scan.primes_only);

  ReportArgs report;
  auto* r = app.add_subcommand("report", "tabulate a hit log");
  r->add_option("--hits", report.hits, "hit log CSV")->required();
  r->add_option("--format", report.format)
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  r->add_flag("--figure-data", report.figure_data, "emit (rank, log p) rows");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (s->parsed()) return cmd_search(search, out, err);
    if (e->parsed()) return cmd_eval(eval, out);
    if (v->parsed()) return cmd_verify_known(verify, out);
    if (sc->parsed()) return cmd_scan(scan, out);
    if (r->parsed()) return cmd_report(report, out);
  } catch (const UsageError& ex) {
    fmt::print(err, "usage error: {}\n", ex.what());
    return kExitUsage;
  } catch (const Error& ex) {
    fmt::print(err, "error ({}): {}\n", to_string(ex.kind()), ex.what());
    return exit_code_for(ex.kind());
  } catch (const std::exception& ex) {
    fmt::print(err, "error: {}\n", ex.what());
    return kExitFailure;
  }
  return kExitUsage;
}

void request_stop() noexcept { g_stop = true; }

}  // namespace hsearch::cli
