#include "hsearch/search.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "hsearch/error.hpp"
#include "hsearch/harmonic.hpp"
#include "hsearch/modmath.hpp"
#include "hsearch/sieve.hpp"

namespace hsearch {

namespace fs = std::filesystem;
using json = nlohmann::json;

SearchConfig normalized(SearchConfig config) {
  std::sort(config.n_set.begin(), config.n_set.end());
  config.n_set.erase(std::unique(config.n_set.begin(), config.n_set.end()), config.n_set.end());
  if (config.n_set.empty()) throw Error(ErrorKind::invalid_argument, "n_set is empty");
  if (config.n_set.front() < kMinN || config.n_set.back() > kMaxN) {
    throw Error(ErrorKind::invalid_argument, "n_set must lie within [2, 46]");
  }
  if (config.lo < kPipelineFloor) {
    throw Error(ErrorKind::invalid_argument,
                "search range must start at 47 or above; smaller primes are covered by verify-known");
  }
  if (config.hi < config.lo) throw Error(ErrorKind::invalid_argument, "empty range with hi < lo");
  if (config.chunk_size == 0) throw Error(ErrorKind::invalid_argument, "chunk_size must be positive");
  if (config.worker_count < 1) throw Error(ErrorKind::invalid_argument, "worker_count must be >= 1");
  return config;
}

std::string config_digest(const SearchConfig& config) {
  std::string canonical = "hsearch-search/1;n=";
  for (std::size_t i = 0; i < config.n_set.size(); ++i) {
    if (i) canonical += ',';
    canonical += std::to_string(config.n_set[i]);
  }
  canonical += fmt::format(";lo={};hi={}", config.lo, config.hi);
  u64 h = 14695981039346656037ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return fmt::format("{:016x}", h);
}

std::string to_json(const Checkpoint& checkpoint) {
  json hits = json::array();
  for (const Hit& h : checkpoint.hits) hits.push_back({{"p", h.p}, {"N", h.N}, {"m", h.m}});
  const json doc = {{"format_version", checkpoint.format_version},
                    {"config_digest", checkpoint.config_digest},
                    {"completed_through", checkpoint.completed_through},
                    {"wall_time_accumulated", checkpoint.wall_time_accumulated},
                    {"hits", hits}};
  return doc.dump(2) + "\n";
}

Checkpoint checkpoint_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    Checkpoint cp;
    cp.format_version = doc.at("format_version").get<int>();
    if (cp.format_version != kCheckpointFormat) {
      throw Error(ErrorKind::parse,
                  "unsupported checkpoint format_version " + std::to_string(cp.format_version));
    }
    cp.config_digest = doc.at("config_digest").get<std::string>();
    cp.completed_through = doc.at("completed_through").get<u64>();
    cp.wall_time_accumulated = doc.at("wall_time_accumulated").get<double>();
    for (const json& h : doc.at("hits")) {
      cp.hits.push_back({h.at("p").get<u64>(), h.at("N").get<int>(), h.at("m").get<u64>()});
    }
    return cp;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("corrupt checkpoint: ") + e.what());
  }
}

Checkpoint load_checkpoint(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open checkpoint " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return checkpoint_from_json(buf.str());
}

namespace {

void write_atomically(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::resource_limit, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorKind::resource_limit, "short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string csv_rows(const std::vector<Hit>& hits) {
  std::string out;
  for (const Hit& h : hits) out += fmt::format("{},{},{}\n", h.p, h.N, h.m);
  return out;
}

}  // namespace

void save_checkpoint(const fs::path& path, const Checkpoint& checkpoint) {
  write_atomically(path, to_json(checkpoint));
}

void write_hits_csv(const fs::path& path, const std::vector<Hit>& hits) {
  write_atomically(path, "p,N,m\n" + csv_rows(hits));
}

void append_hits_csv(const fs::path& path, const std::vector<Hit>& hits) {
  if (hits.empty()) return;
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw Error(ErrorKind::resource_limit, "cannot append to " + path.string());
  out << csv_rows(hits);
}

std::vector<Hit> read_hits_csv(std::istream& in) {
  std::vector<Hit> hits;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != "p,N,m") {
        throw Error(ErrorKind::parse, fmt::format("line {}: expected header 'p,N,m'", line_no));
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos;) {
      fields.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    fields.push_back(rest);
    try {
      if (fields.size() != 3) throw Error(ErrorKind::parse, "expected 3 fields");
      const u128 p = parse_u128(fields[0]);
      const u128 n = parse_u128(fields[1]);
      const u128 m = parse_u128(fields[2]);
      if (p >= kMaxPrime || n < kMinN || n > kMaxN || m != p / n) {
        throw Error(ErrorKind::parse, "inconsistent hit (m must equal floor(p/N))");
      }
      hits.push_back({static_cast<u64>(p), static_cast<int>(n), static_cast<u64>(m)});
    } catch (const Error& e) {
      throw Error(ErrorKind::parse, fmt::format("line {}: {}: '{}'", line_no, e.what(), line));
    }
  }
  return hits;
}

std::vector<Hit> read_hits_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open hit file " + path.string());
  return read_hits_csv(in);
}

std::vector<Hit> hits_for_prime(u64 p, const std::vector<int>& n_set, u64 oracle_verify_max_index) {
  const HarmonicTable table = h_select(p, n_set);
  std::vector<Hit> hits;
  for (int N : n_set) {
    const HarmonicResidue& r = table.at(N);
    if (r.residue != 0) continue;
    const u64 check = r.m <= oracle_verify_max_index ? h_oracle(r.m, p) : h_direct(r.m, p);
    if (check != 0) {
      throw Error(ErrorKind::internal_consistency,
                  fmt::format("p = {}, N = {}: pipeline gives 0 but independent sum gives {}", p,
                              N, check));
    }
    hits.push_back({p, N, r.m});
  }
  return hits;
}

SearchResult run_search(const SearchConfig& raw, const SearchOptions& options) {
  const SearchConfig config = normalized(raw);
  const std::string digest = config_digest(config);
  const auto started = std::chrono::steady_clock::now();

  SearchResult result;
  Checkpoint& cp = result.checkpoint;
  const bool checkpointing = !config.checkpoint_path.empty();
  if (checkpointing && fs::exists(config.checkpoint_path)) {
    Checkpoint loaded = load_checkpoint(config.checkpoint_path);
    if (loaded.config_digest != digest) {
      throw Error(ErrorKind::config_mismatch,
                  fmt::format("checkpoint digest {} does not match config digest {}; refusing "
                              "to resume",
                              loaded.config_digest, digest));
    }
    cp = std::move(loaded);
  } else {
    cp.config_digest = digest;
    cp.completed_through = config.lo;
  }
  const double prior_wall = cp.wall_time_accumulated;
  const auto elapsed = [&] {
    return prior_wall +
           std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };

  // The hit log always restarts from the checkpoint so a crash between the
  // append and the checkpoint rename cannot duplicate rows.
  if (!config.output_path.empty()) write_hits_csv(config.output_path, cp.hits);
  if (checkpointing) save_checkpoint(config.checkpoint_path, cp);

  PrimeChunker chunker(cp.completed_through, config.hi, config.chunk_size);
  u64 chunks_done = 0;
  while (true) {
    if (options.should_stop && options.should_stop()) break;
    if (options.max_chunks != 0 && chunks_done >= options.max_chunks) break;
    std::optional<PrimeChunk> chunk = chunker.next();
    if (!chunk) break;

    const std::vector<u64>& primes = chunk->primes;
    std::vector<std::vector<Hit>> per_prime(primes.size());
    std::vector<std::exception_ptr> failures(primes.size());
    const auto count = static_cast<std::ptrdiff_t>(primes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(config.worker_count) if (config.worker_count > 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        per_prime[static_cast<std::size_t>(i)] = hits_for_prime(
            primes[static_cast<std::size_t>(i)], config.n_set, config.oracle_verify_max_index);
      } catch (...) {
        failures[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }

    std::vector<Hit> fresh;
    for (auto& hits : per_prime) fresh.insert(fresh.end(), hits.begin(), hits.end());
    if (!config.output_path.empty()) append_hits_csv(config.output_path, fresh);
    cp.hits.insert(cp.hits.end(), fresh.begin(), fresh.end());
    cp.completed_through = chunk->hi;
    cp.wall_time_accumulated = elapsed();
    if (checkpointing) save_checkpoint(config.checkpoint_path, cp);

    result.primes_processed += primes.size();
    ++chunks_done;
    if (options.progress != nullptr) {
      const double secs = std::max(1e-9, elapsed() - prior_wall);
      fmt::print(*options.progress, "[search] through {} | {} primes, {:.0f} primes/s | {} hits\n",
                 cp.completed_through, result.primes_processed, result.primes_processed / secs,
                 cp.hits.size());
    }
  }
  cp.wall_time_accumulated = elapsed();
  result.completed = cp.completed_through >= config.hi;
  if (checkpointing) save_checkpoint(config.checkpoint_path, cp);
  result.hits = cp.hits;
  return result;
}

SearchResult resume(const SearchConfig& config, const SearchOptions& options) {
  if (config.checkpoint_path.empty() || !fs::exists(config.checkpoint_path)) {
    throw Error(ErrorKind::parse, "no checkpoint to resume at '" +
                                      config.checkpoint_path.string() + "'");
  }
  return run_search(config, options);
}

}  // namespace hsearch
