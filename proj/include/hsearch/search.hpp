#pragma once

// Resumable search for primes p with p | H_{floor(p/N)}.
//
// Chunks of the prime range are processed in order; primes inside a chunk
// are spread over OpenMP workers and the calling thread alone writes the hit
// log and the checkpoint once a chunk is complete.

#include <compare>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hsearch/int128.hpp"

namespace hsearch {

inline constexpr u64 kPipelineFloor = 47;
inline constexpr int kCheckpointFormat = 1;

struct Hit {
  u64 p;
  int N;
  u64 m;

  friend auto operator<=>(const Hit&, const Hit&) = default;
};

struct SearchConfig {
  std::vector<int> n_set;
  u64 lo = kPipelineFloor;
  u64 hi = kPipelineFloor;
  u64 chunk_size = 10000;  // integers of sieve span per work unit
  int worker_count = 1;
  std::filesystem::path checkpoint_path;  // empty: no checkpointing
  std::filesystem::path output_path;      // empty: no hit log
  // Hits with m above this are re-verified with h_direct instead of h_oracle.
  u64 oracle_verify_max_index = 50'000'000;
};

/// Sorts and deduplicates n_set, then checks the invariants; throws invalid_argument.
SearchConfig normalized(SearchConfig config);

/// FNV-1a over the result-determining fields (n_set, lo, hi).
std::string config_digest(const SearchConfig& config);

struct Checkpoint {
  int format_version = kCheckpointFormat;
  std::string config_digest;
  u64 completed_through = 0;  // every prime below this is done
  double wall_time_accumulated = 0.0;
  std::vector<Hit> hits;
};

std::string to_json(const Checkpoint& checkpoint);
Checkpoint checkpoint_from_json(const std::string& text);  // throws Error(parse)
Checkpoint load_checkpoint(const std::filesystem::path& path);
void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);

/// Hit log: CSV with header "p,N,m".
void write_hits_csv(const std::filesystem::path& path, const std::vector<Hit>& hits);
void append_hits_csv(const std::filesystem::path& path, const std::vector<Hit>& hits);
std::vector<Hit> read_hits_csv(std::istream& in);  // throws Error(parse) naming the line
std::vector<Hit> read_hits_csv(const std::filesystem::path& path);

struct SearchOptions {
  std::function<bool()> should_stop;  // polled between chunks
  u64 max_chunks = 0;                 // stop after this many chunks; 0 = no limit
  std::ostream* progress = nullptr;
};

struct SearchResult {
  std::vector<Hit> hits;  // all hits so far, including resumed ones
  Checkpoint checkpoint;
  bool completed = false;
  u64 primes_processed = 0;  // in this invocation
};

/// Hits for one prime; each is re-verified by an independent summation
/// before it is returned (internal_consistency on disagreement).
std::vector<Hit> hits_for_prime(u64 p, const std::vector<int>& n_set,
                                u64 oracle_verify_max_index = 50'000'000);

/// Runs or continues a search. An existing checkpoint is resumed when its
/// digest matches the config and rejected (config_mismatch) otherwise.
SearchResult run_search(const SearchConfig& config, const SearchOptions& options = {});

/// Like run_search but requires the checkpoint to exist.
SearchResult resume(const SearchConfig& config, const SearchOptions& options = {});

}  // namespace hsearch
