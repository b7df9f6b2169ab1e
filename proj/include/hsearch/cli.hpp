#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsearch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Parses "2..46", "5,12,24" or mixtures like "2..6,24".
std::vector<int> parse_n_list(const std::string& text);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Asks a running search to stop after its current chunk (signal-safe).
void request_stop() noexcept;

}  // namespace hsearch::cli
