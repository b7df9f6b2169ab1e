#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace hsearch {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string(u128 value);
std::string to_string(i128 value);

// Parses a non-negative decimal integer; throws Error(parse) on bad input or overflow.
u128 parse_u128(std::string_view text);

}  // namespace hsearch
