#include "hsearch/corpus.hpp"

#include <array>

namespace hsearch {

const char* to_string(VerifyMethod method) {
  switch (method) {
    case VerifyMethod::formula: return "formula";
    case VerifyMethod::pipeline: return "pipeline";
    case VerifyMethod::oracle: return "oracle";
  }
  return "unknown";
}

namespace {

constexpr auto F = VerifyMethod::formula;
constexpr auto P = VerifyMethod::pipeline;
constexpr auto O = VerifyMethod::oracle;

constexpr std::array kKnownHits = std::to_array<KnownHit>({
    {2, 1093, F},     {2, 3511, F},
    {3, 11, O},       {3, 1006003, F},
    {4, 1093, F},     {4, 3511, F},
    {6, 61, F},       {6, 1680023, F},      {6, 7308036881, F},
    {7, 652913, P},
    {8, 269, F},      {8, 8573, F},         {8, 1300709, F},     {8, 11740973, F},
    {8, 241078561, F},
    {9, 677, P},      {9, 6691, P},
    {10, 227, F},     {10, 17539, F},       {10, 4750159, F},
    {11, 246277, P},  {11, 1156457, P},
    {13, 43214711, P},
    {14, 2267, P},    {14, 6898819, P},
    {15, 134227, P},
    {16, 38723, P},   {16, 38993, P},       {16, 4292543, P},
    {19, 521, P},     {19, 911, P},
    {21, 1423, P},    {21, 5693, P},        {21, 5782639, P},    {21, 212084723, P},
    {22, 2843, P},
    {23, 137, P},     {23, 264391, P},
    {24, 137, F},     {24, 577, F},         {24, 247421, F},     {24, 307639, F},
    {24, 366019, F},  {24, 5262591617, F},  {24, 31251349243, F},
    {25, 137, P},
    {26, 137, P},     {26, 67939, P},
    {27, 137, P},     {27, 23669, P},
    {28, 20101, P},
    {30, 27089407, P},
    {32, 761, P},
    {33, 761, P},
    {34, 1553, P},
    {35, 4139, P},    {35, 4481, P},        {35, 4598569, P},
    {36, 1297, P},
    {37, 1439, P},    {37, 26833, P},
    {38, 2473, P},    {38, 3527, P},        {38, 4047089, P},
    {39, 407893, P},
    {40, 509, P},     {40, 177553, P},
    {41, 509, P},     {41, 151883, P},
    {42, 509, P},     {42, 190657, P},
    {44, 6967, P},    {44, 27361, P},
    {45, 609221, P},
    {46, 11731, P},
});

}  // namespace

std::span<const KnownHit> known_hits() { return kKnownHits; }

}  // namespace hsearch
