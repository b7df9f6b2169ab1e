#pragma once

#include <map>
#include <string>
#include <vector>

#include "hsearch/search.hpp"

namespace hsearch {

struct ReportRow {
  u64 p;
  int N;
  double log_p;        // natural log
  u64 discovery_rank;  // 1-based, ascending p then N
};

struct Report {
  std::map<int, std::vector<u64>> per_n;     // N -> divisors ascending
  std::vector<ReportRow> least_divisors;     // least p per N, ascending p
};

Report build_report(const std::vector<Hit>& hits);

enum class ReportFormat { csv, json };

std::string render_report(const Report& report, ReportFormat format, bool figure_data);

}  // namespace hsearch
