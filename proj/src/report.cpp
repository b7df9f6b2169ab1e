#include "hsearch/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

namespace hsearch {

Report build_report(const std::vector<Hit>& hits) {
  Report report;
  for (const Hit& h : hits) report.per_n[h.N].push_back(h.p);
  for (auto& [N, ps] : report.per_n) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    report.least_divisors.push_back({ps.front(), N, std::log(static_cast<double>(ps.front())), 0});
  }
  std::sort(report.least_divisors.begin(), report.least_divisors.end(),
            [](const ReportRow& a, const ReportRow& b) {
              return a.p != b.p ? a.p < b.p : a.N < b.N;
            });
  for (std::size_t i = 0; i < report.least_divisors.size(); ++i) {
    report.least_divisors[i].discovery_rank = i + 1;
  }
  return report;
}

std::string render_report(const Report& report, ReportFormat format, bool figure_data) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json doc;
    doc["per_n"] = nlohmann::ordered_json::object();
    for (const auto& [N, ps] : report.per_n) doc["per_n"][std::to_string(N)] = ps;
    doc["least_divisors"] = nlohmann::ordered_json::array();
    for (const ReportRow& r : report.least_divisors) {
      doc["least_divisors"].push_back(
          {{"rank", r.discovery_rank}, {"p", r.p}, {"N", r.N}, {"log_p", r.log_p}});
    }
    if (figure_data) {
      doc["figure"] = nlohmann::ordered_json::array();
      for (const ReportRow& r : report.least_divisors) {
        doc["figure"].push_back({{"rank", r.discovery_rank}, {"log_p", r.log_p}});
      }
    }
    return doc.dump(2) + "\n";
  }

  std::string out = "# divisors per N\nN,p\n";
  for (const auto& [N, ps] : report.per_n) {
    out += fmt::format("{},{}\n", N, fmt::join(ps, " "));
  }
  out += "# least divisor per N, ascending p\nrank,p,N,log_p\n";
  for (const ReportRow& r : report.least_divisors) {
    out += fmt::format("{},{},{},{:.6f}\n", r.discovery_rank, r.p, r.N, r.log_p);
  }
  if (figure_data) {
    out += "# figure data\nrank,log_p\n";
    for (const ReportRow& r : report.least_divisors) {
      out += fmt::format("{},{:.6f}\n", r.discovery_rank, r.log_p);
    }
  }
  return out;
}

}  // namespace hsearch
