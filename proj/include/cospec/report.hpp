#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "cospec/census.hpp"

namespace cospec {

enum class ReportFormat { TSV, JSON };

/// Ratio with 15 significant digits ("%.15g").
inline std::string format_ratio(double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", r);
  return buf;
}

inline std::string format_histogram(const SpecCount& sc) {
  std::string out;
  for (const auto& [size, buckets] : sc.histogram) {
    if (!out.empty()) out += ',';
    out += std::to_string(size) + ":" + std::to_string(buckets);
  }
  return out;
}

inline nlohmann::ordered_json report_json(const CensusReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["universe"] = r.universe;
  j["mode"] = r.two_pass ? "two-pass" : "memory";
  j["source"] = r.source;
  auto& rows = j["results"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.results.size(); ++i) {
    const auto& sc = r.results[i];
    nlohmann::ordered_json row;
    row["spec"] = sc.spec.label();
    row["mates"] = sc.mates;
    // round-trips through the 15-digit text so the emitted number matches the TSV column
    row["ratio"] = std::stod(format_ratio(r.uncertainty(i)));
    row["distinct"] = sc.distinct;
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [size, buckets] : sc.histogram) hist[std::to_string(size)] = buckets;
    row["histogram"] = std::move(hist);
    if (!sc.mate_groups.empty()) row["mate_groups"] = sc.mate_groups;
    rows.push_back(std::move(row));
  }
  return j;
}

/// Column-stable rendering; identical reports give identical bytes.
inline std::string emit_report(const CensusReport& r, ReportFormat format) {
  if (format == ReportFormat::JSON) return report_json(r).dump(2) + "\n";
  std::string out = "n\tspec\tuniverse\tmates\tratio\tdistinct\thistogram\n";
  for (std::size_t i = 0; i < r.results.size(); ++i) {
    const auto& sc = r.results[i];
    out += std::to_string(r.n) + '\t' + sc.spec.label() + '\t' + std::to_string(r.universe) + '\t' +
           std::to_string(sc.mates) + '\t' + format_ratio(r.uncertainty(i)) + '\t' + std::to_string(sc.distinct) +
           '\t' + format_histogram(sc) + '\n';
  }
  return out;
}

}  // namespace cospec
