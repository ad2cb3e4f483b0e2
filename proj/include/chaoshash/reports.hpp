#pragma once

#include <cstdio>
#include <string>

#include "json.hpp"

#include "chaoshash/statlab.hpp"

namespace chaoshash {

namespace detail {

inline std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

inline std::string format_double(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  return buf;
}

}  // namespace detail

inline nlohmann::json to_json(const AvalancheReport& report) {
  nlohmann::json j;
  j["trials"] = report.trials;
  j["message_bits"] = report.message_bits;
  j["digest_bits"] = report.digest_bits;
  j["B_values"] = report.B_values;
  j["B_min"] = report.stats.B_min;
  j["B_max"] = report.stats.B_max;
  j["B_bar"] = report.stats.B_bar;
  j["P"] = report.stats.P;
  if (report.stats.delta_B) {
    j["delta_B"] = *report.stats.delta_B;
    j["delta_P"] = *report.stats.delta_P;
  } else {
    j["delta_B"] = nullptr;
    j["delta_P"] = nullptr;
  }
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto& [distance, count] : report.histogram)
    histogram[std::to_string(distance)] = count;
  j["histogram"] = histogram;
  j["seed"] = report.seed;
  return j;
}

/// Histogram as CSV rows "distance,count".
inline std::string to_csv(const AvalancheReport& report) {
  std::string out = "distance,count\n";
  for (const auto& [distance, count] : report.histogram)
    out += std::to_string(distance) + "," + std::to_string(count) + "\n";
  return out;
}

inline std::string to_text(const AvalancheReport& report) {
  std::string out;
  out += "avalanche: trials=" + std::to_string(report.trials) +
         " message_bits=" + std::to_string(report.message_bits) +
         " digest_bits=" + std::to_string(report.digest_bits) +
         " seed=" + std::to_string(report.seed) + "\n";
  out += "B_min=" + std::to_string(report.stats.B_min) +
         " B_max=" + std::to_string(report.stats.B_max) +
         " B_bar=" + detail::format_double(report.stats.B_bar, 4) +
         " P=" + detail::format_double(report.stats.P, 6) + "\n";
  out += "delta_B=" +
         (report.stats.delta_B ? detail::format_double(*report.stats.delta_B, 4) : "n/a") +
         " delta_P=" +
         (report.stats.delta_P ? detail::format_double(*report.stats.delta_P, 6) : "n/a") +
         " mode=" + std::to_string(histogram_mode(report)) + "\n";
  return out;
}

inline nlohmann::json to_json(const UniformityReport& report) {
  nlohmann::json j;
  j["digests"] = report.digests;
  j["message_bits"] = report.message_bits;
  j["digest_bits"] = report.digest_bits;
  nlohmann::json counts = nlohmann::json::object();
  static const char* symbols = "0123456789ABCDEF";
  for (std::size_t i = 0; i < 16; ++i)
    counts[std::string(1, symbols[i])] = report.counts[i];
  j["counts"] = counts;
  j["chi_squared"] = report.chi_squared;
  j["threshold"] = kChiSquared999Df15;
  j["seed"] = report.seed;
  return j;
}

/// Counts as CSV rows "symbol,count".
inline std::string to_csv(const UniformityReport& report) {
  std::string out = "symbol,count\n";
  static const char* symbols = "0123456789ABCDEF";
  for (std::size_t i = 0; i < 16; ++i)
    out += std::string(1, symbols[i]) + "," + std::to_string(report.counts[i]) + "\n";
  return out;
}

inline std::string to_text(const UniformityReport& report) {
  std::string out;
  out += "uniformity: digests=" + std::to_string(report.digests) +
         " message_bits=" + std::to_string(report.message_bits) +
         " digest_bits=" + std::to_string(report.digest_bits) +
         " seed=" + std::to_string(report.seed) + "\n";
  static const char* symbols = "0123456789ABCDEF";
  for (std::size_t i = 0; i < 16; ++i) {
    out += std::string(1, symbols[i]) + "=" + std::to_string(report.counts[i]);
    out += i + 1 < 16 ? ' ' : '\n';
  }
  out += "chi_squared=" + detail::format_double(report.chi_squared, 4) +
         " threshold=" + detail::format_double(kChiSquared999Df15, 4) + "\n";
  return out;
}

inline nlohmann::json to_json(const BenchReport& report) {
  nlohmann::json j;
  nlohmann::json rows = nlohmann::json::array();
  for (const BenchRow& row : report.rows) {
    rows.push_back({{"input_bits", row.input_bits},
                    {"iteration_count", row.iteration_count},
                    {"wall_time", row.wall_time}});
  }
  j["rows"] = rows;
  j["slope"] = report.slope;
  j["linearity"] = report.linearity;
  j["doubling_ratios"] = report.doubling_ratios;
  j["seed"] = report.seed;
  return j;
}

/// Rows as CSV "input_bits,iteration_count,wall_time".
inline std::string to_csv(const BenchReport& report) {
  std::string out = "input_bits,iteration_count,wall_time\n";
  for (const BenchRow& row : report.rows) {
    out += std::to_string(row.input_bits) + "," + std::to_string(row.iteration_count) + "," +
           detail::format_double(row.wall_time) + "\n";
  }
  return out;
}

inline std::string to_text(const BenchReport& report) {
  std::string out = "bench: seed=" + std::to_string(report.seed) + "\n";
  out += "input_bits  iteration_count  seconds_per_hash  ns_per_bit\n";
  for (const BenchRow& row : report.rows) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-11zu %-16zu %-17.9f %.3f\n", row.input_bits,
                  row.iteration_count, row.wall_time,
                  1e9 * row.wall_time / static_cast<double>(row.input_bits));
    out += buf;
  }
  out += "slope=" + detail::format_double(report.slope) +
         " s/bit, linearity R^2=" + detail::format_double(report.linearity, 6) + "\n";
  if (!report.doubling_ratios.empty()) {
    out += "doubling_ratios:";
    for (double ratio : report.doubling_ratios) out += " " + detail::format_double(ratio, 3);
    out += "\n";
  }
  return out;
}

inline nlohmann::json to_json(const BatteryReport& report) {
  nlohmann::json j;
  nlohmann::json rows = nlohmann::json::array();
  for (const BatteryRow& row : report.rows) {
    nlohmann::json r;
    r["label"] = row.label;
    if (row.error.empty())
      r["digest"] = row.hex;
    else
      r["error"] = row.error;
    rows.push_back(r);
  }
  j["rows"] = rows;
  nlohmann::json pairs = nlohmann::json::array();
  for (const BatteryReport::Pair& pair : report.pairs) {
    pairs.push_back(
        {{"first", pair.first}, {"second", pair.second}, {"distance", pair.distance}});
  }
  j["pairwise_distances"] = pairs;
  return j;
}

/// Rows as CSV "label,digest,error".
inline std::string to_csv(const BatteryReport& report) {
  std::string out = "label,digest,error\n";
  for (const BatteryRow& row : report.rows)
    out += row.label + "," + row.hex + "," + row.error + "\n";
  return out;
}

inline std::string to_text(const BatteryReport& report) {
  std::string out;
  for (const BatteryRow& row : report.rows) {
    out += row.label + ": ";
    out += row.error.empty() ? row.hex : "error: " + row.error;
    out += "\n";
  }
  for (const BatteryReport::Pair& pair : report.pairs) {
    out += "distance(" + report.rows[pair.first].label + ", " +
           report.rows[pair.second].label + ") = " + std::to_string(pair.distance) + "\n";
  }
  return out;
}

}  // namespace chaoshash
