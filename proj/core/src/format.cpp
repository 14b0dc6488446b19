#include "netdiv/format.hpp"

#include <cstdio>
#include <cstdlib>
#include <optional>

#include <json.hpp>

namespace netdiv {

namespace {

using ordered_json = nlohmann::ordered_json;

// A double that prints as at most 9 significant digits: round-trip the fixed
// rendering so the JSON writer emits the same digits as the CSV writer.
ordered_json sig9_json(double v) {
  return std::strtod(format_sig9(v).c_str(), nullptr);
}

ordered_json opt_sig9_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return sig9_json(*v);
}

std::string csv_field(const std::optional<double>& v) {
  return v ? format_sig9(*v) : std::string();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_sig9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string report_to_csv(const MetricReport& report) {
  std::string out = "node,degree,self_weight_share,entropy,k_betweenness,constraint,clustering\n";
  for (const auto& row : report.rows) {
    out += row.node;
    out += ',';
    out += std::to_string(row.degree);
    out += ',';
    out += format_sig9(row.self_weight_share);
    out += ',';
    out += csv_field(row.entropy);
    out += ',';
    out += format_sig9(row.k_betweenness);
    out += ',';
    out += csv_field(row.constraint);
    out += ',';
    out += csv_field(row.clustering);
    out += '\n';
  }
  return out;
}

std::string report_to_json(const MetricReport& report) {
  ordered_json nodes = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json entry;
    entry["node"] = row.node;
    entry["degree"] = row.degree;
    entry["self_weight_share"] = sig9_json(row.self_weight_share);
    entry["entropy"] = opt_sig9_json(row.entropy);
    entry["k_betweenness"] = sig9_json(row.k_betweenness);
    entry["constraint"] = opt_sig9_json(row.constraint);
    entry["clustering"] = opt_sig9_json(row.clustering);
    nodes.push_back(std::move(entry));
  }
  ordered_json root;
  root["nodes"] = std::move(nodes);
  return dump(root);
}

std::string correlations_to_csv(const std::vector<MetricCorrelation>& table) {
  std::string out = "metric,r,n_used,status\n";
  for (const auto& row : table) {
    out += row.metric;
    out += ',';
    if (row.result.status == PearsonStatus::ok) out += format_sig9(row.result.r);
    out += ',';
    out += std::to_string(row.result.n_used);
    out += ',';
    out += to_string(row.result.status);
    out += '\n';
  }
  return out;
}

std::string correlations_to_json(const std::vector<MetricCorrelation>& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : table) {
    ordered_json entry;
    entry["metric"] = row.metric;
    entry["r"] = row.result.status == PearsonStatus::ok ? sig9_json(row.result.r)
                                                        : ordered_json(nullptr);
    entry["n_used"] = row.result.n_used;
    entry["status"] = to_string(row.result.status);
    rows.push_back(std::move(entry));
  }
  ordered_json root;
  root["correlations"] = std::move(rows);
  return dump(root);
}

std::string summary_to_csv(const NetworkSummary& summary) {
  std::string out =
      "n,mean_out_degree,mean_self_weight_share,mean_geodesic_distance,diameter_capped\n";
  out += std::to_string(summary.n);
  out += ',';
  out += format_sig9(summary.mean_out_degree);
  out += ',';
  out += csv_field(summary.mean_self_weight_share);
  out += ',';
  out += csv_field(summary.mean_geodesic_distance);
  out += ',';
  out += summary.diameter_capped ? std::to_string(*summary.diameter_capped)
                                 : std::string("unbounded");
  out += '\n';
  return out;
}

std::string summary_to_json(const NetworkSummary& summary) {
  ordered_json root;
  root["n"] = summary.n;
  root["mean_out_degree"] = sig9_json(summary.mean_out_degree);
  root["mean_self_weight_share"] = opt_sig9_json(summary.mean_self_weight_share);
  root["mean_geodesic_distance"] = opt_sig9_json(summary.mean_geodesic_distance);
  if (summary.diameter_capped) {
    root["diameter_capped"] = *summary.diameter_capped;
  } else {
    root["diameter_capped"] = "unbounded";
  }
  return dump(root);
}

std::string oracle_check_to_csv(const OracleCheckResult& result) {
  std::string out = "trials,comparisons,max_deviation,status\n";
  out += std::to_string(result.trials);
  out += ',';
  out += std::to_string(result.comparisons);
  out += ',';
  out += format_sig9(result.max_deviation);
  out += ',';
  out += result.passed ? "pass" : "fail";
  out += '\n';
  return out;
}

std::string oracle_check_to_json(const OracleCheckResult& result) {
  ordered_json root;
  root["trials"] = result.trials;
  root["comparisons"] = result.comparisons;
  root["max_deviation"] = sig9_json(result.max_deviation);
  root["status"] = result.passed ? "pass" : "fail";
  return dump(root);
}

}  // namespace netdiv
