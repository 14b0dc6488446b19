#pragma once

#include <string>
#include <vector>

#include "netdiv/betweenness.hpp"
#include "netdiv/metrics.hpp"
#include "netdiv/stats.hpp"

namespace netdiv {

// Fixed 9-significant-digit rendering used by every report emitter, so
// identical runs produce identical bytes.
std::string format_sig9(double v);

// CSV column order: node,degree,self_weight_share,entropy,k_betweenness,
// constraint,clustering. Missing values are empty fields in CSV and null in
// JSON; JSON key order matches the CSV columns.
std::string report_to_csv(const MetricReport& report);
std::string report_to_json(const MetricReport& report);

std::string correlations_to_csv(const std::vector<MetricCorrelation>& table);
std::string correlations_to_json(const std::vector<MetricCorrelation>& table);

std::string summary_to_csv(const NetworkSummary& summary);
std::string summary_to_json(const NetworkSummary& summary);

std::string oracle_check_to_csv(const OracleCheckResult& result);
std::string oracle_check_to_json(const OracleCheckResult& result);

}  // namespace netdiv
