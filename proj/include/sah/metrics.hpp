#pragma once

#include <span>
#include <string>
#include <vector>

#include "sah/system.hpp"

namespace sah {

std::string_view op_kind_name(OpKind k);

struct SummaryRow {
  OpKind op = OpKind::make_heap;
  std::uint64_t n_bin = 0;  // lower edge of the size bin (powers of two)
  std::uint64_t count = 0;
  double mean_links = 0;
  double mean_cmps = 0;
};

/// Per-op costs averaged within power-of-two heap-size bins.  Rows are
/// sorted by (op, bin); throws std::invalid_argument on empty metrics.
std::vector<SummaryRow> amortized_summary(const Metrics& m);

/// CSV with header "op,n_bin,count,mean_links,mean_cmps".
std::string summary_csv(std::span<const SummaryRow> rows);

enum class GrowthModel : std::uint8_t { constant, lg, lglg, lg_lglglg };

std::string_view growth_model_name(GrowthModel m);
double growth_model_value(GrowthModel m, double n);

struct GrowthFit {
  GrowthModel model = GrowthModel::constant;
  double coefficient = 0;          // least c with cost <= c * model(n) everywhere
  double max_residual_ratio = 0;   // worst relative slack under the envelope
};

struct GrowthPoint {
  double n = 0;
  double cost = 0;
};

/// Envelope fit: coefficient = max over points of cost / model(n).
/// Requires >= 2 points, all with n >= 8; throws std::invalid_argument.
GrowthFit fit_growth(std::span<const GrowthPoint> points, GrowthModel model);

}  // namespace sah
