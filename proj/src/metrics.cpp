#include "sah/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sah {

std::string_view op_kind_name(OpKind k) {
  switch (k) {
    case OpKind::make_heap: return "make_heap";
    case OpKind::insert: return "insert";
    case OpKind::find_min: return "find_min";
    case OpKind::delete_min: return "delete_min";
    case OpKind::meld: return "meld";
    case OpKind::decrease_key: return "decrease_key";
    case OpKind::erase_item: return "erase";
  }
  return "?";
}

namespace {

std::uint64_t size_bin(std::uint64_t n) {
  if (n == 0) return 0;
  return std::uint64_t{1} << (std::bit_width(n) - 1);
}

}  // namespace

std::vector<SummaryRow> amortized_summary(const Metrics& m) {
  if (m.per_op.empty())
    throw std::invalid_argument("amortized_summary: empty metrics");
  struct Acc {
    std::uint64_t count = 0, links = 0, cmps = 0;
  };
  std::map<std::pair<int, std::uint64_t>, Acc> bins;
  for (const PerOpRow& row : m.per_op) {
    Acc& a = bins[{static_cast<int>(row.op), size_bin(row.heap_size)}];
    ++a.count;
    a.links += row.links;
    a.cmps += row.comparisons;
  }
  std::vector<SummaryRow> out;
  out.reserve(bins.size());
  for (const auto& [key, a] : bins) {
    out.push_back(SummaryRow{static_cast<OpKind>(key.first), key.second, a.count,
                             static_cast<double>(a.links) / a.count,
                             static_cast<double>(a.cmps) / a.count});
  }
  return out;
}

std::string summary_csv(std::span<const SummaryRow> rows) {
  std::ostringstream os;
  os << "op,n_bin,count,mean_links,mean_cmps\n";
  for (const SummaryRow& r : rows) {
    os << op_kind_name(r.op) << "," << r.n_bin << "," << r.count << ","
       << r.mean_links << "," << r.mean_cmps << "\n";
  }
  return os.str();
}

std::string_view growth_model_name(GrowthModel m) {
  switch (m) {
    case GrowthModel::constant: return "const";
    case GrowthModel::lg: return "lg";
    case GrowthModel::lglg: return "lglg";
    case GrowthModel::lg_lglglg: return "lg_lglglg";
  }
  return "?";
}

double growth_model_value(GrowthModel m, double n) {
  const double lg = std::log2(n);
  switch (m) {
    case GrowthModel::constant: return 1;
    case GrowthModel::lg: return lg;
    case GrowthModel::lglg: return std::log2(lg);
    case GrowthModel::lg_lglglg: return lg / std::log2(std::log2(lg));
  }
  return 1;
}

GrowthFit fit_growth(std::span<const GrowthPoint> points, GrowthModel model) {
  if (points.size() < 2)
    throw std::invalid_argument("fit_growth: need at least 2 points");
  double c = 0;
  for (const GrowthPoint& p : points) {
    if (p.n < 8) throw std::invalid_argument("fit_growth: n < 8");
    c = std::max(c, p.cost / growth_model_value(model, p.n));
  }
  double slack = 0;
  for (const GrowthPoint& p : points) {
    const double bound = c * growth_model_value(model, p.n);
    if (bound > 0) slack = std::max(slack, (bound - p.cost) / bound);
  }
  return GrowthFit{model, c, slack};
}

}  // namespace sah
