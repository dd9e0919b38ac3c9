#include "sah/bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace sah {

std::vector<SortingCell> bench_sorting(std::span<const VariantId> variants,
                                       Mode mode,
                                       std::span<const std::uint64_t> ns,
                                       std::span<const std::uint64_t> seeds) {
  std::vector<SortingCell> out;
  for (VariantId v : variants) {
    for (std::uint64_t n : ns) {
      for (std::uint64_t seed : seeds) {
        const Trace t = gen_sorting_trace(static_cast<int>(n), seed);
        const ReplayResult r = replay(t, v, mode);
        SortingCell c{v, mode, n, seed, 0, 0, 0};
        for (const PerOpRow& row : r.metrics.per_op) {
          if (row.op != OpKind::delete_min) continue;
          ++c.delete_mins;
          c.dm_links += row.links;
          c.dm_cmps += row.comparisons;
        }
        out.push_back(c);
      }
    }
  }
  return out;
}

GrowthFit sorting_fit(std::span<const SortingCell> cells, VariantId v,
                      GrowthModel model) {
  std::vector<GrowthPoint> pts;
  for (const SortingCell& c : cells) {
    if (c.variant != v || c.delete_mins == 0) continue;
    pts.push_back(GrowthPoint{static_cast<double>(c.n),
                              static_cast<double>(c.dm_links) / c.delete_mins});
  }
  return fit_growth(pts, model);
}

std::string sorting_csv(std::span<const SortingCell> cells) {
  std::ostringstream os;
  os << "variant,mode,n,seed,delete_mins,dm_links,dm_cmps,mean_dm_links\n";
  for (const SortingCell& c : cells) {
    os << variant_name(c.variant) << "," << mode_name(c.mode) << "," << c.n
       << "," << c.seed << "," << c.delete_mins << "," << c.dm_links << ","
       << c.dm_cmps << ","
       << (c.delete_mins ? static_cast<double>(c.dm_links) / c.delete_mins : 0)
       << "\n";
  }
  return os.str();
}

std::vector<MixCell> bench_mix(std::span<const VariantId> variants, Mode mode,
                               std::span<const std::uint64_t> ns,
                               std::span<const std::uint64_t> seeds,
                               double w_insert, double w_delete_min,
                               double w_decrease_key, double ops_factor) {
  std::vector<MixCell> out;
  for (VariantId v : variants) {
    for (std::uint64_t n : ns) {
      for (std::uint64_t seed : seeds) {
        const int n_ops = static_cast<int>(ops_factor * static_cast<double>(n));
        const Trace t = gen_mix_trace(static_cast<int>(n), n_ops, w_insert,
                                      w_delete_min, w_decrease_key, seed);
        const ReplayResult r = replay(t, v, mode);
        MixCell c{v, mode, n, seed, r.metrics.links, 0, 0, 0};
        for (const PerOpRow& row : r.metrics.per_op) {
          if (row.op == OpKind::delete_min) {
            ++c.delete_mins;
            c.dm_links += row.links;
          } else if (row.op == OpKind::decrease_key) {
            ++c.decrease_keys;
          }
        }
        out.push_back(c);
      }
    }
  }
  return out;
}

std::string mix_csv(std::span<const MixCell> cells) {
  std::ostringstream os;
  os << "variant,mode,n,seed,total_links,dm_links,delete_mins,decrease_keys\n";
  for (const MixCell& c : cells) {
    os << variant_name(c.variant) << "," << mode_name(c.mode) << "," << c.n
       << "," << c.seed << "," << c.total_links << "," << c.dm_links << ","
       << c.delete_mins << "," << c.decrease_keys << "\n";
  }
  return os.str();
}

DkGrowth dk_growth(std::span<const MixCell> cells, VariantId v) {
  struct Agg {
    std::uint64_t total_links = 0, dm_links = 0, dms = 0, dks = 0;
  };
  std::map<std::uint64_t, Agg> by_n;  // seeds pooled per n
  for (const MixCell& c : cells) {
    if (c.variant != v) continue;
    Agg& a = by_n[c.n];
    a.total_links += c.total_links;
    a.dm_links += c.dm_links;
    a.dms += c.delete_mins;
    a.dks += c.decrease_keys;
  }

  DkGrowth g;
  std::vector<GrowthPoint> dm_pts;
  for (const auto& [n, a] : by_n) {
    if (a.dms == 0) continue;
    dm_pts.push_back(GrowthPoint{static_cast<double>(n),
                                 static_cast<double>(a.dm_links) / a.dms});
  }
  g.dm_fit = fit_growth(dm_pts, GrowthModel::lg);

  for (const auto& [n, a] : by_n) {
    if (a.dks == 0) continue;
    const double dm_share =
        g.dm_fit.coefficient * std::log2(static_cast<double>(n)) *
        static_cast<double>(a.dms);
    const double cost =
        (static_cast<double>(a.total_links) - dm_share) / static_cast<double>(a.dks);
    g.dk_cost.push_back(GrowthPoint{static_cast<double>(n), cost});
  }
  g.lglg_fit = fit_growth(g.dk_cost, GrowthModel::lglg);
  g.ratio_smallest_n =
      g.dk_cost.front().cost / std::log2(g.dk_cost.front().n);
  g.ratio_largest_n = g.dk_cost.back().cost / std::log2(g.dk_cost.back().n);
  return g;
}

}  // namespace sah
