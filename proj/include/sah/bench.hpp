#pragma once

#include <span>
#include <string>
#include <vector>

#include "sah/metrics.hpp"
#include "sah/replay.hpp"

namespace sah {

/// One (variant, n, seed) cell of a sorting-mode sweep: n inserts of a
/// random permutation followed by n delete-mins.
struct SortingCell {
  VariantId variant = VariantId::pairing;
  Mode mode = Mode::eager;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t delete_mins = 0;
  std::uint64_t dm_links = 0;
  std::uint64_t dm_cmps = 0;
};

std::vector<SortingCell> bench_sorting(std::span<const VariantId> variants,
                                       Mode mode,
                                       std::span<const std::uint64_t> ns,
                                       std::span<const std::uint64_t> seeds);

/// Envelope fit of mean links per delete-min against the model, one
/// point per (n, seed) cell of the chosen variant.
GrowthFit sorting_fit(std::span<const SortingCell> cells, VariantId v,
                      GrowthModel model);

std::string sorting_csv(std::span<const SortingCell> cells);

/// One cell of a steady-state mix sweep: n prefill inserts, then
/// ops_factor * n ops drawn insert : delete-min : decrease-key.
struct MixCell {
  VariantId variant = VariantId::pairing;
  Mode mode = Mode::eager;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t total_links = 0;
  std::uint64_t dm_links = 0;
  std::uint64_t delete_mins = 0;
  std::uint64_t decrease_keys = 0;
};

std::vector<MixCell> bench_mix(std::span<const VariantId> variants, Mode mode,
                               std::span<const std::uint64_t> ns,
                               std::span<const std::uint64_t> seeds,
                               double w_insert, double w_delete_min,
                               double w_decrease_key, double ops_factor);

std::string mix_csv(std::span<const MixCell> cells);

/// Decrease-key cost attribution for one variant of a mix sweep: links
/// left after removing the lg-fitted delete-min share, per decrease-key.
struct DkGrowth {
  GrowthFit dm_fit;                 // mean delete-min links vs. model lg
  std::vector<GrowthPoint> dk_cost; // (n, attributed links per decrease-key)
  GrowthFit lglg_fit;               // dk_cost vs. model lglg
  double ratio_smallest_n = 0;      // dk_cost / lg n at the smallest n
  double ratio_largest_n = 0;       // and at the largest
};

DkGrowth dk_growth(std::span<const MixCell> cells, VariantId v);

}  // namespace sah
