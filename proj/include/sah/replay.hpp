#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "sah/system.hpp"
#include "sah/trace.hpp"
#include "sah/variants.hpp"

namespace sah {

enum class Mode : std::uint8_t { eager, lazy };

std::string_view mode_name(Mode m);
bool parse_mode(std::string_view s, Mode& out);

/// Key returned by a find-min or delete-min (find-min on an empty heap
/// yields no key).
struct OutputRec {
  std::uint32_t op_index = 0;
  bool has_key = false;
  std::int64_t key = 0;

  friend bool operator==(const OutputRec&, const OutputRec&) = default;
};

struct ReplayResult {
  std::vector<OutputRec> outputs;
  Metrics metrics;
  std::vector<LinkRecord> link_log;
  std::vector<CutRecord> cut_log;
  std::vector<ItemId> items;              // item label -> arena handle
  std::vector<std::uint32_t> deleted;     // item labels removed, in order
  std::unordered_map<std::uint64_t, std::uint32_t> label_of;  // packed id -> label

  std::uint32_t label(ItemId id) const { return label_of.at(id.packed()); }
};

/// Executes a well-formed trace on the chosen variant and mode,
/// collecting outputs, metrics and the link/cut logs.
ReplayResult replay(const Trace& t, VariantId v, Mode m);

/// Deterministic text rendering of a result (used for replay-determinism
/// checks and by the CLI).
std::string serialize_result(const ReplayResult& r);

}  // namespace sah
