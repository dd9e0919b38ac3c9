#pragma once

#include <span>
#include <string_view>

#include "sah/system.hpp"

namespace sah {

enum class VariantId : std::uint8_t { pairing, multipass, slim, smooth };

/// Child placement discipline during delete-min consolidation.
/// one_sided: the loser always becomes the leftmost child (slim).
/// stable: leftmost on a left link, rightmost on a right link (smooth).
enum class Placement : std::uint8_t { one_sided, stable };

std::string_view variant_name(VariantId v);
bool parse_variant(std::string_view s, VariantId& out);

/// Pairing-heap consolidation: one pairing pass over adjacent pairs
/// (rightmost skipped if odd, links tagged pass 1), then right-to-left
/// assembly (tagged pass 2).  Returns the surviving root.
ItemId two_pass_consolidate(HeapSystem& sys, std::span<const ItemId> roots);

/// Repeated pairing passes until one root remains; links tagged with the
/// pass index, starting at 1.
ItemId multipass_consolidate(HeapSystem& sys, std::span<const ItemId> roots);

/// Leftmost locally maximum linking with virtual -inf sentinels at both
/// ends.  At most two counted comparisons per link.
ItemId locally_max_consolidate(HeapSystem& sys, std::span<const ItemId> roots,
                               Placement placement);

ItemId consolidate(HeapSystem& sys, VariantId v, std::span<const ItemId> roots);

}  // namespace sah
