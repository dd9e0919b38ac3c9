#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sah/keys.hpp"

namespace sah {

/// Placement of a link loser on the winner's child list.
enum class Side : std::uint8_t { leftmost, rightmost };

/// Direction of a delete-min link: where the loser sat relative to the
/// winner on the root list.  Links done by insert/meld/decrease-key are
/// neither left nor right.
enum class LinkDir : std::uint8_t { none, left, right };

enum class OpKind : std::uint8_t {
  make_heap,
  insert,
  find_min,
  delete_min,
  meld,
  decrease_key,
  erase_item,
};

enum class CutCause : std::uint8_t { decrease_key, delete_min };

/// Stable handle to an arena slot.  Generations detect reuse.
struct ItemId {
  std::uint32_t index = UINT32_MAX;
  std::uint32_t gen = 0;

  constexpr bool valid() const { return index != UINT32_MAX; }
  constexpr std::uint64_t packed() const {
    return (std::uint64_t{index} << 32) | gen;
  }
  friend constexpr bool operator==(ItemId, ItemId) = default;
};

inline constexpr ItemId kNoItem{};
inline constexpr std::uint32_t kNoLink = UINT32_MAX;

/// One link event.  Keys are snapshotted at link time so post-hoc
/// checkers (treap reconstruction, heap order) do not depend on later
/// key changes.
struct LinkRecord {
  std::uint64_t time = 0;
  ItemId winner;
  ItemId loser;
  ExtKey winner_key;
  ExtKey loser_key;
  LinkDir dir = LinkDir::none;
  OpKind op = OpKind::delete_min;
  std::uint32_t pass = 0;  // pairing-pass index; 2 = assembly for two-pass
  std::uint32_t op_serial = 0;
};

struct CutRecord {
  std::uint64_t time = 0;
  std::uint32_t link_index = kNoLink;
  CutCause cause = CutCause::delete_min;
  std::uint32_t op_serial = 0;
};

struct PerOpRow {
  OpKind op = OpKind::make_heap;
  std::uint32_t op_serial = 0;
  std::uint64_t heap_size = 0;  // live items in the target heap(s) before the op
  std::uint32_t links = 0;
  std::uint32_t comparisons = 0;
};

struct Metrics {
  std::uint64_t links = 0;
  std::uint64_t comparisons = 0;  // sentinel/bottom comparisons excluded
  std::uint64_t cuts = 0;
  std::vector<PerOpRow> per_op;
};

enum class Errc {
  stale_handle,
  not_a_root,
  already_root,
  bottom_insert,
  key_increase,
  empty_heap,
  self_meld,
  system_mismatch,
};

class HeapError : public std::logic_error {
 public:
  HeapError(Errc code, const char* what) : std::logic_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct Node {
  ExtKey key;
  ItemId parent;
  ItemId prev_sib;
  ItemId next_sib;
  ItemId first_child;
  ItemId last_child;
  std::uint64_t link_time = 0;      // timestamp of the last link this node lost
  std::uint32_t losing_link = kNoLink;  // index into the link log while a child
  Side placed = Side::leftmost;     // which end of the child list it joined
};

/// Node arena plus the link/cut primitives and all instrumentation.
/// Heaps built on one system may be melded with each other; the link and
/// cut logs, timestamps and metrics are shared across them.
class HeapSystem {
 public:
  ItemId create(ExtKey key);
  void release(ItemId id);

  bool contains(ItemId id) const noexcept;
  const Node& node(ItemId id) const;
  ExtKey key(ItemId id) const { return node(id).key; }
  bool is_root(ItemId id) const { return !node(id).parent.valid(); }

  /// Links two roots; the smaller key wins, ties go to `a`.  The loser is
  /// attached at `loser_side` of the winner's child list.  One key
  /// comparison is counted (none if either key is bottom, or if `counted`
  /// is false because the caller already paid for the outcome).  When
  /// `a_left_of_b` is set the record's direction is derived from the winner.
  ItemId link(ItemId a, ItemId b, Side loser_side, OpKind ctx,
              std::uint32_t pass = 0, LinkDir dir = LinkDir::none,
              bool a_left_of_b = false, bool counted = true);

  /// Detaches `w` (and its subtree) from its parent.
  void cut(ItemId w, CutCause cause);

  /// Counted comparison: a.key <= b.key.  Free when either key is bottom.
  bool le_counted(ItemId a, ItemId b);
  bool lt_counted(ItemId a, ItemId b) { return !le_counted(b, a); }

  // Per-operation framing.  Nested begin/end pairs collapse into the
  // outermost row (delete = decrease-key + delete-min is one row).
  void begin_op(OpKind k, std::uint64_t heap_size);
  void end_op();
  std::uint32_t op_serial() const { return op_serial_; }

  const std::vector<LinkRecord>& link_log() const { return link_log_; }
  const std::vector<CutRecord>& cut_log() const { return cut_log_; }
  const Metrics& metrics() const { return metrics_; }
  std::size_t live_count() const { return live_; }
  std::uint64_t now() const { return clock_; }

  std::vector<LinkRecord> take_link_log() { return std::move(link_log_); }
  std::vector<CutRecord> take_cut_log() { return std::move(cut_log_); }

 private:
  friend class Heap;
  friend class LazyHeap;

  struct Slot {
    Node node;
    std::uint32_t gen = 0;
    bool live = false;
  };

  Node& node_mut(ItemId id);
  void set_key(ItemId id, ExtKey k) { node_mut(id).key = k; }
  void check_live(ItemId id) const;
  bool le_keys(ExtKey a, ExtKey b);  // counted unless bottom involved

  std::vector<Slot> slots_;
  std::vector<std::uint32_t> free_;
  std::size_t live_ = 0;
  std::uint64_t clock_ = 0;
  std::uint32_t op_serial_ = 0;
  int op_depth_ = 0;
  PerOpRow pending_{};
  std::uint64_t links_at_begin_ = 0;
  std::uint64_t cmps_at_begin_ = 0;
  std::vector<LinkRecord> link_log_;
  std::vector<CutRecord> cut_log_;
  Metrics metrics_;
};

}  // namespace sah
