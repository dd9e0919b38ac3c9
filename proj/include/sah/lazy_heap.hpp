#pragma once

#include <optional>
#include <utility>

#include "sah/system.hpp"
#include "sah/variants.hpp"

namespace sah {

/// Lazy (forest) heap: a circular ring of roots threaded through the
/// nodes' sibling fields, accessed via a designated min-root.  Insert,
/// meld and decrease-key never link; delete-min consolidates the whole
/// ring plus the min-root's children.  The ring is linearized starting
/// just after the min-root, so the min-root is rightmost and old roots
/// precede the deleted root's children.
class LazyHeap {
 public:
  explicit LazyHeap(HeapSystem& sys) : sys_(&sys) {}

  ItemId insert(ExtKey key);
  std::optional<ItemId> find_min() const;
  std::pair<ItemId, ExtKey> delete_min(VariantId v);
  void decrease_key(ItemId e, ExtKey k);
  void erase(ItemId e, VariantId v);
  static LazyHeap meld(LazyHeap&& a, LazyHeap&& b);

  std::uint64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  ItemId min_root() const { return min_; }
  HeapSystem& system() const { return *sys_; }

 private:
  void ring_add(ItemId x);  // insert just before min_ in linearization order
  void do_decrease(ItemId e, ExtKey k);
  std::pair<ItemId, ExtKey> do_delete_min(VariantId v);

  HeapSystem* sys_;
  ItemId min_;
  std::uint64_t size_ = 0;
};

}  // namespace sah
