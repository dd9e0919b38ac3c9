#pragma once

#include <optional>
#include <utility>

#include "sah/system.hpp"
#include "sah/variants.hpp"

namespace sah {

/// Eager (single-tree) heap.  One writer at a time; the value may be
/// moved between threads but never shared mutably.
class Heap {
 public:
  explicit Heap(HeapSystem& sys) : sys_(&sys) {}

  ItemId insert(ExtKey key);
  std::optional<ItemId> find_min() const;

  /// Removes the root and consolidates its children with the chosen
  /// discipline.  Returns the removed item's (now stale) handle and key.
  std::pair<ItemId, ExtKey> delete_min(VariantId v);

  /// Requires k <= current key.  A non-root is cut and relinked with the
  /// root even when k equals the current key.
  void decrease_key(ItemId e, ExtKey k);

  /// decrease_key(e, bottom) followed by delete_min.
  void erase(ItemId e, VariantId v);

  static Heap meld(Heap&& a, Heap&& b);

  std::uint64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  ItemId root() const { return root_; }
  HeapSystem& system() const { return *sys_; }

 private:
  void do_decrease(ItemId e, ExtKey k);
  std::pair<ItemId, ExtKey> do_delete_min(VariantId v);

  HeapSystem* sys_;
  ItemId root_;
  std::uint64_t size_ = 0;
};

}  // namespace sah
