#include "sah/lazy_heap.hpp"

#include <vector>

namespace sah {

void LazyHeap::ring_add(ItemId x) {
  Node& nx = sys_->node_mut(x);
  if (!min_.valid()) {
    nx.prev_sib = nx.next_sib = x;
    min_ = x;
    return;
  }
  Node& nm = sys_->node_mut(min_);
  ItemId last = nm.prev_sib;
  sys_->node_mut(last).next_sib = x;
  nx.prev_sib = last;
  nx.next_sib = min_;
  nm.prev_sib = x;
}

ItemId LazyHeap::insert(ExtKey key) {
  if (key.is_bottom())
    throw HeapError(Errc::bottom_insert, "cannot insert the bottom key");
  sys_->begin_op(OpKind::insert, size_);
  ItemId e = sys_->create(key);
  const bool first = !min_.valid();
  ring_add(e);
  if (!first && sys_->lt_counted(e, min_)) min_ = e;
  ++size_;
  sys_->end_op();
  return e;
}

std::optional<ItemId> LazyHeap::find_min() const {
  if (!min_.valid()) return std::nullopt;
  return min_;
}

void LazyHeap::do_decrease(ItemId e, ExtKey k) {
  if (!(k <= sys_->key(e)))
    throw HeapError(Errc::key_increase, "decrease_key would increase the key");
  sys_->set_key(e, k);
  if (sys_->node(e).parent.valid()) {
    sys_->cut(e, CutCause::decrease_key);
    ring_add(e);
    if (sys_->le_counted(e, min_)) min_ = e;  // the decreased node wins ties
  } else if (e != min_ && sys_->le_counted(e, min_)) {
    min_ = e;
  }
}

void LazyHeap::decrease_key(ItemId e, ExtKey k) {
  sys_->begin_op(OpKind::decrease_key, size_);
  do_decrease(e, k);
  sys_->end_op();
}

std::pair<ItemId, ExtKey> LazyHeap::do_delete_min(VariantId v) {
  if (!min_.valid()) throw HeapError(Errc::empty_heap, "delete_min on empty heap");
  const ItemId old = min_;
  const ExtKey k = sys_->key(old);

  // Old roots in linearization order (just after min-root .. just before it),
  // then the min-root's children: old roots precede new roots.
  std::vector<ItemId> roots;
  for (ItemId r = sys_->node(old).next_sib; r != old; r = sys_->node(r).next_sib)
    roots.push_back(r);
  for (ItemId r : roots) {
    Node& n = sys_->node_mut(r);
    n.prev_sib = n.next_sib = kNoItem;
  }
  while (sys_->node(old).first_child.valid()) {
    ItemId c = sys_->node(old).first_child;
    sys_->cut(c, CutCause::delete_min);
    roots.push_back(c);
  }
  sys_->release(old);

  if (roots.empty()) {
    min_ = kNoItem;
  } else {
    min_ = consolidate(*sys_, v, roots);
    Node& n = sys_->node_mut(min_);
    n.prev_sib = n.next_sib = min_;
  }
  --size_;
  return {old, k};
}

std::pair<ItemId, ExtKey> LazyHeap::delete_min(VariantId v) {
  sys_->begin_op(OpKind::delete_min, size_);
  auto r = do_delete_min(v);
  sys_->end_op();
  return r;
}

void LazyHeap::erase(ItemId e, VariantId v) {
  sys_->begin_op(OpKind::erase_item, size_);
  do_decrease(e, ExtKey::bottom());
  do_delete_min(v);
  sys_->end_op();
}

LazyHeap LazyHeap::meld(LazyHeap&& a, LazyHeap&& b) {
  if (a.sys_ != b.sys_)
    throw HeapError(Errc::system_mismatch, "meld across heap systems");
  if (&a == &b || (a.min_.valid() && a.min_ == b.min_))
    throw HeapError(Errc::self_meld, "meld of a heap with itself");
  HeapSystem& sys = *a.sys_;
  sys.begin_op(OpKind::meld, a.size_ + b.size_);
  LazyHeap out(sys);
  out.size_ = a.size_ + b.size_;
  if (!a.min_.valid()) {
    out.min_ = b.min_;
  } else if (!b.min_.valid()) {
    out.min_ = a.min_;
  } else {
    // Catenate the two rings and keep the smaller min-root (first on a tie).
    ItemId a_last = sys.node(a.min_).prev_sib;
    ItemId b_last = sys.node(b.min_).prev_sib;
    sys.node_mut(a_last).next_sib = b.min_;
    sys.node_mut(b.min_).prev_sib = a_last;
    sys.node_mut(b_last).next_sib = a.min_;
    sys.node_mut(a.min_).prev_sib = b_last;
    out.min_ = sys.lt_counted(b.min_, a.min_) ? b.min_ : a.min_;
  }
  a.min_ = b.min_ = kNoItem;
  a.size_ = b.size_ = 0;
  sys.end_op();
  return out;
}

}  // namespace sah
