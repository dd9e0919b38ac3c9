#include "sah/heap.hpp"

#include <vector>

namespace sah {

ItemId Heap::insert(ExtKey key) {
  if (key.is_bottom())
    throw HeapError(Errc::bottom_insert, "cannot insert the bottom key");
  sys_->begin_op(OpKind::insert, size_);
  ItemId e = sys_->create(key);
  if (root_.valid())
    root_ = sys_->link(root_, e, Side::leftmost, OpKind::insert);
  else
    root_ = e;
  ++size_;
  sys_->end_op();
  return e;
}

std::optional<ItemId> Heap::find_min() const {
  if (!root_.valid()) return std::nullopt;
  return root_;
}

void Heap::do_decrease(ItemId e, ExtKey k) {
  if (!(k <= sys_->key(e)))
    throw HeapError(Errc::key_increase, "decrease_key would increase the key");
  sys_->set_key(e, k);
  if (e == root_) return;
  sys_->cut(e, CutCause::decrease_key);
  // The argument carrying the decreased key is passed first: it wins ties.
  root_ = sys_->link(e, root_, Side::leftmost, OpKind::decrease_key);
}

void Heap::decrease_key(ItemId e, ExtKey k) {
  sys_->begin_op(OpKind::decrease_key, size_);
  do_decrease(e, k);
  sys_->end_op();
}

std::pair<ItemId, ExtKey> Heap::do_delete_min(VariantId v) {
  if (!root_.valid()) throw HeapError(Errc::empty_heap, "delete_min on empty heap");
  const ItemId old = root_;
  const ExtKey k = sys_->key(old);
  std::vector<ItemId> roots;
  while (sys_->node(old).first_child.valid()) {
    ItemId c = sys_->node(old).first_child;
    sys_->cut(c, CutCause::delete_min);
    roots.push_back(c);
  }
  sys_->release(old);
  root_ = roots.empty() ? kNoItem : consolidate(*sys_, v, roots);
  --size_;
  return {old, k};
}

std::pair<ItemId, ExtKey> Heap::delete_min(VariantId v) {
  sys_->begin_op(OpKind::delete_min, size_);
  auto r = do_delete_min(v);
  sys_->end_op();
  return r;
}

void Heap::erase(ItemId e, VariantId v) {
  sys_->begin_op(OpKind::erase_item, size_);
  do_decrease(e, ExtKey::bottom());
  do_delete_min(v);
  sys_->end_op();
}

Heap Heap::meld(Heap&& a, Heap&& b) {
  if (a.sys_ != b.sys_)
    throw HeapError(Errc::system_mismatch, "meld across heap systems");
  if (&a == &b || (a.root_.valid() && a.root_ == b.root_))
    throw HeapError(Errc::self_meld, "meld of a heap with itself");
  HeapSystem& sys = *a.sys_;
  sys.begin_op(OpKind::meld, a.size_ + b.size_);
  Heap out(sys);
  out.size_ = a.size_ + b.size_;
  if (!a.root_.valid())
    out.root_ = b.root_;
  else if (!b.root_.valid())
    out.root_ = a.root_;
  else
    out.root_ = sys.link(a.root_, b.root_, Side::leftmost, OpKind::meld);
  a.root_ = b.root_ = kNoItem;
  a.size_ = b.size_ = 0;
  sys.end_op();
  return out;
}

}  // namespace sah
