#include "sah/system.hpp"

namespace sah {

ItemId HeapSystem::create(ExtKey key) {
  std::uint32_t idx;
  if (!free_.empty()) {
    idx = free_.back();
    free_.pop_back();
  } else {
    idx = static_cast<std::uint32_t>(slots_.size());
    slots_.emplace_back();
  }
  Slot& s = slots_[idx];
  s.live = true;
  s.node = Node{};
  s.node.key = key;
  ++live_;
  return ItemId{idx, s.gen};
}

void HeapSystem::release(ItemId id) {
  check_live(id);
  Slot& s = slots_[id.index];
  s.live = false;
  ++s.gen;  // stale handles now fail the generation check
  --live_;
  free_.push_back(id.index);
}

bool HeapSystem::contains(ItemId id) const noexcept {
  return id.valid() && id.index < slots_.size() && slots_[id.index].live &&
         slots_[id.index].gen == id.gen;
}

void HeapSystem::check_live(ItemId id) const {
  if (!contains(id)) throw HeapError(Errc::stale_handle, "stale or invalid item handle");
}

const Node& HeapSystem::node(ItemId id) const {
  check_live(id);
  return slots_[id.index].node;
}

Node& HeapSystem::node_mut(ItemId id) {
  check_live(id);
  return slots_[id.index].node;
}

bool HeapSystem::le_keys(ExtKey a, ExtKey b) {
  if (!a.is_bottom() && !b.is_bottom()) ++metrics_.comparisons;
  return a <= b;
}

bool HeapSystem::le_counted(ItemId a, ItemId b) {
  return le_keys(node(a).key, node(b).key);
}

ItemId HeapSystem::link(ItemId a, ItemId b, Side loser_side, OpKind ctx,
                        std::uint32_t pass, LinkDir dir, bool a_left_of_b,
                        bool counted) {
  check_live(a);
  check_live(b);
  Node& na = node_mut(a);
  Node& nb = node_mut(b);
  if (na.parent.valid() || nb.parent.valid())
    throw HeapError(Errc::not_a_root, "link argument is not a root");
  if (a == b) throw HeapError(Errc::self_meld, "cannot link a root with itself");

  const bool a_wins = counted ? le_keys(na.key, nb.key) : na.key <= nb.key;
  ItemId w = a_wins ? a : b;
  ItemId l = a_wins ? b : a;
  if (a_left_of_b) dir = a_wins ? LinkDir::right : LinkDir::left;

  Node& nw = slots_[w.index].node;
  Node& nl = slots_[l.index].node;
  nl.parent = w;
  if (loser_side == Side::leftmost) {
    nl.prev_sib = kNoItem;
    nl.next_sib = nw.first_child;
    if (nw.first_child.valid())
      slots_[nw.first_child.index].node.prev_sib = l;
    else
      nw.last_child = l;
    nw.first_child = l;
  } else {
    nl.next_sib = kNoItem;
    nl.prev_sib = nw.last_child;
    if (nw.last_child.valid())
      slots_[nw.last_child.index].node.next_sib = l;
    else
      nw.first_child = l;
    nw.last_child = l;
  }
  nl.placed = loser_side;
  nl.link_time = ++clock_;
  nl.losing_link = static_cast<std::uint32_t>(link_log_.size());

  link_log_.push_back(LinkRecord{nl.link_time, w, l, nw.key, nl.key, dir, ctx,
                                 pass, op_serial_});
  ++metrics_.links;
  return w;
}

void HeapSystem::cut(ItemId w, CutCause cause) {
  Node& n = node_mut(w);
  if (!n.parent.valid())
    throw HeapError(Errc::already_root, "cut argument is already a root");
  Node& p = slots_[n.parent.index].node;
  if (n.prev_sib.valid())
    slots_[n.prev_sib.index].node.next_sib = n.next_sib;
  else
    p.first_child = n.next_sib;
  if (n.next_sib.valid())
    slots_[n.next_sib.index].node.prev_sib = n.prev_sib;
  else
    p.last_child = n.prev_sib;

  cut_log_.push_back(CutRecord{++clock_, n.losing_link, cause, op_serial_});
  ++metrics_.cuts;

  n.parent = kNoItem;
  n.prev_sib = kNoItem;
  n.next_sib = kNoItem;
  n.losing_link = kNoLink;
}

void HeapSystem::begin_op(OpKind k, std::uint64_t heap_size) {
  if (op_depth_++ == 0) {
    ++op_serial_;
    pending_ = PerOpRow{k, op_serial_, heap_size, 0, 0};
    links_at_begin_ = metrics_.links;
    cmps_at_begin_ = metrics_.comparisons;
  }
}

void HeapSystem::end_op() {
  if (--op_depth_ == 0) {
    pending_.links = static_cast<std::uint32_t>(metrics_.links - links_at_begin_);
    pending_.comparisons =
        static_cast<std::uint32_t>(metrics_.comparisons - cmps_at_begin_);
    metrics_.per_op.push_back(pending_);
  }
}

}  // namespace sah
