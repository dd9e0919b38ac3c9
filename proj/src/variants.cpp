#include "sah/variants.hpp"

#include <vector>

namespace sah {

std::string_view variant_name(VariantId v) {
  switch (v) {
    case VariantId::pairing: return "pairing";
    case VariantId::multipass: return "multipass";
    case VariantId::slim: return "slim";
    case VariantId::smooth: return "smooth";
  }
  return "?";
}

bool parse_variant(std::string_view s, VariantId& out) {
  if (s == "pairing") out = VariantId::pairing;
  else if (s == "multipass") out = VariantId::multipass;
  else if (s == "slim") out = VariantId::slim;
  else if (s == "smooth") out = VariantId::smooth;
  else return false;
  return true;
}

ItemId two_pass_consolidate(HeapSystem& sys, std::span<const ItemId> roots) {
  const std::size_t n = roots.size();
  std::vector<ItemId> winners;
  winners.reserve(n / 2 + 1);
  std::size_t i = 0;
  for (; i + 1 < n; i += 2)
    winners.push_back(sys.link(roots[i], roots[i + 1], Side::leftmost,
                               OpKind::delete_min, 1, LinkDir::none, true));
  if (i < n) winners.push_back(roots[i]);

  ItemId acc = winners.back();
  for (std::size_t j = winners.size(); j-- > 1;)
    acc = sys.link(winners[j - 1], acc, Side::leftmost, OpKind::delete_min, 2,
                   LinkDir::none, true);
  return acc;
}

ItemId multipass_consolidate(HeapSystem& sys, std::span<const ItemId> roots) {
  std::vector<ItemId> cur(roots.begin(), roots.end());
  std::uint32_t pass = 1;
  while (cur.size() > 1) {
    std::vector<ItemId> next;
    next.reserve(cur.size() / 2 + 1);
    std::size_t i = 0;
    for (; i + 1 < cur.size(); i += 2)
      next.push_back(sys.link(cur[i], cur[i + 1], Side::leftmost,
                              OpKind::delete_min, pass, LinkDir::none, true));
    if (i < cur.size()) next.push_back(cur[i]);
    cur = std::move(next);
    ++pass;
  }
  return cur.front();
}

ItemId locally_max_consolidate(HeapSystem& sys, std::span<const ItemId> roots,
                               Placement placement) {
  const int n = static_cast<int>(roots.size());
  if (n == 1) return roots[0];
  std::vector<ItemId> id(roots.begin(), roots.end());
  std::vector<int> left(n), right(n);  // -1 = sentinel with key -inf
  for (int i = 0; i < n; ++i) {
    left[i] = i - 1;
    right[i] = (i + 1 < n) ? i + 1 : -1;
  }

  int cur = 0;
  int remaining = n;
  // Everything strictly left of cur is strictly increasing by key, so the
  // local-maximum test needs only the right neighbor.  After a left
  // neighbor wins a link we already know it dominates its right neighbor.
  bool know_right = false;
  while (remaining > 1) {
    const int r = right[cur];
    if (!know_right) {
      // local max iff key(r) <= key(cur); sentinel comparisons are free.
      const bool local_max = r == -1 || sys.le_counted(id[r], id[cur]);
      if (!local_max) {
        cur = r;
        continue;
      }
    }
    const int l = left[cur];
    bool left_larger;  // tie between the neighbors goes to the left one
    if (l == -1) left_larger = false;
    else if (r == -1) left_larger = true;
    else left_larger = sys.le_counted(id[r], id[l]);

    if (left_larger) {
      // Right link: the loser was right of the winner.
      const Side side =
          placement == Placement::stable ? Side::rightmost : Side::leftmost;
      // The scan already paid for this outcome: key(l) <= key(cur).
      sys.link(id[l], id[cur], side, OpKind::delete_min, 0, LinkDir::right,
               false, false);
      right[l] = r;
      if (r != -1) left[r] = l;
      cur = l;
      know_right = true;  // just compared: key(r) <= key(l)
    } else {
      // Also prepaid: the local-max test established key(r) <= key(cur).
      sys.link(id[r], id[cur], Side::leftmost, OpKind::delete_min, 0,
               LinkDir::left, false, false);
      left[r] = l;
      if (l != -1) right[l] = r;
      cur = r;
      know_right = false;
    }
    --remaining;
  }
  return id[cur];
}

ItemId consolidate(HeapSystem& sys, VariantId v, std::span<const ItemId> roots) {
  switch (v) {
    case VariantId::pairing: return two_pass_consolidate(sys, roots);
    case VariantId::multipass: return multipass_consolidate(sys, roots);
    case VariantId::slim:
      return locally_max_consolidate(sys, roots, Placement::one_sided);
    case VariantId::smooth:
      return locally_max_consolidate(sys, roots, Placement::stable);
  }
  throw std::logic_error("bad variant");
}

}  // namespace sah
