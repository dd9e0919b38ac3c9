#include "sah/verify.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace sah {

std::vector<OutputRec> oracle_replay(const Trace& t) {
  std::vector<std::multiset<std::int64_t>> heaps;
  std::vector<std::int64_t> item_key;
  std::vector<OutputRec> out;

  for (std::uint32_t i = 0; i < t.ops.size(); ++i) {
    const OpRecord& op = t.ops[i];
    switch (op.kind) {
      case OpRecord::Kind::make_heap:
        heaps.emplace_back();
        break;
      case OpRecord::Kind::insert:
        heaps[op.h].insert(op.key);
        item_key.push_back(op.key);
        break;
      case OpRecord::Kind::find_min: {
        const auto& ms = heaps[op.h];
        if (ms.empty())
          out.push_back(OutputRec{i, false, 0});
        else
          out.push_back(OutputRec{i, true, *ms.begin()});
        break;
      }
      case OpRecord::Kind::delete_min: {
        auto& ms = heaps[op.h];
        out.push_back(OutputRec{i, true, *ms.begin()});
        ms.erase(ms.begin());
        break;
      }
      case OpRecord::Kind::meld: {
        auto& a = heaps[op.h];
        auto& b = heaps[op.h2];
        if (b.size() > a.size()) std::swap(a, b);
        a.insert(b.begin(), b.end());
        b.clear();
        break;
      }
      case OpRecord::Kind::decrease_key: {
        auto& ms = heaps[op.h];
        ms.erase(ms.find(item_key[op.item]));
        ms.insert(op.key);
        item_key[op.item] = op.key;
        break;
      }
      case OpRecord::Kind::erase: {
        auto& ms = heaps[op.h];
        ms.erase(ms.find(item_key[op.item]));
        break;
      }
    }
  }
  return out;
}

std::vector<OrderViolation> check_heap_order(const HeapSystem& sys, ItemId root) {
  std::vector<OrderViolation> out;
  if (!root.valid()) return out;
  std::vector<ItemId> stack{root};
  while (!stack.empty()) {
    ItemId v = stack.back();
    stack.pop_back();
    const ExtKey kv = sys.key(v);
    for (ItemId c = sys.node(v).first_child; c.valid(); c = sys.node(c).next_sib) {
      if (!(kv <= sys.key(c))) out.push_back(OrderViolation{v, c});
      stack.push_back(c);
    }
  }
  return out;
}

Classification classify(const Trace& t, const ReplayResult& r) {
  (void)t;
  Classification c;
  c.temporary.assign(r.items.size(), 0);
  for (std::uint32_t label : r.deleted) c.temporary[label] = 1;

  std::vector<std::uint8_t> fate(r.link_log.size(), 2);  // 2 = never cut
  for (const CutRecord& cut : r.cut_log)
    fate[cut.link_index] = cut.cause == CutCause::decrease_key ? 0 : 1;

  c.links.reserve(r.link_log.size());
  for (std::size_t i = 0; i < r.link_log.size(); ++i) {
    const LinkRecord& l = r.link_log[i];
    LinkClass lc;
    if (l.dir == LinkDir::left) lc.direction = LinkDirection::left;
    else if (l.dir == LinkDir::right) lc.direction = LinkDirection::right;
    else if (l.op == OpKind::decrease_key) lc.direction = LinkDirection::decrease_key;
    else lc.direction = LinkDirection::insertion;
    lc.fate = fate[i] == 0   ? LinkFate::key_link
              : fate[i] == 1 ? LinkFate::delete_link
                             : LinkFate::final_link;
    const bool temp_w = c.temporary[r.label(l.winner)] != 0;
    const bool temp_l = c.temporary[r.label(l.loser)] != 0;
    lc.real = temp_w && temp_l && lc.fate == LinkFate::delete_link;
    if (lc.direction == LinkDirection::left || lc.direction == LinkDirection::right)
      lc.good = temp_l || !temp_w;
    c.links.push_back(lc);
  }
  return c;
}

bool Report::ok() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const LemmaLine& l) { return l.pass; });
}

std::string Report::render() const {
  std::string out;
  for (const LemmaLine& l : lines) {
    out += "LEMMA " + l.id + (l.pass ? " PASS" : " FAIL");
    if (!l.details.empty()) out += " " + l.details;
    out += "\n";
  }
  return out;
}

namespace {

struct DmGroup {
  std::uint32_t op_serial;
  std::size_t begin, end;  // range in the link log, delete-min links only
};

// Delete-min consolidation links, grouped per delete-min.
std::vector<DmGroup> dm_groups(const std::vector<LinkRecord>& log) {
  std::vector<DmGroup> out;
  for (std::size_t i = 0; i < log.size();) {
    if (log[i].op != OpKind::delete_min) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < log.size() && log[j].op == OpKind::delete_min &&
           log[j].op_serial == log[i].op_serial)
      ++j;
    out.push_back(DmGroup{log[i].op_serial, i, j});
    i = j;
  }
  return out;
}

}  // namespace

Report check_lemmas(const Trace& t, const ReplayResult& r,
                    const Classification& c, VariantId v) {
  Report rep;
  const auto& log = r.link_log;
  const auto groups = dm_groups(log);

  std::uint64_t insertions = 0, delete_mins = 0;
  for (const OpRecord& op : t.ops) {
    if (op.kind == OpRecord::Kind::insert) ++insertions;
    if (op.kind == OpRecord::Kind::delete_min || op.kind == OpRecord::Kind::erase)
      ++delete_mins;
  }

  if (v == VariantId::multipass) {
    // Check 3.1: pass i does floor(r_i/2) links; after pass i at most
    // k/2^i links remain, checked as remaining * 2^i <= k.
    std::uint64_t bad = 0;
    for (const DmGroup& g : groups) {
      std::vector<std::uint64_t> per_pass;
      for (std::size_t i = g.begin; i < g.end; ++i) {
        const std::uint32_t p = log[i].pass;
        if (p == 0 || p > g.end - g.begin) {
          ++bad;
          continue;
        }
        if (per_pass.size() < p) per_pass.resize(p, 0);
        ++per_pass[p - 1];
      }
      const std::uint64_t k = g.end - g.begin;
      std::uint64_t roots = k + 1, done = 0;
      for (std::size_t p = 0; p < per_pass.size(); ++p) {
        if (per_pass[p] != roots / 2) ++bad;
        done += per_pass[p];
        roots -= per_pass[p];
        const unsigned __int128 rem =
            static_cast<unsigned __int128>(k - done) << (p + 1);
        if (rem > k) ++bad;
      }
      if (done != k || roots != 1) ++bad;
    }
    rep.lines.push_back(LemmaLine{"3.1", bad == 0,
                                  "delete-mins=" + std::to_string(groups.size()) +
                                      " violations=" + std::to_string(bad)});
  }

  if (v == VariantId::slim || v == VariantId::smooth) {
    // Check 3.2: per delete-min, each node wins at most one left link and
    // at most one right link.
    std::uint64_t bad = 0;
    std::unordered_map<std::uint64_t, std::pair<int, int>> wins;
    for (const DmGroup& g : groups) {
      wins.clear();
      for (std::size_t i = g.begin; i < g.end; ++i) {
        auto& w = wins[log[i].winner.packed()];
        if (log[i].dir == LinkDir::left && ++w.first > 1) ++bad;
        if (log[i].dir == LinkDir::right && ++w.second > 1) ++bad;
      }
    }
    rep.lines.push_back(LemmaLine{"3.2", bad == 0,
                                  "delete-mins=" + std::to_string(groups.size()) +
                                      " violations=" + std::to_string(bad)});
  }

  {
    std::uint64_t ins_links = 0;
    for (const LinkClass& lc : c.links)
      if (lc.direction == LinkDirection::insertion) ++ins_links;
    rep.lines.push_back(LemmaLine{"4.1", ins_links <= insertions,
                                  "insertion-links=" + std::to_string(ins_links) +
                                      " insertions=" + std::to_string(insertions)});

    std::uint64_t final_links = 0;
    for (const LinkClass& lc : c.links)
      if (lc.fate == LinkFate::final_link) ++final_links;
    rep.lines.push_back(
        LemmaLine{"4.2", final_links + delete_mins <= insertions,
                  "final-links=" + std::to_string(final_links) +
                      " delete-mins=" + std::to_string(delete_mins) +
                      " insertions=" + std::to_string(insertions)});
  }

  {
    // Good-link lower bounds, exact: 2g >= k-2 for multipass (check 4.3),
    // 3g >= k-2 for slim/smooth (check 4.5).
    const bool lm = v == VariantId::slim || v == VariantId::smooth;
    const char* id = v == VariantId::multipass ? "4.3" : (lm ? "4.5" : nullptr);
    if (id != nullptr) {
      std::uint64_t bad = 0;
      for (const DmGroup& g : groups) {
        const std::uint64_t k = g.end - g.begin;
        std::uint64_t good = 0;
        for (std::size_t i = g.begin; i < g.end; ++i)
          if (c.links[i].good.value_or(false)) ++good;
        const std::uint64_t factor = v == VariantId::multipass ? 2 : 3;
        if (factor * good + 2 < k) ++bad;
      }
      rep.lines.push_back(LemmaLine{id, bad == 0,
                                    "delete-mins=" + std::to_string(groups.size()) +
                                        " violations=" + std::to_string(bad)});
    }
  }

  if (v == VariantId::slim || v == VariantId::smooth) {
    // Comparison budget: counted comparisons of a delete-min (or delete)
    // never exceed twice its consolidation links.
    std::unordered_map<std::uint32_t, std::uint64_t> dm_links;
    for (const DmGroup& g : groups) dm_links[g.op_serial] = g.end - g.begin;
    std::uint64_t bad = 0, checked = 0;
    for (const PerOpRow& row : r.metrics.per_op) {
      if (row.op != OpKind::delete_min && row.op != OpKind::erase_item) continue;
      ++checked;
      auto it = dm_links.find(row.op_serial);
      const std::uint64_t links = it == dm_links.end() ? 0 : it->second;
      if (row.comparisons > 2 * links) ++bad;
    }
    rep.lines.push_back(LemmaLine{"CMP", bad == 0,
                                  "consolidations=" + std::to_string(checked) +
                                      " violations=" + std::to_string(bad)});

    // Every delete-min's left/right links must form a valid treap.
    std::uint64_t treap_bad = 0;
    for (const DmGroup& g : groups) {
      std::span<const LinkRecord> links(log.data() + g.begin, g.end - g.begin);
      if (!treap_from_links(links)) ++treap_bad;
    }
    rep.lines.push_back(LemmaLine{"TREAP", treap_bad == 0,
                                  "delete-mins=" + std::to_string(groups.size()) +
                                      " violations=" + std::to_string(treap_bad)});
  }
  return rep;
}

std::optional<Treap> treap_from_links(std::span<const LinkRecord> links,
                                      std::string* err) {
  auto fail = [&](const char* msg) -> std::optional<Treap> {
    if (err != nullptr) *err = msg;
    return std::nullopt;
  };

  struct Raw {
    ItemId id;
    ExtKey key;
    int parent = -1, left = -1, right = -1;
    bool lost = false;
  };
  std::unordered_map<std::uint64_t, int> idx;
  std::vector<Raw> raw;
  auto at = [&](ItemId id, ExtKey k) {
    auto [it, fresh] = idx.emplace(id.packed(), static_cast<int>(raw.size()));
    if (fresh) raw.push_back(Raw{id, k, -1, -1, -1, false});
    return it->second;
  };

  for (const LinkRecord& l : links) {
    if (l.dir != LinkDir::left && l.dir != LinkDir::right)
      return fail("link without a left/right direction");
    const int w = at(l.winner, l.winner_key);
    const int lo = at(l.loser, l.loser_key);
    if (raw[lo].lost || raw[lo].parent != -1) return fail("node loses twice");
    raw[lo].parent = w;
    raw[lo].lost = true;
    int& slot = l.dir == LinkDir::left ? raw[w].left : raw[w].right;
    if (slot != -1) return fail("node wins two links of the same direction");
    slot = lo;
    if (!(l.winner_key <= l.loser_key)) return fail("heap order violated");
  }

  int root = -1;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].parent == -1) {
      if (root != -1) return fail("more than one root");
      root = static_cast<int>(i);
    }
  }
  if (raw.empty()) return Treap{};
  if (root == -1) return fail("no root");

  // In-order traversal fixes symmetric order; it must visit every node.
  Treap t;
  std::vector<int> order;
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [n, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(n);
      continue;
    }
    if (raw[n].right != -1) stack.push_back({raw[n].right, false});
    stack.push_back({n, true});
    if (raw[n].left != -1) stack.push_back({raw[n].left, false});
  }
  if (order.size() != raw.size()) return fail("disconnected links");

  std::vector<int> pos(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  t.nodes.resize(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Raw& s = raw[order[i]];
    Treap::TNode& n = t.nodes[i];
    n.id = s.id;
    n.key = s.key;
    n.parent = s.parent == -1 ? -1 : pos[s.parent];
    n.left = s.left == -1 ? -1 : pos[s.left];
    n.right = s.right == -1 ? -1 : pos[s.right];
  }
  t.root = pos[root];
  return t;
}

Report check_boundary_alternation(const Treap& t) {
  Report rep;
  std::uint64_t bad = 0;
  const int n = static_cast<int>(t.nodes.size());

  for (int x = 0; x + 1 < n; ++x) {
    // Brute-force crossing set: a link crosses the boundary of x iff its
    // endpoints straddle position x in symmetric order.
    std::set<int> crossing;  // identified by the loser (child) position
    for (int c = 0; c < n; ++c) {
      const int p = t.nodes[c].parent;
      if (p != -1 && ((c <= x) != (p <= x))) crossing.insert(c);
    }

    // Path from the root toward x, then to x's right child.
    std::vector<int> path_children;
    int cur = t.root;
    while (cur != x) {
      const int next = cur > x ? t.nodes[cur].left : t.nodes[cur].right;
      if (next == -1) break;
      path_children.push_back(next);
      cur = next;
    }
    if (cur != x) {
      ++bad;
      continue;
    }
    if (t.nodes[x].right != -1) path_children.push_back(t.nodes[x].right);

    std::set<int> on_path;
    std::vector<int> cross_in_order;  // crossing links, top to bottom
    for (int c : path_children) {
      const int p = t.nodes[c].parent;
      if ((c <= x) != (p <= x)) {
        on_path.insert(c);
        cross_in_order.push_back(c);
      }
    }
    if (on_path != crossing || crossing.empty()) {
      ++bad;
      continue;
    }

    // Alternation: a link is left iff the loser is left of the winner.
    bool ok = true;
    for (std::size_t i = 1; i < cross_in_order.size(); ++i) {
      const bool prev_left = cross_in_order[i - 1] < t.nodes[cross_in_order[i - 1]].parent;
      const bool here_left = cross_in_order[i] < t.nodes[cross_in_order[i]].parent;
      if (prev_left == here_left) ok = false;
    }

    // Lowest crossing link: the right link won by x or, if x has no right
    // child, the link lost by the top of x's maximal right-child ancestor
    // chain (x itself when x is a left child).
    const int lowest = cross_in_order.back();
    if (t.nodes[x].right != -1) {
      if (lowest != t.nodes[x].right) ok = false;
    } else {
      int top = x;
      while (t.nodes[top].parent != -1 && t.nodes[t.nodes[top].parent].right == top)
        top = t.nodes[top].parent;
      if (lowest != top) ok = false;
    }
    if (!ok) ++bad;
  }
  rep.lines.push_back(LemmaLine{"7.1", bad == 0,
                                "boundaries=" + std::to_string(n > 0 ? n - 1 : 0) +
                                    " violations=" + std::to_string(bad)});
  return rep;
}

std::vector<ChildOrderViolation> check_child_order(const HeapSystem& sys,
                                                   ItemId root, VariantId v) {
  std::vector<ChildOrderViolation> out;
  if (!root.valid()) return out;
  const bool stable = v == VariantId::smooth;
  std::vector<ItemId> stack{root};
  while (!stack.empty()) {
    ItemId p = stack.back();
    stack.pop_back();
    std::uint64_t prev_time = 0;
    bool seen_rightmost = false;
    bool first = true;
    for (ItemId c = sys.node(p).first_child; c.valid(); c = sys.node(c).next_sib) {
      const Node& nc = sys.node(c);
      if (!stable && nc.placed != Side::leftmost)
        out.push_back(ChildOrderViolation{p, "rightmost-placed child in a one-sided heap"});
      if (stable && nc.placed == Side::leftmost && seen_rightmost)
        out.push_back(ChildOrderViolation{p, "leftmost-placed child after a rightmost one"});
      if (stable && nc.placed == Side::rightmost) {
        if (seen_rightmost && nc.link_time <= prev_time)
          out.push_back(ChildOrderViolation{p, "right children not increasing by link time"});
        if (!seen_rightmost) {
          seen_rightmost = true;
          first = true;  // restart monotonicity for the right-children suffix
        }
      } else if (!first && nc.link_time >= prev_time) {
        out.push_back(ChildOrderViolation{p, "children not decreasing by link time"});
      }
      prev_time = nc.link_time;
      first = false;
      stack.push_back(c);
    }
  }
  return out;
}

}  // namespace sah
