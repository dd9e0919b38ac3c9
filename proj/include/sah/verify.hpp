#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sah/replay.hpp"

namespace sah {

/// Ground-truth oracle: one sorted multiset per heap label.  Shares no
/// code with the heap implementations.
std::vector<OutputRec> oracle_replay(const Trace& t);

struct OrderViolation {
  ItemId parent;
  ItemId child;
};

/// Full traversal; empty iff the tree rooted at `root` is heap-ordered.
std::vector<OrderViolation> check_heap_order(const HeapSystem& sys, ItemId root);

enum class LinkDirection : std::uint8_t { left, right, insertion, decrease_key };

/// Cut by a decrease-key, cut by a delete-min, or never cut.
enum class LinkFate : std::uint8_t { key_link, delete_link, final_link };

struct LinkClass {
  LinkDirection direction = LinkDirection::insertion;
  LinkFate fate = LinkFate::final_link;
  bool real = false;                // both endpoints temporary and cut by a delete-min
  std::optional<bool> good;         // defined for left/right links only
};

struct Classification {
  std::vector<LinkClass> links;     // parallel to the replay link log
  std::vector<char> temporary;      // by item label: deleted within the trace
};

Classification classify(const Trace& t, const ReplayResult& r);

struct LemmaLine {
  std::string id;
  bool pass = true;
  std::string details;
};

struct Report {
  std::vector<LemmaLine> lines;
  bool ok() const;
  /// Machine-readable rendering: "LEMMA <id> PASS|FAIL <details>" per line.
  std::string render() const;
};

/// Operational lemma checks over a classified replay, in exact integer
/// arithmetic:
///   3.1  multipass pass-count halving and exact floor(r_i/2) links per pass
///   3.2  slim/smooth: each node wins at most one left and one right link
///        per delete-min
///   4.1  insertion links <= insertions
///   4.2  final links + delete-mins <= insertions
///   4.3  multipass: per delete-min with k links, good >= k/2 - 1
///   4.5  slim/smooth: per delete-min with k links, good >= k/3 - 2/3
///   cmp  slim/smooth: counted comparisons per consolidation <= 2 links
Report check_lemmas(const Trace& t, const ReplayResult& r,
                    const Classification& c, VariantId v);

/// Binary tree formed by the left/right links of one delete-min:
/// heap-ordered by key, symmetric order = root-list order.
struct Treap {
  struct TNode {
    ItemId id;
    ExtKey key;
    int parent = -1;
    int left = -1;
    int right = -1;
  };
  std::vector<TNode> nodes;  // in symmetric order
  int root = -1;
};

/// Reconstructs the treap of one delete-min from its left/right links.
/// Returns nullopt (with a diagnostic) if the links do not form one.
std::optional<Treap> treap_from_links(std::span<const LinkRecord> links,
                                      std::string* err = nullptr);

/// Checks, for every boundary, that the crossing links lie on a single
/// root-to-boundary path, alternate between left and right, and that the
/// lowest crossing link is the right link won by the boundary node or,
/// failing that, the link it lost.
Report check_boundary_alternation(const Treap& t);

struct ChildOrderViolation {
  ItemId node;
  std::string what;
};

/// Validates the variant's sibling ordering by link time at every node
/// reachable from `root`.
std::vector<ChildOrderViolation> check_child_order(const HeapSystem& sys,
                                                   ItemId root, VariantId v);

}  // namespace sah
