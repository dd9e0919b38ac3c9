#include <random>
#include <set>

#include "doctest.h"
#include "sah/heap.hpp"
#include "sah/lazy_heap.hpp"
#include "sah/replay.hpp"

using namespace sah;

TEST_CASE("eager insert and find_min") {
  HeapSystem sys;
  Heap h(sys);
  CHECK(!h.find_min().has_value());
  ItemId a = h.insert(ExtKey::of(5));
  CHECK(h.find_min() == a);
  ItemId b = h.insert(ExtKey::of(3));
  CHECK(h.find_min() == b);
  h.insert(ExtKey::of(7));
  CHECK(h.find_min() == b);
  CHECK(h.size() == 3);
  CHECK(sys.metrics().links == 2);  // one per insert past the first
}

TEST_CASE("eager delete_min returns keys in order") {
  for (VariantId v : {VariantId::pairing, VariantId::multipass, VariantId::slim,
                      VariantId::smooth}) {
    CAPTURE(variant_name(v));
    HeapSystem sys;
    Heap h(sys);
    for (std::int64_t k : {5, 3, 7, 1, 4, 9, 2}) h.insert(ExtKey::of(k));
    std::vector<std::int64_t> got;
    while (!h.empty()) got.push_back(h.delete_min(v).second.value());
    CHECK(got == std::vector<std::int64_t>{1, 2, 3, 4, 5, 7, 9});
  }
}

TEST_CASE("eager decrease_key moves an item to the top") {
  HeapSystem sys;
  Heap h(sys);
  h.insert(ExtKey::of(10));
  ItemId e = h.insert(ExtKey::of(20));
  h.insert(ExtKey::of(30));
  h.decrease_key(e, ExtKey::of(1));
  CHECK(h.find_min() == e);
  CHECK(sys.key(e).value() == 1);
  // Equal-key decrease is allowed and still re-links a non-root.
  ItemId f = h.insert(ExtKey::of(30));
  h.decrease_key(f, ExtKey::of(30));
  CHECK(h.find_min() == e);
}

TEST_CASE("eager erase removes a non-minimum item") {
  HeapSystem sys;
  Heap h(sys);
  ItemId a = h.insert(ExtKey::of(1));
  ItemId b = h.insert(ExtKey::of(2));
  h.insert(ExtKey::of(3));
  h.erase(b, VariantId::pairing);
  CHECK(h.size() == 2);
  CHECK(!sys.contains(b));
  CHECK(h.find_min() == a);
  CHECK(h.delete_min(VariantId::pairing).second.value() == 1);
  CHECK(h.delete_min(VariantId::pairing).second.value() == 3);
}

TEST_CASE("erase is framed as a single per-op row") {
  HeapSystem sys;
  Heap h(sys);
  h.insert(ExtKey::of(1));
  ItemId b = h.insert(ExtKey::of(2));
  h.insert(ExtKey::of(3));
  const std::size_t rows = sys.metrics().per_op.size();
  h.erase(b, VariantId::slim);
  CHECK(sys.metrics().per_op.size() == rows + 1);
  CHECK(sys.metrics().per_op.back().op == OpKind::erase_item);
}

TEST_CASE("eager meld consumes both heaps") {
  HeapSystem sys;
  Heap a(sys), b(sys);
  a.insert(ExtKey::of(4));
  a.insert(ExtKey::of(8));
  b.insert(ExtKey::of(2));
  Heap c = Heap::meld(std::move(a), std::move(b));
  CHECK(c.size() == 3);
  CHECK(sys.key(*c.find_min()).value() == 2);
}

TEST_CASE("heap error codes") {
  HeapSystem sys;
  Heap h(sys);
  CHECK_THROWS_AS(h.insert(ExtKey::bottom()), HeapError);
  CHECK_THROWS_AS(h.delete_min(VariantId::pairing), HeapError);
  ItemId a = h.insert(ExtKey::of(5));
  CHECK_THROWS_AS(h.decrease_key(a, ExtKey::of(6)), HeapError);
  auto [id, key] = h.delete_min(VariantId::pairing);
  CHECK(key.value() == 5);
  CHECK(!sys.contains(id));
  CHECK_THROWS_AS(h.decrease_key(id, ExtKey::of(1)), HeapError);

  HeapSystem other;
  Heap x(sys), y(other);
  x.insert(ExtKey::of(1));
  y.insert(ExtKey::of(2));
  CHECK_THROWS_AS(Heap::meld(std::move(x), std::move(y)), HeapError);
}

TEST_CASE("lazy operations defer all linking to delete_min") {
  HeapSystem sys;
  LazyHeap h(sys);
  for (std::int64_t k : {6, 2, 9, 4}) h.insert(ExtKey::of(k));
  CHECK(sys.metrics().links == 0);
  CHECK(sys.key(*h.find_min()).value() == 2);

  LazyHeap g(sys);
  g.insert(ExtKey::of(1));
  g.insert(ExtKey::of(7));
  LazyHeap m = LazyHeap::meld(std::move(h), std::move(g));
  CHECK(sys.metrics().links == 0);
  CHECK(m.size() == 6);
  CHECK(sys.key(*m.find_min()).value() == 1);

  for (VariantId v : {VariantId::pairing, VariantId::multipass, VariantId::slim,
                      VariantId::smooth}) {
    CAPTURE(variant_name(v));
    HeapSystem s2;
    LazyHeap l(s2);
    for (std::int64_t k : {6, 2, 9, 4, 1, 7}) l.insert(ExtKey::of(k));
    std::vector<std::int64_t> got;
    while (!l.empty()) got.push_back(l.delete_min(v).second.value());
    CHECK(got == std::vector<std::int64_t>{1, 2, 4, 6, 7, 9});
  }
}

TEST_CASE("lazy decrease_key cuts without linking") {
  HeapSystem sys;
  LazyHeap h(sys);
  for (std::int64_t k : {5, 3, 8, 6, 2}) h.insert(ExtKey::of(k));
  h.delete_min(VariantId::smooth);  // forces links so some items have parents
  const std::uint64_t links = sys.metrics().links;
  // Decrease something to below the minimum: min-root must follow.
  ItemId min_before = *h.find_min();
  for (std::uint32_t i = 0; i < 16; ++i) {
    ItemId id{i, 0};
    if (sys.contains(id) && id != min_before && !sys.is_root(id)) {
      h.decrease_key(id, ExtKey::of(0));
      CHECK(h.find_min() == id);
      break;
    }
  }
  CHECK(sys.metrics().links == links);
}

TEST_CASE("lazy insert costs one comparison after the first") {
  HeapSystem sys;
  LazyHeap h(sys);
  h.insert(ExtKey::of(3));
  CHECK(sys.metrics().comparisons == 0);
  h.insert(ExtKey::of(5));
  CHECK(sys.metrics().comparisons == 1);
  h.insert(ExtKey::of(1));
  CHECK(sys.metrics().comparisons == 2);
}

TEST_CASE("metrics totals equal per-op sums") {
  std::mt19937_64 rng(7);
  HeapSystem sys;
  Heap h(sys);
  std::vector<ItemId> live;
  for (int i = 0; i < 500; ++i) {
    const int r = static_cast<int>(rng() % 10);
    if (r < 5 || h.empty()) {
      live.push_back(h.insert(ExtKey::of(static_cast<std::int64_t>(rng() % 1000000))));
    } else if (r < 8) {
      ItemId gone = h.delete_min(VariantId::smooth).first;
      std::erase(live, gone);
    } else if (!live.empty()) {
      ItemId e = live[rng() % live.size()];
      h.decrease_key(e, ExtKey::of(sys.key(e).value() - 1));
    }
  }
  std::uint64_t links = 0, cmps = 0;
  for (const PerOpRow& row : sys.metrics().per_op) {
    links += row.links;
    cmps += row.comparisons;
  }
  CHECK(links == sys.metrics().links);
  CHECK(cmps == sys.metrics().comparisons);
}

TEST_CASE("eager and lazy agree against a multiset oracle") {
  for (Mode mode : {Mode::eager, Mode::lazy}) {
    for (VariantId v : {VariantId::pairing, VariantId::multipass, VariantId::slim,
                        VariantId::smooth}) {
      CAPTURE(mode_name(mode));
      CAPTURE(variant_name(v));
      std::mt19937_64 rng(42);
      HeapSystem sys;
      Heap eh(sys);
      LazyHeap lh(sys);
      std::multiset<std::int64_t> oracle;
      auto do_insert = [&](std::int64_t k) {
        if (mode == Mode::eager) eh.insert(ExtKey::of(k));
        else lh.insert(ExtKey::of(k));
        oracle.insert(k);
      };
      auto do_dm = [&]() -> std::int64_t {
        return mode == Mode::eager ? eh.delete_min(v).second.value()
                                   : lh.delete_min(v).second.value();
      };
      for (int i = 0; i < 2000; ++i) {
        if (oracle.empty() || rng() % 3 != 0) {
          do_insert(static_cast<std::int64_t>(rng() % 50));  // many duplicates
        } else {
          CHECK(do_dm() == *oracle.begin());
          oracle.erase(oracle.begin());
        }
      }
    }
  }
}
