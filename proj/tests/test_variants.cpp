#include <algorithm>
#include <random>

#include "doctest.h"
#include "sah/variants.hpp"
#include "sah/verify.hpp"

using namespace sah;

namespace {

std::vector<ItemId> make_roots(HeapSystem& sys, const std::vector<std::int64_t>& keys) {
  std::vector<ItemId> out;
  for (std::int64_t k : keys) out.push_back(sys.create(ExtKey::of(k)));
  return out;
}

std::vector<std::int64_t> child_keys(const HeapSystem& sys, ItemId p) {
  std::vector<std::int64_t> out;
  for (ItemId c = sys.node(p).first_child; c.valid(); c = sys.node(c).next_sib)
    out.push_back(sys.key(c).value());
  return out;
}

}  // namespace

TEST_CASE("two-pass consolidation of [4,1,3,2,5]") {
  HeapSystem sys;
  auto roots = make_roots(sys, {4, 1, 3, 2, 5});
  ItemId r = two_pass_consolidate(sys, roots);
  CHECK(sys.key(r).value() == 1);
  CHECK(sys.metrics().links == 4);
  CHECK(child_keys(sys, r) == std::vector<std::int64_t>{2, 4});
  CHECK(child_keys(sys, roots[3]) == std::vector<std::int64_t>{5, 3});
  // Pairing pass first, then right-to-left assembly.
  std::vector<std::uint32_t> passes;
  for (const LinkRecord& l : sys.link_log()) passes.push_back(l.pass);
  CHECK(passes == std::vector<std::uint32_t>{1, 1, 2, 2});
}

TEST_CASE("multipass consolidation of [4,1,3,2,5]") {
  HeapSystem sys;
  auto roots = make_roots(sys, {4, 1, 3, 2, 5});
  ItemId r = multipass_consolidate(sys, roots);
  CHECK(sys.key(r).value() == 1);
  CHECK(sys.metrics().links == 4);
  CHECK(child_keys(sys, r) == std::vector<std::int64_t>{5, 2, 4});
  CHECK(child_keys(sys, roots[3]) == std::vector<std::int64_t>{3});
  std::vector<std::uint32_t> passes;
  for (const LinkRecord& l : sys.link_log()) passes.push_back(l.pass);
  CHECK(passes == std::vector<std::uint32_t>{1, 1, 2, 3});
}

TEST_CASE("locally maximum linking of [2,5,3]") {
  for (Placement p : {Placement::one_sided, Placement::stable}) {
    HeapSystem sys;
    auto roots = make_roots(sys, {2, 5, 3});
    ItemId r = locally_max_consolidate(sys, roots, p);
    CHECK(sys.key(r).value() == 2);
    CHECK(sys.metrics().links == 2);
    CHECK(child_keys(sys, r) == std::vector<std::int64_t>{3});
    CHECK(child_keys(sys, roots[2]) == std::vector<std::int64_t>{5});
    // 3 beats 5 from the right (left link), then 2 beats 3 (right link).
    REQUIRE(sys.link_log().size() == 2);
    CHECK(sys.link_log()[0].dir == LinkDir::left);
    CHECK(sys.link_log()[0].winner == roots[2]);
    CHECK(sys.link_log()[1].dir == LinkDir::right);
    CHECK(sys.link_log()[1].winner == roots[0]);
    CHECK(sys.metrics().comparisons <= 2 * sys.metrics().links);
  }
}

TEST_CASE("one-sided vs stable placement on [4,2,5,1,3]") {
  HeapSystem s1;
  auto r1 = make_roots(s1, {4, 2, 5, 1, 3});
  ItemId a = locally_max_consolidate(s1, r1, Placement::one_sided);
  CHECK(s1.key(a).value() == 1);
  CHECK(s1.metrics().links == 4);
  CHECK(child_keys(s1, a) == std::vector<std::int64_t>{3, 2});
  CHECK(child_keys(s1, r1[1]) == std::vector<std::int64_t>{5, 4});

  HeapSystem s2;
  auto r2 = make_roots(s2, {4, 2, 5, 1, 3});
  ItemId b = locally_max_consolidate(s2, r2, Placement::stable);
  CHECK(s2.key(b).value() == 1);
  CHECK(s2.metrics().links == 4);
  CHECK(child_keys(s2, b) == std::vector<std::int64_t>{2, 3});
  CHECK(child_keys(s2, r2[1]) == std::vector<std::int64_t>{4, 5});
}

TEST_CASE("sorted list [1,2,3] becomes a rightward chain") {
  for (Placement p : {Placement::one_sided, Placement::stable}) {
    HeapSystem sys;
    auto roots = make_roots(sys, {1, 2, 3});
    ItemId r = locally_max_consolidate(sys, roots, p);
    CHECK(r == roots[0]);
    CHECK(child_keys(sys, roots[0]) == std::vector<std::int64_t>{2});
    CHECK(child_keys(sys, roots[1]) == std::vector<std::int64_t>{3});
    for (const LinkRecord& l : sys.link_log()) CHECK(l.dir == LinkDir::right);
  }
}

TEST_CASE("single root consolidates to itself with no links") {
  for (VariantId v : {VariantId::pairing, VariantId::multipass, VariantId::slim,
                      VariantId::smooth}) {
    HeapSystem sys;
    auto roots = make_roots(sys, {42});
    CHECK(consolidate(sys, v, roots) == roots[0]);
    CHECK(sys.metrics().links == 0);
  }
}

TEST_CASE("random root lists: min, link count, order invariants") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const int r = 2 + static_cast<int>(rng() % 40);
    std::vector<std::int64_t> keys(r);
    for (int i = 0; i < r; ++i) keys[i] = i + 1;
    std::shuffle(keys.begin(), keys.end(), rng);
    for (VariantId v : {VariantId::pairing, VariantId::multipass, VariantId::slim,
                        VariantId::smooth}) {
      CAPTURE(variant_name(v));
      HeapSystem sys;
      auto roots = make_roots(sys, keys);
      ItemId root = consolidate(sys, v, roots);
      CHECK(sys.key(root).value() == 1);
      CHECK(sys.metrics().links == static_cast<std::uint64_t>(r - 1));
      CHECK(check_heap_order(sys, root).empty());
      CHECK(check_child_order(sys, root, v).empty());
      if (v == VariantId::slim || v == VariantId::smooth)
        CHECK(sys.metrics().comparisons <= 2 * sys.metrics().links);
    }
  }
}
