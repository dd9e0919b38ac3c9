#include "doctest.h"
#include "sah/verify.hpp"

using namespace sah;

namespace {

const VariantId kAll[] = {VariantId::pairing, VariantId::multipass,
                          VariantId::slim, VariantId::smooth};

RandomTraceCfg fuzz_cfg(int n_ops) {
  RandomTraceCfg cfg;
  cfg.w_insert = 5;
  cfg.w_delete_min = 3;
  cfg.w_decrease_key = 2;
  cfg.w_meld = 0.3;
  cfg.w_erase = 0.3;
  cfg.w_find_min = 0.2;
  cfg.n_ops = n_ops;
  cfg.n_heaps = 3;
  return cfg;
}

}  // namespace

TEST_CASE("oracle matches replays on random traces") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Trace t = gen_random_trace(fuzz_cfg(1500), seed);
    const auto expect = oracle_replay(t);
    for (VariantId v : kAll) {
      for (Mode m : {Mode::eager, Mode::lazy}) {
        CAPTURE(variant_name(v));
        CAPTURE(mode_name(m));
        CHECK(replay(t, v, m).outputs == expect);
      }
    }
  }
}

TEST_CASE("replay is deterministic") {
  const Trace t = gen_random_trace(fuzz_cfg(800), 4);
  const std::string a = serialize_result(replay(t, VariantId::smooth, Mode::lazy));
  const std::string b = serialize_result(replay(t, VariantId::smooth, Mode::lazy));
  CHECK(a == b);
}

TEST_CASE("classification of a small trace") {
  // Item 1 is decrease-keyed (its losing link becomes a key link), then
  // two delete-mins make items 0 and 1 temporary; item 2 survives.
  const Trace t = parse_trace(
      "H\nI 0 0 10\nI 0 1 20\nI 0 2 30\nK 0 1 5\nD 0\nD 0\n");
  const ReplayResult r = replay(t, VariantId::slim, Mode::eager);
  const Classification c = classify(t, r);
  REQUIRE(c.temporary.size() == 3);
  CHECK(c.temporary[0] == 1);
  CHECK(c.temporary[1] == 1);
  CHECK(c.temporary[2] == 0);
  REQUIRE(c.links.size() == r.link_log.size());
  bool saw_key_link = false, saw_dk_link = false;
  for (std::size_t i = 0; i < c.links.size(); ++i) {
    if (c.links[i].fate == LinkFate::key_link) saw_key_link = true;
    if (c.links[i].direction == LinkDirection::decrease_key) saw_dk_link = true;
    if (c.links[i].direction == LinkDirection::insertion ||
        c.links[i].direction == LinkDirection::decrease_key)
      CHECK(!c.links[i].good.has_value());
  }
  CHECK(saw_key_link);
  CHECK(saw_dk_link);
}

TEST_CASE("lemma report passes on random traces for every variant") {
  for (std::uint64_t seed = 20; seed < 26; ++seed) {
    const Trace t = gen_random_trace(fuzz_cfg(1500), seed);
    for (VariantId v : kAll) {
      for (Mode m : {Mode::eager, Mode::lazy}) {
        CAPTURE(variant_name(v));
        CAPTURE(mode_name(m));
        CAPTURE(seed);
        const ReplayResult r = replay(t, v, m);
        const Classification c = classify(t, r);
        const Report rep = check_lemmas(t, r, c, v);
        CHECK(rep.ok());
        if (!rep.ok()) MESSAGE(rep.render());
      }
    }
  }
}

TEST_CASE("report renders one line per check") {
  Report rep;
  rep.lines.push_back(LemmaLine{"4.1", true, "x=1"});
  rep.lines.push_back(LemmaLine{"3.2", false, ""});
  CHECK(rep.render() == "LEMMA 4.1 PASS x=1\nLEMMA 3.2 FAIL\n");
  CHECK(!rep.ok());
}

TEST_CASE("treap reconstruction rejects malformed link sets") {
  auto rec = [](std::uint32_t w, std::int64_t wk, std::uint32_t l,
                std::int64_t lk, LinkDir d) {
    LinkRecord r;
    r.winner = ItemId{w, 0};
    r.loser = ItemId{l, 0};
    r.winner_key = ExtKey::of(wk);
    r.loser_key = ExtKey::of(lk);
    r.dir = d;
    return r;
  };
  std::string err;

  // 1 beats 2 to its right, 2 beats 3 to its right: a chain.
  std::vector<LinkRecord> chain{rec(2, 2, 3, 3, LinkDir::right),
                                rec(1, 1, 2, 2, LinkDir::right)};
  auto t = treap_from_links(chain, &err);
  REQUIRE(t.has_value());
  CHECK(t->nodes.size() == 3);
  CHECK(t->nodes[t->root].key.value() == 1);

  // Same winner takes two right links.
  std::vector<LinkRecord> dup{rec(1, 1, 2, 2, LinkDir::right),
                              rec(1, 1, 3, 3, LinkDir::right)};
  CHECK(!treap_from_links(dup, &err).has_value());

  // Key order inverted.
  std::vector<LinkRecord> inv{rec(1, 5, 2, 2, LinkDir::left)};
  CHECK(!treap_from_links(inv, &err).has_value());

  // Two separate components.
  std::vector<LinkRecord> split{rec(1, 1, 2, 2, LinkDir::right),
                                rec(3, 3, 4, 4, LinkDir::right)};
  CHECK(!treap_from_links(split, &err).has_value());
}

TEST_CASE("boundary alternation holds on replayed consolidations") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Trace t = gen_sorting_trace(64, seed);
    for (VariantId v : {VariantId::slim, VariantId::smooth}) {
      CAPTURE(variant_name(v));
      const ReplayResult r = replay(t, v, Mode::eager);
      std::size_t i = 0;
      while (i < r.link_log.size()) {
        if (r.link_log[i].op != OpKind::delete_min) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < r.link_log.size() && r.link_log[j].op == OpKind::delete_min &&
               r.link_log[j].op_serial == r.link_log[i].op_serial)
          ++j;
        std::span<const LinkRecord> links(r.link_log.data() + i, j - i);
        auto treap = treap_from_links(links);
        REQUIRE(treap.has_value());
        CHECK(check_boundary_alternation(*treap).ok());
        i = j;
      }
    }
  }
}

TEST_CASE("heap order checker walks the whole tree") {
  HeapSystem sys;
  ItemId a = sys.create(ExtKey::of(5));
  ItemId b = sys.create(ExtKey::of(1));
  ItemId r = sys.link(a, b, Side::leftmost, OpKind::insert);
  CHECK(r == b);  // smaller key wins
  ItemId c = sys.create(ExtKey::of(3));
  sys.link(r, c, Side::leftmost, OpKind::insert);
  CHECK(check_heap_order(sys, b).empty());
  CHECK(check_heap_order(sys, kNoItem).empty());
}
