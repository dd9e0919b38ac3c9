#include <algorithm>

#include "doctest.h"
#include "sah/trace.hpp"

using namespace sah;

namespace {

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

TEST_CASE("generation is deterministic in the seed") {
  const auto cfg = fuzz_cfg(2000);
  CHECK(gen_random_trace(cfg, 9) == gen_random_trace(cfg, 9));
  CHECK(gen_random_trace(cfg, 9) != gen_random_trace(cfg, 10));
}

TEST_CASE("serialize/parse round trip is the identity") {
  const Trace t = gen_random_trace(fuzz_cfg(3000), 123);
  const Trace back = parse_trace(serialize_trace(t));
  CHECK(back == t);
}

TEST_CASE("generated traces validate under the checker") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK_NOTHROW(validate_trace(gen_random_trace(fuzz_cfg(1000), seed)));
  }
}

TEST_CASE("op mix tracks the requested weights") {
  const Trace t = gen_random_trace(fuzz_cfg(20000), 77);
  double ins = 0, dm = 0, dk = 0;
  for (const OpRecord& op : t.ops) {
    if (op.kind == OpRecord::Kind::insert) ++ins;
    if (op.kind == OpRecord::Kind::delete_min) ++dm;
    if (op.kind == OpRecord::Kind::decrease_key) ++dk;
  }
  const double total = ins + dm + dk;
  CHECK(ins / total == doctest::Approx(0.5).epsilon(0.1));
  CHECK(dm / total == doctest::Approx(0.3).epsilon(0.15));
  CHECK(dk / total == doctest::Approx(0.2).epsilon(0.15));
}

TEST_CASE("sorting trace is a permutation then full drain") {
  const Trace t = gen_sorting_trace(64, 5);
  REQUIRE(t.ops.size() == 1 + 64 + 64);
  CHECK(t.ops[0].kind == OpRecord::Kind::make_heap);
  std::vector<char> seen(65, 0);
  for (int i = 1; i <= 64; ++i) {
    REQUIRE(t.ops[i].kind == OpRecord::Kind::insert);
    REQUIRE(t.ops[i].key >= 1);
    REQUIRE(t.ops[i].key <= 64);
    seen[t.ops[i].key] = 1;
  }
  CHECK(std::count(seen.begin() + 1, seen.end(), 1) == 64);
  for (int i = 65; i < 129; ++i) CHECK(t.ops[i].kind == OpRecord::Kind::delete_min);
  CHECK(gen_sorting_trace(64, 5) == t);
  CHECK(gen_sorting_trace(64, 6) != t);
}

TEST_CASE("mix trace prefills before mixing") {
  const Trace t = gen_mix_trace(100, 400, 1, 1, 8, 3);
  REQUIRE(t.ops.size() >= 501);
  for (int i = 1; i <= 100; ++i) CHECK(t.ops[i].kind == OpRecord::Kind::insert);
  double dk = 0, rest = 0;
  for (std::size_t i = 101; i < t.ops.size(); ++i) {
    (t.ops[i].kind == OpRecord::Kind::decrease_key ? dk : rest) += 1;
  }
  CHECK(dk / (dk + rest) > 0.5);
  CHECK_NOTHROW(validate_trace(t));
}

TEST_CASE("parser reports the offending line") {
  CHECK_THROWS_AS(parse_trace("H\nI 0 0 zork\n"), TraceError);
  try {
    parse_trace("H\nQ\n");
    FAIL("expected a throw");
  } catch (const TraceError& e) {
    CHECK(e.line() == 2);
    CHECK(!e.semantic());
  }
  try {
    parse_trace("H\nD 0\n");  // delete-min on an empty heap
    FAIL("expected a throw");
  } catch (const TraceError& e) {
    CHECK(e.line() == 2);
    CHECK(e.semantic());
  }
  // Using a heap label consumed by a meld.
  try {
    parse_trace("H\nH\nI 0 0 1\nI 1 1 2\nM 0 1\nI 1 2 3\n");
    FAIL("expected a throw");
  } catch (const TraceError& e) {
    CHECK(e.line() == 6);
    CHECK(e.semantic());
  }
}

TEST_CASE("comments and blank lines are ignored") {
  const Trace t = parse_trace("# preamble\n\nH\nI 0 0 5\n# mid\nF 0\nD 0\n");
  REQUIRE(t.ops.size() == 4);
  CHECK(t.ops[1].key == 5);
}
