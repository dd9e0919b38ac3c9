#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sah {

/// One trace operation.  Heaps and items are named by dense small
/// integers assigned at creation; a melded-away heap label is never
/// reused.
struct OpRecord {
  enum class Kind : std::uint8_t {
    make_heap,
    insert,
    find_min,
    delete_min,
    meld,
    decrease_key,
    erase,
  };
  Kind kind = Kind::make_heap;
  std::int32_t h = -1;
  std::int32_t h2 = -1;    // meld only
  std::int32_t item = -1;  // insert / decrease_key / erase
  std::int64_t key = 0;    // insert / decrease_key

  friend bool operator==(const OpRecord&, const OpRecord&) = default;
};

struct Trace {
  std::vector<OpRecord> ops;
  std::uint64_t seed = 0;
  std::string meta;

  friend bool operator==(const Trace&, const Trace&) = default;
};

class TraceError : public std::runtime_error {
 public:
  TraceError(int line, bool semantic, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line),
        semantic_(semantic) {}
  int line() const { return line_; }
  bool semantic() const { return semantic_; }

 private:
  int line_;
  bool semantic_;
};

struct RandomTraceCfg {
  double w_insert = 1;
  double w_delete_min = 0;
  double w_decrease_key = 0;
  double w_meld = 0;
  double w_erase = 0;
  double w_find_min = 0;
  int n_ops = 0;
  int n_heaps = 1;
  std::int64_t key_min = 0;
  std::int64_t key_max = std::int64_t{1} << 42;
};

/// Deterministic for a fixed (cfg, seed); infeasible ops are skipped and
/// the mix renormalized over the feasible kinds.  Generated traces are
/// well-formed under every variant: after a delete-min, items whose key
/// tied the removed minimum are never targeted again, since which of
/// them survived depends on the variant.
Trace gen_random_trace(const RandomTraceCfg& cfg, std::uint64_t seed);

/// One heap; n inserts of a seeded permutation of 1..n, then n delete-mins.
Trace gen_sorting_trace(int n, std::uint64_t seed);

/// Steady-state workload for decrease-key benchmarks: n_prefill inserts
/// into one heap, then n_ops ops drawn with weights insert:delete-min:
/// decrease-key.
Trace gen_mix_trace(int n_prefill, int n_ops, double w_insert,
                    double w_delete_min, double w_decrease_key,
                    std::uint64_t seed);

std::string serialize_trace(const Trace& t);

/// Parses and validates; throws TraceError with the offending line.
Trace parse_trace(std::string_view text);

/// Semantic validation of an in-memory trace ("line" = 1-based op index).
void validate_trace(const Trace& t);

}  // namespace sah
