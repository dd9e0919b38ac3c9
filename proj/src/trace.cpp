#include "sah/trace.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <random>
#include <unordered_set>

namespace sah {
namespace {

// Key-multiset model of a trace execution, shared by the generator and
// the parser's validator.  Delete-min removes one minimum-key unit and
// drops the identity of every item tying that key: which of them
// survived depends on the variant, so they may never be targeted again.
class TraceModel {
 public:
  struct KeyEntry {
    std::uint32_t anon = 0;          // live units with no usable identity
    std::vector<std::uint32_t> items;  // targetable item labels at this key
    std::size_t total() const { return anon + items.size(); }
  };
  struct HeapState {
    std::map<std::int64_t, KeyEntry> keys;
    std::uint64_t size = 0;
  };
  struct ItemState {
    std::int32_t origin = -1;  // heap label at insertion; resolve via find()
    std::int64_t key = 0;
    bool targetable = false;
  };

  int n_heaps() const { return static_cast<int>(heaps_.size()); }
  bool heap_live(int h) const {
    return h >= 0 && h < n_heaps() && live_[h];
  }
  std::uint64_t heap_size(int h) { return heaps_[find(h)].size; }
  int n_items() const { return static_cast<int>(items_.size()); }
  const ItemState& item(int i) const { return items_[i]; }
  int heap_of_item(int i) { return find(items_[i].origin); }
  const std::vector<std::uint32_t>& targets() const { return targets_; }

  int make_heap() {
    int h = n_heaps();
    heaps_.emplace_back();
    live_.push_back(1);
    dsu_.push_back(h);
    return h;
  }

  int insert(int h, std::int64_t key) {
    int i = n_items();
    items_.push_back(ItemState{static_cast<std::int32_t>(h), key, true});
    tpos_.push_back(static_cast<std::int32_t>(targets_.size()));
    targets_.push_back(static_cast<std::uint32_t>(i));
    HeapState& hs = heaps_[find(h)];
    hs.keys[key].items.push_back(static_cast<std::uint32_t>(i));
    ++hs.size;
    return i;
  }

  std::int64_t min_key(int h) { return heaps_[find(h)].keys.begin()->first; }

  void delete_min(int h) {
    HeapState& hs = heaps_[find(h)];
    auto it = hs.keys.begin();
    KeyEntry& e = it->second;
    for (std::uint32_t i : e.items) untarget(i);
    const std::size_t left = e.total() - 1;
    if (left == 0) {
      hs.keys.erase(it);
    } else {
      e.anon = static_cast<std::uint32_t>(left);
      e.items.clear();
    }
    --hs.size;
  }

  void decrease_key(int i, std::int64_t k) {
    HeapState& hs = heaps_[heap_of_item(i)];
    detach_key(hs, i);
    items_[i].key = k;
    hs.keys[k].items.push_back(static_cast<std::uint32_t>(i));
  }

  void erase(int i) {
    HeapState& hs = heaps_[heap_of_item(i)];
    detach_key(hs, i);
    untarget(i);
    --hs.size;
  }

  void meld(int h1, int h2) {
    HeapState& a = heaps_[h1];
    HeapState& b = heaps_[h2];
    if (b.keys.size() > a.keys.size()) std::swap(a, b);
    for (auto& [k, e] : b.keys) {
      KeyEntry& dst = a.keys[k];
      dst.anon += e.anon;
      dst.items.insert(dst.items.end(), e.items.begin(), e.items.end());
    }
    a.size += b.size;
    b = HeapState{};
    live_[h2] = 0;
    dsu_[h2] = h1;
  }

 private:
  int find(int h) {
    while (dsu_[h] != h) {
      dsu_[h] = dsu_[dsu_[h]];
      h = dsu_[h];
    }
    return h;
  }

  void untarget(int i) {
    const std::int32_t pos = tpos_[i];
    const std::uint32_t last = targets_.back();
    targets_[pos] = last;
    tpos_[last] = pos;
    targets_.pop_back();
    tpos_[i] = -1;
    items_[i].targetable = false;
  }

  void detach_key(HeapState& hs, int i) {
    auto it = hs.keys.find(items_[i].key);
    KeyEntry& e = it->second;
    e.items.erase(std::find(e.items.begin(), e.items.end(),
                            static_cast<std::uint32_t>(i)));
    if (e.total() == 0) hs.keys.erase(it);
  }

  std::vector<int> dsu_;
  std::vector<char> live_;
  std::vector<HeapState> heaps_;
  std::vector<ItemState> items_;
  std::vector<std::uint32_t> targets_;
  std::vector<std::int32_t> tpos_;
};

// Applies one op to the model, checking well-formedness.
void apply_checked(TraceModel& m, const OpRecord& op, int line) {
  auto semantic = [&](const std::string& msg) -> TraceError {
    return TraceError(line, true, msg);
  };
  auto need_heap = [&](int h) {
    if (!m.heap_live(h)) throw semantic("dead or unknown heap label " + std::to_string(h));
  };
  auto need_item = [&](int h, int i) {
    need_heap(h);
    if (i < 0 || i >= m.n_items() || !m.item(i).targetable)
      throw semantic("dead or untargetable item label " + std::to_string(i));
    if (m.heap_of_item(i) != h)
      throw semantic("item " + std::to_string(i) + " is not in heap " + std::to_string(h));
  };
  switch (op.kind) {
    case OpRecord::Kind::make_heap:
      m.make_heap();
      break;
    case OpRecord::Kind::insert: {
      need_heap(op.h);
      if (op.item != m.n_items())
        throw semantic("item label " + std::to_string(op.item) +
                       " is not the next dense label");
      m.insert(op.h, op.key);
      break;
    }
    case OpRecord::Kind::find_min:
      need_heap(op.h);
      break;
    case OpRecord::Kind::delete_min:
      need_heap(op.h);
      if (m.heap_size(op.h) == 0) throw semantic("delete-min on empty heap");
      m.delete_min(op.h);
      break;
    case OpRecord::Kind::meld:
      need_heap(op.h);
      need_heap(op.h2);
      if (op.h == op.h2) throw semantic("meld of a heap with itself");
      m.meld(op.h, op.h2);
      break;
    case OpRecord::Kind::decrease_key:
      need_item(op.h, op.item);
      if (op.key > m.item(op.item).key)
        throw semantic("decrease-key would increase the key of item " +
                       std::to_string(op.item));
      m.decrease_key(op.item, op.key);
      break;
    case OpRecord::Kind::erase:
      need_item(op.h, op.item);
      m.erase(op.item);
      break;
  }
}

struct KeyDraw {
  std::mt19937_64& rng;
  std::int64_t lo, hi;
  std::unordered_set<std::int64_t> used;

  // Fresh keys are drawn distinct when the range allows it; a duplicate is
  // accepted after a bounded number of tries (taint logic keeps the trace
  // well-formed regardless).
  std::int64_t fresh() {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    std::int64_t k = d(rng);
    for (int t = 0; t < 32 && used.count(k); ++t) k = d(rng);
    used.insert(k);
    return k;
  }
  std::int64_t at_most(std::int64_t cur) {
    std::uniform_int_distribution<std::int64_t> d(lo, cur);
    std::int64_t k = d(rng);
    for (int t = 0; t < 32 && used.count(k) && k != cur; ++t) k = d(rng);
    used.insert(k);
    return k;
  }
};

}  // namespace

Trace gen_random_trace(const RandomTraceCfg& cfg, std::uint64_t seed) {
  if (cfg.w_insert <= 0)
    throw std::invalid_argument("gen_random_trace: insert weight must be positive");
  if (cfg.n_heaps < 1) throw std::invalid_argument("gen_random_trace: n_heaps < 1");
  if (cfg.key_min > cfg.key_max)
    throw std::invalid_argument("gen_random_trace: empty key range");

  std::mt19937_64 rng(seed);
  KeyDraw keys{rng, cfg.key_min, cfg.key_max, {}};
  Trace t;
  t.seed = seed;
  t.meta = "random ops=" + std::to_string(cfg.n_ops) +
           " heaps=" + std::to_string(cfg.n_heaps);

  TraceModel m;
  std::vector<int> live_heaps;
  for (int i = 0; i < cfg.n_heaps; ++i) {
    t.ops.push_back(OpRecord{OpRecord::Kind::make_heap, -1, -1, -1, 0});
    live_heaps.push_back(m.make_heap());
  }

  auto pick = [&](const std::vector<int>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };

  enum K { kIns, kDel, kDk, kMeld, kErase, kFind };
  const double base_w[6] = {cfg.w_insert, cfg.w_delete_min, cfg.w_decrease_key,
                            cfg.w_meld,   cfg.w_erase,      cfg.w_find_min};

  for (int n = 0; n < cfg.n_ops; ++n) {
    std::vector<int> nonempty;
    for (int h : live_heaps)
      if (m.heap_size(h) > 0) nonempty.push_back(h);

    double w[6];
    std::copy(base_w, base_w + 6, w);
    if (nonempty.empty()) w[kDel] = 0;
    if (m.targets().empty()) w[kDk] = w[kErase] = 0;
    if (live_heaps.size() < 2) w[kMeld] = 0;
    const double total = std::accumulate(w, w + 6, 0.0);

    double x = std::uniform_real_distribution<double>(0.0, total)(rng);
    int kind = 0;
    for (; kind < 5; ++kind) {
      if (x < w[kind]) break;
      x -= w[kind];
    }

    OpRecord op;
    switch (kind) {
      case kIns: {
        op.kind = OpRecord::Kind::insert;
        op.h = pick(live_heaps);
        op.key = keys.fresh();
        op.item = m.n_items();
        break;
      }
      case kDel: {
        op.kind = OpRecord::Kind::delete_min;
        op.h = pick(nonempty);
        break;
      }
      case kDk: {
        const auto& tg = m.targets();
        int item = static_cast<int>(
            tg[std::uniform_int_distribution<std::size_t>(0, tg.size() - 1)(rng)]);
        op.kind = OpRecord::Kind::decrease_key;
        op.item = item;
        op.h = m.heap_of_item(item);
        op.key = keys.at_most(m.item(item).key);
        break;
      }
      case kMeld: {
        op.kind = OpRecord::Kind::meld;
        op.h = pick(live_heaps);
        do {
          op.h2 = pick(live_heaps);
        } while (op.h2 == op.h);
        live_heaps.erase(std::find(live_heaps.begin(), live_heaps.end(), op.h2));
        break;
      }
      case kErase: {
        const auto& tg = m.targets();
        int item = static_cast<int>(
            tg[std::uniform_int_distribution<std::size_t>(0, tg.size() - 1)(rng)]);
        op.kind = OpRecord::Kind::erase;
        op.item = item;
        op.h = m.heap_of_item(item);
        break;
      }
      default: {
        op.kind = OpRecord::Kind::find_min;
        op.h = pick(live_heaps);
        break;
      }
    }
    apply_checked(m, op, n + 1);
    t.ops.push_back(op);
  }
  return t;
}

Trace gen_sorting_trace(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_sorting_trace: n < 1");
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);

  Trace t;
  t.seed = seed;
  t.meta = "sorting n=" + std::to_string(n);
  t.ops.reserve(2 * n + 1);
  t.ops.push_back(OpRecord{OpRecord::Kind::make_heap, -1, -1, -1, 0});
  for (int i = 0; i < n; ++i)
    t.ops.push_back(OpRecord{OpRecord::Kind::insert, 0, -1, i, perm[i]});
  for (int i = 0; i < n; ++i)
    t.ops.push_back(OpRecord{OpRecord::Kind::delete_min, 0, -1, -1, 0});
  return t;
}

Trace gen_mix_trace(int n_prefill, int n_ops, double w_insert,
                    double w_delete_min, double w_decrease_key,
                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  KeyDraw keys{rng, 0, std::int64_t{1} << 42, {}};
  Trace t;
  t.seed = seed;
  t.meta = "mix prefill=" + std::to_string(n_prefill) +
           " ops=" + std::to_string(n_ops);
  TraceModel m;
  t.ops.push_back(OpRecord{OpRecord::Kind::make_heap, -1, -1, -1, 0});
  m.make_heap();
  for (int i = 0; i < n_prefill; ++i) {
    OpRecord op{OpRecord::Kind::insert, 0, -1, m.n_items(), keys.fresh()};
    apply_checked(m, op, i + 1);
    t.ops.push_back(op);
  }
  const double base_w[3] = {w_insert, w_delete_min, w_decrease_key};
  for (int n = 0; n < n_ops; ++n) {
    double w[3];
    std::copy(base_w, base_w + 3, w);
    if (m.heap_size(0) == 0) w[1] = 0;
    if (m.targets().empty()) w[2] = 0;
    const double total = w[0] + w[1] + w[2];
    double x = std::uniform_real_distribution<double>(0.0, total)(rng);
    OpRecord op;
    if (x < w[0]) {
      op = OpRecord{OpRecord::Kind::insert, 0, -1, m.n_items(), keys.fresh()};
    } else if (x < w[0] + w[1]) {
      op = OpRecord{OpRecord::Kind::delete_min, 0, -1, -1, 0};
    } else {
      const auto& tg = m.targets();
      int item = static_cast<int>(
          tg[std::uniform_int_distribution<std::size_t>(0, tg.size() - 1)(rng)]);
      op = OpRecord{OpRecord::Kind::decrease_key, 0, -1, item,
                    keys.at_most(m.item(item).key)};
    }
    apply_checked(m, op, n_prefill + n + 1);
    t.ops.push_back(op);
  }
  return t;
}

std::string serialize_trace(const Trace& t) {
  std::string out;
  out += "#! seed " + std::to_string(t.seed) + "\n";
  if (!t.meta.empty()) out += "#! meta " + t.meta + "\n";
  for (const OpRecord& op : t.ops) {
    switch (op.kind) {
      case OpRecord::Kind::make_heap:
        out += "H\n";
        break;
      case OpRecord::Kind::insert:
        out += "I " + std::to_string(op.h) + " " + std::to_string(op.item) +
               " " + std::to_string(op.key) + "\n";
        break;
      case OpRecord::Kind::find_min:
        out += "F " + std::to_string(op.h) + "\n";
        break;
      case OpRecord::Kind::delete_min:
        out += "D " + std::to_string(op.h) + "\n";
        break;
      case OpRecord::Kind::meld:
        out += "M " + std::to_string(op.h) + " " + std::to_string(op.h2) + "\n";
        break;
      case OpRecord::Kind::decrease_key:
        out += "K " + std::to_string(op.h) + " " + std::to_string(op.item) +
               " " + std::to_string(op.key) + "\n";
        break;
      case OpRecord::Kind::erase:
        out += "X " + std::to_string(op.h) + " " + std::to_string(op.item) + "\n";
        break;
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_int(std::string_view s, int line, const char* what) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw TraceError(line, false, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

Trace parse_trace(std::string_view text) {
  Trace t;
  TraceModel m;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.rfind("#!", 0) == 0) {
      auto f = split_ws(line.substr(2));
      if (f.size() >= 2 && f[0] == "seed")
        t.seed = parse_int<std::uint64_t>(f[1], line_no, "seed");
      else if (!f.empty() && f[0] == "meta") {
        auto at = line.find("meta ");
        if (at != std::string_view::npos) t.meta = std::string(line.substr(at + 5));
      }
      continue;
    }
    if (line.empty() || line[0] == '#') continue;

    auto f = split_ws(line);
    auto expect = [&](std::size_t n) {
      if (f.size() != n)
        throw TraceError(line_no, false, "wrong field count for op '" + std::string(f[0]) + "'");
    };
    OpRecord op;
    if (f[0] == "H") {
      expect(1);
      op.kind = OpRecord::Kind::make_heap;
    } else if (f[0] == "I") {
      expect(4);
      op.kind = OpRecord::Kind::insert;
      op.h = parse_int<std::int32_t>(f[1], line_no, "heap label");
      op.item = parse_int<std::int32_t>(f[2], line_no, "item label");
      op.key = parse_int<std::int64_t>(f[3], line_no, "key");
    } else if (f[0] == "F") {
      expect(2);
      op.kind = OpRecord::Kind::find_min;
      op.h = parse_int<std::int32_t>(f[1], line_no, "heap label");
    } else if (f[0] == "D") {
      expect(2);
      op.kind = OpRecord::Kind::delete_min;
      op.h = parse_int<std::int32_t>(f[1], line_no, "heap label");
    } else if (f[0] == "M") {
      expect(3);
      op.kind = OpRecord::Kind::meld;
      op.h = parse_int<std::int32_t>(f[1], line_no, "heap label");
      op.h2 = parse_int<std::int32_t>(f[2], line_no, "heap label");
    } else if (f[0] == "K") {
      expect(4);
      op.kind = OpRecord::Kind::decrease_key;
      op.h = parse_int<std::int32_t>(f[1], line_no, "heap label");
      op.item = parse_int<std::int32_t>(f[2], line_no, "item label");
      op.key = parse_int<std::int64_t>(f[3], line_no, "key");
    } else if (f[0] == "X") {
      expect(3);
      op.kind = OpRecord::Kind::erase;
      op.h = parse_int<std::int32_t>(f[1], line_no, "heap label");
      op.item = parse_int<std::int32_t>(f[2], line_no, "item label");
    } else {
      throw TraceError(line_no, false, "unknown op '" + std::string(f[0]) + "'");
    }
    apply_checked(m, op, line_no);
    t.ops.push_back(op);
  }
  return t;
}

void validate_trace(const Trace& t) {
  TraceModel m;
  int i = 0;
  for (const OpRecord& op : t.ops) apply_checked(m, op, ++i);
}

}  // namespace sah
