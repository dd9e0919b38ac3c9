#include "sah/replay.hpp"

#include <variant>

#include "sah/heap.hpp"
#include "sah/lazy_heap.hpp"

namespace sah {

std::string_view mode_name(Mode m) {
  return m == Mode::eager ? "eager" : "lazy";
}

bool parse_mode(std::string_view s, Mode& out) {
  if (s == "eager") out = Mode::eager;
  else if (s == "lazy") out = Mode::lazy;
  else return false;
  return true;
}

ReplayResult replay(const Trace& t, VariantId v, Mode m) {
  HeapSystem sys;
  using AnyHeap = std::variant<Heap, LazyHeap>;
  std::vector<AnyHeap> heaps;
  ReplayResult r;

  auto make = [&]() -> AnyHeap {
    if (m == Mode::eager) return AnyHeap(std::in_place_type<Heap>, sys);
    return AnyHeap(std::in_place_type<LazyHeap>, sys);
  };
  auto track = [&](ItemId id) {
    r.label_of.emplace(id.packed(), static_cast<std::uint32_t>(r.items.size()));
    r.items.push_back(id);
  };

  for (std::uint32_t i = 0; i < t.ops.size(); ++i) {
    const OpRecord& op = t.ops[i];
    switch (op.kind) {
      case OpRecord::Kind::make_heap:
        heaps.push_back(make());
        break;
      case OpRecord::Kind::insert:
        std::visit([&](auto& h) { track(h.insert(ExtKey::of(op.key))); },
                   heaps[op.h]);
        break;
      case OpRecord::Kind::find_min: {
        std::visit(
            [&](auto& h) {
              auto id = h.find_min();
              if (id)
                r.outputs.push_back(OutputRec{i, true, sys.key(*id).value()});
              else
                r.outputs.push_back(OutputRec{i, false, 0});
            },
            heaps[op.h]);
        break;
      }
      case OpRecord::Kind::delete_min:
        std::visit(
            [&](auto& h) {
              auto [id, key] = h.delete_min(v);
              r.outputs.push_back(OutputRec{i, true, key.value()});
              r.deleted.push_back(r.label(id));
            },
            heaps[op.h]);
        break;
      case OpRecord::Kind::meld: {
        using std::get;
        if (m == Mode::eager)
          heaps[op.h] = Heap::meld(std::move(get<Heap>(heaps[op.h])),
                                   std::move(get<Heap>(heaps[op.h2])));
        else
          heaps[op.h] = LazyHeap::meld(std::move(get<LazyHeap>(heaps[op.h])),
                                       std::move(get<LazyHeap>(heaps[op.h2])));
        break;
      }
      case OpRecord::Kind::decrease_key:
        std::visit(
            [&](auto& h) { h.decrease_key(r.items[op.item], ExtKey::of(op.key)); },
            heaps[op.h]);
        break;
      case OpRecord::Kind::erase:
        std::visit([&](auto& h) { h.erase(r.items[op.item], v); }, heaps[op.h]);
        r.deleted.push_back(static_cast<std::uint32_t>(op.item));
        break;
    }
  }
  r.metrics = sys.metrics();
  r.link_log = sys.take_link_log();
  r.cut_log = sys.take_cut_log();
  return r;
}

std::string serialize_result(const ReplayResult& r) {
  std::string out;
  out += "links " + std::to_string(r.metrics.links) + " comparisons " +
         std::to_string(r.metrics.comparisons) + " cuts " +
         std::to_string(r.metrics.cuts) + "\n";
  for (const OutputRec& o : r.outputs) {
    out += "O " + std::to_string(o.op_index) + " " +
           (o.has_key ? std::to_string(o.key) : std::string("none")) + "\n";
  }
  for (const LinkRecord& l : r.link_log) {
    out += "L " + std::to_string(l.time) + " w" + std::to_string(r.label(l.winner)) +
           " l" + std::to_string(r.label(l.loser)) + " d" +
           std::to_string(static_cast<int>(l.dir)) + " o" +
           std::to_string(static_cast<int>(l.op)) + " p" +
           std::to_string(l.pass) + " s" + std::to_string(l.op_serial) + "\n";
  }
  for (const CutRecord& c : r.cut_log) {
    out += "C " + std::to_string(c.time) + " " + std::to_string(c.link_index) +
           " " + (c.cause == CutCause::decrease_key ? "k" : "d") + "\n";
  }
  return out;
}

}  // namespace sah
