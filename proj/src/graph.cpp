#include "sah/graph.hpp"

#include <queue>
#include <random>
#include <sstream>

#include "sah/heap.hpp"
#include "sah/lazy_heap.hpp"

namespace sah {

Graph parse_dimacs(std::string_view text) {
  Graph g;
  bool have_p = false;
  std::size_t declared_arcs = 0;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (have_p) throw GraphError(lineno, "duplicate problem line");
      std::string kind;
      long long n = 0, m = 0;
      if (!(ls >> kind >> n >> m) || kind != "sp" || n < 0 || m < 0)
        throw GraphError(lineno, "malformed problem line, expected 'p sp n m'");
      g.n_vertices = static_cast<std::uint32_t>(n);
      declared_arcs = static_cast<std::size_t>(m);
      have_p = true;
    } else if (tag == "a") {
      if (!have_p) throw GraphError(lineno, "arc before problem line");
      long long u = 0, v = 0, w = 0;
      if (!(ls >> u >> v >> w)) throw GraphError(lineno, "malformed arc line");
      if (u < 1 || v < 1 || u > g.n_vertices || v > g.n_vertices)
        throw GraphError(lineno, "vertex out of range");
      if (w < 0) throw GraphError(lineno, "negative arc weight");
      g.arcs.push_back(Arc{static_cast<std::uint32_t>(u),
                           static_cast<std::uint32_t>(v), w});
    } else {
      throw GraphError(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_p) throw GraphError(lineno, "missing problem line");
  if (g.arcs.size() != declared_arcs)
    throw GraphError(lineno, "arc count mismatch: declared " +
                                 std::to_string(declared_arcs) + ", found " +
                                 std::to_string(g.arcs.size()));
  return g;
}

namespace {

struct Adjacency {
  std::vector<std::uint32_t> head;  // per vertex, index into flat
  std::vector<std::pair<std::uint32_t, std::int64_t>> flat;
};

Adjacency build_adjacency(const Graph& g) {
  Adjacency a;
  a.head.assign(g.n_vertices + 2, 0);
  for (const Arc& arc : g.arcs) ++a.head[arc.from + 1];
  for (std::size_t i = 1; i < a.head.size(); ++i) a.head[i] += a.head[i - 1];
  a.flat.resize(g.arcs.size());
  std::vector<std::uint32_t> cursor(a.head.begin(), a.head.end() - 1);
  for (const Arc& arc : g.arcs) a.flat[cursor[arc.from]++] = {arc.to, arc.weight};
  return a;
}

template <class H>
DijkstraResult dijkstra_with(const Graph& g, std::uint32_t source, VariantId v) {
  for (const Arc& arc : g.arcs)
    if (arc.weight < 0) throw GraphError(-1, "negative arc weight");
  if (source < 1 || source > g.n_vertices)
    throw GraphError(-1, "source out of range");

  const Adjacency adj = build_adjacency(g);
  DijkstraResult r;
  r.dist.assign(g.n_vertices + 1, kUnreachable);
  std::vector<ItemId> handle(g.n_vertices + 1);
  std::vector<char> settled(g.n_vertices + 1, 0);

  HeapSystem sys;
  H heap(sys);
  std::unordered_map<std::uint64_t, std::uint32_t> vertex_by_item;

  r.dist[source] = 0;
  handle[source] = heap.insert(ExtKey::of(0));
  vertex_by_item.emplace(handle[source].packed(), source);

  while (heap.find_min().has_value()) {
    auto [id, key] = heap.delete_min(v);
    const std::uint32_t u = vertex_by_item.at(id.packed());
    settled[u] = 1;
    const std::int64_t du = key.value();
    for (std::uint32_t i = adj.head[u]; i < adj.head[u + 1]; ++i) {
      const auto [to, w] = adj.flat[i];
      if (settled[to]) continue;
      const std::int64_t cand = du + w;
      if (r.dist[to] == kUnreachable) {
        r.dist[to] = cand;
        handle[to] = heap.insert(ExtKey::of(cand));
        vertex_by_item.emplace(handle[to].packed(), to);
      } else if (cand < r.dist[to]) {
        r.dist[to] = cand;
        heap.decrease_key(handle[to], ExtKey::of(cand));
      }
    }
  }
  r.metrics = sys.metrics();
  return r;
}

}  // namespace

DijkstraResult run_dijkstra(const Graph& g, std::uint32_t source, VariantId v,
                            Mode m) {
  return m == Mode::eager ? dijkstra_with<Heap>(g, source, v)
                          : dijkstra_with<LazyHeap>(g, source, v);
}

std::vector<std::int64_t> reference_dijkstra(const Graph& g,
                                             std::uint32_t source) {
  for (const Arc& arc : g.arcs)
    if (arc.weight < 0) throw GraphError(-1, "negative arc weight");
  if (source < 1 || source > g.n_vertices)
    throw GraphError(-1, "source out of range");

  const Adjacency adj = build_adjacency(g);
  std::vector<std::int64_t> dist(g.n_vertices + 1, kUnreachable);
  using Entry = std::pair<std::int64_t, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  dist[source] = 0;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;  // stale entry
    for (std::uint32_t i = adj.head[u]; i < adj.head[u + 1]; ++i) {
      const auto [to, w] = adj.flat[i];
      if (d + w < dist[to]) {
        dist[to] = d + w;
        pq.push({dist[to], to});
      }
    }
  }
  return dist;
}

Graph random_graph(std::uint32_t n_vertices, std::uint32_t n_arcs,
                   std::int64_t max_weight, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> vx(1, n_vertices);
  std::uniform_int_distribution<std::int64_t> wt(0, max_weight);
  Graph g;
  g.n_vertices = n_vertices;
  g.arcs.reserve(n_arcs);
  for (std::uint32_t i = 0; i < n_arcs; ++i) {
    std::uint32_t u = vx(rng), v = vx(rng);
    while (n_vertices > 1 && v == u) v = vx(rng);
    g.arcs.push_back(Arc{u, v, wt(rng)});
  }
  return g;
}

std::string render_distances(const std::vector<std::int64_t>& dist) {
  std::string out;
  for (std::size_t v = 1; v < dist.size(); ++v) {
    out += dist[v] == kUnreachable ? "INF" : std::to_string(dist[v]);
    out += "\n";
  }
  return out;
}

}  // namespace sah
