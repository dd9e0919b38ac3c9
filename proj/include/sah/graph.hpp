#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sah/replay.hpp"

namespace sah {

struct Arc {
  std::uint32_t from = 0;  // 1-based
  std::uint32_t to = 0;
  std::int64_t weight = 0;
};

struct Graph {
  std::uint32_t n_vertices = 0;
  std::vector<Arc> arcs;
};

class GraphError : public std::runtime_error {
 public:
  GraphError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// DIMACS shortest-path format: "c" comments, one "p sp n m" line,
/// m "a u v w" arc lines.  Errors carry 1-based line numbers.
Graph parse_dimacs(std::string_view text);

inline constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

struct DijkstraResult {
  std::vector<std::int64_t> dist;  // 1-based; dist[0] unused; kUnreachable if not reached
  Metrics metrics;
};

/// Dijkstra on the chosen heap: each vertex is inserted when first
/// reached and decrease-keyed on every improving relaxation.
DijkstraResult run_dijkstra(const Graph& g, std::uint32_t source, VariantId v,
                            Mode m);

/// Shares no code with the heaps: binary std::priority_queue with lazy
/// deletion.
std::vector<std::int64_t> reference_dijkstra(const Graph& g, std::uint32_t source);

/// Seeded random digraph: m arcs drawn uniformly over ordered pairs of
/// distinct vertices, weights uniform in [0, max_weight].
Graph random_graph(std::uint32_t n_vertices, std::uint32_t n_arcs,
                   std::int64_t max_weight, std::uint64_t seed);

/// One line per vertex: the distance, or "INF" for unreachable.
std::string render_distances(const std::vector<std::int64_t>& dist);

}  // namespace sah
