#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpakk/int_matrix.hpp"

namespace lpakk {

using VertexId = std::string;

/// All parallel edges src -> dst. `names` is either empty (names are
/// generated) or holds exactly `mult` edge identifiers.
struct EdgeRecord {
  VertexId src;
  VertexId dst;
  std::uint64_t mult = 1;
  std::vector<std::string> names;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// One individual edge after expanding multiplicities; endpoints are vertex
/// indices in the graph's vertex order.
struct Edge {
  std::string name;
  std::size_t src;
  std::size_t dst;
};

/// Directed multigraph with finitely many vertices. Vertices flagged as
/// infinite emitters may list finitely many witness edges; those edges count
/// for incidence (sources, path algebra letters) but never for matrix rows.
///
/// The vertex order given at construction indexes every matrix built from the
/// graph. Records with the same (src, dst) pair are merged, summing
/// multiplicities. Unnamed edges are called e1, e2, ... in expanded edge
/// order, skipping identifiers already taken by vertices or named edges.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<VertexId> vertices, std::vector<EdgeRecord> edges,
        std::vector<VertexId> infinite_emitters = {});

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<EdgeRecord>& edge_records() const noexcept { return records_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> index_of(std::string_view vertex) const;
  std::optional<std::size_t> edge_index(std::string_view name) const;

  bool is_infinite_emitter(std::size_t v) const { return infinite_[v]; }
  std::vector<VertexId> infinite_emitters() const;

  /// Listed outgoing edges of v (witnesses included), in edge order.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.records_ == b.records_ && a.infinite_ == b.infinite_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<EdgeRecord> records_;
  std::vector<bool> infinite_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
};

enum class VertexKind { regular, sink, infinite_emitter };

struct VertexClass {
  std::vector<VertexKind> kind;
  std::vector<bool> source;

  std::vector<std::size_t> regular() const;
  std::vector<std::size_t> singular() const;
  std::vector<std::size_t> sinks() const;
  std::vector<std::size_t> infinite_emitters() const;
  std::vector<std::size_t> sources() const;
};

VertexClass classify_vertices(const Graph& g);

/// A'_E: rows are the non-infinite-emitter vertices, columns all vertices,
/// entry (v, w) = number of edges v -> w.
IntMatrix adjacency_matrix(const Graph& g);

struct ReducedMatrices {
  /// reg(E) x E^0 edge counts.
  IntMatrix a;
  /// E^0 x reg(E) identity with singular columns removed.
  IntMatrix i;
  std::vector<std::size_t> regular;
};

ReducedMatrices reduced_matrix(const Graph& g);

/// I - A_E^t : Z^reg(E) -> Z^E0.
IntMatrix transpose_boundary(const Graph& g);

/// B'_E over the index set E^1 followed by sink(E) (edge order, then vertex
/// order). Rejects graphs with infinite emitters.
IntMatrix out_split_matrix(const Graph& g);
/// Labels of the out-split index set: edge names, then sink vertex ids.
std::vector<std::string> out_split_labels(const Graph& g);
/// The maximal out-split graph, with vertices named by out_split_labels.
Graph out_split(const Graph& g);

/// Graph whose adjacency matrix is `m` (square, non-negative). Vertex names
/// default to x0, x1, ...
Graph from_adjacency(const IntMatrix& m, std::vector<VertexId> names = {});

/// Attaches two new vertices w1, w2 with edges v <-> w1, w1 <-> w2 and a loop
/// at each of w1 and w2.
Graph cuntz_splice(const Graph& g, std::string_view v);

/// One vertex "v" carrying n loops.
Graph rose(std::size_t n);

}  // namespace lpakk
