#include "lpakk/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "lpakk/error.hpp"

namespace lpakk {

Graph::Graph(std::vector<VertexId> vertices, std::vector<EdgeRecord> edges,
             std::vector<VertexId> infinite_emitters)
    : vertices_(std::move(vertices)) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].empty()) throw DomainError("invalid_graph", "empty vertex id");
    if (!index.emplace(vertices_[i], i).second)
      throw DomainError("duplicate_vertex", "duplicate vertex id '" + vertices_[i] + "'");
  }
  auto lookup = [&](const VertexId& v) {
    auto it = index.find(v);
    if (it == index.end()) throw DomainError("unknown_vertex", "unknown vertex '" + v + "'");
    return it->second;
  };

  infinite_.assign(vertices_.size(), false);
  for (const auto& v : infinite_emitters) infinite_[lookup(v)] = true;

  // Merge records sharing (src, dst); first occurrence fixes the position.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints;
  std::vector<std::vector<std::optional<std::string>>> pending;
  for (auto& rec : edges) {
    if (rec.mult == 0) throw DomainError("invalid_graph", "edge multiplicity must be >= 1");
    if (!rec.names.empty() && rec.names.size() != rec.mult)
      throw DomainError("invalid_graph", "edge " + rec.src + " -> " + rec.dst +
                                             ": names must list exactly mult identifiers");
    const auto key = std::make_pair(lookup(rec.src), lookup(rec.dst));
    auto [it, fresh] = slot.emplace(key, endpoints.size());
    if (fresh) {
      endpoints.push_back(key);
      pending.emplace_back();
    }
    auto& names = pending[it->second];
    for (std::uint64_t k = 0; k < rec.mult; ++k) {
      if (rec.names.empty())
        names.emplace_back(std::nullopt);
      else
        names.emplace_back(rec.names[k]);
    }
  }

  std::set<std::string, std::less<>> taken(vertices_.begin(), vertices_.end());
  for (const auto& names : pending)
    for (const auto& n : names) {
      if (!n) continue;
      if (n->empty()) throw DomainError("invalid_graph", "empty edge name");
      if (!taken.insert(*n).second)
        throw DomainError("duplicate_identifier", "identifier '" + *n + "' used twice");
    }

  std::size_t counter = 1;
  out_.assign(vertices_.size(), {});
  for (std::size_t r = 0; r < endpoints.size(); ++r) {
    const auto [s, d] = endpoints[r];
    EdgeRecord rec{vertices_[s], vertices_[d], pending[r].size(), {}};
    for (auto& n : pending[r]) {
      if (!n) {
        std::string candidate;
        do {
          candidate = "e" + std::to_string(counter++);
        } while (taken.count(candidate));
        taken.insert(candidate);
        n = candidate;
      }
      rec.names.push_back(*n);
      out_[s].push_back(edges_.size());
      edges_.push_back(Edge{*n, s, d});
    }
    records_.push_back(std::move(rec));
  }
}

std::optional<std::size_t> Graph::index_of(std::string_view vertex) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), vertex);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Graph::edge_index(std::string_view name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].name == name) return i;
  return std::nullopt;
}

std::vector<VertexId> Graph::infinite_emitters() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (infinite_[i]) out.push_back(vertices_[i]);
  return out;
}

namespace {

std::vector<std::size_t> collect(const VertexClass& c, auto pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.kind.size(); ++i)
    if (pred(i)) out.push_back(i);
  return out;
}

}  // namespace

std::vector<std::size_t> VertexClass::regular() const {
  return collect(*this, [&](std::size_t i) { return kind[i] == VertexKind::regular; });
}
std::vector<std::size_t> VertexClass::singular() const {
  return collect(*this, [&](std::size_t i) { return kind[i] != VertexKind::regular; });
}
std::vector<std::size_t> VertexClass::sinks() const {
  return collect(*this, [&](std::size_t i) { return kind[i] == VertexKind::sink; });
}
std::vector<std::size_t> VertexClass::infinite_emitters() const {
  return collect(*this, [&](std::size_t i) { return kind[i] == VertexKind::infinite_emitter; });
}
std::vector<std::size_t> VertexClass::sources() const {
  return collect(*this, [&](std::size_t i) { return source[i]; });
}

VertexClass classify_vertices(const Graph& g) {
  const std::size_t n = g.vertex_count();
  VertexClass c{std::vector<VertexKind>(n, VertexKind::regular), std::vector<bool>(n, true)};
  for (std::size_t v = 0; v < n; ++v) {
    if (g.is_infinite_emitter(v))
      c.kind[v] = VertexKind::infinite_emitter;
    else if (g.out_edges(v).empty())
      c.kind[v] = VertexKind::sink;
  }
  for (const auto& e : g.edges()) c.source[e.dst] = false;
  return c;
}

IntMatrix adjacency_matrix(const Graph& g) {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> row_of(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.is_infinite_emitter(v)) continue;
    row_of[v] = rows.size();
    rows.push_back(v);
  }
  IntMatrix a(rows.size(), g.vertex_count());
  for (const auto& e : g.edges()) {
    if (g.is_infinite_emitter(e.src)) continue;
    a(row_of[e.src], e.dst) += 1;
  }
  return a;
}

ReducedMatrices reduced_matrix(const Graph& g) {
  ReducedMatrices out;
  out.regular = classify_vertices(g).regular();
  std::vector<std::size_t> row_of(g.vertex_count(), 0);
  for (std::size_t k = 0; k < out.regular.size(); ++k) row_of[out.regular[k]] = k;
  out.a = IntMatrix(out.regular.size(), g.vertex_count());
  for (const auto& e : g.edges()) {
    if (g.is_infinite_emitter(e.src)) continue;
    // Every finite emitter with an edge is regular.
    out.a(row_of[e.src], e.dst) += 1;
  }
  out.i = identity_embedding(g.vertex_count(), out.regular);
  return out;
}

IntMatrix transpose_boundary(const Graph& g) {
  const ReducedMatrices m = reduced_matrix(g);
  return m.i - transpose(m.a);
}

namespace {

void require_finite(const Graph& g, const char* what) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.is_infinite_emitter(v))
      throw DomainError("infinite_emitter", std::string(what) + " requires a graph without infinite emitters");
}

}  // namespace

IntMatrix out_split_matrix(const Graph& g) {
  require_finite(g, "out_split_matrix");
  const auto& edges = g.edges();
  const auto sinks = classify_vertices(g).sinks();
  const std::size_t n = edges.size() + sinks.size();
  IntMatrix b(n, n);
  for (std::size_t x = 0; x < edges.size(); ++x) {
    for (std::size_t y = 0; y < edges.size(); ++y)
      if (edges[x].dst == edges[y].src) b(x, y) = 1;
    for (std::size_t k = 0; k < sinks.size(); ++k)
      if (edges[x].dst == sinks[k]) b(x, edges.size() + k) = 1;
  }
  return b;
}

std::vector<std::string> out_split_labels(const Graph& g) {
  std::vector<std::string> labels;
  for (const auto& e : g.edges()) labels.push_back(e.name);
  for (std::size_t v : classify_vertices(g).sinks()) labels.push_back(g.vertices()[v]);
  return labels;
}

Graph out_split(const Graph& g) { return from_adjacency(out_split_matrix(g), out_split_labels(g)); }

Graph from_adjacency(const IntMatrix& m, std::vector<VertexId> names) {
  if (m.rows() != m.cols()) throw DomainError("dimension_mismatch", "adjacency matrix must be square");
  if (names.empty()) {
    for (std::size_t i = 0; i < m.rows(); ++i) names.push_back("x" + std::to_string(i));
  }
  if (names.size() != m.rows())
    throw DomainError("dimension_mismatch", "vertex name count differs from matrix size");
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigInt& c = m(i, j);
      if (sgn(c) < 0) throw DomainError("invalid_graph", "adjacency entries must be non-negative");
      if (sgn(c) == 0) continue;
      if (!c.fits_ulong_p()) throw DomainError("invalid_graph", "edge multiplicity too large");
      edges.push_back(EdgeRecord{names[i], names[j], c.get_ui(), {}});
    }
  return Graph(std::move(names), std::move(edges));
}

Graph cuntz_splice(const Graph& g, std::string_view v) {
  if (!g.index_of(v)) throw DomainError("unknown_vertex", "unknown vertex '" + std::string(v) + "'");
  std::set<std::string, std::less<>> taken(g.vertices().begin(), g.vertices().end());
  for (const auto& e : g.edges()) taken.insert(e.name);
  auto fresh = [&](std::string base) {
    while (taken.count(base)) base += '\'';
    taken.insert(base);
    return base;
  };
  const std::string w1 = fresh("w1");
  const std::string w2 = fresh("w2");

  std::vector<VertexId> vertices = g.vertices();
  vertices.push_back(w1);
  vertices.push_back(w2);
  std::vector<EdgeRecord> edges = g.edge_records();
  const std::string src(v);
  const std::pair<std::string, std::string> added[] = {
      {src, w1}, {w1, src}, {w1, w1}, {w1, w2}, {w2, w1}, {w2, w2}};
  for (const auto& [a, b] : added) {
    std::string name = fresh(a + "_" + b);
    edges.push_back(EdgeRecord{a, b, 1, {name}});
  }
  return Graph(std::move(vertices), std::move(edges), g.infinite_emitters());
}

Graph rose(std::size_t n) {
  std::vector<EdgeRecord> edges;
  if (n > 0) edges.push_back(EdgeRecord{"v", "v", n, {}});
  return Graph({"v"}, std::move(edges));
}

}  // namespace lpakk
