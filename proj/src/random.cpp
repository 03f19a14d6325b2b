#include "lpakk/random.hpp"

#include <string>
#include <vector>

namespace lpakk {

Graph random_graph(Rng& rng, const RandomGraphOptions& opts) {
  std::uniform_int_distribution<std::size_t> nv(opts.min_vertices, opts.max_vertices);
  std::uniform_int_distribution<std::uint64_t> mult(1, opts.max_multiplicity);
  std::bernoulli_distribution has_edge(opts.edge_density);
  std::bernoulli_distribution infinite(opts.infinite_probability);

  const std::size_t n = nv(rng);
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<EdgeRecord> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (has_edge(rng)) edges.push_back(EdgeRecord{vertices[i], vertices[j], mult(rng), {}});
  std::vector<VertexId> inf;
  for (const auto& v : vertices)
    if (infinite(rng)) inf.push_back(v);
  return Graph(std::move(vertices), std::move(edges), std::move(inf));
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> entry(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

FgAbGroup random_group(Rng& rng, std::size_t max_rank, std::size_t max_cyclic, long max_order) {
  std::uniform_int_distribution<std::size_t> rank(0, max_rank);
  std::uniform_int_distribution<std::size_t> count(0, max_cyclic);
  std::uniform_int_distribution<long> order(2, max_order);
  const std::size_t r = rank(rng);
  std::vector<BigInt> orders;
  for (std::size_t k = count(rng); k > 0; --k) orders.emplace_back(order(rng));
  return FgAbGroup::from_cyclic_orders(r, std::move(orders));
}

}  // namespace lpakk
