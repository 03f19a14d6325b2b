#pragma once

#include <cstdint>
#include <random>

#include "lpakk/fgab.hpp"
#include "lpakk/graph.hpp"
#include "lpakk/int_matrix.hpp"

namespace lpakk {

using Rng = std::mt19937_64;

struct RandomGraphOptions {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  /// Upper bound on the multiplicity of each (src, dst) pair.
  std::uint64_t max_multiplicity = 3;
  /// Probability that a given ordered pair carries any edge.
  double edge_density = 0.4;
  /// Probability that a vertex is flagged as an infinite emitter.
  double infinite_probability = 0.0;
};

/// Vertices are named v0, v1, ...; edge names are generated.
Graph random_graph(Rng& rng, const RandomGraphOptions& opts = {});

/// rows x cols with entries uniform in [lo, hi].
IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);

/// Z^rank plus up to max_cyclic cyclic summands of order in [2, max_order].
FgAbGroup random_group(Rng& rng, std::size_t max_rank, std::size_t max_cyclic, long max_order);

}  // namespace lpakk
