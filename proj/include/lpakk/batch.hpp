#pragma once

#include <vector>

#include "lpakk/graph.hpp"
#include "lpakk/invariants.hpp"
#include "lpakk/smith.hpp"

namespace lpakk {

// Bulk evaluation. The parallel variants split the input across OpenMP
// threads and must agree element-for-element with the serial ones, which are
// kept as the reference. An exception thrown for any input is rethrown after
// the parallel region (the one with the smallest index wins).

std::vector<KkInvariants> invariants_serial(const std::vector<Graph>& graphs);
std::vector<KkInvariants> invariants_parallel(const std::vector<Graph>& graphs);

std::vector<SnfDecomposition> snf_serial(const std::vector<IntMatrix>& matrices);
std::vector<SnfDecomposition> snf_parallel(const std::vector<IntMatrix>& matrices);

/// Number of threads the parallel variants will use.
int parallel_threads();

}  // namespace lpakk
