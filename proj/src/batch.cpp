#include "lpakk/batch.hpp"

#include <exception>
#include <optional>

#include <omp.h>

namespace lpakk {

namespace {

template <class In, class Out, class Fn>
std::vector<Out> map_serial(const std::vector<In>& in, Fn fn) {
  std::vector<Out> out;
  out.reserve(in.size());
  for (const auto& x : in) out.push_back(fn(x));
  return out;
}

template <class In, class Out, class Fn>
std::vector<Out> map_parallel(const std::vector<In>& in, Fn fn) {
  const auto n = static_cast<long>(in.size());
  std::vector<std::optional<Out>> slots(in.size());
  std::vector<std::exception_ptr> errors(in.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      slots[i] = fn(in[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Out> out;
  out.reserve(in.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

KkInvariants invariants_of(const Graph& g) { return invariants(g); }
SnfDecomposition snf_of(const IntMatrix& m) { return snf(m); }

}  // namespace

std::vector<KkInvariants> invariants_serial(const std::vector<Graph>& graphs) {
  return map_serial<Graph, KkInvariants>(graphs, invariants_of);
}

std::vector<KkInvariants> invariants_parallel(const std::vector<Graph>& graphs) {
  return map_parallel<Graph, KkInvariants>(graphs, invariants_of);
}

std::vector<SnfDecomposition> snf_serial(const std::vector<IntMatrix>& matrices) {
  return map_serial<IntMatrix, SnfDecomposition>(matrices, snf_of);
}

std::vector<SnfDecomposition> snf_parallel(const std::vector<IntMatrix>& matrices) {
  return map_parallel<IntMatrix, SnfDecomposition>(matrices, snf_of);
}

int parallel_threads() { return omp_get_max_threads(); }

}  // namespace lpakk
