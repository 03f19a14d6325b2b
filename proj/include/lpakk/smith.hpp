#pragma once

#include <cstddef>
#include <vector>

#include "lpakk/fgab.hpp"
#include "lpakk/int_matrix.hpp"

namespace lpakk {

/// Smith normal form P * M * Q = D with unimodular witnesses.
struct SnfDecomposition {
  IntMatrix d;
  IntMatrix p;
  IntMatrix q;
  /// d1 | d2 | ... | dk, all >= 1, k = rank. Unit factors are kept here.
  std::vector<BigInt> invariant_factors;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
};

/// Smith normal form by minimal-pivot row/column elimination followed by a
/// gcd/lcm pass over the diagonal that restores the divisibility chain.
SnfDecomposition snf(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Columns form a Z-basis of ker(m : Z^cols -> Z^rows).
IntMatrix kernel_basis(const IntMatrix& m);

/// Z^rows / m Z^cols in canonical form.
FgAbGroup cokernel(const IntMatrix& m);
/// Cokernel read off an existing decomposition of an rows x cols matrix.
FgAbGroup cokernel(const SnfDecomposition& s);

/// Row-style Hermite normal form U * M = H: H is in row echelon form with
/// positive pivots and entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

HermiteForm hermite(const IntMatrix& m);

/// Cokernel computed without the Smith routine: alternate row and column
/// Hermite reductions until the matrix is diagonal, then canonicalize the
/// diagonal as a sum of cyclic groups.
FgAbGroup cokernel_via_hermite(const IntMatrix& m);

}  // namespace lpakk
