#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lpakk/fgab.hpp"
#include "lpakk/graph.hpp"

namespace lpakk {

/// Group invariants of L(E), valid when the ground ring has KH_0 = Z and
/// KH_{-1} = 0.
struct KkInvariants {
  FgAbGroup kh0;            // Coker(I - A_E^t)
  FgAbGroup kh1_upper;      // Coker(I - A_E)
  FgAbGroup ker_transpose;  // ker(I - A_E^t : Z^reg -> Z^E0), free
  FgAbGroup ker_plain;      // ker(I - A_E : Z^E0 -> Z^reg), free
  std::size_t sing_count = 0;
  std::size_t free_rank = 0;
  /// Invariant factors >= 2 of the common torsion subgroup.
  std::vector<BigInt> invariant_factors;
  bool is_kk_zero = false;

  friend bool operator==(const KkInvariants&, const KkInvariants&) = default;
};

/// Normal form L_0^s + L_1^r + L_{d1+1} + ... + L_{dn+1}.
struct StructureForm {
  std::size_t s = 0;
  std::size_t r = 0;
  /// Loop counts d_i + 1 of the Leavitt algebra summands.
  std::vector<BigInt> cycles;

  bool empty() const noexcept { return s == 0 && r == 0 && cycles.empty(); }
  /// "L0^2 + L1 + L3 + L5"; the empty form renders as "0".
  std::string to_string() const;

  friend bool operator==(const StructureForm&, const StructureForm&) = default;
};

FgAbGroup kh0(const Graph& g);
FgAbGroup kh1_upper(const Graph& g);

/// Every field comes from a single Smith decomposition of I - A_E^t; the
/// torsion and rank identities are checked before returning.
KkInvariants invariants(const Graph& g);

StructureForm structure_form(const KkInvariants& inv);
StructureForm structure_form(const Graph& g);

struct DecisionReport {
  bool equivalent = false;
  bool same_structure_form = false;   // criterion (i)
  bool same_kh0_and_kh1 = false;      // criterion (ii)
  bool same_kh0_and_sing = false;     // criterion (iii)
  KkInvariants first;
  KkInvariants second;
};

/// Evaluates the three equivalent criteria for j(L(E)) = j(L(F)). A
/// disagreement between them is an internal defect and throws
/// std::logic_error.
DecisionReport kk_equivalent(const Graph& e, const Graph& f);

}  // namespace lpakk
