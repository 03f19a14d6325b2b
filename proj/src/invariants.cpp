#include "lpakk/invariants.hpp"

#include <sstream>
#include <stdexcept>

#include "lpakk/smith.hpp"

namespace lpakk {

std::string StructureForm::to_string() const {
  if (empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (s > 0) {
    sep();
    os << "L0";
    if (s > 1) os << '^' << s;
  }
  if (r > 0) {
    sep();
    os << "L1";
    if (r > 1) os << '^' << r;
  }
  for (const auto& c : cycles) {
    sep();
    os << 'L' << c.get_str();
  }
  return os.str();
}

FgAbGroup kh0(const Graph& g) { return cokernel(transpose_boundary(g)); }

FgAbGroup kh1_upper(const Graph& g) { return cokernel(transpose(transpose_boundary(g))); }

KkInvariants invariants(const Graph& g) {
  const IntMatrix m = transpose_boundary(g);  // E0 x reg
  const std::size_t n_vertices = m.rows();
  const std::size_t n_regular = m.cols();
  const SnfDecomposition s = snf(m);
  const std::size_t k = s.rank();

  KkInvariants inv;
  // D is the Smith form of M and D^t that of M^t, so both cokernels share
  // the invariant factors and differ only in free rank.
  inv.kh0 = FgAbGroup::from_cyclic_orders(n_vertices - k, s.invariant_factors);
  inv.kh1_upper = FgAbGroup::from_cyclic_orders(n_regular - k, s.invariant_factors);
  inv.ker_transpose = FgAbGroup::free(n_regular - k);
  inv.ker_plain = FgAbGroup::free(n_vertices - k);
  inv.sing_count = classify_vertices(g).singular().size();
  inv.free_rank = inv.kh1_upper.rank();
  inv.invariant_factors = inv.kh0.torsion();
  inv.is_kk_zero = structure_form(inv).empty();

  if (torsion_part(inv.kh0) != torsion_part(inv.kh1_upper))
    throw std::logic_error("invariants: torsion subgroups of KH0 and KH^1 differ");
  if (inv.kh0.rank() != inv.kh1_upper.rank() + inv.sing_count)
    throw std::logic_error("invariants: rank(KH0) - rank(KH^1) differs from #sing");
  return inv;
}

StructureForm structure_form(const KkInvariants& inv) {
  StructureForm f;
  f.s = inv.sing_count;
  f.r = inv.free_rank;
  for (const auto& d : inv.invariant_factors) f.cycles.push_back(d + 1);
  return f;
}

StructureForm structure_form(const Graph& g) { return structure_form(invariants(g)); }

DecisionReport kk_equivalent(const Graph& e, const Graph& f) {
  DecisionReport r;
  r.first = invariants(e);
  r.second = invariants(f);
  r.same_structure_form = structure_form(r.first) == structure_form(r.second);
  r.same_kh0_and_kh1 = r.first.kh0 == r.second.kh0 && r.first.kh1_upper == r.second.kh1_upper;
  r.same_kh0_and_sing = r.first.kh0 == r.second.kh0 && r.first.sing_count == r.second.sing_count;
  if (r.same_structure_form != r.same_kh0_and_kh1 || r.same_kh0_and_kh1 != r.same_kh0_and_sing)
    throw std::logic_error("kk_equivalent: equivalence criteria disagree");
  r.equivalent = r.same_structure_form;
  return r;
}

}  // namespace lpakk
