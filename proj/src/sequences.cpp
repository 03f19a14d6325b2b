#include "lpakk/sequences.hpp"

#include "lpakk/error.hpp"
#include "lpakk/report.hpp"

namespace lpakk {

CoefficientData CoefficientData::trivial_k1() {
  return CoefficientData("trivial-k1",
                         {{-1, FgAbGroup{}}, {0, FgAbGroup::free(1)}, {1, FgAbGroup{}}});
}

CoefficientData CoefficientData::integers() {
  return CoefficientData(
      "integers", {{-1, FgAbGroup{}}, {0, FgAbGroup::free(1)}, {1, FgAbGroup::cyclic(2)}});
}

CoefficientData CoefficientData::profile(const std::string& name) {
  if (name == "trivial-k1") return trivial_k1();
  if (name == "integers") return integers();
  throw DomainError("unknown_profile", "unknown coefficient profile '" + name + "'");
}

CoefficientData CoefficientData::from_json(const nlohmann::json& j, std::string label) {
  if (!j.is_object()) throw DomainError("invalid_coefficients", "coefficient JSON must be an object");
  std::map<long, FgAbGroup> groups;
  for (const auto& [key, value] : j.items()) {
    long degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stol(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw DomainError("invalid_coefficients", "degree key '" + key + "' is not an integer");
    }
    groups.emplace(degree, group_from_json(value));
  }
  return CoefficientData(std::move(label), std::move(groups));
}

const FgAbGroup& CoefficientData::at(long degree) const {
  auto it = groups_.find(degree);
  if (it == groups_.end())
    throw DomainError("missing_degree",
                      "coefficient data '" + label_ + "' has no group in degree " + std::to_string(degree));
  return it->second;
}

ExactSeqReport make_sequence_report(std::string label, FgAbGroup left, FgAbGroup right) {
  ExactSeqReport r;
  r.sequence_label = std::move(label);
  r.middle_rank = left.rank() + right.rank();
  if (left.is_finite() && right.is_finite()) r.middle_order = *left.order() * *right.order();
  if (left.is_trivial())
    r.middle_exact_group = right;
  else if (right.is_trivial())
    r.middle_exact_group = left;
  else if (right.is_free())
    r.middle_exact_group = direct_sum(left, right);
  r.left = std::move(left);
  r.right = std::move(right);
  return r;
}

FiltrationSlices filtration_slices(const KkInvariants& inv, const FgAbGroup& kh0_r,
                                   const FgAbGroup& kh1_r) {
  return {hom(inv.kh0, kh0_r), hom(inv.ker_transpose, kh1_r), ext1(inv.kh0, kh1_r)};
}

FiltrationSlices filtration_slices(const Graph& g, const FgAbGroup& kh0_r, const FgAbGroup& kh1_r) {
  return filtration_slices(invariants(g), kh0_r, kh1_r);
}

ExactSeqReport uct(const KkInvariants& inv, const CoefficientData& coeffs, long n) {
  const FgAbGroup& gn = coeffs.at(n);
  const FgAbGroup& gn1 = coeffs.at(n + 1);
  return make_sequence_report("UCT", ext1(inv.kh0, gn1),
                              direct_sum(hom(inv.kh0, gn), hom(inv.ker_transpose, gn1)));
}

ExactSeqReport uct(const Graph& g, const CoefficientData& coeffs, long n) {
  return uct(invariants(g), coeffs, n);
}

ExactSeqReport kunneth(const KkInvariants& inv, const CoefficientData& coeffs, long n) {
  const FgAbGroup& gn = coeffs.at(n);
  const FgAbGroup& gn1 = coeffs.at(n + 1);
  return make_sequence_report("Kunneth",
                              direct_sum(tensor(inv.kh1_upper, gn1), tensor(inv.ker_plain, gn)),
                              tor1(inv.kh1_upper, gn));
}

ExactSeqReport kunneth(const Graph& g, const CoefficientData& coeffs, long n) {
  return kunneth(invariants(g), coeffs, n);
}

ExactSeqReport structure_direct(const KkInvariants& inv, const CoefficientData& coeffs, long n) {
  const FgAbGroup& gn = coeffs.at(n);
  const FgAbGroup& gn1 = coeffs.at(n + 1);
  // kk_n(L_0, R) = G, kk_n(L_1, R) = G + H, and L_{d+1} sits in the triangle
  // l --d--> l -> L_{d+1}, giving 0 -> H/d -> kk_n(L_{d+1}, R) -> G[d] -> 0.
  std::vector<FgAbGroup> left{power(gn, inv.sing_count), power(direct_sum(gn, gn1), inv.free_rank)};
  std::vector<FgAbGroup> right;
  for (const auto& d : inv.invariant_factors) {
    left.push_back(mod_d(gn1, d));
    right.push_back(d_torsion(gn, d));
  }
  return make_sequence_report("StructureDirect", direct_sum(left), direct_sum(right));
}

ExactSeqReport structure_direct(const Graph& g, const CoefficientData& coeffs, long n) {
  return structure_direct(invariants(g), coeffs, n);
}

ExactSeqReport homk0_check(const KkInvariants& inv, const FgAbGroup& coeff) {
  ExactSeqReport r =
      make_sequence_report("HomK0", tensor(inv.ker_plain, coeff), tor1(inv.kh1_upper, coeff));
  r.claimed_middle = hom(inv.kh0, coeff);
  r.consistent = r.claimed_middle->rank() == r.middle_rank &&
                 r.claimed_middle->order() == r.middle_order;
  if (r.middle_exact_group && *r.middle_exact_group != *r.claimed_middle) r.consistent = false;
  return r;
}

ExactSeqReport homk0_check(const Graph& g, const FgAbGroup& coeff) {
  return homk0_check(invariants(g), coeff);
}

bool kk1_matches_tensor(const KkInvariants& inv, const FgAbGroup& kh1_r) {
  const FgAbGroup t = tensor(inv.kh1_upper, kh1_r);
  const ExactSeqReport piece =
      make_sequence_report("KK1", ext1(inv.kh0, kh1_r), hom(inv.ker_transpose, kh1_r));
  return t.rank() == piece.middle_rank && t.order() == piece.middle_order;
}

LeavittKGroups leavitt_k_groups(const Graph& f, const CoefficientData& base) {
  if (base.at(0) != FgAbGroup::free(1))
    throw DomainError("invalid_coefficients", "ground ring must have KH_0 = Z");
  const KkInvariants inv = invariants(f);
  return {inv.kh0, direct_sum(tensor(base.at(1), inv.kh0), inv.ker_transpose)};
}

ExactSeqReport kk_pair(const Graph& e, const Graph& f, const CoefficientData& base) {
  const LeavittKGroups target = leavitt_k_groups(f, base);
  const CoefficientData coeffs("KH(L(F))", {{0, target.kh0}, {1, target.kh1}});
  ExactSeqReport r = kunneth(invariants(e), coeffs, 0);
  r.notes.push_back("KH_0(L(F)) = " + target.kh0.to_string());
  r.notes.push_back("KH_1(L(F)) = " + target.kh1.to_string() +
                    " (extension with free quotient ker(I - A_F^t), split)");
  return r;
}

}  // namespace lpakk
