#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpakk/fgab.hpp"
#include "lpakk/graph.hpp"
#include "lpakk/invariants.hpp"

namespace lpakk {

/// Coefficient groups KH_n(R) for the finitely many degrees a query needs.
/// Asking for an absent degree is an error; nothing is defaulted.
class CoefficientData {
 public:
  CoefficientData() = default;
  CoefficientData(std::string label, std::map<long, FgAbGroup> groups)
      : label_(std::move(label)), groups_(std::move(groups)) {}

  /// KH_0 = Z, KH_1 = 0, KH_-1 = 0: a field (or any ring) with trivial K_1.
  static CoefficientData trivial_k1();
  /// KH_0 = Z, KH_1 = Z/2, KH_-1 = 0: the integers.
  static CoefficientData integers();
  /// Named profile: "trivial-k1" or "integers".
  static CoefficientData profile(const std::string& name);
  /// {"0": {"rank":1,"torsion":[]}, "1": {...}}
  static CoefficientData from_json(const nlohmann::json& j, std::string label = "file");

  const FgAbGroup& at(long degree) const;
  bool has(long degree) const { return groups_.count(degree) != 0; }
  const std::string& label() const noexcept { return label_; }
  const std::map<long, FgAbGroup>& groups() const noexcept { return groups_; }

 private:
  std::string label_;
  std::map<long, FgAbGroup> groups_;
};

/// A short exact sequence 0 -> left -> middle -> right -> 0 known through its
/// ends. The middle group is pinned down only when the sequence must split or
/// one end vanishes; otherwise only its rank and (if finite) order are known.
struct ExactSeqReport {
  std::string sequence_label;
  FgAbGroup left;
  FgAbGroup right;
  std::size_t middle_rank = 0;
  /// nullopt when the middle group is infinite.
  std::optional<BigInt> middle_order;
  std::optional<FgAbGroup> middle_exact_group;
  /// Set by checks that hold an independently computed middle group.
  std::optional<FgAbGroup> claimed_middle;
  bool consistent = true;
  std::vector<std::string> notes;
};

/// Fills the rank/order/splitting bookkeeping from the two ends.
ExactSeqReport make_sequence_report(std::string label, FgAbGroup left, FgAbGroup right);

struct FiltrationSlices {
  FgAbGroup slice0;  // Hom(KH0(L(E)), KH0(R))
  FgAbGroup slice1;  // Hom(ker(I - A_E^t), KH1(R))
  FgAbGroup slice2;  // Ext(KH0(L(E)), KH1(R))
};

FiltrationSlices filtration_slices(const Graph& g, const FgAbGroup& kh0_r, const FgAbGroup& kh1_r);
FiltrationSlices filtration_slices(const KkInvariants& inv, const FgAbGroup& kh0_r,
                                   const FgAbGroup& kh1_r);

/// 0 -> Ext(KH0, KH_{n+1}R) -> kk_n(L(E),R) -> Hom(KH0, KH_nR) + Hom(ker(I-A^t), KH_{n+1}R) -> 0
ExactSeqReport uct(const Graph& g, const CoefficientData& coeffs, long n);
ExactSeqReport uct(const KkInvariants& inv, const CoefficientData& coeffs, long n);

/// 0 -> KH^1 (x) KH_{n+1}R + ker(I-A) (x) KH_nR -> kk_n(L(E),R) -> Tor(KH^1, KH_nR) -> 0
ExactSeqReport kunneth(const Graph& g, const CoefficientData& coeffs, long n);
ExactSeqReport kunneth(const KkInvariants& inv, const CoefficientData& coeffs, long n);

/// kk_n(L(E), R) read off the normal form: G^s + (G + H)^r plus, for each
/// invariant factor d, an extension of G[d] by H/d, where G = KH_nR and
/// H = KH_{n+1}R. Left end collects the split summands and every H/d, right
/// end every G[d].
ExactSeqReport structure_direct(const Graph& g, const CoefficientData& coeffs, long n);
ExactSeqReport structure_direct(const KkInvariants& inv, const CoefficientData& coeffs, long n);

/// ker(I-A) (x) G -> Hom(KH0, G) -> Tor(KH^1, G): checks rank/order of the
/// actual Hom group against the ends. `consistent` records the outcome.
ExactSeqReport homk0_check(const Graph& g, const FgAbGroup& coeff);
ExactSeqReport homk0_check(const KkInvariants& inv, const FgAbGroup& coeff);

/// KH^1 (x) KH1(R) against the first filtration piece, which sits between
/// Ext(KH0, KH1R) and Hom(ker(I-A^t), KH1R). Compared by rank and order.
bool kk1_matches_tensor(const KkInvariants& inv, const FgAbGroup& kh1_r);

/// KH_0 and KH_1 of L(F) from the ground ring's KH_0 = Z and KH_1.
struct LeavittKGroups {
  FgAbGroup kh0;
  FgAbGroup kh1;
};

/// KH_1(L(F)) is an extension of the free group ker(I - A_F^t) by
/// KH_1(ground) (x) KH_0(L(F)); the free quotient makes it split.
LeavittKGroups leavitt_k_groups(const Graph& f, const CoefficientData& base);

/// kk(L(E), L(F)) through the Kunneth sequence with R = L(F).
ExactSeqReport kk_pair(const Graph& e, const Graph& f, const CoefficientData& base);

}  // namespace lpakk
