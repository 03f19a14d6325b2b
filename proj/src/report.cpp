#include "lpakk/report.hpp"

#include "lpakk/error.hpp"

namespace lpakk {

using nlohmann::json;

json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw DomainError("invalid_json", "not a decimal integer: '" + j.get<std::string>() + "'");
    return v;
  }
  throw DomainError("invalid_json", "expected an integer");
}

json group_to_json(const FgAbGroup& g) {
  json torsion = json::array();
  for (const auto& t : g.torsion()) torsion.push_back(bigint_to_json(t));
  return {{"rank", g.rank()}, {"torsion", torsion}};
}

FgAbGroup group_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("invalid_group", "group JSON must be an object");
  long long rank = 0;
  if (j.contains("rank")) {
    if (!j.at("rank").is_number_integer() || j.at("rank").get<long long>() < 0)
      throw DomainError("invalid_group", "rank must be a non-negative integer");
    rank = j.at("rank").get<long long>();
  }
  std::vector<BigInt> torsion;
  if (j.contains("torsion")) {
    for (const auto& t : j.at("torsion")) torsion.push_back(bigint_from_json(t));
  }
  for (const auto& t : torsion)
    if (t < 2) throw DomainError("invalid_group", "torsion orders must be >= 2");
  // Accept any list of cyclic orders; canonicalization fixes the chain.
  return FgAbGroup::from_cyclic_orders(static_cast<std::size_t>(rank), std::move(torsion));
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("invalid_json", "matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j.at(i).is_array() || j.at(i).size() != cols)
      throw DomainError("invalid_json", "matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = bigint_from_json(j.at(i).at(c));
  }
  return m;
}

json invariants_to_json(const KkInvariants& inv) {
  json factors = json::array();
  for (const auto& d : inv.invariant_factors) factors.push_back(bigint_to_json(d));
  return {{"kh0", inv.kh0.to_string()},
          {"kh1_upper", inv.kh1_upper.to_string()},
          {"kh0_group", group_to_json(inv.kh0)},
          {"kh1_upper_group", group_to_json(inv.kh1_upper)},
          {"ker_transpose", group_to_json(inv.ker_transpose)},
          {"ker_plain", group_to_json(inv.ker_plain)},
          {"s", inv.sing_count},
          {"r", inv.free_rank},
          {"factors", factors},
          {"normal_form", structure_form(inv).to_string()},
          {"is_kk_zero", inv.is_kk_zero}};
}

json sequence_to_json(const ExactSeqReport& r) {
  json out = {{"sequence_label", r.sequence_label},
              {"left", r.left.to_string()},
              {"right", r.right.to_string()},
              {"left_group", group_to_json(r.left)},
              {"right_group", group_to_json(r.right)},
              {"middle_rank", r.middle_rank},
              {"middle_order", r.middle_order ? json(r.middle_order->get_str()) : json("infinite")},
              {"middle_exact_group",
               r.middle_exact_group ? json(r.middle_exact_group->to_string()) : json(nullptr)},
              {"consistent", r.consistent},
              {"notes", r.notes}};
  if (r.claimed_middle) out["claimed_middle"] = r.claimed_middle->to_string();
  return out;
}

json decision_to_json(const DecisionReport& r) {
  return {{"equivalent", r.equivalent},
          {"criteria",
           {{"structure_form", r.same_structure_form},
            {"kh0_and_kh1_upper", r.same_kh0_and_kh1},
            {"kh0_and_sing_count", r.same_kh0_and_sing}}},
          {"first", invariants_to_json(r.first)},
          {"second", invariants_to_json(r.second)}};
}

}  // namespace lpakk
