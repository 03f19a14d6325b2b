#pragma once

#include <json.hpp>

#include "lpakk/fgab.hpp"
#include "lpakk/graph.hpp"
#include "lpakk/int_matrix.hpp"
#include "lpakk/invariants.hpp"
#include "lpakk/sequences.hpp"

namespace lpakk {

inline constexpr const char* kSchemaTag = "lpa-kk/1";
inline constexpr const char* kAssumptionBanner =
    "valid under standing assumptions (KH_0(l)=Z, KH_-1(l)=0)";

/// Integers that fit in 64 bits serialize as JSON numbers, larger ones as
/// decimal strings; both forms are accepted on input.
nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

/// {"rank":1,"torsion":[2,6]}
nlohmann::json group_to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const nlohmann::json& j);

/// Array of rows of decimal strings.
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json invariants_to_json(const KkInvariants& inv);
nlohmann::json sequence_to_json(const ExactSeqReport& r);
nlohmann::json decision_to_json(const DecisionReport& r);

}  // namespace lpakk
