// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HOMAVG_JSON_IO_HPP
#define HOMAVG_JSON_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "homavg/algebra.hpp"
#include "homavg/classify.hpp"
#include "homavg/families.hpp"
#include "homavg/operator.hpp"
#include "homavg/report.hpp"

namespace homavg {

/// Input documents are read as plain json; reports are written with keys in
/// schema order. Schema violations raise InvalidParameter.
using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

/// "rational:<num>[/<den>]", "cyclotomic:<N>" or "qfunc".
ScalarField parse_field(std::string_view shorthand);
/// A shorthand string or {"mode":"rational","q":"1/3"}, {"mode":"cyclotomic","N":4}, {"mode":"qfunc"}.
ScalarField field_from_json(const Json& j);

/// "witt" or "w22" with twist degree k.
HomAlgebra make_algebra(const std::string& name, const ScalarField& field, long k);

/// {"family":"witt","variant":3,"d":2,"beta":"1","nu":"1"} or
/// {"family":"w22","case":"root_of_unity"|"degree_zero","variant":2,"d":3,"nu1":"1",...}.
/// Missing scalars are 0 (beta defaults to 1 for W(2,2) variant 5).
FamilyOperator family_from_json(const Json& j, const ScalarField& field, long verify_window);

struct OperatorSpec {
    HomAlgebra algebra;
    HomogeneousOperator op;
    std::optional<FamilyOperator> family;
};

/// {"algebra":"witt"|"w22","k":0,"degree":d,"profile":{"kind":"family",...}} or
/// {"kind":"table","entries":[{"t":3,"f1":"...","f2":"...","g1":"...","g2":"..."}]}.
/// Family profiles take their fields from the profile object and d from "degree".
OperatorSpec operator_from_json(const Json& j, const ScalarField& field, long verify_window);

/// {"algebra":"witt","field":...,"d":0,"M":3,"values":["0","1"]}.
SearchSpace search_from_json(const Json& j);

/// With deterministic set, timings are written as 0.
OrderedJson report_to_json(const Report& r, bool deterministic);

/// Passes when every solution re-verified, every solution matched a family
/// instance and every unmatched instance carries a ledger explanation.
bool classify_pass(const ProfileSet& ps, const CoverageReport& cov);
OrderedJson classify_to_json(const ProfileSet& ps, const CoverageReport& cov, bool deterministic);

} // namespace homavg

#endif
