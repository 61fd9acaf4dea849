#ifndef EQUI_SERIALIZE_HPP
#define EQUI_SERIALIZE_HPP

#include <json.hpp>

#include "equi/equinet.hpp"
#include "equi/field.hpp"
#include "equi/rep.hpp"

namespace equi {

using Json = nlohmann::json;

/// Fields serialize as arrays of arrays, row-major, point-major.
Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

/// {"dims": [...], "weights": [flat row-major per layer], "biases": [...]}
Json mlp_to_json(const Mlp& net);
Mlp mlp_from_json(const Json& j);

/// Invariant-net config: the mlp keys plus "mode" and, for sortg, "blocks".
Json invariant_net_to_json(const InvariantNet& net);

Json audit_report_to_json(const AppendixCReport& report);

/// Group/action object: {"degree": n, "generators": [[...]],
/// "action": {"points": m, "kind": "natural" | "grid_rotation" |
/// "diagonal_pairs" | "table", "table": optional}}.
/// Points and group elements are indexed from 0.
GAction action_from_json(const Json& j);

}  // namespace equi

#endif
