#pragma once

#include "cf/formula.hpp"
#include "cf/group.hpp"
#include "cf/morphism.hpp"

#include <json.hpp>

namespace cf {

/// {"source": name, "target": name, "images": [target labels], "kind": ...}
nlohmann::json map_to_json(const GroupMap &map);
/// Reads images by label and re-classifies; a "kind" field, when present,
/// must agree with the classification. Throws SyntaxError, UnknownLabel,
/// LengthMismatch.
GroupMap map_from_json(const nlohmann::json &doc, const FiniteGroup &source,
                       const FiniteGroup &target);

/// {"group": name, "x": label, "y": label, "a": label, "b": label}
nlohmann::json assignment_to_json(const RoleAssignment &assignment);
RoleAssignment assignment_from_json(const nlohmann::json &doc,
                                    const FiniteGroup &group,
                                    Distinctness policy = Distinctness::required);

/// [{"step": k, "side": "F_x(a):F_y(b)", "tuple": [labels]}, ...]; "tuple"
/// only appears when the chain was evaluated and `group` is given.
nlohmann::json chain_to_json(const Chain &chain, const FiniteGroup *group = nullptr);

} // namespace cf
