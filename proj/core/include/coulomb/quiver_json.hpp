#pragma once

#include <string>
#include <string_view>

#include "coulomb/quiver.hpp"

namespace coulomb {

/// Parses {"nodes":[{"id","kind","group":{"family","n"}}],"edges":[["a","b"]]}.
/// Every error message starts with the JSON location, e.g. "edges[2]: ...".
Quiver quiver_from_json(std::string_view text);

/// Pretty-printed JSON; parsing it back gives an identical quiver.
std::string quiver_to_json(const Quiver& q);

}  // namespace coulomb
