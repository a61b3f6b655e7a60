#ifndef MOMENTKIT_IO_HPP
#define MOMENTKIT_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "momentkit/gkm.hpp"
#include "momentkit/polytope.hpp"

namespace momentkit {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings ("p" when q = 1), vectors as arrays of those.
Json to_json(const Rational& q);
Json to_json(const RationalVec& v);
Rational rational_from_json(const Json& j);
RationalVec vec_from_json(const Json& j);

/// {"dim": n, "halfspaces": [{"normal": [...], "offset": "..."}, ...]}
Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

/// {"dim": n, "vertices": [{"label", "position"}], "edges": [[p, q]], "weights": [[...]]}
Json graph_to_json(const MomentGraph& g);
MomentGraph graph_from_json(const Json& j);

/// {"<label>": {"<e1,...,en>": "<coeff>", ...}, ...}; labels absent from
/// the object get the zero polynomial.
Json class_to_json(const MomentGraph& g, const GKMClass& c);
GKMClass class_from_json(const MomentGraph& g, const Json& j);

/// "simplex:n:scale", "cube:n:scale" or "hirzebruch:a".
bool is_builder_spec(std::string_view spec);
Polytope build_from_spec(std::string_view spec);

Json read_json_file(const std::string& path);

/// Builder specs of the standard test catalog: simplex(n, s), cube(n, s)
/// for n <= 3, s <= 3 and hirzebruch(a) for a <= 3.
std::vector<std::string> catalog_specs();

}  // namespace momentkit

#endif
