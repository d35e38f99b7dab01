#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "cubulate/bbf.hpp"
#include "cubulate/cube_complex.hpp"
#include "cubulate/graph.hpp"
#include "cubulate/hhs.hpp"
#include "cubulate/rational.hpp"

// JSON forms of the core types. Every loader throws Error(malformed_input)
// with a path-like message on bad documents.
namespace cubulate::io {

using Json = nlohmann::json;

// Integers are written as numbers, other values as [num, den]. Loaders also
// accept decimal or "p/q" strings and JSON floats.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j);

// {"n", "edges": [[u, v], ...], "labels"?}
Json to_json(const UnitGraph& g);
UnitGraph graph_from_json(const Json& j);

// {"points", "walls": [[[left...], [right...]], ...]}
Json to_json(const Wallspace& w);
Wallspace wallspace_from_json(const Json& j);

// {"graph", "edge_classes", "dimension"}; reloading recomputes the
// hyperplanes and rejects documents whose classes disagree.
Json to_json(const CubeSkeleton& c);
CubeSkeleton skeleton_from_json(const Json& j);

// {"pieces", "proj": {"i,j": [...]}, "theta"}
Json to_json(const ProjectionSystem& s);
ProjectionSystem projection_system_from_json(const Json& j);

// {"system", "K", "L", "vertices": [[piece, local]...], "edges": [[a, b, w]...]}
// Reloading rebuilds from (system, K, L) and checks the edge list matches.
Json to_json(const QuasiTreeSpace& q);
QuasiTreeSpace quasitree_from_json(const Json& j);

// {"ambient", "E", "domains": [{"id", "space", "pi", "rel", "rho", "rho_down"?}]}
Json to_json(const HHSInstance& h);
HHSInstance instance_from_json(const Json& j);

Json to_json(const Colouring& c);
Colouring colouring_from_json(const Json& j);

std::string dump(const Json& j);
Json parse(const std::string& text);
Json read_json_file(const std::filesystem::path& path);
// Writes to a sibling temporary and renames over the target.
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace cubulate::io
