#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "outer/factor_complex.hpp"
#include "outer/lipschitz.hpp"
#include "outer/marked_graph.hpp"
#include "outer/stallings.hpp"
#include "outer/traintrack.hpp"
#include "outer/whitehead.hpp"

namespace outer {

using Json = nlohmann::json;

/// "p/q" string.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// {rank, vertices, edges: [{id, from, to, length}], marking: {loops: {x1: [+-id]}, labels: {id: word}}, basepoint}.
/// Edge ids start at 1 so that a signed id names a direction. "subdivided": true admits degree-2 vertices.
Json to_json(const MarkedMetricGraph& g);
/// Throws Error on malformed input or when the graph fails validation.
MarkedMetricGraph graph_from_json(const Json& j);
MarkedMetricGraph read_graph(const std::string& path);

/// {vertices, edges: [{from, to, label}], basepoint?}
Json to_json(const SubgroupCoreGraph& h, const FreeGroup& group);

/// {rank, code, complexity, generators}
Json to_json(const FactorHandle& f);
FactorHandle factor_from_json(const Json& j, int ambient_rank);

/// {rank, bound, capped, vertices, adjacency}
Json to_json(const FactorBall& ball);
/// Adjacency is recomputed from the vertices.
FactorBall ball_from_json(const Json& j);

/// Per-edge images (signed ids with piece bounds), slopes and tension, plus sigma.
Json to_json(const GraphMap& f);
Json to_json(const EdgePath& p);

std::string to_dot(const MarkedMetricGraph& g);
/// Directions sharing a gate get the same color at their tail.
std::string to_dot(const TrainTrackStructure& tt);
std::string to_dot(const WhiteheadGraph& g);

/// Whole file as text; throws Error when it cannot be read.
std::string read_file(const std::string& path);

}  // namespace outer
