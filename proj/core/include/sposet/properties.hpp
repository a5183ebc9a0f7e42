#pragma once

#include "sposet/complex.hpp"

#include <string>
#include <vector>

namespace sposet {

struct PropertyViolation {
  std::string property;
  std::string detail;
};

// Checks a shelled ball against everything that must hold for balls:
// certificate, h from shelling vs faces, necessary conditions, exact deciders,
// boundary h-vector and sphere conditions, and the parity lemmas.
std::vector<PropertyViolation> check_ball_properties(const SimplicialPoset& p, const std::vector<FaceId>& order);

// Every d-subset of vertices carries an even number of facets whenever
// some interior h_i of the sphere vanishes.
std::vector<PropertyViolation> check_sphere_parity(const SimplicialPoset& sphere);

// Vertices of p not on its boundary.
std::vector<VertexId> interior_vertices(const SimplicialPoset& p);

}  // namespace sposet
