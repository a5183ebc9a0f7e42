#include "sposet/properties.hpp"

#include "sposet/conditions.hpp"
#include "sposet/shelling.hpp"

#include <algorithm>

namespace sposet {

namespace {

std::string vertex_list(const std::vector<VertexId>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

template <class Map>
void require_even(const Map& counts, const std::string& property, const std::string& what,
                  std::vector<PropertyViolation>& out) {
  for (const auto& [vs, n] : counts) {
    if (n % 2 != 0) {
      out.push_back({property, what + " " + vertex_list(vs) + " lies in " + std::to_string(n) + " facets"});
      return;
    }
  }
}

}  // namespace

std::vector<VertexId> interior_vertices(const SimplicialPoset& p) {
  const auto bd = boundary_complex(p);
  const auto on = bd.complex.vertex_ids();
  std::vector<VertexId> out;
  for (VertexId v : p.vertex_ids()) {
    if (!std::binary_search(on.begin(), on.end(), v)) out.push_back(v);
  }
  return out;
}

std::vector<PropertyViolation> check_sphere_parity(const SimplicialPoset& sphere) {
  std::vector<PropertyViolation> out;
  const HVector h = f_to_h(sphere.f_vector());
  const int d = h.d();
  bool zero = false;
  for (int i = 1; i < d; ++i) zero = zero || h[static_cast<std::size_t>(i)] == 0;
  if (!zero) return out;
  require_even(facets_per_vertex_set(sphere), "sphere-parity", "vertex set", out);
  return out;
}

std::vector<PropertyViolation> check_ball_properties(const SimplicialPoset& p, const std::vector<FaceId>& order) {
  std::vector<PropertyViolation> out;
  try {
    if (certify_ball(p, order) != Certificate::Ball) out.push_back({"certificate", "closed pseudomanifold"});
  } catch (const std::exception& e) {
    out.push_back({"certificate", e.what()});
    return out;
  }
  const HVector h = f_to_h(p.f_vector());
  const int d = h.d();
  const HVector hs = h_from_shelling(p, order);
  if (!(hs == h)) out.push_back({"h-shelling", "shelling gives (" + hs.to_string() + "), faces give (" + h.to_string() + ")"});

  const ConditionReport nec = check_necessary(h);
  if (const Condition* c = nec.first_failure()) {
    out.push_back({"necessary", "(" + h.to_string() + ") fails " + c->name + ": " + c->detail});
  }
  if (has_decider(d - 1) && decide(d - 1, h).verdict != Verdict::Feasible) {
    out.push_back({"decider", "(" + h.to_string() + ") judged infeasible"});
  }

  const auto bd = boundary_complex(p);
  const HVector bh = f_to_h(bd.complex.f_vector());
  const HVector expect = boundary_h(h);
  if (!(bh == expect)) {
    out.push_back({"boundary-h", "boundary has (" + bh.to_string() + "), expected (" + expect.to_string() + ")"});
  }
  for (auto [g, n] : bd.complex.codim1_incidence()) {
    if (n != 2) {
      out.push_back({"boundary-closed", "boundary face " + std::to_string(g) + " lies in " + std::to_string(n) +
                                            " boundary facets"});
      break;
    }
  }
  if (auto s = sphere_h_valid(bh); !s.valid) out.push_back({"sphere-h", s.reason});
  for (auto& v : check_sphere_parity(bd.complex)) out.push_back(std::move(v));

  bool dh_zero = false;
  for (int k = 1; k < d - 1; ++k) dh_zero = dh_zero || expect[static_cast<std::size_t>(k)] == 0;
  if (dh_zero) require_even(facets_per_ridge_set(p), "ridge-parity", "(d-1)-set", out);

  bool h_zero = false;
  for (int k = 1; k < d; ++k) h_zero = h_zero || h[static_cast<std::size_t>(k)] == 0;
  if (h_zero) {
    const auto inner = interior_vertices(p);
    const auto counts = facets_per_vertex_set(p);
    for (const auto& [vs, n] : counts) {
      const bool has_inner = std::any_of(vs.begin(), vs.end(), [&](VertexId v) {
        return std::binary_search(inner.begin(), inner.end(), v);
      });
      if (has_inner && n % 2 != 0) {
        out.push_back({"interior-parity", "vertex set " + vertex_list(vs) + " with an interior vertex lies in " +
                                              std::to_string(n) + " facets"});
        break;
      }
    }
  }
  return out;
}

}  // namespace sposet
