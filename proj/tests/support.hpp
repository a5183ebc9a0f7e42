#pragma once

#include "sposet/complex.hpp"
#include "sposet/hvec.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace sposet::test {

// Small complexes built through the public gluing API.

inline SimplicialPoset simplex(int vertices) {
  SimplicialPoset p;
  p.attach_facet(GlueSpec(vertices));
  return p;
}

inline GlueSpec glue_along(const Attachment& a, SlotSet s, int slots) {
  GlueSpec g(slots);
  g.identify(s, a.slot_faces[s]);
  for (int i = 0; i < slots; ++i) {
    const SlotSet one = SlotSet{1} << i;
    if (s & one) g.identify(one, a.slot_faces[one]);
  }
  return g;
}

// Two triangles on vertices {0,1,2} and {1,2,3}.
inline SimplicialPoset two_triangles() {
  SimplicialPoset p;
  const Attachment a = p.attach_facet(GlueSpec(3));
  p.attach_facet(glue_along(a, 0b110, 3));
  return p;
}

// Two triangles glued along their whole boundary.
inline SimplicialPoset triangle_sphere() {
  SimplicialPoset p;
  const Attachment a = p.attach_facet(GlueSpec(3));
  GlueSpec g(3);
  for (SlotSet s = 1; s < 0b111; ++s) g.identify(s, a.slot_faces[s]);
  p.attach_facet(g);
  return p;
}

// Three triangles sharing the edge on slots {2,3} of the first.
inline SimplicialPoset triangle_fan3() {
  SimplicialPoset p;
  const Attachment a = p.attach_facet(GlueSpec(3));
  p.attach_facet(glue_along(a, 0b110, 3));
  p.attach_facet(glue_along(a, 0b110, 3));
  return p;
}

inline SimplicialPoset two_tetrahedra() {
  SimplicialPoset p;
  const Attachment a = p.attach_facet(GlueSpec(4));
  p.attach_facet(glue_along(a, 0b1110, 4));
  return p;
}

// Two edges on the same pair of vertices.
inline SimplicialPoset digon() {
  SimplicialPoset p;
  p.add_vertex();
  p.add_vertex();
  const FaceId a = p.vertex_face(0);
  const FaceId b = p.vertex_face(1);
  p.add_face({0, 1}, {b, a});
  p.add_face({0, 1}, {b, a});
  return p;
}

inline SimplicialPoset point() {
  SimplicialPoset p;
  p.add_vertex();
  return p;
}

inline SimplicialPoset two_points() {
  SimplicialPoset p;
  p.add_vertex();
  p.add_vertex();
  return p;
}

// Two d-simplices glued along their whole boundary: a sphere with h = (1,0,...,0,1).
inline SimplicialPoset double_simplex(int vertices) {
  SimplicialPoset p;
  const Attachment a = p.attach_facet(GlueSpec(vertices));
  GlueSpec g(vertices);
  for (SlotSet s = 1; s < g.full(); ++s) g.identify(s, a.slot_faces[s]);
  p.attach_facet(g);
  return p;
}

// Oracle: expand sum_i f_{i-1} x^i (1-x)^{d-i} as a polynomial.
inline HVector h_by_polynomial(const FVector& f) {
  const int d = f.d();
  std::vector<mpz_class> out(static_cast<std::size_t>(d + 1), 0);
  for (int i = 0; i <= d; ++i) {
    std::vector<mpz_class> poly{1};
    for (int k = 0; k < d - i; ++k) {
      std::vector<mpz_class> next(poly.size() + 1, 0);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j] += poly[j];
        next[j + 1] -= poly[j];
      }
      poly = std::move(next);
    }
    for (std::size_t j = 0; j < poly.size(); ++j) out[j + static_cast<std::size_t>(i)] += f[static_cast<std::size_t>(i)] * poly[j];
  }
  return HVector(out);
}

inline HVector hv(std::initializer_list<long> xs) { return HVector(xs); }

inline FVector fv(std::initializer_list<long> xs) { return FVector(xs); }

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace sposet::test
