#pragma once

#include "sposet/hvec.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sposet {

using FaceId = std::uint32_t;
using VertexId = std::uint32_t;
// Bit i stands for slot i + 1 of a facet being attached.
using SlotSet = std::uint32_t;

inline constexpr FaceId kEmptyFace = 0;
inline constexpr FaceId kNoFace = std::numeric_limits<FaceId>::max();
inline constexpr int kMaxSlots = 16;

class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GlueError : public ComplexError {
 public:
  using ComplexError::ComplexError;
};

struct Face {
  FaceId id = 0;
  int rank = 0;
  std::vector<VertexId> vertices;  // ascending
  std::vector<FaceId> boundary;    // boundary[i] omits vertices[i]
};

struct Violation {
  FaceId face = 0;
  std::string message;
};

// Which faces of a new facet are existing faces and which are new.
// Slot sets that are neither identified nor marked stay unspecified and
// are filled in by closure or created fresh.
class GlueSpec {
 public:
  explicit GlueSpec(int slots);

  int slots() const { return slots_; }
  SlotSet full() const { return (SlotSet{1} << slots_) - 1; }

  GlueSpec& identify(SlotSet s, FaceId f);
  GlueSpec& mark_new(SlotSet s);

  const std::map<SlotSet, FaceId>& identifications() const { return ident_; }
  const std::set<SlotSet>& new_sets() const { return fresh_; }

 private:
  int slots_;
  std::map<SlotSet, FaceId> ident_;
  std::set<SlotSet> fresh_;
};

struct Attachment {
  FaceId facet = kNoFace;
  std::vector<FaceId> slot_faces;   // indexed by SlotSet
  std::vector<VertexId> slot_vertex;  // slot i -> vertex
};

class SimplicialPoset {
 public:
  SimplicialPoset();

  // Takes face records as read from a file. Only the id layout is checked
  // (ids must be 0..n-1); use validate() for the poset axioms.
  static SimplicialPoset from_faces(int declared_dim, std::vector<Face> faces);

  int dim() const;
  int declared_dim() const { return declared_dim_; }
  std::size_t num_faces() const { return faces_.size(); }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId p) const { return faces_.at(p); }
  int rank(FaceId p) const { return faces_.at(p).rank; }
  const std::vector<VertexId>& vertices(FaceId p) const { return faces_.at(p).vertices; }
  const std::vector<FaceId>& cofaces(FaceId p) const { return cofaces_.at(p); }

  // Face of p obtained by deleting vertex v.
  FaceId boundary(FaceId p, VertexId v) const;
  std::vector<VertexId> vertex_ids() const;
  FaceId vertex_face(VertexId v) const;
  std::size_t num_vertices() const;

  std::vector<FaceId> faces_of_rank(int r) const;
  std::vector<FaceId> facets() const;
  bool is_pure() const;

  // out[m] is the face of p on the vertices selected by position mask m.
  std::vector<FaceId> subfaces(FaceId p) const;
  bool leq(FaceId a, FaceId b) const;

  std::vector<Violation> validate() const;
  FVector f_vector() const;
  // Number of facets covering each codimension-one face.
  std::map<FaceId, int> codim1_incidence() const;

  VertexId add_vertex();
  VertexId add_vertex(VertexId v);
  FaceId add_face(std::vector<VertexId> vertices, std::vector<FaceId> boundary);
  Attachment attach_facet(const GlueSpec& spec);

 private:
  int declared_dim_ = -1;
  std::vector<Face> faces_;
  std::vector<std::vector<FaceId>> cofaces_;
  std::vector<FaceId> vertex_face_;  // indexed by vertex id
  VertexId next_vertex_ = 0;
};

// Subcomplex generated by codimension-one faces lying in exactly one facet.
// Vertex ids are kept; face ids are renumbered.
struct BoundaryComplex {
  SimplicialPoset complex;
  std::vector<FaceId> original;  // new id -> id in the source
};
BoundaryComplex boundary_complex(const SimplicialPoset& p);

// Product with a 1-simplex {1,2}: face (p,1) keeps id p, (p,2) is p joined
// with a new apex.
SimplicialPoset cone(const SimplicialPoset& p);
// p with the cone over its boundary glued on along that boundary.
SimplicialPoset cone_over_boundary(const SimplicialPoset& p);

// Facets whose vertex set equals `vs`, counted over all facets.
std::map<std::vector<VertexId>, int> facets_per_vertex_set(const SimplicialPoset& p);
// Number of facets containing each (d-1)-subset of vertices that lies in some facet.
std::map<std::vector<VertexId>, int> facets_per_ridge_set(const SimplicialPoset& p);

std::string complex_to_json(const SimplicialPoset& p);
SimplicialPoset complex_from_json(const std::string& text);
SimplicialPoset load_complex(const std::string& path);
void save_complex(const SimplicialPoset& p, const std::string& path);

std::string slot_set_string(SlotSet s);

}  // namespace sposet
