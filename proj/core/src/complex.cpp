#include "sposet/complex.hpp"

#include <algorithm>
#include <bit>

namespace sposet {

namespace {

FaceId safe_boundary(const std::vector<Face>& faces, FaceId p, VertexId v) {
  if (p >= faces.size()) return kNoFace;
  const auto& f = faces[p];
  auto it = std::lower_bound(f.vertices.begin(), f.vertices.end(), v);
  if (it == f.vertices.end() || *it != v) return kNoFace;
  auto idx = static_cast<std::size_t>(it - f.vertices.begin());
  if (idx >= f.boundary.size()) return kNoFace;
  return f.boundary[idx];
}

std::string vertex_list(const std::vector<VertexId>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

}  // namespace

std::string slot_set_string(SlotSet s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (s >> i & 1U) {
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

SimplicialPoset::SimplicialPoset() {
  faces_.push_back(Face{kEmptyFace, 0, {}, {}});
  cofaces_.emplace_back();
}

SimplicialPoset SimplicialPoset::from_faces(int declared_dim, std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].id != i) {
      throw ComplexError("face ids must be 0..n-1 without gaps or repeats (found id " +
                         std::to_string(faces[i].id) + " at position " + std::to_string(i) + ")");
    }
  }
  if (faces.empty()) throw ComplexError("complex has no faces");
  SimplicialPoset p;
  p.declared_dim_ = declared_dim;
  p.faces_ = std::move(faces);
  p.cofaces_.assign(p.faces_.size(), {});
  p.vertex_face_.clear();
  p.next_vertex_ = 0;
  for (const auto& f : p.faces_) {
    for (FaceId q : f.boundary) {
      if (q < p.faces_.size()) p.cofaces_[q].push_back(f.id);
    }
    for (VertexId v : f.vertices) p.next_vertex_ = std::max(p.next_vertex_, v + 1);
    if (f.rank == 1 && f.vertices.size() == 1) {
      VertexId v = f.vertices[0];
      if (p.vertex_face_.size() <= v) p.vertex_face_.resize(v + 1, kNoFace);
      if (p.vertex_face_[v] == kNoFace) p.vertex_face_[v] = f.id;
    }
  }
  return p;
}

int SimplicialPoset::dim() const {
  int r = 0;
  for (const auto& f : faces_) r = std::max(r, f.rank);
  return r - 1;
}

FaceId SimplicialPoset::boundary(FaceId p, VertexId v) const {
  FaceId q = safe_boundary(faces_, p, v);
  if (q == kNoFace) {
    throw ComplexError("vertex " + std::to_string(v) + " is not a vertex of face " + std::to_string(p));
  }
  return q;
}

std::vector<VertexId> SimplicialPoset::vertex_ids() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_face_.size(); ++v) {
    if (vertex_face_[v] != kNoFace) out.push_back(v);
  }
  return out;
}

FaceId SimplicialPoset::vertex_face(VertexId v) const {
  if (v >= vertex_face_.size() || vertex_face_[v] == kNoFace) {
    throw ComplexError("no vertex " + std::to_string(v));
  }
  return vertex_face_[v];
}

std::size_t SimplicialPoset::num_vertices() const {
  return static_cast<std::size_t>(
      std::count_if(vertex_face_.begin(), vertex_face_.end(), [](FaceId f) { return f != kNoFace; }));
}

std::vector<FaceId> SimplicialPoset::faces_of_rank(int r) const {
  std::vector<FaceId> out;
  for (const auto& f : faces_) {
    if (f.rank == r) out.push_back(f.id);
  }
  return out;
}

std::vector<FaceId> SimplicialPoset::facets() const { return faces_of_rank(dim() + 1); }

bool SimplicialPoset::is_pure() const {
  const int top = dim() + 1;
  for (const auto& f : faces_) {
    if (f.rank < top && cofaces_[f.id].empty()) return false;
  }
  return true;
}

std::vector<FaceId> SimplicialPoset::subfaces(FaceId p) const {
  const auto& f = faces_.at(p);
  const std::size_t n = f.vertices.size();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<FaceId> below(std::size_t{1} << n, kNoFace);
  below[full] = p;
  for (std::uint32_t m = full; m-- > 0;) {
    const int i = std::countr_one(m);
    below[m] = boundary(below[m | (std::uint32_t{1} << i)], f.vertices[static_cast<std::size_t>(i)]);
  }
  return below;
}

bool SimplicialPoset::leq(FaceId a, FaceId b) const {
  const auto& va = vertices(a);
  const auto& vb = vertices(b);
  std::uint32_t mask = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < vb.size() && j < va.size(); ++i) {
    if (vb[i] == va[j]) {
      mask |= std::uint32_t{1} << i;
      ++j;
    }
  }
  if (j != va.size()) return false;
  FaceId cur = b;
  for (std::size_t i = 0; i < vb.size(); ++i) {
    if (!(mask >> i & 1U)) cur = boundary(cur, vb[i]);
  }
  return cur == a;
}

std::vector<Violation> SimplicialPoset::validate() const {
  std::vector<Violation> out;
  auto report = [&](FaceId p, std::string msg) { out.push_back({p, std::move(msg)}); };
  const Face& bottom = faces_[0];
  if (bottom.rank != 0 || !bottom.vertices.empty() || !bottom.boundary.empty()) {
    report(0, "face 0 must be the empty face (rank 0, no vertices)");
  }
  std::map<VertexId, FaceId> vertex_owner;
  for (const auto& f : faces_) {
    if (f.rank < 0) {
      report(f.id, "negative rank");
      continue;
    }
    if (f.id != 0 && f.rank == 0) report(f.id, "second rank-0 face; only face 0 may be empty");
    if (static_cast<std::size_t>(f.rank) != f.vertices.size()) {
      report(f.id, "rank " + std::to_string(f.rank) + " but " + std::to_string(f.vertices.size()) + " vertices");
    }
    if (!std::is_sorted(f.vertices.begin(), f.vertices.end()) ||
        std::adjacent_find(f.vertices.begin(), f.vertices.end()) != f.vertices.end()) {
      report(f.id, "vertex list not strictly ascending");
    }
    if (f.boundary.size() != f.vertices.size()) {
      report(f.id, "boundary map does not have one entry per vertex");
      continue;
    }
    if (f.rank == 1 && f.vertices.size() == 1) {
      auto [it, fresh] = vertex_owner.emplace(f.vertices[0], f.id);
      if (!fresh) {
        report(f.id, "vertex " + std::to_string(f.vertices[0]) + " already carried by face " +
                         std::to_string(it->second));
      }
    }
    bool ok = true;
    for (std::size_t i = 0; i < f.vertices.size(); ++i) {
      const FaceId q = f.boundary[i];
      const VertexId v = f.vertices[i];
      if (q == kNoFace) {
        report(f.id, "no boundary face given for vertex " + std::to_string(v));
        ok = false;
        continue;
      }
      if (q >= faces_.size()) {
        report(f.id, "boundary for vertex " + std::to_string(v) + " references missing face " + std::to_string(q));
        ok = false;
        continue;
      }
      std::vector<VertexId> expect;
      for (VertexId w : f.vertices) {
        if (w != v) expect.push_back(w);
      }
      if (faces_[q].vertices != expect) {
        report(f.id, "deleting vertex " + std::to_string(v) + " gives face " + std::to_string(q) +
                         " on " + vertex_list(faces_[q].vertices) + ", expected " + vertex_list(expect));
        ok = false;
      }
      if (faces_[q].rank != f.rank - 1) {
        report(f.id, "boundary face " + std::to_string(q) + " has rank " + std::to_string(faces_[q].rank));
        ok = false;
      }
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < f.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < f.vertices.size(); ++j) {
        const FaceId a = safe_boundary(faces_, f.boundary[i], f.vertices[j]);
        const FaceId b = safe_boundary(faces_, f.boundary[j], f.vertices[i]);
        if (a != b || a == kNoFace) {
          report(f.id, "diamond fails for vertices " + std::to_string(f.vertices[i]) + "," +
                           std::to_string(f.vertices[j]) + ": faces " +
                           (a == kNoFace ? std::string("?") : std::to_string(a)) + " and " +
                           (b == kNoFace ? std::string("?") : std::to_string(b)));
        }
      }
    }
  }
  const int actual = dim();
  if (declared_dim_ != actual) {
    report(0, "declared dim " + std::to_string(declared_dim_) + " but largest face has dim " + std::to_string(actual));
  }
  return out;
}

FVector SimplicialPoset::f_vector() const {
  const int d = dim() + 1;
  std::vector<Integer> f(static_cast<std::size_t>(d + 1), 0);
  for (const auto& face : faces_) f[static_cast<std::size_t>(face.rank)] += 1;
  return FVector(std::move(f));
}

std::map<FaceId, int> SimplicialPoset::codim1_incidence() const {
  std::map<FaceId, int> out;
  const int d = dim() + 1;
  if (d < 1) return out;
  for (const auto& f : faces_) {
    if (f.rank != d - 1) continue;
    int n = 0;
    for (FaceId c : cofaces_[f.id]) {
      if (faces_[c].rank == d) ++n;
    }
    out[f.id] = n;
  }
  return out;
}

VertexId SimplicialPoset::add_vertex() { return add_vertex(next_vertex_); }

VertexId SimplicialPoset::add_vertex(VertexId v) {
  if (v < vertex_face_.size() && vertex_face_[v] != kNoFace) {
    throw ComplexError("vertex " + std::to_string(v) + " already exists");
  }
  const auto id = static_cast<FaceId>(faces_.size());
  faces_.push_back(Face{id, 1, {v}, {kEmptyFace}});
  cofaces_.emplace_back();
  cofaces_[kEmptyFace].push_back(id);
  if (vertex_face_.size() <= v) vertex_face_.resize(v + 1, kNoFace);
  vertex_face_[v] = id;
  next_vertex_ = std::max(next_vertex_, v + 1);
  declared_dim_ = std::max(declared_dim_, 0);
  return v;
}

FaceId SimplicialPoset::add_face(std::vector<VertexId> vertices, std::vector<FaceId> bd) {
  if (vertices.size() < 2) throw ComplexError("add_face needs at least two vertices; use add_vertex");
  if (bd.size() != vertices.size()) throw ComplexError("add_face: boundary size mismatch");
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (vertices[i] >= vertices[i + 1]) throw ComplexError("add_face: vertices not strictly ascending");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const FaceId q = bd[i];
    if (q >= faces_.size()) throw ComplexError("add_face: missing boundary face " + std::to_string(q));
    const auto& qv = faces_[q].vertices;
    bool match = qv.size() + 1 == vertices.size();
    for (std::size_t j = 0, k = 0; match && j < vertices.size(); ++j) {
      if (j == i) continue;
      match = qv[k++] == vertices[j];
    }
    if (!match) {
      throw ComplexError("add_face: boundary face " + std::to_string(q) + " has the wrong vertex set");
    }
  }
  const auto id = static_cast<FaceId>(faces_.size());
  const int rank = static_cast<int>(vertices.size());
  for (FaceId q : bd) cofaces_[q].push_back(id);
  faces_.push_back(Face{id, rank, std::move(vertices), std::move(bd)});
  cofaces_.emplace_back();
  declared_dim_ = std::max(declared_dim_, rank - 1);
  return id;
}

namespace {

std::vector<FaceId> ids_by_rank(const SimplicialPoset& p, const std::vector<char>& keep) {
  std::vector<FaceId> ids;
  for (FaceId i = 0; i < p.num_faces(); ++i) {
    if (keep[i]) ids.push_back(i);
  }
  std::stable_sort(ids.begin(), ids.end(), [&](FaceId a, FaceId b) { return p.rank(a) < p.rank(b); });
  return ids;
}

// Copies the faces flagged in `keep` into `out`; returns old id -> new id.
std::vector<FaceId> copy_faces(const SimplicialPoset& p, const std::vector<char>& keep, SimplicialPoset& out) {
  std::vector<FaceId> map(p.num_faces(), kNoFace);
  map[kEmptyFace] = kEmptyFace;
  for (FaceId q : ids_by_rank(p, keep)) {
    const Face& f = p.face(q);
    if (f.rank == 0) continue;
    if (f.rank == 1) {
      out.add_vertex(f.vertices[0]);
      map[q] = out.vertex_face(f.vertices[0]);
      continue;
    }
    std::vector<FaceId> bd;
    for (FaceId b : f.boundary) bd.push_back(map[b]);
    map[q] = out.add_face(f.vertices, std::move(bd));
  }
  return map;
}

VertexId fresh_vertex_id(const SimplicialPoset& p) {
  auto vs = p.vertex_ids();
  return vs.empty() ? 0 : vs.back() + 1;
}

// Adds the faces q * apex for every q flagged in `base`.
void add_apex_faces(const SimplicialPoset& p, const std::vector<char>& base, const std::vector<FaceId>& low,
                    SimplicialPoset& out) {
  const VertexId apex = fresh_vertex_id(p);
  std::vector<FaceId> high(p.num_faces(), kNoFace);
  for (FaceId q : ids_by_rank(p, base)) {
    const Face& f = p.face(q);
    if (f.rank == 0) {
      out.add_vertex(apex);
      high[q] = out.vertex_face(apex);
      continue;
    }
    std::vector<VertexId> vs = f.vertices;
    vs.push_back(apex);
    std::vector<FaceId> bd;
    for (FaceId b : f.boundary) bd.push_back(high[b]);
    bd.push_back(low[q]);
    high[q] = out.add_face(std::move(vs), std::move(bd));
  }
}

}  // namespace

BoundaryComplex boundary_complex(const SimplicialPoset& p) {
  std::vector<char> keep(p.num_faces(), 0);
  keep[kEmptyFace] = 1;
  for (auto [g, n] : p.codim1_incidence()) {
    if (n >= 3) {
      throw ComplexError("not a pseudomanifold: face " + std::to_string(g) + " lies in " + std::to_string(n) +
                         " facets");
    }
    if (n != 1) continue;
    for (FaceId q : p.subfaces(g)) keep[q] = 1;
  }
  BoundaryComplex out;
  auto map = copy_faces(p, keep, out.complex);
  out.original.assign(out.complex.num_faces(), kNoFace);
  for (FaceId q = 0; q < map.size(); ++q) {
    if (map[q] != kNoFace) out.original[map[q]] = q;
  }
  return out;
}

SimplicialPoset cone(const SimplicialPoset& p) {
  std::vector<char> all(p.num_faces(), 1);
  SimplicialPoset out;
  auto low = copy_faces(p, all, out);
  add_apex_faces(p, all, low, out);
  return out;
}

SimplicialPoset cone_over_boundary(const SimplicialPoset& p) {
  auto bd = boundary_complex(p);
  if (bd.original.size() <= 1) throw ComplexError("cone_over_boundary: empty boundary");
  std::vector<char> all(p.num_faces(), 1);
  std::vector<char> base(p.num_faces(), 0);
  for (FaceId q : bd.original) base[q] = 1;
  SimplicialPoset out;
  auto low = copy_faces(p, all, out);
  add_apex_faces(p, base, low, out);
  return out;
}

std::map<std::vector<VertexId>, int> facets_per_vertex_set(const SimplicialPoset& p) {
  std::map<std::vector<VertexId>, int> out;
  for (FaceId f : p.facets()) ++out[p.vertices(f)];
  return out;
}

std::map<std::vector<VertexId>, int> facets_per_ridge_set(const SimplicialPoset& p) {
  std::map<std::vector<VertexId>, int> out;
  for (FaceId f : p.facets()) {
    const auto& vs = p.vertices(f);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      std::vector<VertexId> r;
      for (std::size_t j = 0; j < vs.size(); ++j) {
        if (j != i) r.push_back(vs[j]);
      }
      ++out[r];
    }
  }
  return out;
}

}  // namespace sposet
