#include "sposet/complex.hpp"

#include <algorithm>
#include <bit>

namespace sposet {

GlueSpec::GlueSpec(int slots) : slots_(slots) {
  if (slots < 1 || slots > kMaxSlots) throw GlueError("slot count must be in 1.." + std::to_string(kMaxSlots));
}

GlueSpec& GlueSpec::identify(SlotSet s, FaceId f) {
  if (s > full()) throw GlueError("slot set " + slot_set_string(s) + " out of range");
  auto [it, fresh] = ident_.emplace(s, f);
  if (!fresh && it->second != f) {
    throw GlueError("slot set " + slot_set_string(s) + " identified with both face " + std::to_string(it->second) +
                    " and face " + std::to_string(f));
  }
  return *this;
}

GlueSpec& GlueSpec::mark_new(SlotSet s) {
  if (s > full()) throw GlueError("slot set " + slot_set_string(s) + " out of range");
  fresh_.insert(s);
  return *this;
}

namespace {

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

std::string chain(const std::vector<FaceId>& table, const std::vector<SlotSet>& parent, SlotSet s) {
  std::string out;
  while (true) {
    out += slot_set_string(s) + " = face " + std::to_string(table[s]);
    if (parent[s] == s) return out + " (given)";
    out += " <- ";
    s = parent[s];
  }
}

}  // namespace

Attachment SimplicialPoset::attach_facet(const GlueSpec& spec) {
  const int n = spec.slots();
  const SlotSet full = spec.full();
  const std::size_t size = std::size_t{1} << n;
  std::vector<FaceId> table(size, kNoFace);
  std::vector<SlotSet> parent(size, 0);
  std::vector<char> is_new(size, 0);
  table[0] = kEmptyFace;

  for (SlotSet s : spec.new_sets()) {
    if (s == 0) throw GlueError("the empty slot set cannot be new");
    is_new[s] = 1;
  }
  for (auto [s, f] : spec.identifications()) {
    if (s == full) throw GlueError("the new facet itself cannot be identified with an existing face");
    if (f >= faces_.size()) throw GlueError("slot set " + slot_set_string(s) + " names missing face " + std::to_string(f));
    if (faces_[f].rank != std::popcount(s)) {
      throw GlueError("slot set " + slot_set_string(s) + " has size " + std::to_string(std::popcount(s)) +
                      " but face " + std::to_string(f) + " has rank " + std::to_string(faces_[f].rank));
    }
    if (is_new[s]) throw GlueError("slot set " + slot_set_string(s) + " is both new and identified");
    table[s] = f;
    parent[s] = s;
  }

  std::vector<VertexId> slot_vertex(static_cast<std::size_t>(n), kNoVertex);
  for (int i = 0; i < n; ++i) {
    const FaceId f = table[SlotSet{1} << i];
    if (f != kNoFace) slot_vertex[static_cast<std::size_t>(i)] = faces_[f].vertices[0];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (slot_vertex[i] != kNoVertex && slot_vertex[i] == slot_vertex[j]) {
        throw GlueError("slots " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " both glued to vertex " +
                        std::to_string(slot_vertex[i]));
      }
    }
  }
  for (auto [s, f] : spec.identifications()) {
    std::vector<VertexId> want;
    for (int i = 0; i < n; ++i) {
      if (!(s >> i & 1U)) continue;
      if (slot_vertex[static_cast<std::size_t>(i)] == kNoVertex) {
        throw GlueError("slot " + std::to_string(i + 1) + " of identified set " + slot_set_string(s) +
                        " has no vertex assigned");
      }
      want.push_back(slot_vertex[static_cast<std::size_t>(i)]);
    }
    std::sort(want.begin(), want.end());
    if (want != faces_[f].vertices) {
      throw GlueError("slot set " + slot_set_string(s) + " maps to vertices that do not match face " + std::to_string(f));
    }
  }

  std::vector<SlotSet> order(size);
  for (SlotSet s = 0; s < size; ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(),
                   [](SlotSet a, SlotSet b) { return std::popcount(a) > std::popcount(b); });

  for (SlotSet s : order) {
    if (s == 0 || table[s] == kNoFace) continue;
    const FaceId f = table[s];
    for (int i = 0; i < n; ++i) {
      if (!(s >> i & 1U)) continue;
      const SlotSet t = s & ~(SlotSet{1} << i);
      const FaceId g = boundary(f, slot_vertex[static_cast<std::size_t>(i)]);
      if (table[t] == kNoFace) {
        if (is_new[t]) {
          throw GlueError("slot set " + slot_set_string(t) + " is marked new but is forced to be face " +
                          std::to_string(g) + " by " + chain(table, parent, s));
        }
        table[t] = g;
        parent[t] = s;
      } else if (table[t] != g) {
        throw GlueError("conflict at slot set " + slot_set_string(t) + ": " + chain(table, parent, t) +
                        ", but face " + std::to_string(g) + " via " + chain(table, parent, s));
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    if (slot_vertex[static_cast<std::size_t>(i)] == kNoVertex) {
      const VertexId v = add_vertex();
      slot_vertex[static_cast<std::size_t>(i)] = v;
      table[SlotSet{1} << i] = vertex_face_[v];
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const SlotSet s = *it;
    if (table[s] != kNoFace) continue;
    std::vector<std::pair<VertexId, int>> vs;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1U) vs.emplace_back(slot_vertex[static_cast<std::size_t>(i)], i);
    }
    std::sort(vs.begin(), vs.end());
    std::vector<VertexId> verts;
    std::vector<FaceId> bd;
    for (auto [v, i] : vs) {
      verts.push_back(v);
      bd.push_back(table[s & ~(SlotSet{1} << i)]);
    }
    table[s] = add_face(std::move(verts), std::move(bd));
  }
  return Attachment{table[full], std::move(table), std::move(slot_vertex)};
}

}  // namespace sposet
