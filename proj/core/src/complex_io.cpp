#include "sposet/complex.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sposet {

using nlohmann::json;

std::string complex_to_json(const SimplicialPoset& p) {
  json faces = json::array();
  for (const auto& f : p.faces()) {
    json bd = json::object();
    for (std::size_t i = 0; i < f.vertices.size(); ++i) bd[std::to_string(f.vertices[i])] = f.boundary[i];
    faces.push_back({{"id", f.id}, {"rank", f.rank}, {"vertices", f.vertices}, {"boundary", bd}});
  }
  json doc = {{"dim", p.dim()}, {"faces", faces}};
  return doc.dump() + "\n";
}

SimplicialPoset complex_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ComplexError(std::string("malformed complex JSON: ") + e.what());
  }
  try {
    std::vector<Face> faces;
    for (const auto& jf : doc.at("faces")) {
      Face f;
      f.id = jf.at("id").get<FaceId>();
      f.rank = jf.at("rank").get<int>();
      f.vertices = jf.at("vertices").get<std::vector<VertexId>>();
      std::sort(f.vertices.begin(), f.vertices.end());
      if (std::adjacent_find(f.vertices.begin(), f.vertices.end()) != f.vertices.end()) {
        throw ComplexError("face " + std::to_string(f.id) + " repeats a vertex");
      }
      const auto& jb = jf.at("boundary");
      f.boundary.assign(f.vertices.size(), kNoFace);
      for (auto it = jb.begin(); it != jb.end(); ++it) {
        const VertexId v = static_cast<VertexId>(std::stoul(it.key()));
        auto pos = std::lower_bound(f.vertices.begin(), f.vertices.end(), v);
        if (pos == f.vertices.end() || *pos != v) {
          throw ComplexError("face " + std::to_string(f.id) + " has boundary entry for non-vertex " + it.key());
        }
        f.boundary[static_cast<std::size_t>(pos - f.vertices.begin())] = it.value().get<FaceId>();
      }
      faces.push_back(std::move(f));
    }
    return SimplicialPoset::from_faces(doc.at("dim").get<int>(), std::move(faces));
  } catch (const json::exception& e) {
    throw ComplexError(std::string("malformed complex JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ComplexError(std::string("malformed complex JSON: ") + e.what());
  }
}

SimplicialPoset load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ComplexError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return complex_from_json(ss.str());
}

void save_complex(const SimplicialPoset& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ComplexError("cannot write " + path);
  out << complex_to_json(p);
}

}  // namespace sposet
