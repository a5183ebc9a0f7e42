#include "sposet/shelling.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace sposet {

using nlohmann::json;

ShellingReport verify_shelling(const SimplicialPoset& p, const std::vector<FaceId>& order) {
  const int d = p.dim() + 1;
  auto facets = p.facets();
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != facets) throw ShellingError(-1, "order is not a permutation of the facets");

  ShellingReport report;
  std::vector<char> present(p.num_faces(), 0);
  const std::uint32_t full = (std::uint32_t{1} << d) - 1;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const FaceId facet = order[j];
    const auto sub = p.subfaces(facet);
    const auto& vs = p.vertices(facet);
    std::uint32_t sigma = 0;
    for (int i = 0; i < d; ++i) {
      if (present[sub[full & ~(std::uint32_t{1} << i)]]) sigma |= std::uint32_t{1} << i;
    }
    if (j > 0) {
      if (sigma == 0) {
        throw ShellingError(static_cast<int>(j), "step " + std::to_string(j) + " (facet " + std::to_string(facet) +
                                                     ") shares no codimension-one face with earlier facets");
      }
      for (std::uint32_t m = 1; m < full; ++m) {
        if (present[sub[m]] && (m & sigma) == sigma) {
          throw ShellingError(static_cast<int>(j),
                              "step " + std::to_string(j) + " (facet " + std::to_string(facet) + "): face " +
                                  std::to_string(sub[m]) +
                                  " is shared with earlier facets but lies in no shared codimension-one face");
        }
      }
    }
    ShellingStep step{facet, {}};
    for (int i = 0; i < d; ++i) {
      if (sigma >> i & 1U) step.sigma.push_back(vs[static_cast<std::size_t>(i)]);
    }
    report.steps.push_back(std::move(step));
    for (FaceId q : sub) present[q] = 1;
  }
  return report;
}

HVector h_from_shelling(const SimplicialPoset& p, const ShellingReport& report) {
  const int d = p.dim() + 1;
  std::vector<Integer> h(static_cast<std::size_t>(d + 1), 0);
  for (const auto& s : report.steps) h[s.sigma.size()] += 1;
  return HVector(std::move(h));
}

HVector h_from_shelling(const SimplicialPoset& p, const std::vector<FaceId>& order) {
  return h_from_shelling(p, verify_shelling(p, order));
}

std::string to_string(Certificate c) {
  return c == Certificate::Ball ? "ball" : "closed-pseudomanifold";
}

Certificate certify_ball(const SimplicialPoset& p, const std::vector<FaceId>& order) {
  auto violations = p.validate();
  if (!violations.empty()) {
    throw ComplexError("invalid complex: face " + std::to_string(violations[0].face) + ": " + violations[0].message);
  }
  if (!p.is_pure()) throw ComplexError("complex is not pure");
  verify_shelling(p, order);
  bool some_boundary = false;
  for (auto [g, n] : p.codim1_incidence()) {
    if (n >= 3) {
      throw ComplexError("not a pseudomanifold: face " + std::to_string(g) + " lies in " + std::to_string(n) +
                         " facets");
    }
    if (n == 1) some_boundary = true;
  }
  return some_boundary ? Certificate::Ball : Certificate::ClosedPseudomanifold;
}

namespace {

// Boundary codim-1 faces through `ridge` other than `skip`.
std::vector<FaceId> boundary_neighbours(const SimplicialPoset& p, FaceId ridge, FaceId skip, int d) {
  std::vector<FaceId> out;
  for (FaceId g : p.cofaces(ridge)) {
    if (g == skip || p.rank(g) != d - 1) continue;
    int n = 0;
    for (FaceId c : p.cofaces(g)) n += p.rank(c) == d;
    if (n == 1) out.push_back(g);
  }
  return out;
}

}  // namespace

RandomBall random_shellable_ball(int dim, int n_facets, std::uint64_t seed, int max_rejections) {
  if (dim < 1) throw ComplexError("random_shellable_ball needs dim >= 1");
  if (n_facets < 1) throw ComplexError("random_shellable_ball needs at least one facet");
  const int d = dim + 1;
  std::mt19937_64 rng(seed);
  RandomBall out;
  out.order.push_back(out.complex.attach_facet(GlueSpec(d)).facet);

  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  while (static_cast<int>(out.order.size()) < n_facets) {
    if (out.rejections > max_rejections) {
      out.complete = false;
      out.note = "gave up after " + std::to_string(out.rejections) + " rejected attachments with " +
                 std::to_string(out.order.size()) + " facets (seed " + std::to_string(seed) + ")";
      break;
    }
    const SimplicialPoset& P = out.complex;
    std::vector<FaceId> open;
    for (auto [g, n] : P.codim1_incidence()) {
      if (n == 1) open.push_back(g);
    }
    const FaceId g0 = open[pick(open.size())];
    const auto& base = P.vertices(g0);
    const int want = static_cast<int>(std::uniform_int_distribution<int>(1, d - 1)(rng));

    GlueSpec spec(d);
    const SlotSet top = SlotSet{1} << (d - 1);
    for (int i = 0; i + 1 < d; ++i) spec.identify(SlotSet{1} << i, P.vertex_face(base[static_cast<std::size_t>(i)]));
    spec.identify(spec.full() & ~top, g0);

    if (want > 1) {
      std::map<VertexId, std::vector<std::pair<int, FaceId>>> by_apex;
      for (int i = 0; i + 1 < d; ++i) {
        const FaceId ridge = P.boundary(g0, base[static_cast<std::size_t>(i)]);
        auto nb = boundary_neighbours(P, ridge, g0, d);
        if (nb.empty()) continue;
        const FaceId g = nb[pick(nb.size())];
        VertexId w = 0;
        for (VertexId v : P.vertices(g)) {
          if (!std::binary_search(P.vertices(ridge).begin(), P.vertices(ridge).end(), v)) w = v;
        }
        if (std::binary_search(base.begin(), base.end(), w)) continue;
        by_apex[w].emplace_back(i, g);
      }
      if (by_apex.empty()) {
        ++out.rejections;
        continue;
      }
      auto it = by_apex.begin();
      std::advance(it, static_cast<long>(pick(by_apex.size())));
      auto group = it->second;
      std::shuffle(group.begin(), group.end(), rng);
      const std::size_t take = std::min<std::size_t>({group.size(), static_cast<std::size_t>(want - 1),
                                                      static_cast<std::size_t>(d - 2)});
      if (take == 0) {
        ++out.rejections;
        continue;
      }
      spec.identify(top, P.vertex_face(it->first));
      for (std::size_t k = 0; k < take; ++k) {
        spec.identify(spec.full() & ~(SlotSet{1} << group[k].first), group[k].second);
      }
    }
    try {
      out.order.push_back(out.complex.attach_facet(spec).facet);
    } catch (const GlueError&) {
      ++out.rejections;
    }
  }
  return out;
}

std::string shelling_to_json(const std::vector<FaceId>& order) {
  return json{{"order", order}}.dump() + "\n";
}

std::string shelling_report_to_json(const ShellingReport& report) {
  json order = json::array();
  json sigma = json::array();
  for (const auto& s : report.steps) {
    order.push_back(s.facet);
    sigma.push_back(s.sigma);
  }
  return json{{"order", order}, {"sigma", sigma}}.dump();
}

std::vector<FaceId> shelling_from_json(const std::string& text) {
  try {
    return json::parse(text).at("order").get<std::vector<FaceId>>();
  } catch (const json::exception& e) {
    throw ComplexError(std::string("malformed shelling JSON: ") + e.what());
  }
}

std::vector<FaceId> load_shelling(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ComplexError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return shelling_from_json(ss.str());
}

void save_shelling(const std::vector<FaceId>& order, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ComplexError("cannot write " + path);
  out << shelling_to_json(order);
}

}  // namespace sposet
