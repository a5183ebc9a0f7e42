#include "cli.hpp"

#include "sposet/complex.hpp"
#include "sposet/conditions.hpp"
#include "sposet/construct.hpp"
#include "sposet/facering.hpp"
#include "sposet/properties.hpp"
#include "sposet/shelling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

namespace sposet::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;
constexpr int kUnknown = 3;

// Usage, file or parse problems; mapped to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json number(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json vec(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v.entries()) out.push_back(number(x));
  return out;
}

json conditions(const ConditionReport& r) {
  json out = json::array();
  for (const auto& c : r.conditions) {
    out.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  return out;
}

HVector parse_h(const std::string& text) {
  try {
    return parse_hvector(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --h: ") + e.what());
  }
}

SimplicialPoset read_complex(const std::string& path) {
  try {
    return load_complex(path);
  } catch (const ComplexError& e) {
    throw UsageError(e.what());
  }
}

std::vector<FaceId> read_shelling(const std::string& path) {
  try {
    return load_shelling(path);
  } catch (const ComplexError& e) {
    throw UsageError(e.what());
  }
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_check(const std::string& h_text, std::ostream& out) {
  const HVector h = parse_h(h_text);
  const ConditionReport r = check_necessary(h);
  print(out, {{"command", "check"}, {"h", vec(h)}, {"verdict", r.passed() ? "pass" : "fail"}, {"conditions", conditions(r)}});
  return r.passed() ? kOk : kNegative;
}

int cmd_decide(int dim, const std::string& h_text, std::ostream& out) {
  const HVector h = parse_h(h_text);
  if (h.d() != dim + 1) {
    throw UsageError("--dim " + std::to_string(dim) + " needs " + std::to_string(dim + 2) + " entries, got " +
                     std::to_string(h.size()));
  }
  if (has_decider(dim)) {
    const Decision dec = decide(dim, h);
    print(out, {{"command", "decide"},
                {"dim", dim},
                {"h", vec(h)},
                {"verdict", to_string(dec.verdict)},
                {"conditions", conditions(dec.report)}});
    return dec.verdict == Verdict::Feasible ? kOk : kNegative;
  }
  const AutoResult r = construct_auto(h);
  json j = {{"command", "decide"},
            {"dim", dim},
            {"h", vec(h)},
            {"verdict", to_string(r.status)},
            {"conditions", conditions(r.conditions)},
            {"notes", r.notes}};
  if (r.construction) j["method"] = method_tag(r.construction->method);
  print(out, j);
  switch (r.status) {
    case AutoStatus::Constructed: return kOk;
    case AutoStatus::Infeasible: return kNegative;
    case AutoStatus::Unknown: return kUnknown;
  }
  return kUnknown;
}

int cmd_construct(const std::string& h_text, const std::string& out_path, const std::string& shelling_path,
                  std::ostream& out) {
  const HVector h = parse_h(h_text);
  const AutoResult r = construct_auto(h);
  json j = {{"command", "construct"},
            {"h", vec(h)},
            {"status", to_string(r.status)},
            {"conditions", conditions(r.conditions)},
            {"notes", r.notes}};
  if (r.construction) {
    const Construction& c = *r.construction;
    j["method"] = method_tag(c.method);
    j["facets"] = c.order.size();
    j["faces"] = c.complex.num_faces();
    j["f_vector"] = vec(c.complex.f_vector());
    j["sigma_sizes"] = c.sigma_sizes;
    for (const auto& n : c.notes) j["notes"].push_back(n);
    json cps = json::array();
    for (const auto& cp : c.checkpoints) cps.push_back(vec(cp));
    j["checkpoints"] = cps;
    try {
      if (!out_path.empty()) {
        save_complex(c.complex, out_path);
        j["complex_file"] = out_path;
      }
      if (!shelling_path.empty()) {
        save_shelling(c.order, shelling_path);
        j["shelling_file"] = shelling_path;
      }
    } catch (const ComplexError& e) {
      throw UsageError(e.what());
    }
  }
  print(out, j);
  switch (r.status) {
    case AutoStatus::Constructed: return kOk;
    case AutoStatus::Infeasible: return kNegative;
    case AutoStatus::Unknown: return kUnknown;
  }
  return kUnknown;
}

int cmd_verify(const std::string& complex_path, const std::string& shelling_path, std::ostream& out) {
  const SimplicialPoset p = read_complex(complex_path);
  const auto violations = p.validate();
  json j = {{"command", "verify"}, {"valid", violations.empty()}};
  json vs = json::array();
  for (const auto& v : violations) vs.push_back({{"face", v.face}, {"message", v.message}});
  j["violations"] = vs;
  if (!violations.empty()) {
    j["verdict"] = "invalid";
    print(out, j);
    return kNegative;
  }
  j["f_vector"] = vec(p.f_vector());
  j["h_vector"] = vec(f_to_h(p.f_vector()));
  j["verdict"] = "valid";
  int code = kOk;
  if (!shelling_path.empty()) {
    const auto order = read_shelling(shelling_path);
    try {
      const ShellingReport rep = verify_shelling(p, order);
      json sh = json::parse(shelling_report_to_json(rep));
      sh["ok"] = true;
      sh["h_vector"] = vec(h_from_shelling(p, rep));
      j["shelling"] = sh;
      j["verdict"] = to_string(certify_ball(p, order));
    } catch (const ShellingError& e) {
      j["shelling"] = {{"ok", false}, {"step", e.step()}, {"error", e.what()}};
      j["verdict"] = "not-shellable";
      code = kNegative;
    } catch (const ComplexError& e) {
      j["verdict"] = "not-a-pseudomanifold";
      j["error"] = e.what();
      code = kNegative;
    }
  }
  print(out, j);
  return code;
}

int cmd_boundary(const std::string& complex_path, const std::string& out_path, std::ostream& out) {
  const SimplicialPoset p = read_complex(complex_path);
  const auto violations = p.validate();
  if (!violations.empty()) {
    print(out, {{"command", "boundary"}, {"error", "invalid complex: " + violations[0].message}});
    return kNegative;
  }
  BoundaryComplex bd;
  try {
    bd = boundary_complex(p);
  } catch (const ComplexError& e) {
    print(out, {{"command", "boundary"}, {"error", e.what()}});
    return kNegative;
  }
  const HVector h = f_to_h(p.f_vector());
  const HVector bh = f_to_h(bd.complex.f_vector());
  json j = {{"command", "boundary"}, {"h_vector", vec(h)}, {"boundary_h_vector", vec(bh)},
            {"boundary_faces", bd.complex.num_faces()}};
  if (h.d() >= 1) {
    const HVector expect = boundary_h(h);
    j["expected"] = vec(expect);
    j["matches"] = bh == expect;
  }
  if (!out_path.empty()) {
    try {
      save_complex(bd.complex, out_path);
    } catch (const ComplexError& e) {
      throw UsageError(e.what());
    }
    j["boundary_file"] = out_path;
  }
  print(out, j);
  return kOk;
}

int cmd_hilbert(const std::string& complex_path, std::uint64_t seed, int count, long bound, std::ostream& out) {
  const SimplicialPoset p = read_complex(complex_path);
  const auto violations = p.validate();
  if (!violations.empty()) {
    print(out, {{"command", "hilbert"}, {"error", "invalid complex: " + violations[0].message}});
    return kNegative;
  }
  const HVector expected = f_to_h(p.f_vector());
  json quotients = json::array();
  json seeds = json::array();
  json retries = json::array();
  bool all = true;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    Lsop l;
    try {
      l = random_lsop(p, s, bound);
    } catch (const std::runtime_error& e) {
      print(out, {{"command", "hilbert"}, {"error", e.what()}, {"seed", s}, {"bound", bound}});
      return kNegative;
    }
    const HVector q(quotient_hilbert(p, l));
    all = all && q == expected;
    quotients.push_back(vec(q));
    seeds.push_back(s);
    retries.push_back(l.retries);
  }
  print(out, {{"command", "hilbert"},
              {"h_expected", vec(expected)},
              {"h_quotient", quotients},
              {"seeds", seeds},
              {"retries", retries},
              {"bound", bound},
              {"matches", all}});
  return all ? kOk : kNegative;
}

int cmd_enumerate(int dim, long max_facets, std::ostream& out) {
  if (!has_decider(dim)) throw UsageError("enumerate supports --dim 3..6");
  json vs = json::array();
  for (const auto& h : enumerate_feasible(dim, max_facets)) vs.push_back(vec(h));
  print(out, {{"command", "enumerate"}, {"dim", dim}, {"max_facets", max_facets}, {"count", vs.size()}, {"vectors", vs}});
  return kOk;
}

int cmd_fuzz(int dim, int facets, std::uint64_t seed, int count, std::ostream& out) {
  if (dim < 1) throw UsageError("fuzz needs --dim >= 1");
  if (facets < 1) throw UsageError("fuzz needs --facets >= 1");
  json results = json::array();
  std::size_t total = 0;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
    json r = {{"seed", s}};
    try {
      const RandomBall b = random_shellable_ball(dim, facets, s);
      r["h"] = vec(f_to_h(b.complex.f_vector()));
      r["rejections"] = b.rejections;
      r["facets_built"] = b.order.size();
      if (!b.complete) r["note"] = b.note;
      json vs = json::array();
      for (const auto& v : check_ball_properties(b.complex, b.order)) {
        vs.push_back({{"property", v.property}, {"detail", v.detail}});
      }
      total += vs.size();
      r["violations"] = vs;
    } catch (const ComplexError& e) {
      r["error"] = e.what();
      ++total;
    }
    results.push_back(r);
  }
  print(out, {{"command", "fuzz"},
              {"dim", dim},
              {"facets", facets},
              {"seed", seed},
              {"count", count},
              {"violations", total},
              {"results", results}});
  return total == 0 ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feasibility, construction and verification of h-vectors of simplicial-poset balls"};
  app.name(args.empty() ? "sposet" : args[0]);
  app.require_subcommand(1, 1);

  std::string h_text;
  std::string complex_path;
  std::string shelling_path;
  std::string out_path;
  int dim = 0;
  int facets = 0;
  int count = 1;
  int seeds = 3;
  long max_facets = 0;
  long bound = 8;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "Evaluate necessary conditions on an h-vector");
  check->set_help_flag("--help", "Print this help message and exit");
  check->add_option("--h", h_text, "h-vector, comma separated")->required();

  auto* decide = app.add_subcommand("decide", "Exact verdict in dimensions 3..6, best effort elsewhere");
  decide->set_help_flag("--help", "Print this help message and exit");
  decide->add_option("--dim", dim, "ball dimension")->required();
  decide->add_option("--h", h_text, "h-vector, comma separated")->required();

  auto* construct = app.add_subcommand("construct", "Build a shelled ball with the given h-vector");
  construct->set_help_flag("--help", "Print this help message and exit");
  construct->add_option("--h", h_text, "h-vector, comma separated")->required();
  construct->add_option("--out", out_path, "write the complex here");
  construct->add_option("--shelling", shelling_path, "write the shelling order here");

  auto* verify = app.add_subcommand("verify", "Validate a complex and optionally a shelling");
  verify->add_option("--complex", complex_path, "complex JSON")->required();
  verify->add_option("--shelling", shelling_path, "shelling JSON");

  auto* boundary = app.add_subcommand("boundary", "Extract the boundary complex");
  boundary->add_option("--complex", complex_path, "complex JSON")->required();
  boundary->add_option("--out", out_path, "write the boundary complex here");

  auto* hilbert = app.add_subcommand("hilbert", "Compare the face-ring quotient with the h-vector");
  hilbert->add_option("--complex", complex_path, "complex JSON")->required();
  hilbert->add_option("--seed", seed, "first seed")->default_val(1);
  hilbert->add_option("--seeds", seeds, "number of seeds")->default_val(3)->check(CLI::PositiveNumber);
  hilbert->add_option("--bound", bound, "entry bound for the parameter matrix")->default_val(8)->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List feasible h-vectors");
  enumerate->add_option("--dim", dim, "ball dimension (3..6)")->required();
  enumerate->add_option("--max-facets", max_facets, "largest facet count")->required();

  auto* fuzz = app.add_subcommand("fuzz", "Random shellable balls checked against the property suite");
  fuzz->add_option("--dim", dim, "ball dimension")->required();
  fuzz->add_option("--facets", facets, "facets per ball")->required();
  fuzz->add_option("--seed", seed, "first seed")->required();
  fuzz->add_option("--count", count, "number of seeds")->default_val(1)->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(h_text, out);
    if (*decide) return cmd_decide(dim, h_text, out);
    if (*construct) return cmd_construct(h_text, out_path, shelling_path, out);
    if (*verify) return cmd_verify(complex_path, shelling_path, out);
    if (*boundary) return cmd_boundary(complex_path, out_path, out);
    if (*hilbert) return cmd_hilbert(complex_path, seed, seeds, bound, out);
    if (*enumerate) return cmd_enumerate(dim, max_facets, out);
    if (*fuzz) return cmd_fuzz(dim, facets, seed, count, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sposet::cli
