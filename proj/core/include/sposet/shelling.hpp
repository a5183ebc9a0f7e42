#pragma once

#include "sposet/complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sposet {

class ShellingError : public std::runtime_error {
 public:
  ShellingError(int step, std::string msg) : std::runtime_error(std::move(msg)), step_(step) {}
  // 0-based position in the order; -1 when the order itself is malformed.
  int step() const { return step_; }

 private:
  int step_;
};

struct ShellingStep {
  FaceId facet = kNoFace;
  std::vector<VertexId> sigma;  // vertices whose opposite codim-1 face was already present
};

struct ShellingReport {
  std::vector<ShellingStep> steps;
};

// Throws ShellingError naming the first bad step.
ShellingReport verify_shelling(const SimplicialPoset& p, const std::vector<FaceId>& order);
HVector h_from_shelling(const SimplicialPoset& p, const ShellingReport& report);
HVector h_from_shelling(const SimplicialPoset& p, const std::vector<FaceId>& order);

enum class Certificate { Ball, ClosedPseudomanifold };
std::string to_string(Certificate c);

// Shellable pseudomanifold check. Throws ShellingError or ComplexError.
Certificate certify_ball(const SimplicialPoset& p, const std::vector<FaceId>& order);

struct RandomBall {
  SimplicialPoset complex;
  std::vector<FaceId> order;
  int rejections = 0;
  bool complete = true;  // false if the rejection limit stopped growth early
  std::string note;
};

// Grows a ball one facet at a time by shelling steps along boundary faces.
// Stops early with complete = false once max_rejections is exceeded.
RandomBall random_shellable_ball(int dim, int n_facets, std::uint64_t seed, int max_rejections = 10000);

std::string shelling_to_json(const std::vector<FaceId>& order);
std::string shelling_report_to_json(const ShellingReport& report);
std::vector<FaceId> shelling_from_json(const std::string& text);
std::vector<FaceId> load_shelling(const std::string& path);
void save_shelling(const std::vector<FaceId>& order, const std::string& path);

}  // namespace sposet
