#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmonic/errors.hpp"
#include "harmonic/projective.hpp"

namespace harmonic {

// One harmonic conjugation: middle conjugated across the pair, on the line.
struct ConjugationStep {
  int line = -1;
  int pair_a = -1, pair_b = -1;
  int middle = -1;
  int result = -1;
};

// One (i, j) construction of a stage: the p-1 shifted conjugations that must
// all land on the stage point for row value j - k*i.
struct SynthesizedPoint {
  uint32_t i = 0, j = 0;
  int point = -1;
  std::string name;
  std::vector<ConjugationStep> steps;  // shift s = 1 .. p-1
  bool agreement = false;        // all steps produce the same point
  bool quadrangle = false;       // each step's seven-point tuple classifies
  bool meet = false;             // step result equals the quadrangle diagonal meet
  bool line_intersection = false;  // the p coordinate lines meet exactly there
  bool cross_collinear = false;    // collinear with each a-leg/c-leg cross pair
  bool name_match = false;         // produced id equals the coordinate lookup
};

struct SynthesisStage {
  int k = 0;
  std::vector<SynthesizedPoint> constructions;  // (i, j) row-major
  std::vector<int> row_points;   // stage point id per row value j - k*i
  bool row_consistent = false;   // equal row values agree across (i, j)
  bool distinct = false;         // row disjoint from every point built so far
  bool axis_collinear = false;   // row plus [0,1,0] lies on one line
};

struct SynthesisCertificate {
  uint32_t p = 0;
  std::vector<SynthesisStage> stages;  // k = 1 .. p-2
  bool wrap_consistent = false;  // the k = p-1 pass reproduces the seed row
  bool covered = false;          // every plane point seeded or synthesized
  bool verified = false;
  std::string failure;           // first failed claim, empty when verified
};

class ClaimFailedError : public Error {
public:
  ClaimFailedError(std::string what, SynthesisCertificate partial)
      : Error(Errc::ClaimFailed, std::move(what)), partial_(std::move(partial)) {}
  const SynthesisCertificate& partial() const { return partial_; }

private:
  SynthesisCertificate partial_;
};

// Rebuilds the affine rows of a prime-order plane from the 3p+1 seed points
// of the three-leg configuration, each new point produced only by harmonic
// conjugation of earlier ones, re-checking every row claim against plane
// incidence. Throws ClaimFailedError carrying the partial certificate.
SynthesisCertificate staged_synthesis(const Plane& pl);
SynthesisCertificate staged_synthesis(uint32_t p);

}  // namespace harmonic
