#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "harmonic/harmonic_core.hpp"
#include "harmonic/incidence.hpp"
#include "harmonic/pointset.hpp"
#include "harmonic/projective.hpp"

namespace harmonic {

// One conjugate that enlarged the set: point is the conjugate of middle with
// respect to the pair (left, right); all four lie on the recorded line.
struct TraceAddition {
  int point = -1;
  int line = -1;
  int left = -1, right = -1, middle = -1;
  int stage = 0;
};

struct ClosureTrace {
  PointSet initial;
  PointSet final_set;
  int stages = 0;  // growth rounds executed
  bool fixpoint = false;
  std::vector<TraceAddition> additions;
};

struct ClosureOptions {
  int max_stages = -1;  // negative: ambient point count
  std::optional<uint64_t> shuffle_seed;  // permute processing order per stage
};

// Stage-limit failure carrying everything computed so far.
class StageLimitError : public Error {
public:
  StageLimitError(std::string what, ClosureTrace partial)
      : Error(Errc::StageLimitExceeded, std::move(what)), partial_(std::move(partial)) {}
  const ClosureTrace& partial() const { return partial_; }

private:
  ClosureTrace partial_;
};

// Abstract ambient: an incidence structure whose conjugates are taken by
// quadrangle search. Construction audits the structure and rejects one whose
// witnesses disagree or fail to produce conjugates.
class AuditedAmbient {
public:
  explicit AuditedAmbient(const IncidenceStructure& s,
                          int max_points = kDefaultAuditBound);
  // the structure is referenced, not copied, so it must outlive the ambient
  AuditedAmbient(IncidenceStructure&&, int = kDefaultAuditBound) = delete;

  const IncidenceStructure& structure() const { return *s_; }
  const AuditReport& audit() const { return audit_; }

private:
  const IncidenceStructure* s_;
  AuditReport audit_;
};

// One application of the conjugation step: S plus the conjugate of every
// role assignment (pair, middle) of every collinear triple of S.
PointSet h_step(const Plane& pl, const PointSet& S);
PointSet h_step(const AuditedAmbient& amb, const PointSet& S);

// Fixpoint of h_step with per-line worklists; additions within a stage do
// not feed that same stage. Throws StageLimitError past options.max_stages.
ClosureTrace h_closure(const Plane& pl, const PointSet& S,
                       const ClosureOptions& options = {});
ClosureTrace h_closure(const AuditedAmbient& amb, const PointSet& S,
                       const ClosureOptions& options = {});

}  // namespace harmonic
