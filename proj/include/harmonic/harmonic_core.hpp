#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "harmonic/incidence.hpp"

namespace harmonic {

// Quadrangle configuration on seven distinct points in role order
// (y, x, z, o, q, r, s): the triples {y,x,z}, {y,o,q}, {y,r,s}, {z,o,s},
// {z,q,r}, {x,q,s} are collinear, no other triple is, except {x,o,r} which
// is collinear exactly in the Fano case.
enum class HPClass { Fano, NonFano, NotHP };

struct HPClassification {
  HPClass cls = HPClass::NotHP;
  std::string diagnostic;  // first violated condition when NotHP
};

// tuple order: y, x, z, o, q, r, s
HPClassification hp_classify(const IncidenceStructure& s,
                             const std::array<int, 7>& tuple);

// Independent classifier: matches the tuple position-wise against the stored
// seven-point fixtures under the configuration's own symmetry group
// {id, (o r)(q s), (y z)(q s), (y z)(o r)}.
HPClass hp_classify_structural(const IncidenceStructure& s,
                               const std::array<int, 7>& tuple);

struct HPWitness {
  int o = -1, q = -1, r = -1, s = -1;
  bool fano = false;

  bool operator==(const HPWitness& w) const {
    return o == w.o && q == w.q && r == w.r && s == w.s && fano == w.fano;
  }
  bool operator<(const HPWitness& w) const {
    return std::array<int, 4>{o, q, r, s} < std::array<int, 4>{w.o, w.q, w.r, w.s};
  }
};

// All quadrangles completing (y, x, z) to a configuration, sorted by
// (o, q, r, s). Requires the three points distinct and collinear.
std::vector<HPWitness> hp_search(const IncidenceStructure& s, int y, int x, int z);

enum class ConjStatus { Unique, NonUnique, NoWitness };

struct ConjugateResult {
  ConjStatus status = ConjStatus::NoWitness;
  int point = -1;                  // the conjugate, when status is Unique
  int witnesses = 0;               // quadrangles enumerated
  int witnesses_without_meet = 0;  // quadrangles whose meet lies outside s
  // a disagreeing pair when status is NonUnique
  HPWitness witness_a, witness_b;
  int point_a = -1, point_b = -1;
};

// Conjugate of x with respect to the pair (y, z): the common point of the
// line {y,z} and the line {o,r} of a witness. Witnesses whose {o,r} line is
// absent from the structure produce no conjugate and are counted.
ConjugateResult conjugate_search(const IncidenceStructure& s, int y, int z, int x);

// First witness meet only; sound as the full search wherever witnesses are
// known to agree (audited structures and coordinate planes).
std::optional<int> conjugate_first(const IncidenceStructure& s, int y, int z, int x);

enum class AuditVerdict { Harmonic, NotHarmonic, VacuouslyHarmonic };

const char* audit_verdict_name(AuditVerdict v);

struct AuditReport {
  AuditVerdict verdict = AuditVerdict::VacuouslyHarmonic;
  long collinear_triples = 0;      // ordered (y, x, z) with x the conjugated point
  long triples_with_witness = 0;
  long witnessless_triples = 0;
  long triples_without_conjugate = 0;  // witnessed, but no witness yields a meet
  long partial_meet_triples = 0;       // some witness lacks a meet
  long disagreements = 0;
  bool conjugate_is_identity = true;   // every produced conjugate equals x
  std::string detail;                  // first offending triple, when any
};

constexpr int kDefaultAuditBound = 150;

// Exhaustive conjugate_search over every ordered collinear triple. Harmonic
// means every witnessed triple yields exactly one conjugate; a witness that
// yields none (meet outside the structure) already disqualifies.
AuditReport harmonic_audit(const IncidenceStructure& s,
                           int max_points = kDefaultAuditBound);

}  // namespace harmonic
