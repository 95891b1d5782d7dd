#pragma once

#include <vector>

#include "harmonic/pointset.hpp"
#include "harmonic/projective.hpp"

namespace harmonic {

struct SequenceResult {
  int base = -1;
  std::vector<int> terms;  // a_0, a_1, ..., through the first repeated term
  bool modular = false;
  int repeat_index = -1;   // n with a_n equal to an earlier term
  int matched_index = -1;  // that earlier term's index
  int period = 0;          // repeat_index - matched_index
};

// a_{i+1} = conjugate of a_{i-1} across the pair (base, a_i), iterated until
// a term repeats or limit terms exist. limit 0 means line size + 1, which
// pigeonholes a repeat. Requires base, a0, a1 distinct and collinear.
SequenceResult conjugate_sequence(const Plane& pl, int base, int a0, int a1,
                                  int limit = 0);

struct NetResult {
  PointSet net;            // harmonic closure of the seed
  bool seed_closed = false;
};

// Requires at least three distinct collinear seed points. The closure of a
// collinear set is collinear, so net always lies on the seed's line.
NetResult moebius_net(const Plane& pl, const std::vector<int>& seed);

// Everything the sequence-to-plane argument checks, in one record.
struct SequencePlaneCheck {
  SequenceResult seq;
  int n = 0;
  bool n_prime = false;
  bool first_repeat_is_b0 = false;
  int d = -1, c0 = -1, c1 = -1;
  std::vector<int> a, b;        // cycle roles, n of each
  int witnesses_total = 0;      // quadrangles completing (d, b0, b1)
  bool cycle_lines = false;     // {a_t,b_t,c0}, {a_t,b_{t+1},c1}, {c0,c1,d}
  bool a_collinear_with_d = false;
  bool points_distinct = false;     // the 2n+3 role points
  bool restriction_matches = false; // line-for-line the cycle matroid
  bool restriction_isomorphic = false;
  PointSet closure7;            // closure of {d,b0,b1,c1,c0,a1,a0}
  int closure_stages = 0;
  PointSet closure_all;         // closure of all 2n+3 role points
  bool closures_equal = false;
  bool plane = false;           // plane_check on the closure7 restriction
  int plane_order = 0;
  int plane_points = 0;
  bool net_closed = false;      // {d, b_*} is its own harmonic closure
  bool ok = false;
};

// Runs the sequence from (base, a0, a1), requires it modular (NotModular
// otherwise), then rebuilds the cycle roles by conjugation and checks the
// restriction, closure, and net claims. witness_index picks among the
// quadrangles completing (base, b0, b1); the outcome must not depend on it.
SequencePlaneCheck sequence_plane_check(const Plane& pl, int base, int a0, int a1,
                                        int limit = 0, int witness_index = 0);

}  // namespace harmonic
