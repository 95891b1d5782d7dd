#pragma once

#include <cstdint>

#include "harmonic/projective.hpp"
#include "harmonic/report.hpp"

namespace harmonic {

// Closes the three-leg seed inside PG(2,p) and checks the result is the full
// plane, passes the plane axioms with uniform line size p+1, and that every
// 3-point leg-crossing line closes to its full coordinate line.
VerificationReport verify_theorem_pp(uint32_t p, uint64_t seed = 0);

// Closure of the cycle seed equals the closure of the full three-leg seed,
// and each of its 2p+3 single-point deletions closes to a proper subset.
VerificationReport verify_minimality(uint32_t p, uint64_t seed = 0);

// Conjugation symmetry laws: involution, reciprocity, the transfer point,
// the two side conjugates, the diagonal conjugate, and the three relabeled
// quadrangles, per witness. Exhaustive when samples == 0, otherwise that
// many random (triple, witness) instances.
VerificationReport verify_conjugation(uint32_t q, long samples, uint64_t seed = 0);

// Quadrangle-search conjugate versus the cross-ratio conjugate, with the
// witness-independence clause. Exhaustive when samples == 0.
VerificationReport verify_agreement(uint32_t q, long samples, uint64_t seed = 0);

// Full sequence-to-plane check from the given seeding.
VerificationReport verify_sequence_plane(const Plane& pl, int base, int a0, int a1,
                                         int limit = 0, uint64_t seed = 0);

}  // namespace harmonic
