#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmonic/field.hpp"
#include "harmonic/incidence.hpp"
#include "harmonic/projective.hpp"

namespace harmonic {

// Named structure with, where one exists, its canonical plane embedding:
// coords[i] is the image of point i in PG(2, field order). Abstract builds
// leave field null and coords empty.
struct LabeledStructure {
  std::string name;
  IncidenceStructure inc;
  FieldPtr field;
  std::vector<ProjPoint> coords;

  bool has_embedding() const { return field != nullptr; }
};

// Three concurrent lines of PG(2,p): points [0,i,1], [1,i,1], [1,i,0] for
// i mod p plus the common point [0,1,0]; the p^2 short lines are
// {[0,i,1],[1,i+j,1],[1,j,0]}.
LabeledStructure lp(uint32_t p);

// Reid cycle on 2n+3 abstract points a_i, b_i, c_0, c_1, d with lines
// {a_*,d}, {b_*,d}, {c_0,c_1,d}, {a_i,b_i,c_0}, {a_i,b_{i+1},c_1}.
LabeledStructure reid(uint32_t n);

// The Reid cycle realized inside L_p: a_i = [0,i,1], b_i = [1,i,1],
// c_0 = [1,0,0], c_1 = [1,1,0], d = [0,1,0].
LabeledStructure reid_in_lp(uint32_t p);

// Analog of lp over the additive group of GF(p^m): points [0,g,1], [1,g,1],
// [1,g,0] for g in the field plus [0,1,0].
LabeledStructure group_expansion(uint32_t p, uint32_t m);

// Seven-point quadrangle configurations in the fixed role order
// (y, x, z, o, q, r, s); fano carries the extra line {x, o, r}.
LabeledStructure fano();
LabeledStructure nonfano();

// The coordinate plane as a labeled structure (every point and line named).
LabeledStructure pg(FieldPtr f, uint32_t max_order = kDefaultPlaneBound);

// Dispatch by name: "lp", "reid", "reid_in_lp", "group_expansion", "fano",
// "nonfano", "pg". p is the first parameter, m the second.
LabeledStructure build_named(const std::string& name, uint32_t p = 0, uint32_t m = 0);

}  // namespace harmonic
