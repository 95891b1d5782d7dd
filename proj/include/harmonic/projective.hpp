#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "harmonic/field.hpp"
#include "harmonic/pointset.hpp"

namespace harmonic {

class IncidenceStructure;

// Point of PG(2,q) as a canonical homogeneous triple: coordinates are scaled
// so the first nonzero one is 1, which makes equality a plain comparison.
struct ProjPoint {
  const Field* field = nullptr;
  std::array<uint32_t, 3> c{0, 0, 0};

  static ProjPoint make(const Field& f, std::array<uint32_t, 3> raw);
  static ProjPoint make(const FieldElem& x, const FieldElem& y, const FieldElem& z);

  bool operator==(const ProjPoint& o) const;
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  std::string str() const;  // "[x,y,z]"
};

// Line of PG(2,q), same canonical scaling as ProjPoint.
struct ProjLine {
  const Field* field = nullptr;
  std::array<uint32_t, 3> c{0, 0, 0};

  static ProjLine make(const Field& f, std::array<uint32_t, 3> raw);

  bool operator==(const ProjLine& o) const;
  bool operator!=(const ProjLine& o) const { return !(*this == o); }
  std::string str() const;  // "<a,b,c>"
};

ProjLine line_through(const ProjPoint& a, const ProjPoint& b);  // EqualPoints
ProjPoint meet(const ProjLine& a, const ProjLine& b);           // EqualLines
bool incident(const ProjPoint& p, const ProjLine& l);
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// Cross-ratio value: element of the field or the distinguished infinity.
struct CrossRatioValue {
  bool infinite = false;
  FieldElem value;

  bool operator==(const CrossRatioValue& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};

// (a,b;c,d) in the affine parametrization given by basis points a,b.
// Requires the four points collinear, a,b,c pairwise distinct, d != a,b.
CrossRatioValue cross_ratio(const ProjPoint& a, const ProjPoint& b,
                            const ProjPoint& c, const ProjPoint& d);

// The unique x' with (y,z;x,x') = -1. In characteristic 2 this is x itself.
ProjPoint harmonic_conjugate_cr(const ProjPoint& y, const ProjPoint& z,
                                const ProjPoint& x);

// Point/line literal syntax: "[x,y,z]" and "<a,b,c>"; coordinates are
// integers for prime fields, "(c0,c1,...)" coefficient lists or packed codes
// for extension fields.
ProjPoint parse_point(const Field& f, const std::string& text);
ProjLine parse_line(const Field& f, const std::string& text);

constexpr uint32_t kDefaultPlaneBound = 1024;

// The coordinate plane PG(2,q): indexed points and lines, O(1) index lookup,
// and per-line affine parametrizations used by the conjugation engine.
// A point's parameter on a line is its field code, or order() for the basis
// point at infinity of that line's chart.
class Plane {
public:
  explicit Plane(FieldPtr f, uint32_t max_order = kDefaultPlaneBound);
  ~Plane();
  Plane(Plane&&) noexcept;
  Plane& operator=(Plane&&) noexcept;
  Plane(const Plane&) = delete;

  const Field& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }
  uint32_t order() const { return q_; }
  int num_points() const { return n_; }
  int num_lines() const { return n_; }

  const ProjPoint& point(int idx) const { return pts_[size_t(idx)]; }
  const ProjLine& line(int idx) const { return lns_[size_t(idx)]; }
  int index_of(const ProjPoint& p) const;
  int index_of(const ProjLine& l) const;

  int line_through(int p1, int p2) const;  // EqualPoints if p1 == p2
  int meet_of(int l1, int l2) const;       // EqualLines if l1 == l2
  bool incident(int pt, int ln) const;

  const std::vector<int>& line_points(int ln) const;
  const std::vector<int>& point_lines(int pt) const;

  uint32_t inf_param() const { return q_; }
  uint32_t param_on_line(int ln, int pt) const;
  int point_at_param(int ln, uint32_t param) const;
  // Harmonic conjugate in line parameters: b conjugated across the pair (a,c).
  uint32_t conj_param(uint32_t a, uint32_t c, uint32_t b) const;
  // Conjugate of point b with respect to the pair (a,c); all on line ln.
  int conj_on_line(int ln, int a, int c, int b) const;

  // Incidence view with coordinate labels on points and lines.
  const IncidenceStructure& structure() const;

private:
  struct LineFrame;

  FieldPtr field_;
  uint32_t q_ = 0;
  int n_ = 0;
  std::vector<ProjPoint> pts_;
  std::vector<ProjLine> lns_;
  std::vector<LineFrame> frames_;
  std::vector<std::vector<int>> line_pts_;
  std::vector<std::vector<int>> pt_lns_;
  std::unique_ptr<IncidenceStructure> structure_;
};

}  // namespace harmonic
