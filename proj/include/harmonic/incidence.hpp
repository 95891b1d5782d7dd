#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "harmonic/errors.hpp"
#include "harmonic/pointset.hpp"

namespace harmonic {

// Rank-3 simple incidence structure: n points and the lines carrying three or
// more of them. Two-point lines are implicit and never stored. Any two points
// lie on at most one stored line.
class IncidenceStructure {
public:
  IncidenceStructure() = default;

  // lines are deduplicated and sorted; validate checks the pair condition and
  // may be skipped by builders that guarantee it.
  static IncidenceStructure from_lines(int n, std::vector<std::vector<int>> lines,
                                       std::vector<std::string> point_labels = {},
                                       std::vector<std::string> line_labels = {},
                                       bool validate = true);

  int num_points() const { return n_; }
  int num_lines() const { return int(lines_.size()); }
  const std::vector<int>& line(int ln) const { return lines_[size_t(ln)]; }
  const std::vector<std::vector<int>>& lines() const { return lines_; }
  const std::vector<int>& point_lines(int pt) const { return pt_lns_[size_t(pt)]; }

  bool has_labels() const { return !point_labels_.empty(); }
  const std::string& point_label(int pt) const { return point_labels_[size_t(pt)]; }
  const std::vector<std::string>& point_labels() const { return point_labels_; }
  const std::vector<std::string>& line_labels() const { return line_labels_; }
  std::string describe_point(int pt) const;
  std::optional<int> point_by_label(const std::string& label) const;

  bool in_line(int ln, int pt) const;
  int line_through_pair(int u, int v) const;  // -1 when none
  bool collinear3(int a, int b, int c) const;

  int rank(const PointSet& s) const;
  PointSet flat_closure(const PointSet& s) const;

  // Substructure on keep; lines are the intersections retaining >= 3 points.
  // old_of_new receives the original index of each restricted point.
  IncidenceStructure restrict(const PointSet& keep,
                              std::vector<int>* old_of_new = nullptr) const;

private:
  void build_indexes(bool validate);

  int n_ = 0;
  std::vector<std::vector<int>> lines_;
  std::vector<std::vector<int>> pt_lns_;
  std::vector<std::string> point_labels_;
  std::vector<std::string> line_labels_;
  std::vector<int32_t> pair_line_;  // dense pair index when n is small
};

struct PlaneCheckReport {
  bool is_plane = false;
  uint32_t order = 0;
  int points = 0;
  int lines = 0;
  // failure witnesses; empty strings when the axiom holds
  std::string pair_witness;       // point pair on 0 or >= 2 lines
  std::string line_pair_witness;  // line pair meeting in != 1 point
  std::string size_witness;       // non-uniform line size or bad counts
  int desargues_requested = 0;
  int desargues_checked = 0;
  int desargues_failed = 0;
  std::string desargues_witness;
};

// Projective-plane test: pair/line axioms, uniform line size, point and line
// counts, plus randomly sampled Desargues configurations.
PlaneCheckReport plane_check(const IncidenceStructure& s, int desargues_samples = 200,
                             uint64_t seed = 0);

constexpr int kDefaultIsoBound = 200;

// Incidence isomorphism search by degree/line-size refinement and backtracking.
// Deterministic: candidates are tried in ascending index order.
std::optional<std::vector<int>> iso_find(const IncidenceStructure& a,
                                         const IncidenceStructure& b,
                                         int max_points = kDefaultIsoBound);

}  // namespace harmonic
