#include "harmonic/incidence.hpp"

#include <algorithm>
#include <random>

namespace harmonic {

namespace {

constexpr int kDensePairBound = 2048;

}  // namespace

IncidenceStructure IncidenceStructure::from_lines(int n,
                                                  std::vector<std::vector<int>> lines,
                                                  std::vector<std::string> point_labels,
                                                  std::vector<std::string> line_labels,
                                                  bool validate) {
  if (n < 0) throw Error(Errc::BadArgument, "negative point count");
  if (!point_labels.empty() && int(point_labels.size()) != n)
    throw Error(Errc::BadArgument, "point label count does not match point count");
  if (!line_labels.empty() && line_labels.size() != lines.size())
    throw Error(Errc::BadArgument, "line label count does not match line count");

  for (auto& l : lines) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (l.size() < 3)
      throw Error(Errc::BadArgument, "line with fewer than three distinct points");
    if (l.front() < 0 || l.back() >= n)
      throw Error(Errc::BadArgument, "line point index out of range");
  }

  // canonical line order, labels travel with their lines
  std::vector<int> order(lines.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lines[size_t(a)] < lines[size_t(b)]; });

  IncidenceStructure s;
  s.n_ = n;
  s.point_labels_ = std::move(point_labels);
  for (int idx : order) {
    if (!s.lines_.empty() && s.lines_.back() == lines[size_t(idx)]) continue;
    s.lines_.push_back(std::move(lines[size_t(idx)]));
    if (!line_labels.empty()) s.line_labels_.push_back(std::move(line_labels[size_t(idx)]));
  }
  s.build_indexes(validate);
  return s;
}

void IncidenceStructure::build_indexes(bool validate) {
  pt_lns_.assign(size_t(n_), {});
  for (size_t ln = 0; ln < lines_.size(); ++ln)
    for (int pt : lines_[ln]) pt_lns_[size_t(pt)].push_back(int(ln));

  if (n_ <= kDensePairBound) {
    pair_line_.assign(size_t(n_) * size_t(n_), -1);
    for (size_t ln = 0; ln < lines_.size(); ++ln) {
      const auto& l = lines_[ln];
      for (size_t i = 0; i < l.size(); ++i)
        for (size_t j = i + 1; j < l.size(); ++j) {
          size_t a = size_t(l[i]) * size_t(n_) + size_t(l[j]);
          size_t b = size_t(l[j]) * size_t(n_) + size_t(l[i]);
          if (pair_line_[a] >= 0)
            throw Error(Errc::InvariantViolation,
                        "points " + describe_point(l[i]) + " and " +
                            describe_point(l[j]) + " lie on two lines");
          pair_line_[a] = pair_line_[b] = int32_t(ln);
        }
    }
  } else if (validate) {
    std::vector<int> partners;
    for (int u = 0; u < n_; ++u) {
      partners.clear();
      for (int ln : pt_lns_[size_t(u)])
        for (int v : lines_[size_t(ln)])
          if (v != u) partners.push_back(v);
      std::sort(partners.begin(), partners.end());
      auto dup = std::adjacent_find(partners.begin(), partners.end());
      if (dup != partners.end())
        throw Error(Errc::InvariantViolation,
                    "points " + describe_point(u) + " and " + describe_point(*dup) +
                        " lie on two lines");
    }
  }
}

std::string IncidenceStructure::describe_point(int pt) const {
  if (has_labels()) return point_labels_[size_t(pt)];
  return "#" + std::to_string(pt);
}

std::optional<int> IncidenceStructure::point_by_label(const std::string& label) const {
  for (size_t i = 0; i < point_labels_.size(); ++i)
    if (point_labels_[i] == label) return int(i);
  return std::nullopt;
}

bool IncidenceStructure::in_line(int ln, int pt) const {
  const auto& l = lines_[size_t(ln)];
  return std::binary_search(l.begin(), l.end(), pt);
}

int IncidenceStructure::line_through_pair(int u, int v) const {
  if (u == v) throw Error(Errc::EqualPoints, "pair needs two distinct points");
  if (!pair_line_.empty()) return pair_line_[size_t(u) * size_t(n_) + size_t(v)];
  const auto& lu = pt_lns_[size_t(u)];
  const auto& lv = pt_lns_[size_t(v)];
  const auto& probe = lu.size() <= lv.size() ? lu : lv;
  int other = lu.size() <= lv.size() ? v : u;
  for (int ln : probe)
    if (in_line(ln, other)) return ln;
  return -1;
}

bool IncidenceStructure::collinear3(int a, int b, int c) const {
  if (a == b || b == c || a == c) return true;
  int ln = line_through_pair(a, b);
  return ln >= 0 && in_line(ln, c);
}

int IncidenceStructure::rank(const PointSet& s) const {
  auto ids = s.to_vector();
  if (ids.size() <= 2) return int(ids.size());
  int ln = line_through_pair(ids[0], ids[1]);
  if (ln < 0) return 3;
  for (size_t i = 2; i < ids.size(); ++i)
    if (!in_line(ln, ids[i])) return 3;
  return 2;
}

PointSet IncidenceStructure::flat_closure(const PointSet& s) const {
  auto ids = s.to_vector();
  if (ids.size() <= 1) return s;
  if (ids.size() == 2) {
    int ln = line_through_pair(ids[0], ids[1]);
    if (ln < 0) return s;
    return PointSet::of(n_, lines_[size_t(ln)]);
  }
  int ln = line_through_pair(ids[0], ids[1]);
  if (ln >= 0) {
    bool flat2 = true;
    for (size_t i = 2; i < ids.size(); ++i)
      if (!in_line(ln, ids[i])) {
        flat2 = false;
        break;
      }
    if (flat2) return PointSet::of(n_, lines_[size_t(ln)]);
  }
  return PointSet::full(n_);
}

IncidenceStructure IncidenceStructure::restrict(const PointSet& keep,
                                                std::vector<int>* old_of_new) const {
  if (keep.capacity() != n_)
    throw Error(Errc::BadArgument, "restriction set has wrong capacity");
  std::vector<int> kept = keep.to_vector();
  std::vector<int> new_of_old(size_t(n_), -1);
  for (size_t i = 0; i < kept.size(); ++i) new_of_old[size_t(kept[i])] = int(i);
  if (old_of_new) *old_of_new = kept;

  std::vector<std::vector<int>> sub;
  std::vector<std::string> sub_line_labels;
  for (size_t ln = 0; ln < lines_.size(); ++ln) {
    std::vector<int> cur;
    for (int pt : lines_[ln])
      if (new_of_old[size_t(pt)] >= 0) cur.push_back(new_of_old[size_t(pt)]);
    if (cur.size() < 3) continue;
    sub.push_back(std::move(cur));
    if (!line_labels_.empty()) sub_line_labels.push_back(line_labels_[ln]);
  }
  std::vector<std::string> sub_point_labels;
  if (has_labels())
    for (int pt : kept) sub_point_labels.push_back(point_labels_[size_t(pt)]);
  return from_lines(int(kept.size()), std::move(sub), std::move(sub_point_labels),
                    std::move(sub_line_labels), /*validate=*/false);
}

// ---------------------------------------------------------------------------

namespace {

// First common point of two sorted lines, -2 if none, -3 if more than one.
int single_meet(const std::vector<int>& a, const std::vector<int>& b) {
  int found = -2;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (b[j] < a[i])
      ++j;
    else {
      if (found >= 0) return -3;
      found = a[i];
      ++i;
      ++j;
    }
  }
  return found;
}

}  // namespace

PlaneCheckReport plane_check(const IncidenceStructure& s, int desargues_samples,
                             uint64_t seed) {
  PlaneCheckReport rep;
  int n = s.num_points();
  int L = s.num_lines();
  rep.points = n;
  rep.lines = L;

  // every point pair on exactly one line
  for (int u = 0; u < n && rep.pair_witness.empty(); ++u) {
    PointSet seen(n);
    int cnt = 0;
    for (int ln : s.point_lines(u)) {
      for (int v : s.line(ln)) {
        if (v == u) continue;
        if (seen.test(v)) {
          rep.pair_witness = "points " + s.describe_point(u) + " and " +
                             s.describe_point(v) + " lie on two lines";
          break;
        }
        seen.set(v);
        ++cnt;
      }
      if (!rep.pair_witness.empty()) break;
    }
    if (rep.pair_witness.empty() && cnt != n - 1) {
      for (int v = 0; v < n; ++v)
        if (v != u && !seen.test(v)) {
          rep.pair_witness = "points " + s.describe_point(u) + " and " +
                             s.describe_point(v) + " lie on no common line";
          break;
        }
    }
  }

  // every line pair meets in exactly one point
  for (int a = 0; a < L && rep.line_pair_witness.empty(); ++a) {
    std::vector<char> seen(size_t(L), 0);
    int cnt = 0;
    for (int pt : s.line(a)) {
      for (int b : s.point_lines(pt)) {
        if (b == a) continue;
        if (seen[size_t(b)]) {
          rep.line_pair_witness = "lines " + std::to_string(a) + " and " +
                                  std::to_string(b) + " share two points";
          break;
        }
        seen[size_t(b)] = 1;
        ++cnt;
      }
      if (!rep.line_pair_witness.empty()) break;
    }
    if (rep.line_pair_witness.empty() && cnt != L - 1) {
      for (int b = 0; b < L; ++b)
        if (b != a && !seen[size_t(b)]) {
          rep.line_pair_witness = "lines " + std::to_string(a) + " and " +
                                  std::to_string(b) + " have no common point";
          break;
        }
    }
  }

  // uniform line size k = q+1 and the projective counts
  if (L == 0) {
    rep.size_witness = "no lines";
  } else {
    size_t k = s.line(0).size();
    for (int ln = 1; ln < L && rep.size_witness.empty(); ++ln)
      if (s.line(ln).size() != k)
        rep.size_witness = "lines of sizes " + std::to_string(k) + " and " +
                           std::to_string(s.line(ln).size());
    if (rep.size_witness.empty()) {
      uint64_t q = uint64_t(k) - 1;
      if (q < 2) {
        rep.size_witness = "line size below three";
      } else if (uint64_t(n) != q * q + q + 1 || uint64_t(L) != q * q + q + 1) {
        rep.size_witness = "counts " + std::to_string(n) + " points, " +
                           std::to_string(L) + " lines do not fit order " +
                           std::to_string(q);
      } else {
        for (int u = 0; u < n && rep.size_witness.empty(); ++u)
          if (s.point_lines(u).size() != k)
            rep.size_witness = "point " + s.describe_point(u) + " lies on " +
                               std::to_string(s.point_lines(u).size()) + " lines";
      }
      if (rep.size_witness.empty()) rep.order = uint32_t(q);
    }
  }

  rep.is_plane = rep.pair_witness.empty() && rep.line_pair_witness.empty() &&
                 rep.size_witness.empty();

  rep.desargues_requested = desargues_samples;
  if (rep.is_plane && desargues_samples > 0) {
    std::mt19937_64 rng(seed);
    auto pick = [&](size_t m) { return size_t(rng() % uint64_t(m)); };
    long attempts = 0;
    const long attempt_cap = 50L * desargues_samples + 100;
    while (rep.desargues_checked < desargues_samples && attempts < attempt_cap) {
      ++attempts;
      int o = int(pick(size_t(n)));
      const auto& lo = s.point_lines(o);
      if (lo.size() < 3) continue;
      size_t i1 = pick(lo.size()), i2 = pick(lo.size()), i3 = pick(lo.size());
      if (i1 == i2 || i1 == i3 || i2 == i3) continue;
      int a[3], b[3];
      bool ok = true;
      int legs[3] = {lo[i1], lo[i2], lo[i3]};
      for (int t = 0; t < 3; ++t) {
        const auto& l = s.line(legs[t]);
        size_t j1 = pick(l.size()), j2 = pick(l.size());
        if (j1 == j2 || l[j1] == o || l[j2] == o) {
          ok = false;
          break;
        }
        a[t] = l[j1];
        b[t] = l[j2];
      }
      if (!ok) continue;
      if (s.collinear3(a[0], a[1], a[2]) || s.collinear3(b[0], b[1], b[2])) continue;
      int c[3];
      for (int t = 0; t < 3; ++t) {
        int u1 = a[(t + 1) % 3], u2 = a[(t + 2) % 3];
        int v1 = b[(t + 1) % 3], v2 = b[(t + 2) % 3];
        int la = s.line_through_pair(u1, u2);
        int lb = s.line_through_pair(v1, v2);
        if (la < 0 || lb < 0 || la == lb) {
          ok = false;
          break;
        }
        c[t] = single_meet(s.line(la), s.line(lb));
        if (c[t] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      ++rep.desargues_checked;
      if (!s.collinear3(c[0], c[1], c[2])) {
        ++rep.desargues_failed;
        if (rep.desargues_witness.empty())
          rep.desargues_witness = "meets " + s.describe_point(c[0]) + ", " +
                                  s.describe_point(c[1]) + ", " +
                                  s.describe_point(c[2]) + " not collinear";
      }
    }
    if (rep.desargues_failed > 0) rep.is_plane = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> point_signature(const IncidenceStructure& s, int pt) {
  std::vector<int> sig;
  for (int ln : s.point_lines(pt)) sig.push_back(int(s.line(ln).size()));
  std::sort(sig.begin(), sig.end());
  return sig;
}

struct IsoState {
  const IncidenceStructure* a;
  const IncidenceStructure* b;
  std::vector<std::vector<int>> cands;  // per a-point, sorted b-point candidates
  std::vector<int> order;               // a-points, most constrained first
  std::vector<int> map_ab;              // a-point -> b-point or -1
  std::vector<char> used_b;
  std::vector<int> line_ab;  // a-line -> b-line or -1
  std::vector<int> line_ba;

  bool consistent(int u, int v, std::vector<int>* touched) {
    for (int d = 0; d < int(order.size()); ++d) {
      int u2 = order[size_t(d)];
      int v2 = map_ab[size_t(u2)];
      if (v2 < 0 || u2 == u) continue;
      int la = a->line_through_pair(u, u2);
      int lb = b->line_through_pair(v, v2);
      if ((la < 0) != (lb < 0)) return false;
      if (la < 0) continue;
      if (a->line(la).size() != b->line(lb).size()) return false;
      if (line_ab[size_t(la)] >= 0) {
        if (line_ab[size_t(la)] != lb) return false;
      } else {
        if (line_ba[size_t(lb)] >= 0) return false;
        line_ab[size_t(la)] = lb;
        line_ba[size_t(lb)] = la;
        touched->push_back(la);
      }
    }
    return true;
  }

  bool search(size_t depth) {
    if (depth == order.size()) return true;
    int u = order[depth];
    for (int v : cands[size_t(u)]) {
      if (used_b[size_t(v)]) continue;
      std::vector<int> touched;
      if (consistent(u, v, &touched)) {
        map_ab[size_t(u)] = v;
        used_b[size_t(v)] = 1;
        if (search(depth + 1)) return true;
        map_ab[size_t(u)] = -1;
        used_b[size_t(v)] = 0;
      }
      for (int la : touched) {
        line_ba[size_t(line_ab[size_t(la)])] = -1;
        line_ab[size_t(la)] = -1;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> iso_find(const IncidenceStructure& a,
                                         const IncidenceStructure& b,
                                         int max_points) {
  if (a.num_points() > max_points || b.num_points() > max_points)
    throw Error(Errc::TooLarge, "isomorphism search bound exceeded");
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines())
    return std::nullopt;
  int n = a.num_points();
  if (n == 0) return std::vector<int>{};

  std::vector<std::vector<int>> sig_b;
  sig_b.resize(size_t(n));
  for (int v = 0; v < n; ++v) sig_b[size_t(v)] = point_signature(b, v);

  IsoState st;
  st.a = &a;
  st.b = &b;
  st.cands.resize(size_t(n));
  for (int u = 0; u < n; ++u) {
    auto sig = point_signature(a, u);
    for (int v = 0; v < n; ++v)
      if (sig_b[size_t(v)] == sig) st.cands[size_t(u)].push_back(v);
    if (st.cands[size_t(u)].empty()) return std::nullopt;
  }

  st.order.resize(size_t(n));
  for (int u = 0; u < n; ++u) st.order[size_t(u)] = u;
  std::stable_sort(st.order.begin(), st.order.end(), [&](int x, int y) {
    return st.cands[size_t(x)].size() < st.cands[size_t(y)].size();
  });
  st.map_ab.assign(size_t(n), -1);
  st.used_b.assign(size_t(n), 0);
  st.line_ab.assign(size_t(a.num_lines()), -1);
  st.line_ba.assign(size_t(b.num_lines()), -1);

  if (!st.search(0)) return std::nullopt;
  return st.map_ab;
}

}  // namespace harmonic
