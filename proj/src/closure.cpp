#include "harmonic/closure.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "harmonic/errors.hpp"

namespace harmonic {

namespace {

// Adapters giving the engine a uniform view of the two ambient kinds.
// Bucket entries are line parameters for the coordinate plane (conjugation
// is then pure field arithmetic) and point ids for abstract structures.

struct PlaneOps {
  const Plane* pl;

  int num_points() const { return pl->num_points(); }
  int num_lines() const { return pl->num_lines(); }
  const std::vector<int>& lines_through(int pt) const { return pl->point_lines(pt); }
  int line_size(int) const { return int(pl->order()) + 1; }
  int entry(int ln, int pt) const { return int(pl->param_on_line(ln, pt)); }
  int entry_point(int ln, int e) const { return pl->point_at_param(ln, uint32_t(e)); }
  int conj(int ln, int a, int c, int b) const {
    return pl->point_at_param(ln, pl->conj_param(uint32_t(a), uint32_t(c), uint32_t(b)));
  }
};

struct AbstractOps {
  const IncidenceStructure* s;

  int num_points() const { return s->num_points(); }
  int num_lines() const { return s->num_lines(); }
  const std::vector<int>& lines_through(int pt) const { return s->point_lines(pt); }
  int line_size(int ln) const { return int(s->line(ln).size()); }
  int entry(int, int pt) const { return pt; }
  int entry_point(int, int e) const { return e; }
  int conj(int, int a, int c, int b) const {
    auto r = conjugate_first(*s, a, c, b);
    return r ? *r : -1;
  }
};

void check_capacity(int have, int want) {
  if (have != want)
    throw Error(Errc::BadArgument, "point set sized for " + std::to_string(have) +
                                       " points in an ambient with " +
                                       std::to_string(want));
}

// A line fully contained in S is inert: every conjugate taken on it lands on
// the line itself, hence inside S. Such buckets are skipped unprocessed.

template <class Ops>
PointSet step_once(const Ops& ops, const PointSet& S) {
  check_capacity(S.capacity(), ops.num_points());
  const int L = ops.num_lines();
  std::vector<std::vector<int>> bucket;
  bucket.resize(size_t(L));
  for (int pt : S.to_vector())
    for (int ln : ops.lines_through(pt)) bucket[size_t(ln)].push_back(ops.entry(ln, pt));

  PointSet out = S;
  for (int ln = 0; ln < L; ++ln) {
    const auto& B = bucket[size_t(ln)];
    const int sz = int(B.size());
    if (sz < 3 || sz == ops.line_size(ln)) continue;
    for (int k = 2; k < sz; ++k)
      for (int i = 0; i + 1 < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          const int ea = B[size_t(i)], eb = B[size_t(j)], ec = B[size_t(k)];
          const int trial[3][3] = {{eb, ec, ea}, {ea, ec, eb}, {ea, eb, ec}};
          for (const auto& t : trial) {
            const int cp = ops.conj(ln, t[0], t[1], t[2]);
            if (cp >= 0) out.set(cp);
          }
        }
  }
  return out;
}

template <class Ops>
ClosureTrace run_closure(const Ops& ops, const PointSet& S0, const ClosureOptions& options) {
  const int n = ops.num_points();
  check_capacity(S0.capacity(), n);
  const int L = ops.num_lines();

  ClosureTrace tr;
  tr.initial = S0;
  PointSet S = S0;

  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  std::vector<std::vector<int>> bucket;
  bucket.resize(size_t(L));
  std::vector<int> processed(size_t(L), 0);
  auto append_point = [&](int pt) {
    for (int ln : ops.lines_through(pt)) bucket[size_t(ln)].push_back(ops.entry(ln, pt));
  };

  std::vector<int> seed_order = S0.to_vector();
  if (rng) std::shuffle(seed_order.begin(), seed_order.end(), *rng);
  for (int pt : seed_order) append_point(pt);

  std::vector<int> line_order(size_t(L), 0);
  std::iota(line_order.begin(), line_order.end(), 0);

  // Every stage that is not the last adds a point, so the ambient size is a
  // cap the default can never hit.
  const int cap = options.max_stages >= 0 ? options.max_stages : n;

  std::vector<int> found;
  std::vector<TraceAddition> adds;
  while (true) {
    if (rng) std::shuffle(line_order.begin(), line_order.end(), *rng);
    found.clear();
    adds.clear();
    PointSet seen = S;
    for (int ln : line_order) {
      auto& B = bucket[size_t(ln)];
      const int sz = int(B.size());
      const int m0 = processed[size_t(ln)];
      if (m0 == sz) continue;
      processed[size_t(ln)] = sz;
      if (sz == ops.line_size(ln)) continue;
      // new triples are exactly those whose top index is unprocessed
      for (int k = (m0 > 2 ? m0 : 2); k < sz; ++k)
        for (int i = 0; i + 1 < k; ++i)
          for (int j = i + 1; j < k; ++j) {
            const int ea = B[size_t(i)], eb = B[size_t(j)], ec = B[size_t(k)];
            const int trial[3][3] = {{eb, ec, ea}, {ea, ec, eb}, {ea, eb, ec}};
            for (const auto& t : trial) {
              const int cp = ops.conj(ln, t[0], t[1], t[2]);
              if (cp < 0 || seen.test(cp)) continue;
              seen.set(cp);
              found.push_back(cp);
              TraceAddition ta;
              ta.point = cp;
              ta.line = ln;
              ta.left = ops.entry_point(ln, t[0]);
              ta.right = ops.entry_point(ln, t[1]);
              ta.middle = ops.entry_point(ln, t[2]);
              adds.push_back(ta);
            }
          }
    }
    if (found.empty()) {
      tr.fixpoint = true;
      break;
    }
    if (tr.stages == cap) {
      tr.final_set = S;
      throw StageLimitError("stage limit " + std::to_string(cap) + " reached with " +
                                std::to_string(found.size()) + " points still pending",
                            tr);
    }
    ++tr.stages;
    for (auto& a : adds) {
      a.stage = tr.stages;
      tr.additions.push_back(a);
    }
    if (rng) std::shuffle(found.begin(), found.end(), *rng);
    for (int pt : found) {
      S.set(pt);
      append_point(pt);
    }
  }
  tr.final_set = S;
  return tr;
}

}  // namespace

AuditedAmbient::AuditedAmbient(const IncidenceStructure& s, int max_points) : s_(&s) {
  audit_ = harmonic_audit(s, max_points);
  if (audit_.verdict == AuditVerdict::NotHarmonic)
    throw Error(Errc::AmbientNotHarmonic,
                "conjugation is not single-valued in this structure: " + audit_.detail);
}

PointSet h_step(const Plane& pl, const PointSet& S) {
  return step_once(PlaneOps{&pl}, S);
}

PointSet h_step(const AuditedAmbient& amb, const PointSet& S) {
  return step_once(AbstractOps{&amb.structure()}, S);
}

ClosureTrace h_closure(const Plane& pl, const PointSet& S, const ClosureOptions& options) {
  return run_closure(PlaneOps{&pl}, S, options);
}

ClosureTrace h_closure(const AuditedAmbient& amb, const PointSet& S,
                       const ClosureOptions& options) {
  return run_closure(AbstractOps{&amb.structure()}, S, options);
}

}  // namespace harmonic
