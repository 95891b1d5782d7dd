#include "harmonic/sequences.hpp"

#include <algorithm>
#include <string>

#include "harmonic/closure.hpp"
#include "harmonic/constructions.hpp"
#include "harmonic/errors.hpp"
#include "harmonic/harmonic_core.hpp"
#include "harmonic/incidence.hpp"

namespace harmonic {

SequenceResult conjugate_sequence(const Plane& pl, int base, int a0, int a1, int limit) {
  if (base == a0 || base == a1 || a0 == a1)
    throw Error(Errc::DegeneratePoints, "sequence needs three distinct points");
  const int ln = pl.line_through(base, a0);
  if (!pl.incident(a1, ln))
    throw Error(Errc::NotCollinear, "sequence seed points are not collinear");
  if (limit <= 0) limit = int(pl.order()) + 2;

  SequenceResult res;
  res.base = base;
  res.terms = {a0, a1};
  while (int(res.terms.size()) < limit) {
    const int i = int(res.terms.size()) - 1;
    const int next = pl.conj_on_line(ln, base, res.terms[size_t(i)], res.terms[size_t(i) - 1]);
    if (next == base || next == res.terms[size_t(i)])
      throw Error(Errc::DegenerateStep,
                  "term " + std::to_string(i + 1) + " collides with the pair");
    for (int m = 0; m <= i; ++m)
      if (res.terms[size_t(m)] == next) {
        res.modular = true;
        res.repeat_index = i + 1;
        res.matched_index = m;
        res.period = i + 1 - m;
        break;
      }
    res.terms.push_back(next);
    if (res.modular) break;
  }
  return res;
}

NetResult moebius_net(const Plane& pl, const std::vector<int>& seed) {
  std::vector<int> pts = seed;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3)
    throw Error(Errc::BadArgument, "net seed needs at least three distinct points");
  const int ln = pl.line_through(pts[0], pts[1]);
  for (int p : pts)
    if (!pl.incident(p, ln))
      throw Error(Errc::NotCollinear, "net seed points are not collinear");

  NetResult res;
  ClosureTrace tr = h_closure(pl, PointSet::of(pl.num_points(), pts));
  res.net = tr.final_set;
  res.seed_closed = tr.stages == 0;
  return res;
}

namespace {

bool coll3(const Plane& pl, int x, int y, int z) {
  if (x == y || x == z || y == z) return false;
  return pl.incident(z, pl.line_through(x, y));
}

}  // namespace

SequencePlaneCheck sequence_plane_check(const Plane& pl, int base, int a0, int a1,
                                        int limit, int witness_index) {
  SequencePlaneCheck chk;
  chk.seq = conjugate_sequence(pl, base, a0, a1, limit);
  if (!chk.seq.modular)
    throw Error(Errc::NotModular, "no repeat within " +
                                      std::to_string(chk.seq.terms.size()) + " terms");

  const int n = chk.seq.period;
  chk.n = n;
  chk.n_prime = is_prime(uint64_t(n));
  chk.first_repeat_is_b0 = chk.seq.matched_index == 0;
  chk.d = base;
  chk.b.assign(chk.seq.terms.begin(), chk.seq.terms.begin() + n);

  const IncidenceStructure& amb = pl.structure();
  std::vector<HPWitness> ws = hp_search(amb, chk.d, chk.b[0], chk.b[1]);
  chk.witnesses_total = int(ws.size());
  if (ws.empty()) return chk;
  if (witness_index < 0 || witness_index >= int(ws.size()))
    throw Error(Errc::BadArgument, "witness index out of range");
  const HPWitness& w = ws[size_t(witness_index)];
  chk.c1 = w.o;
  chk.c0 = w.q;
  chk.a.assign(size_t(n), -1);
  chk.a[0] = w.s;
  chk.a[1] = w.r;

  const int la = pl.line_through(chk.d, chk.a[0]);
  chk.a_collinear_with_d = pl.incident(chk.a[1], la);
  for (int t = 2; t < n && chk.a_collinear_with_d; ++t)
    chk.a[size_t(t)] = pl.conj_on_line(la, chk.d, chk.a[size_t(t) - 1], chk.a[size_t(t) - 2]);
  if (!chk.a_collinear_with_d) return chk;

  chk.cycle_lines = coll3(pl, chk.c0, chk.c1, chk.d);
  for (int t = 0; t < n; ++t) {
    chk.cycle_lines = chk.cycle_lines && coll3(pl, chk.a[size_t(t)], chk.b[size_t(t)], chk.c0);
    chk.cycle_lines =
        chk.cycle_lines && coll3(pl, chk.a[size_t(t)], chk.b[size_t((t + 1) % n)], chk.c1);
  }

  std::vector<int> roles;
  roles.push_back(chk.d);
  roles.insert(roles.end(), chk.a.begin(), chk.a.end());
  roles.insert(roles.end(), chk.b.begin(), chk.b.end());
  roles.push_back(chk.c0);
  roles.push_back(chk.c1);
  std::vector<int> keep = roles;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  chk.points_distinct = int(keep.size()) == 2 * n + 3;

  if (chk.points_distinct) {
    auto local = [&](int id) {
      return int(std::lower_bound(keep.begin(), keep.end(), id) - keep.begin());
    };
    std::vector<std::vector<int>> expected;
    std::vector<int> aline{local(chk.d)}, bline{local(chk.d)};
    for (int t = 0; t < n; ++t) {
      aline.push_back(local(chk.a[size_t(t)]));
      bline.push_back(local(chk.b[size_t(t)]));
    }
    expected.push_back(aline);
    expected.push_back(bline);
    expected.push_back({local(chk.c0), local(chk.c1), local(chk.d)});
    for (int t = 0; t < n; ++t) {
      expected.push_back({local(chk.a[size_t(t)]), local(chk.b[size_t(t)]), local(chk.c0)});
      expected.push_back(
          {local(chk.a[size_t(t)]), local(chk.b[size_t((t + 1) % n)]), local(chk.c1)});
    }
    for (auto& l : expected) std::sort(l.begin(), l.end());
    std::sort(expected.begin(), expected.end());

    IncidenceStructure sub = amb.restrict(PointSet::of(amb.num_points(), keep));
    chk.restriction_matches = sub.lines() == expected;
    chk.restriction_isomorphic = iso_find(sub, reid(uint32_t(n)).inc).has_value();
  }

  const std::vector<int> seven{chk.d,          chk.b[0], chk.b[1], chk.c1,
                               chk.c0,         chk.a[1], chk.a[0]};
  ClosureTrace tr7 = h_closure(pl, PointSet::of(pl.num_points(), seven));
  chk.closure7 = tr7.final_set;
  chk.closure_stages = tr7.stages;
  chk.closure_all = h_closure(pl, PointSet::of(pl.num_points(), roles)).final_set;
  chk.closures_equal = chk.closure7 == chk.closure_all;

  IncidenceStructure grown = amb.restrict(chk.closure7);
  PlaneCheckReport pc = plane_check(grown);
  chk.plane = pc.is_plane;
  chk.plane_order = pc.order;
  chk.plane_points = chk.closure7.count();

  std::vector<int> netpts{chk.d};
  netpts.insert(netpts.end(), chk.b.begin(), chk.b.end());
  chk.net_closed = moebius_net(pl, netpts).seed_closed;

  chk.ok = chk.n_prime && chk.first_repeat_is_b0 && chk.witnesses_total > 0 &&
           chk.a_collinear_with_d && chk.cycle_lines && chk.points_distinct &&
           chk.restriction_matches && chk.restriction_isomorphic && chk.closures_equal &&
           chk.plane && chk.plane_order == n && chk.net_closed;
  return chk;
}

}  // namespace harmonic
