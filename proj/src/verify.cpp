#include "harmonic/verify.hpp"

#include <chrono>
#include <random>
#include <string>

#include "harmonic/closure.hpp"
#include "harmonic/constructions.hpp"
#include "harmonic/errors.hpp"
#include "harmonic/harmonic_core.hpp"
#include "harmonic/incidence.hpp"
#include "harmonic/sequences.hpp"

namespace harmonic {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Falsified: return "falsified";
    case Verdict::Observed: return "observed";
    case Verdict::Error: return "error";
  }
  return "error";
}

namespace {

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

FieldPtr field_of_order(uint32_t q) {
  for (uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    uint32_t t = q, m = 0;
    while (t % p == 0) {
      t /= p;
      ++m;
    }
    if (t != 1)
      throw Error(Errc::UnsupportedOrder, std::to_string(q) + " is not a prime power");
    return Field::make(p, m);
  }
  throw Error(Errc::UnsupportedOrder, "order must be at least 2");
}

std::vector<int> embedded_ids(const Plane& pl, const LabeledStructure& ls) {
  std::vector<int> ids;
  ids.reserve(ls.coords.size());
  for (const ProjPoint& pt : ls.coords) ids.push_back(pl.index_of(pt));
  return ids;
}

}  // namespace

VerificationReport verify_theorem_pp(uint32_t p, uint64_t seed) {
  Timer timer;
  VerificationReport rep;
  rep.claim = "theorem-pp";
  rep.seed = seed;

  Plane pl(Field::make(p));
  const int n = pl.num_points();
  LabeledStructure seed_cfg = lp(p);
  PointSet S0 = PointSet::of(n, embedded_ids(pl, seed_cfg));

  ClosureTrace tr = h_closure(pl, S0);
  rep.stages = tr.stages;
  const bool full = tr.final_set == PointSet::full(n);

  PlaneCheckReport pc = plane_check(pl.structure().restrict(tr.final_set), 200, seed);
  const bool plane_ok = pc.is_plane && pc.order == p;

  // each 3-point leg-crossing line must close to its full coordinate line,
  // which is also its flat closure cut down to the big closure
  bool lines_ok = true;
  std::string line_fail;
  for (uint32_t j = 0; j < p && lines_ok; ++j)
    for (uint32_t i = 0; i < p && lines_ok; ++i) {
      const Field& F = pl.field();
      std::vector<int> three{
          pl.index_of(ProjPoint::make(F, {0, i, 1})),
          pl.index_of(ProjPoint::make(F, {1, (i + j) % p, 1})),
          pl.index_of(ProjPoint::make(F, {1, j, 0}))};
      PointSet S3 = PointSet::of(n, three);
      const int ln = pl.index_of(ProjLine::make(F, {j, p - 1, i}));
      PointSet expected = PointSet::of(n, pl.line_points(ln));
      PointSet grown = h_closure(pl, S3).final_set;
      PointSet cut = pl.structure().flat_closure(S3);
      cut &= tr.final_set;
      if (grown != expected || cut != expected) {
        lines_ok = false;
        line_fail = "line <" + std::to_string(j) + ",-1," + std::to_string(i) + ">";
      }
    }

  rep.size("seed", S0.count());
  rep.size("closure", tr.final_set.count());
  rep.size("plane_points", n);
  rep.size("order", pc.order);
  rep.size("line_closures", long(p) * long(p));
  if (full && plane_ok && lines_ok) {
    rep.verdict = Verdict::Verified;
  } else {
    rep.verdict = Verdict::Falsified;
    if (!full)
      rep.counterexample = "closure has " + std::to_string(tr.final_set.count()) +
                           " of " + std::to_string(n) + " points";
    else if (!plane_ok)
      rep.counterexample = "plane axioms: " + pc.pair_witness + pc.line_pair_witness +
                           pc.size_witness + pc.desargues_witness;
    else
      rep.counterexample = line_fail;
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

VerificationReport verify_minimality(uint32_t p, uint64_t seed) {
  Timer timer;
  VerificationReport rep;
  rep.claim = "minimality";
  rep.seed = seed;

  Plane pl(Field::make(p));
  const int n = pl.num_points();
  LabeledStructure cycle = reid_in_lp(p);
  LabeledStructure legs = lp(p);
  std::vector<int> cycle_ids = embedded_ids(pl, cycle);
  PointSet SR = PointSet::of(n, cycle_ids);
  PointSet SL = PointSet::of(n, embedded_ids(pl, legs));

  ClosureTrace trR = h_closure(pl, SR);
  ClosureTrace trL = h_closure(pl, SL);
  rep.stages = trR.stages;
  const bool closures_equal = trR.final_set == trL.final_set;

  bool all_proper = true;
  rep.size("seed", SR.count());
  rep.size("closure", trR.final_set.count());
  for (size_t d = 0; d < cycle_ids.size(); ++d) {
    PointSet S = SR;
    S.reset(cycle_ids[d]);
    PointSet grown = h_closure(pl, S).final_set;
    const bool proper = grown.subset_of(trR.final_set) && grown != trR.final_set;
    rep.size("del_" + cycle.inc.point_label(int(d)), grown.count());
    if (!proper) {
      all_proper = false;
      if (rep.counterexample.empty())
        rep.counterexample = "deleting " + cycle.inc.point_label(int(d)) +
                             " still closes to the full set";
    }
  }

  if (closures_equal && all_proper) {
    rep.verdict = Verdict::Verified;
  } else {
    rep.verdict = Verdict::Falsified;
    if (!closures_equal)
      rep.counterexample = "cycle seed closure differs from the three-leg closure";
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

namespace {

struct LawCounts {
  long triples = 0;
  long witnesses = 0;
  long involution = 0;
  long reciprocity = 0;
  long transfer = 0;
  long side = 0;
  long diagonal = 0;
  long labeling = 0;
  std::string first_fail;

  long failures() const {
    return involution + reciprocity + transfer + side + diagonal + labeling;
  }
  void note(bool ok, long& counter, const std::string& what) {
    if (ok) return;
    ++counter;
    if (first_fail.empty()) first_fail = what;
  }
};

void check_laws(const Plane& pl, int y, int x, int z, const HPWitness& w, LawCounts& c) {
  const IncidenceStructure& s = pl.structure();
  ++c.witnesses;
  const int xp = pl.meet_of(pl.line_through(y, z), pl.line_through(w.o, w.r));
  const std::string at = "triple (" + s.describe_point(y) + "," + s.describe_point(x) +
                         "," + s.describe_point(z) + ") witness (" + s.describe_point(w.o) +
                         "," + s.describe_point(w.q) + "," + s.describe_point(w.r) + "," +
                         s.describe_point(w.s) + ")";

  auto conj = [&](int py, int pz, int px) {
    auto r = conjugate_first(s, py, pz, px);
    return r ? *r : -1;
  };

  c.note(conj(y, z, xp) == x, c.involution, "involution at " + at);
  if (xp != x) c.note(conj(x, xp, y) == z, c.reciprocity, "reciprocity at " + at);

  const int t = conj(y, w.r, w.s);
  c.note(t >= 0 && s.collinear3(w.q, t, xp), c.transfer, "transfer at " + at);

  const int q1 = conj(y, w.o, w.q);
  const int q2 = conj(z, w.r, w.q);
  c.note(q1 >= 0 && q2 >= 0 && s.collinear3(w.s, xp, q1) && s.collinear3(w.s, xp, q2),
         c.side, "side conjugates at " + at);

  const int u = conj(w.o, w.r, xp);
  c.note(u >= 0 && s.collinear3(w.q, x, u), c.diagonal, "diagonal at " + at);

  const HPClass want = w.fano ? HPClass::Fano : HPClass::NonFano;
  const bool relabels =
      hp_classify(s, {y, w.s, w.r, xp, z, w.q, w.o}).cls == want &&
      hp_classify(s, {y, w.q, w.o, xp, z, w.s, w.r}).cls == want &&
      hp_classify(s, {y, xp, z, w.q, w.o, w.s, w.r}).cls == want;
  c.note(relabels, c.labeling, "relabeled quadrangles at " + at);
}

void fill_law_report(VerificationReport& rep, const LawCounts& c) {
  rep.size("triples", c.triples);
  rep.size("witnesses", c.witnesses);
  rep.size("involution_failures", c.involution);
  rep.size("reciprocity_failures", c.reciprocity);
  rep.size("transfer_failures", c.transfer);
  rep.size("side_failures", c.side);
  rep.size("diagonal_failures", c.diagonal);
  rep.size("labeling_failures", c.labeling);
  rep.verdict = c.failures() == 0 ? Verdict::Verified : Verdict::Falsified;
  rep.counterexample = c.first_fail;
}

}  // namespace

VerificationReport verify_conjugation(uint32_t q, long samples, uint64_t seed) {
  Timer timer;
  VerificationReport rep;
  rep.claim = "conjugation-laws";
  rep.seed = seed;

  Plane pl(field_of_order(q));
  const IncidenceStructure& s = pl.structure();
  LawCounts counts;

  if (samples <= 0) {
    for (int ln = 0; ln < pl.num_lines(); ++ln) {
      const std::vector<int>& pts = pl.line_points(ln);
      for (int y : pts)
        for (int x : pts)
          for (int z : pts) {
            if (y == x || y == z || x == z) continue;
            ++counts.triples;
            for (const HPWitness& w : hp_search(s, y, x, z)) check_laws(pl, y, x, z, w, counts);
          }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_line(0, pl.num_lines() - 1);
    std::uniform_int_distribution<int> pick_pt(0, int(pl.order()));
    for (long it = 0; it < samples; ++it) {
      const std::vector<int>& pts = pl.line_points(pick_line(rng));
      int iy = pick_pt(rng), ix = pick_pt(rng), iz = pick_pt(rng);
      while (ix == iy) ix = pick_pt(rng);
      while (iz == iy || iz == ix) iz = pick_pt(rng);
      const int y = pts[size_t(iy)], x = pts[size_t(ix)], z = pts[size_t(iz)];
      ++counts.triples;
      std::vector<HPWitness> ws = hp_search(s, y, x, z);
      if (ws.empty()) {
        counts.note(false, counts.involution, "no witness for a plane triple");
        continue;
      }
      std::uniform_int_distribution<size_t> pick_w(0, ws.size() - 1);
      check_laws(pl, y, x, z, ws[pick_w(rng)], counts);
    }
  }

  fill_law_report(rep, counts);
  rep.elapsed_ms = timer.ms();
  return rep;
}

VerificationReport verify_agreement(uint32_t q, long samples, uint64_t seed) {
  Timer timer;
  VerificationReport rep;
  rep.claim = "oracle-agreement";
  rep.seed = seed;

  Plane pl(field_of_order(q));
  const IncidenceStructure& s = pl.structure();
  long triples = 0, witnesses = 0, failures = 0;
  std::string first_fail;

  auto check = [&](int y, int x, int z) {
    ++triples;
    ConjugateResult res = conjugate_search(s, y, z, x);
    witnesses += res.witnesses;
    const int want = pl.index_of(
        harmonic_conjugate_cr(pl.point(y), pl.point(z), pl.point(x)));
    const bool ok = res.status == ConjStatus::Unique && res.point == want;
    if (!ok) {
      ++failures;
      if (first_fail.empty())
        first_fail = "triple (" + s.describe_point(y) + "," + s.describe_point(x) + "," +
                     s.describe_point(z) + ") status " +
                     std::to_string(int(res.status)) + " point " +
                     (res.point >= 0 ? s.describe_point(res.point) : "none") +
                     " expected " + s.describe_point(want);
    }
  };

  if (samples <= 0) {
    for (int ln = 0; ln < pl.num_lines(); ++ln) {
      const std::vector<int>& pts = pl.line_points(ln);
      for (int y : pts)
        for (int x : pts)
          for (int z : pts) {
            if (y == x || y == z || x == z) continue;
            check(y, x, z);
          }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_line(0, pl.num_lines() - 1);
    std::uniform_int_distribution<int> pick_pt(0, int(pl.order()));
    for (long it = 0; it < samples; ++it) {
      const std::vector<int>& pts = pl.line_points(pick_line(rng));
      int iy = pick_pt(rng), ix = pick_pt(rng), iz = pick_pt(rng);
      while (ix == iy) ix = pick_pt(rng);
      while (iz == iy || iz == ix) iz = pick_pt(rng);
      check(pts[size_t(iy)], pts[size_t(ix)], pts[size_t(iz)]);
    }
  }

  rep.size("triples", triples);
  rep.size("witnesses", witnesses);
  rep.size("failures", failures);
  rep.verdict = failures == 0 ? Verdict::Verified : Verdict::Falsified;
  rep.counterexample = first_fail;
  rep.elapsed_ms = timer.ms();
  return rep;
}

VerificationReport verify_sequence_plane(const Plane& pl, int base, int a0, int a1,
                                         int limit, uint64_t seed) {
  Timer timer;
  VerificationReport rep;
  rep.claim = "sequence-plane";
  rep.seed = seed;

  SequencePlaneCheck chk = sequence_plane_check(pl, base, a0, a1, limit);
  rep.stages = chk.closure_stages;
  rep.size("period", chk.n);
  rep.size("terms", long(chk.seq.terms.size()));
  rep.size("witnesses", chk.witnesses_total);
  rep.size("role_points", 2L * chk.n + 3);
  rep.size("closure", chk.plane_points);
  rep.size("plane_order", chk.plane_order);

  if (chk.ok) {
    rep.verdict = Verdict::Verified;
  } else {
    rep.verdict = Verdict::Falsified;
    std::string why;
    if (!chk.n_prime) why = "period is not prime";
    else if (!chk.first_repeat_is_b0) why = "first repeat is not the initial term";
    else if (chk.witnesses_total == 0) why = "no quadrangle completes the first triple";
    else if (!chk.a_collinear_with_d) why = "cycle points left the base line";
    else if (!chk.cycle_lines) why = "a cycle line is not collinear";
    else if (!chk.points_distinct) why = "role points collide";
    else if (!chk.restriction_matches) why = "restriction is not the cycle matroid";
    else if (!chk.restriction_isomorphic) why = "restriction not isomorphic to the cycle matroid";
    else if (!chk.closures_equal) why = "seven-point and full-role closures differ";
    else if (!chk.plane || chk.plane_order != chk.n) why = "closure fails the plane axioms";
    else why = "sequence point set is not harmonically closed";
    rep.counterexample = why;
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

}  // namespace harmonic
