#include "harmonic/synthesis.hpp"

#include <string>

#include "harmonic/harmonic_core.hpp"
#include "harmonic/incidence.hpp"
#include "harmonic/pointset.hpp"

namespace harmonic {

namespace {

struct Builder {
  const Plane& pl;
  const Field& F;
  long p;
  std::vector<int> a_id;                // [0,y,1]
  int d_id;                             // [0,1,0]
  std::vector<std::vector<int>> aff;    // aff[z][y] = id of [1,y,z], -1 unbuilt
  PointSet built;
  SynthesisCertificate cert;

  explicit Builder(const Plane& plane)
      : pl(plane), F(plane.field()), p(long(plane.order())), built(plane.num_points()) {
    cert.p = uint32_t(p);
    a_id.resize(size_t(p));
    aff.assign(size_t(p), std::vector<int>(size_t(p), -1));
    for (long y = 0; y < p; ++y) {
      a_id[size_t(y)] = pl.index_of(ProjPoint::make(F, {0, uint32_t(y), 1}));
      aff[1][size_t(y)] = pl.index_of(ProjPoint::make(F, {1, uint32_t(y), 1}));
      aff[0][size_t(y)] = pl.index_of(ProjPoint::make(F, {1, uint32_t(y), 0}));
      built.set(a_id[size_t(y)]);
      built.set(aff[1][size_t(y)]);
      built.set(aff[0][size_t(y)]);
    }
    d_id = pl.index_of(ProjPoint::make(F, {0, 1, 0}));
    built.set(d_id);
  }

  uint32_t md(long v) const {
    long r = v % p;
    return uint32_t(r < 0 ? r + p : r);
  }
  // row index of the points [1, *, -k]
  uint32_t rz(long k) const { return md(-k); }

  [[noreturn]] void fail(std::string what) {
    cert.failure = what;
    throw ClaimFailedError(std::move(what), std::move(cert));
  }

  // One shifted conjugation of the (k, i, j) construction; checked against
  // the quadrangle that justifies it.
  ConjugationStep step(long k, long i, long j, long s, bool& quad_ok, bool& meet_ok) {
    const int ys = a_id[md(i + s)];
    const int zs = aff[rz(k - 1)][md(j - (k - 1) * i + s)];
    const int bs = aff[rz(k - 2)][md(j - (k - 2) * i + 2 * s)];
    const int base = pl.line_through(ys, zs);
    if (!pl.incident(bs, base))
      fail("base triple not collinear at k=" + std::to_string(k) + " i=" + std::to_string(i) +
           " j=" + std::to_string(j) + " s=" + std::to_string(s));
    ConjugationStep st;
    st.line = base;
    st.pair_a = ys;
    st.pair_b = zs;
    st.middle = bs;
    st.result = pl.conj_on_line(base, ys, zs, bs);

    const int o = a_id[size_t(md(i))];
    const int r = aff[rz(k - 1)][md(j - (k - 1) * i)];
    const int srole = aff[rz(k - 2)][md(j - (k - 2) * i + s)];
    HPClassification cls = hp_classify(pl.structure(), {ys, bs, zs, o, d_id, r, srole});
    quad_ok = quad_ok && cls.cls == HPClass::NonFano;
    const int diag = pl.line_through(o, r);
    meet_ok = meet_ok && diag != base && pl.meet_of(base, diag) == st.result;
    return st;
  }

  SynthesizedPoint construct(long k, long i, long j) {
    SynthesizedPoint sp;
    sp.i = uint32_t(i);
    sp.j = uint32_t(j);
    sp.agreement = true;
    sp.quadrangle = true;
    sp.meet = true;
    for (long s = 1; s < p; ++s) {
      ConjugationStep st = step(k, i, j, s, sp.quadrangle, sp.meet);
      if (sp.steps.empty())
        sp.point = st.result;
      else if (st.result != sp.point)
        sp.agreement = false;
      sp.steps.push_back(st);
    }
    sp.name = pl.point(sp.point).str();

    // the p coordinate lines indexed by t all pass through the point, and
    // being distinct they meet exactly there
    sp.line_intersection = true;
    int first_ln = -1;
    bool two_lines = false;
    for (long t = 0; t < p; ++t) {
      ProjLine l = ProjLine::make(F, {md(j + k * t), md(-1), md(i + t)});
      const int ln = pl.index_of(l);
      if (!pl.incident(sp.point, ln)) sp.line_intersection = false;
      if (first_ln < 0)
        first_ln = ln;
      else if (ln != first_ln)
        two_lines = true;
    }
    sp.line_intersection = sp.line_intersection && two_lines;

    sp.cross_collinear = true;
    for (long t = 0; t < p; ++t) {
      const int ap = a_id[md(i + t)];
      const int cp = aff[0][md(j + k * t)];
      if (!pl.incident(sp.point, pl.line_through(ap, cp))) sp.cross_collinear = false;
    }

    sp.name_match =
        sp.point == pl.index_of(ProjPoint::make(F, {1, md(j - k * i), rz(k)}));
    return sp;
  }

  void run_stage(long k) {
    SynthesisStage stage;
    stage.k = int(k);
    stage.row_points.assign(size_t(p), -1);
    stage.row_consistent = true;
    for (long i = 0; i < p; ++i)
      for (long j = 0; j < p; ++j) {
        SynthesizedPoint sp = construct(k, i, j);
        const uint32_t row = md(j - k * i);
        int& slot = stage.row_points[size_t(row)];
        if (slot < 0)
          slot = sp.point;
        else if (slot != sp.point)
          stage.row_consistent = false;
        const bool ok = sp.agreement && sp.quadrangle && sp.meet && sp.line_intersection &&
                        sp.cross_collinear && sp.name_match;
        stage.constructions.push_back(std::move(sp));
        if (!ok) {
          cert.stages.push_back(std::move(stage));
          fail("claim failed at k=" + std::to_string(k) + " i=" + std::to_string(i) +
               " j=" + std::to_string(j));
        }
      }

    stage.distinct = true;
    for (long t = 0; t < p; ++t) {
      const int id = stage.row_points[size_t(t)];
      if (id < 0 || built.test(id)) stage.distinct = false;
    }
    for (long t1 = 0; t1 < p && stage.distinct; ++t1)
      for (long t2 = t1 + 1; t2 < p; ++t2)
        if (stage.row_points[size_t(t1)] == stage.row_points[size_t(t2)])
          stage.distinct = false;

    const int axis = pl.line_through(stage.row_points[0], d_id);
    stage.axis_collinear = true;
    for (long t = 0; t < p; ++t)
      if (!pl.incident(stage.row_points[size_t(t)], axis)) stage.axis_collinear = false;

    const bool ok = stage.row_consistent && stage.distinct && stage.axis_collinear;
    cert.stages.push_back(std::move(stage));
    if (!ok) fail("stage claim failed at k=" + std::to_string(k));

    const SynthesisStage& done = cert.stages.back();
    for (long t = 0; t < p; ++t) {
      aff[rz(k)][size_t(t)] = done.row_points[size_t(t)];
      built.set(done.row_points[size_t(t)]);
    }
  }

  void run() {
    for (long k = 1; k <= p - 2; ++k) run_stage(k);

    // the k = p-1 pass must land back on the [1,*,1] seed row
    cert.wrap_consistent = true;
    const long k = p - 1;
    for (long i = 0; i < p; ++i)
      for (long j = 0; j < p; ++j)
        for (long s = 1; s < p; ++s) {
          bool quad_ok = true, meet_ok = true;
          ConjugationStep st = step(k, i, j, s, quad_ok, meet_ok);
          if (st.result != aff[1][md(j + i)]) cert.wrap_consistent = false;
        }
    if (!cert.wrap_consistent) fail("wrap pass left the seed row");

    cert.covered = built.count() == pl.num_points();
    if (!cert.covered) fail("synthesis missed plane points");
    cert.verified = true;
  }
};

}  // namespace

SynthesisCertificate staged_synthesis(const Plane& pl) {
  const uint32_t q = pl.order();
  if (pl.field().degree() != 1 || !is_prime(q))
    throw Error(Errc::BadArgument, "row synthesis needs a prime-order plane");
  if (q == 2) throw Error(Errc::BadArgument, "row synthesis needs an odd prime");
  Builder b(pl);
  b.run();
  return std::move(b.cert);
}

SynthesisCertificate staged_synthesis(uint32_t p) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeParameter, "plane order must be prime");
  Plane pl(Field::make(p));
  return staged_synthesis(pl);
}

}  // namespace harmonic
