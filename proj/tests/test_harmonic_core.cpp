#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "harmonic/constructions.hpp"
#include "harmonic/errors.hpp"
#include "harmonic/harmonic_core.hpp"
#include "harmonic/incidence.hpp"
#include "harmonic/projective.hpp"

using namespace harmonic;

namespace {

// Reference classifier, straight from the definition: role order
// (y, x, z, o, q, r, s), the six mandatory triples collinear, every other
// triple independent except {x, o, r}, whose collinearity decides the class.
const std::array<std::array<int, 3>, 6> kRequired = {{{0, 1, 2},
                                                      {0, 3, 4},
                                                      {0, 5, 6},
                                                      {2, 3, 6},
                                                      {2, 4, 5},
                                                      {1, 4, 6}}};
const std::array<int, 3> kDecider = {1, 3, 5};

HPClass hp_oracle(const IncidenceStructure& s, const std::array<int, 7>& t) {
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (t[size_t(i)] == t[size_t(j)]) return HPClass::NotHP;
  auto col = [&](const std::array<int, 3>& pos) {
    return s.collinear3(t[size_t(pos[0])], t[size_t(pos[1])], t[size_t(pos[2])]);
  };
  for (const auto& r : kRequired)
    if (!col(r)) return HPClass::NotHP;
  bool fano = false;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) {
        std::array<int, 3> pos = {a, b, c};
        if (std::find(kRequired.begin(), kRequired.end(), pos) != kRequired.end())
          continue;
        if (pos == kDecider) {
          fano = col(pos);
          continue;
        }
        if (col(pos)) return HPClass::NotHP;
      }
  return fano ? HPClass::Fano : HPClass::NonFano;
}

std::vector<HPWitness> search_oracle(const IncidenceStructure& s, int y, int x, int z) {
  std::vector<HPWitness> out;
  const int n = s.num_points();
  for (int o = 0; o < n; ++o) {
    if (o == y || o == x || o == z) continue;
    for (int q = 0; q < n; ++q) {
      if (q == y || q == x || q == z || q == o) continue;
      for (int r = 0; r < n; ++r) {
        if (r == y || r == x || r == z || r == o || r == q) continue;
        for (int w = 0; w < n; ++w) {
          if (w == y || w == x || w == z || w == o || w == q || w == r) continue;
          HPClass cls = hp_oracle(s, {y, x, z, o, q, r, w});
          if (cls == HPClass::NotHP) continue;
          out.push_back(HPWitness{o, q, r, w, cls == HPClass::Fano});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// flat of a pair: the stored line through it, or the pair itself
std::vector<int> pair_flat(const IncidenceStructure& s, int u, int v) {
  int ln = s.line_through_pair(u, v);
  if (ln >= 0) return s.line(ln);
  return {std::min(u, v), std::max(u, v)};
}

std::optional<int> meet_oracle(const IncidenceStructure& s, int y, int z, int o, int r) {
  std::vector<int> a = pair_flat(s, y, z);
  std::vector<int> b = pair_flat(s, o, r);
  std::optional<int> found;
  for (int p : a)
    if (std::find(b.begin(), b.end(), p) != b.end()) {
      REQUIRE_FALSE(found.has_value());
      found = p;
    }
  return found;
}

// conjugate_search recomputed from the oracle pieces
ConjugateResult conjugate_oracle(const IncidenceStructure& s, int y, int z, int x) {
  ConjugateResult res;
  std::set<int> meets;
  for (const HPWitness& w : search_oracle(s, y, x, z)) {
    ++res.witnesses;
    auto m = meet_oracle(s, y, z, w.o, w.r);
    if (!m) {
      ++res.witnesses_without_meet;
      continue;
    }
    meets.insert(*m);
  }
  if (meets.empty()) {
    res.status = ConjStatus::NoWitness;
  } else if (meets.size() == 1) {
    res.status = ConjStatus::Unique;
    res.point = *meets.begin();
  } else {
    res.status = ConjStatus::NonUnique;
  }
  return res;
}

AuditReport audit_oracle(const IncidenceStructure& s) {
  AuditReport rep;
  for (int ln = 0; ln < s.num_lines(); ++ln)
    for (int y : s.line(ln))
      for (int x : s.line(ln))
        for (int z : s.line(ln)) {
          if (y == x || x == z || y == z) continue;
          ++rep.collinear_triples;
          ConjugateResult res = conjugate_oracle(s, y, z, x);
          if (res.witnesses == 0) {
            ++rep.witnessless_triples;
            continue;
          }
          ++rep.triples_with_witness;
          if (res.witnesses_without_meet > 0) ++rep.partial_meet_triples;
          if (res.status == ConjStatus::NonUnique) ++rep.disagreements;
          else if (res.status == ConjStatus::NoWitness) ++rep.triples_without_conjugate;
          else if (res.point != x) rep.conjugate_is_identity = false;
        }
  if (rep.triples_with_witness == 0)
    rep.verdict = AuditVerdict::VacuouslyHarmonic;
  else if (rep.disagreements > 0 || rep.partial_meet_triples > 0)
    rep.verdict = AuditVerdict::NotHarmonic;
  else
    rep.verdict = AuditVerdict::Harmonic;
  return rep;
}

int idx(const LabeledStructure& s, const std::string& coord) {
  auto i = s.inc.point_by_label(parse_point(*s.field, coord).str());
  REQUIRE(i.has_value());
  return *i;
}

void check_search_everywhere(const IncidenceStructure& s) {
  for (int ln = 0; ln < s.num_lines(); ++ln)
    for (int y : s.line(ln))
      for (int x : s.line(ln))
        for (int z : s.line(ln)) {
          if (y == x || x == z || y == z) continue;
          CHECK(hp_search(s, y, x, z) == search_oracle(s, y, x, z));
        }
}

void check_audit(const IncidenceStructure& s) {
  AuditReport got = harmonic_audit(s);
  AuditReport want = audit_oracle(s);
  CHECK(got.verdict == want.verdict);
  CHECK(got.collinear_triples == want.collinear_triples);
  CHECK(got.triples_with_witness == want.triples_with_witness);
  CHECK(got.witnessless_triples == want.witnessless_triples);
  CHECK(got.triples_without_conjugate == want.triples_without_conjugate);
  CHECK(got.partial_meet_triples == want.partial_meet_triples);
  CHECK(got.disagreements == want.disagreements);
  CHECK(got.conjugate_is_identity == want.conjugate_is_identity);
}

}  // namespace

TEST_CASE("classifier agrees with the reference on every fixture tuple") {
  for (const LabeledStructure& fix : {fano(), nonfano()}) {
    std::array<int, 7> t = {0, 1, 2, 3, 4, 5, 6};
    std::sort(t.begin(), t.end());
    do {
      HPClass want = hp_oracle(fix.inc, t);
      CHECK(hp_classify(fix.inc, t).cls == want);
      CHECK(hp_classify_structural(fix.inc, t) == want);
    } while (std::next_permutation(t.begin(), t.end()));
    // the identity labeling is the configuration itself
    HPClassification id = hp_classify(fix.inc, {0, 1, 2, 3, 4, 5, 6});
    CHECK(id.cls == (fix.name == "fano" ? HPClass::Fano : HPClass::NonFano));
    CHECK(id.diagnostic.empty());
  }
}

TEST_CASE("classifier agrees with the reference on sampled plane tuples") {
  LabeledStructure s = pg(Field::make(3));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20000; ++trial) {
    std::array<int, 7> t;
    for (int& v : t) v = int(rng() % 13);
    HPClass want = hp_oracle(s.inc, t);
    CHECK(hp_classify(s.inc, t).cls == want);
    CHECK(hp_classify_structural(s.inc, t) == want);
  }
}

TEST_CASE("classifier examples over GF(3) and GF(2)") {
  LabeledStructure p3 = pg(Field::make(3));
  std::array<int, 7> t3 = {idx(p3, "[1,0,0]"), idx(p3, "[1,2,0]"), idx(p3, "[0,1,0]"),
                           idx(p3, "[0,0,1]"), idx(p3, "[1,0,1]"), idx(p3, "[1,1,1]"),
                           idx(p3, "[0,1,1]")};
  CHECK(hp_classify(p3.inc, t3).cls == HPClass::NonFano);

  LabeledStructure p2 = pg(Field::make(2));
  // reading the GF(3) coordinates mod 2 collides x with y
  std::array<int, 7> bad = {idx(p2, "[1,0,0]"), idx(p2, "[1,0,0]"), idx(p2, "[0,1,0]"),
                            idx(p2, "[0,0,1]"), idx(p2, "[1,0,1]"), idx(p2, "[1,1,1]"),
                            idx(p2, "[0,1,1]")};
  HPClassification rep = hp_classify(p2.inc, bad);
  CHECK(rep.cls == HPClass::NotHP);
  CHECK_FALSE(rep.diagnostic.empty());
  // with the distinct middle point the same frame closes the Fano line
  std::array<int, 7> t2 = {idx(p2, "[1,0,0]"), idx(p2, "[1,1,0]"), idx(p2, "[0,1,0]"),
                           idx(p2, "[0,0,1]"), idx(p2, "[1,0,1]"), idx(p2, "[1,1,1]"),
                           idx(p2, "[0,1,1]")};
  CHECK(hp_classify(p2.inc, t2).cls == HPClass::Fano);
}

TEST_CASE("witness search matches the reference on the fixtures") {
  check_search_everywhere(fano().inc);
  check_search_everywhere(nonfano().inc);
  // the canonical triple of the sparse fixture has exactly its own quadrangle
  // and the swapped image under the configuration symmetry
  std::vector<HPWitness> ws = hp_search(nonfano().inc, 0, 1, 2);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0] == HPWitness{3, 4, 5, 6, false});
  CHECK(ws[1] == HPWitness{5, 6, 3, 4, false});
  // the closed fixture admits the role-swapped labelings as well
  std::vector<HPWitness> wf = hp_search(fano().inc, 0, 1, 2);
  REQUIRE(wf.size() == 4);
  CHECK(wf[0] == HPWitness{3, 4, 5, 6, true});
  CHECK(wf[1] == HPWitness{4, 3, 6, 5, true});
  CHECK(wf[2] == HPWitness{5, 6, 3, 4, true});
  CHECK(wf[3] == HPWitness{6, 5, 4, 3, true});
}

TEST_CASE("witness search matches the reference on the three leg structure") {
  check_search_everywhere(lp(3).inc);
}

TEST_CASE("witness search matches the reference on plane triples") {
  LabeledStructure s = pg(Field::make(3));
  for (int ln : {0, 4, 9})
    for (int y : s.inc.line(ln))
      for (int x : s.inc.line(ln))
        for (int z : s.inc.line(ln)) {
          if (y == x || x == z || y == z) continue;
          CHECK(hp_search(s.inc, y, x, z) == search_oracle(s.inc, y, x, z));
        }
  // spec frame: the standard quadrangle completes it
  std::vector<HPWitness> ws = hp_search(s.inc, idx(s, "[1,0,0]"), idx(s, "[1,2,0]"),
                                        idx(s, "[0,1,0]"));
  HPWitness standard{idx(s, "[0,0,1]"), idx(s, "[1,0,1]"), idx(s, "[1,1,1]"),
                     idx(s, "[0,1,1]"), false};
  CHECK(std::find(ws.begin(), ws.end(), standard) != ws.end());
}

TEST_CASE("witness search needs a collinear triple") {
  IncidenceStructure s = pg(Field::make(3)).inc;
  // [1,0,0], [0,1,0], [0,0,1] form a triangle
  LabeledStructure l = pg(Field::make(3));
  int a = idx(l, "[1,0,0]"), b = idx(l, "[0,1,0]"), c = idx(l, "[0,0,1]");
  CHECK_THROWS_AS(hp_search(s, a, c, b), Error);
  CHECK_THROWS_AS(hp_search(s, a, a, b), Error);
}

TEST_CASE("conjugate search on the plane agrees with the cross ratio") {
  LabeledStructure s = pg(Field::make(3));
  ConjugateResult res = conjugate_search(s.inc, idx(s, "[1,0,0]"), idx(s, "[0,1,0]"),
                                         idx(s, "[1,2,0]"));
  CHECK(res.status == ConjStatus::Unique);
  CHECK(res.point == idx(s, "[1,1,0]"));
  CHECK(res.witnesses == 18);
  CHECK(res.witnesses_without_meet == 0);
  CHECK(conjugate_first(s.inc, idx(s, "[1,0,0]"), idx(s, "[0,1,0]"), idx(s, "[1,2,0]")) ==
        res.point);

  // full agreement: every ordered collinear triple, both orders of the pair,
  // against the coordinate conjugate
  for (int ln = 0; ln < s.inc.num_lines(); ++ln)
    for (int y : s.inc.line(ln))
      for (int x : s.inc.line(ln))
        for (int z : s.inc.line(ln)) {
          if (y == x || x == z || y == z) continue;
          ConjugateResult r1 = conjugate_search(s.inc, y, z, x);
          ConjugateResult r2 = conjugate_search(s.inc, z, y, x);
          CHECK(r1.status == ConjStatus::Unique);
          CHECK(r1.point == r2.point);
          CHECK(r1.witnesses == r2.witnesses);
          ProjPoint want = harmonic_conjugate_cr(s.coords[size_t(y)],
                                                 s.coords[size_t(z)],
                                                 s.coords[size_t(x)]);
          CHECK(s.coords[size_t(r1.point)] == want);
        }
}

TEST_CASE("conjugate search equals its reference off the plane") {
  IncidenceStructure s = lp(3).inc;
  for (int ln = 0; ln < s.num_lines(); ++ln)
    for (int y : s.line(ln))
      for (int x : s.line(ln))
        for (int z : s.line(ln)) {
          if (y == x || x == z || y == z) continue;
          ConjugateResult got = conjugate_search(s, y, z, x);
          ConjugateResult want = conjugate_oracle(s, y, z, x);
          CHECK(got.status == want.status);
          CHECK(got.witnesses == want.witnesses);
          CHECK(got.witnesses_without_meet == want.witnesses_without_meet);
          if (want.status == ConjStatus::Unique) CHECK(got.point == want.point);
        }
}

TEST_CASE("three leg short lines have witnesses whose meets all fall outside") {
  LabeledStructure l = lp(5);
  int y = idx(l, "[0,0,1]"), x = idx(l, "[1,1,1]"), z = idx(l, "[1,1,0]");
  REQUIRE(l.inc.collinear3(y, x, z));
  ConjugateResult res = conjugate_search(l.inc, y, z, x);
  CHECK(res.witnesses >= 4);
  CHECK(res.witnesses_without_meet == res.witnesses);
  CHECK(res.status == ConjStatus::NoWitness);
  CHECK(res.point == -1);
}

TEST_CASE("three leg long lines have no witnesses for the common point") {
  LabeledStructure l = lp(3);
  int y = idx(l, "[0,0,1]"), x = idx(l, "[0,1,0]"), z = idx(l, "[0,1,1]");
  REQUIRE(l.inc.collinear3(y, x, z));
  CHECK(hp_search(l.inc, y, x, z).empty());
  ConjugateResult res = conjugate_search(l.inc, y, z, x);
  CHECK(res.witnesses == 0);
  CHECK(res.status == ConjStatus::NoWitness);
}

TEST_CASE("char two plane conjugation is the identity") {
  IncidenceStructure s = pg(Field::make(2)).inc;
  for (int ln = 0; ln < s.num_lines(); ++ln)
    for (int y : s.line(ln))
      for (int x : s.line(ln))
        for (int z : s.line(ln)) {
          if (y == x || x == z || y == z) continue;
          ConjugateResult res = conjugate_search(s, y, z, x);
          CHECK(res.status == ConjStatus::Unique);
          CHECK(res.point == x);
        }
}

TEST_CASE("audits match the reference audit") {
  check_audit(fano().inc);
  check_audit(nonfano().inc);
  check_audit(lp(3).inc);
  check_audit(reid(3).inc);
}

TEST_CASE("audit verdicts on the standard structures") {
  AuditReport p2 = harmonic_audit(pg(Field::make(2)).inc);
  CHECK(p2.verdict == AuditVerdict::Harmonic);
  CHECK(p2.conjugate_is_identity);
  CHECK(p2.witnessless_triples == 0);

  AuditReport p3 = harmonic_audit(pg(Field::make(3)).inc);
  CHECK(p3.verdict == AuditVerdict::Harmonic);
  CHECK_FALSE(p3.conjugate_is_identity);
  CHECK(p3.collinear_triples == 312);
  CHECK(p3.triples_with_witness == 312);

  AuditReport nf = harmonic_audit(nonfano().inc);
  CHECK(nf.verdict == AuditVerdict::NotHarmonic);

  AuditReport l3 = harmonic_audit(lp(3).inc);
  CHECK(l3.verdict == AuditVerdict::NotHarmonic);
  CHECK(l3.partial_meet_triples > 0);
  CHECK_FALSE(l3.detail.empty());

  // no stored lines at all: nothing to witness
  AuditReport empty = harmonic_audit(IncidenceStructure::from_lines(5, {}));
  CHECK(empty.verdict == AuditVerdict::VacuouslyHarmonic);
  CHECK(empty.collinear_triples == 0);

  CHECK(std::string(audit_verdict_name(AuditVerdict::Harmonic)) == "harmonic");
  CHECK(std::string(audit_verdict_name(AuditVerdict::NotHarmonic)) == "not_harmonic");
}

TEST_CASE("audit refuses oversized structures") {
  CHECK_THROWS_AS(harmonic_audit(lp(97).inc), Error);
  try {
    harmonic_audit(lp(97).inc);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
}
