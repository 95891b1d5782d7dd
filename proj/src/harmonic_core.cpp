#include "harmonic/harmonic_core.hpp"

#include <algorithm>

#include "harmonic/constructions.hpp"

namespace harmonic {

namespace {

constexpr int kSchemaLines[6][3] = {
    {0, 1, 2},  // y x z
    {0, 3, 4},  // y o q
    {0, 5, 6},  // y r s
    {2, 3, 6},  // z o s
    {2, 4, 5},  // z q r
    {1, 4, 6},  // x q s
};
constexpr int kFanoTriple[3] = {1, 3, 5};  // x o r

const char* role_name(int i) {
  static const char* names[7] = {"y", "x", "z", "o", "q", "r", "s"};
  return names[i];
}

std::string triple_text(int a, int b, int c) {
  return std::string("{") + role_name(a) + "," + role_name(b) + "," + role_name(c) + "}";
}

}  // namespace

HPClassification hp_classify(const IncidenceStructure& s,
                             const std::array<int, 7>& tuple) {
  for (int v : tuple)
    if (v < 0 || v >= s.num_points())
      return {HPClass::NotHP, "point index out of range"};
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (tuple[size_t(i)] == tuple[size_t(j)])
        return {HPClass::NotHP, std::string("repeated point ") + role_name(i) + " = " +
                                    role_name(j)};

  bool expected[7][7][7] = {};
  for (const auto& l : kSchemaLines) {
    int a = l[0], b = l[1], c = l[2];
    expected[a][b][c] = true;
  }

  bool fano_line = false;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k) {
        bool col = s.collinear3(tuple[size_t(i)], tuple[size_t(j)], tuple[size_t(k)]);
        if (i == kFanoTriple[0] && j == kFanoTriple[1] && k == kFanoTriple[2]) {
          fano_line = col;
          continue;
        }
        if (col != expected[i][j][k])
          return {HPClass::NotHP,
                  triple_text(i, j, k) +
                      (col ? " unexpectedly collinear" : " not collinear")};
      }

  PointSet all(s.num_points());
  for (int v : tuple) all.set(v);
  if (s.rank(all) != 3) return {HPClass::NotHP, "seven points of rank below 3"};
  return {fano_line ? HPClass::Fano : HPClass::NonFano, ""};
}

HPClass hp_classify_structural(const IncidenceStructure& s,
                               const std::array<int, 7>& tuple) {
  for (int v : tuple)
    if (v < 0 || v >= s.num_points()) return HPClass::NotHP;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      if (tuple[size_t(i)] == tuple[size_t(j)]) return HPClass::NotHP;

  static const LabeledStructure kFano = fano();
  static const LabeledStructure kNonFano = nonfano();
  // the symmetry group of the role order: id, (o r)(q s), (y z)(q s), (y z)(o r)
  static const int kSym[4][7] = {{0, 1, 2, 3, 4, 5, 6},
                                 {0, 1, 2, 5, 6, 3, 4},
                                 {2, 1, 0, 3, 6, 5, 4},
                                 {2, 1, 0, 5, 4, 3, 6}};

  PointSet keep(s.num_points());
  for (int v : tuple) keep.set(v);
  std::vector<int> old_of_new;
  IncidenceStructure sub = s.restrict(keep, &old_of_new);

  // lines of the restriction as sorted role-index triples under sigma
  auto lines_under = [&](const int* sigma) {
    std::vector<std::vector<int>> out;
    std::vector<int> role_of_old(7);
    for (int pos = 0; pos < 7; ++pos) {
      int old_id = tuple[size_t(pos)];
      int new_id = int(std::lower_bound(old_of_new.begin(), old_of_new.end(), old_id) -
                       old_of_new.begin());
      role_of_old[size_t(new_id)] = sigma[pos];
    }
    for (const auto& l : sub.lines()) {
      std::vector<int> mapped;
      for (int pt : l) mapped.push_back(role_of_old[size_t(pt)]);
      std::sort(mapped.begin(), mapped.end());
      out.push_back(std::move(mapped));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto fixture_lines = [](const LabeledStructure& fix) {
    std::vector<std::vector<int>> out = fix.inc.lines();
    std::sort(out.begin(), out.end());
    return out;
  };
  static const auto kFanoLines = fixture_lines(kFano);
  static const auto kNonFanoLines = fixture_lines(kNonFano);

  for (const auto& sigma : kSym) {
    auto mapped = lines_under(sigma);
    if (mapped == kFanoLines) return HPClass::Fano;
    if (mapped == kNonFanoLines) return HPClass::NonFano;
  }
  return HPClass::NotHP;
}

std::vector<HPWitness> hp_search(const IncidenceStructure& s, int y, int x, int z) {
  if (y == x || x == z || y == z)
    throw Error(Errc::DegeneratePoints, "base triple must be three distinct points");
  int base = s.line_through_pair(y, z);
  if (base < 0 || !s.in_line(base, x))
    throw Error(Errc::NotCollinear, "base triple is not collinear");

  std::vector<HPWitness> out;
  auto meet_pair = [&](int u1, int u2, int v1, int v2) -> int {
    // common point of the lines through {u1,u2} and {v1,v2}; -1 when absent
    int l1 = s.line_through_pair(u1, u2);
    if (l1 < 0) return -1;
    int l2 = s.line_through_pair(v1, v2);
    if (l2 < 0 || l1 == l2) return -1;
    for (int pt : s.line(l1))
      if (s.in_line(l2, pt)) return pt;
    return -1;
  };

  for (int l1 : s.point_lines(y)) {
    if (l1 == base) continue;
    const auto& carrier = s.line(l1);
    for (int o : carrier) {
      if (o == y) continue;
      for (int q : carrier) {
        if (q == y || q == o) continue;
        if (o == z || o == x || q == z || q == x) continue;
        int sp = meet_pair(z, o, x, q);
        if (sp < 0) continue;
        if (sp == y || sp == x || sp == z || sp == o || sp == q) continue;
        int rp = meet_pair(z, q, y, sp);
        if (rp < 0) continue;
        auto cls = hp_classify(s, {y, x, z, o, q, rp, sp});
        if (cls.cls == HPClass::NotHP) continue;
        out.push_back({o, q, rp, sp, cls.cls == HPClass::Fano});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// meet of line {y,z} with line {o,r}; -1 when either line or the meet is absent
int witness_meet(const IncidenceStructure& s, int base_line, const HPWitness& w) {
  int l = s.line_through_pair(w.o, w.r);
  if (l < 0 || l == base_line) return -1;
  for (int pt : s.line(l))
    if (s.in_line(base_line, pt)) return pt;
  return -1;
}

}  // namespace

ConjugateResult conjugate_search(const IncidenceStructure& s, int y, int z, int x) {
  auto witnesses = hp_search(s, y, x, z);
  int base = s.line_through_pair(y, z);

  ConjugateResult res;
  res.witnesses = int(witnesses.size());
  std::optional<HPWitness> first_with_meet;
  for (const auto& w : witnesses) {
    int m = witness_meet(s, base, w);
    if (m < 0) {
      ++res.witnesses_without_meet;
      continue;
    }
    if (!first_with_meet) {
      first_with_meet = w;
      res.point = m;
      continue;
    }
    if (m != res.point) {
      res.status = ConjStatus::NonUnique;
      res.witness_a = *first_with_meet;
      res.witness_b = w;
      res.point_a = res.point;
      res.point_b = m;
      res.point = -1;
      return res;
    }
  }
  if (!first_with_meet) {
    res.status = ConjStatus::NoWitness;
    res.point = -1;
  } else {
    res.status = ConjStatus::Unique;
  }
  return res;
}

std::optional<int> conjugate_first(const IncidenceStructure& s, int y, int z, int x) {
  auto witnesses = hp_search(s, y, x, z);
  int base = s.line_through_pair(y, z);
  for (const auto& w : witnesses) {
    int m = witness_meet(s, base, w);
    if (m >= 0) return m;
  }
  return std::nullopt;
}

const char* audit_verdict_name(AuditVerdict v) {
  switch (v) {
    case AuditVerdict::Harmonic: return "harmonic";
    case AuditVerdict::NotHarmonic: return "not_harmonic";
    case AuditVerdict::VacuouslyHarmonic: return "vacuously_harmonic";
  }
  return "?";
}

AuditReport harmonic_audit(const IncidenceStructure& s, int max_points) {
  if (s.num_points() > max_points)
    throw Error(Errc::TooLarge, "audit bound exceeded: " +
                                    std::to_string(s.num_points()) + " points");
  AuditReport rep;
  for (int ln = 0; ln < s.num_lines(); ++ln) {
    const auto& pts = s.line(ln);
    for (int y : pts)
      for (int x : pts)
        for (int z : pts) {
          if (y == x || x == z || y == z) continue;
          ++rep.collinear_triples;
          auto res = conjugate_search(s, y, z, x);
          if (res.witnesses == 0) {
            ++rep.witnessless_triples;
            continue;
          }
          ++rep.triples_with_witness;
          if (res.witnesses_without_meet > 0) {
            ++rep.partial_meet_triples;
            if (rep.detail.empty())
              rep.detail = "a quadrangle for (" + s.describe_point(y) + "," +
                           s.describe_point(x) + "," + s.describe_point(z) +
                           ") yields no conjugate";
          }
          if (res.status == ConjStatus::NonUnique) {
            ++rep.disagreements;
            if (rep.detail.empty())
              rep.detail = "conjugates of (" + s.describe_point(y) + "," +
                           s.describe_point(x) + "," + s.describe_point(z) +
                           ") disagree: " + s.describe_point(res.point_a) + " vs " +
                           s.describe_point(res.point_b);
          } else if (res.status == ConjStatus::NoWitness) {
            // witnessed but every meet fell outside
            ++rep.triples_without_conjugate;
          } else if (res.point != x) {
            rep.conjugate_is_identity = false;
          }
        }
  }
  if (rep.triples_with_witness == 0)
    rep.verdict = AuditVerdict::VacuouslyHarmonic;
  else if (rep.disagreements > 0 || rep.partial_meet_triples > 0)
    rep.verdict = AuditVerdict::NotHarmonic;
  else
    rep.verdict = AuditVerdict::Harmonic;
  return rep;
}

}  // namespace harmonic
