#include "harmonic/projective.hpp"

#include <algorithm>
#include <sstream>

#include "harmonic/incidence.hpp"

namespace harmonic {

namespace {

std::array<uint32_t, 3> normalize_triple(const Field& f, std::array<uint32_t, 3> raw) {
  for (uint32_t x : raw)
    if (x >= f.order()) throw Error(Errc::BadArgument, "coordinate out of field");
  int first = -1;
  for (int i = 0; i < 3; ++i)
    if (raw[size_t(i)] != 0) {
      first = i;
      break;
    }
  if (first < 0) throw Error(Errc::ZeroVector, "all coordinates zero");
  uint32_t s = f.inv(raw[size_t(first)]);
  for (auto& x : raw) x = f.mul(x, s);
  return raw;
}

std::array<uint32_t, 3> cross(const Field& f, const std::array<uint32_t, 3>& u,
                              const std::array<uint32_t, 3>& v) {
  return {f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])),
          f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
          f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]))};
}

uint32_t dot(const Field& f, const std::array<uint32_t, 3>& u,
             const std::array<uint32_t, 3>& v) {
  return f.add(f.add(f.mul(u[0], v[0]), f.mul(u[1], v[1])), f.mul(u[2], v[2]));
}

const Field& joint_field(const Field* a, const Field* b) {
  if (a == nullptr || b == nullptr)
    throw Error(Errc::FieldMismatch, "object without a field");
  if (a != b && !a->same_as(*b))
    throw Error(Errc::FieldMismatch,
                "GF(" + a->descriptor() + ") vs GF(" + b->descriptor() + ")");
  return *a;
}

std::string format_triple(const Field& f, const std::array<uint32_t, 3>& c,
                          char open, char close) {
  std::string s(1, open);
  for (int i = 0; i < 3; ++i) {
    if (i) s += ",";
    s += f.format(c[size_t(i)]);
  }
  s += close;
  return s;
}

// Splits "a,b,c" at top-level commas, honoring "(...)" groups.
std::vector<std::string> split_coords(const std::string& body) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : body) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::array<uint32_t, 3> parse_triple(const Field& f, const std::string& text,
                                     char open, char close) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
  if (t.size() < 2 || t.front() != open || t.back() != close)
    throw Error(Errc::SyntaxError, "bad coordinate literal '" + text + "'");
  auto parts = split_coords(t.substr(1, t.size() - 2));
  if (parts.size() != 3)
    throw Error(Errc::SyntaxError, "expected three coordinates in '" + text + "'");
  std::array<uint32_t, 3> raw{};
  for (int i = 0; i < 3; ++i) {
    auto v = f.parse_elem(parts[size_t(i)]);
    if (!v)
      throw Error(Errc::SyntaxError, "bad coordinate '" + parts[size_t(i)] + "'");
    raw[size_t(i)] = *v;
  }
  return raw;
}

}  // namespace

ProjPoint ProjPoint::make(const Field& f, std::array<uint32_t, 3> raw) {
  return ProjPoint{&f, normalize_triple(f, raw)};
}

ProjPoint ProjPoint::make(const FieldElem& x, const FieldElem& y, const FieldElem& z) {
  const Field& f = joint_field(x.field, y.field);
  joint_field(x.field, z.field);
  return make(f, {x.v, y.v, z.v});
}

bool ProjPoint::operator==(const ProjPoint& o) const {
  if (field == nullptr || o.field == nullptr) return field == o.field && c == o.c;
  return field->same_as(*o.field) && c == o.c;
}

std::string ProjPoint::str() const { return format_triple(*field, c, '[', ']'); }

ProjLine ProjLine::make(const Field& f, std::array<uint32_t, 3> raw) {
  return ProjLine{&f, normalize_triple(f, raw)};
}

bool ProjLine::operator==(const ProjLine& o) const {
  if (field == nullptr || o.field == nullptr) return field == o.field && c == o.c;
  return field->same_as(*o.field) && c == o.c;
}

std::string ProjLine::str() const { return format_triple(*field, c, '<', '>'); }

ProjLine line_through(const ProjPoint& a, const ProjPoint& b) {
  const Field& f = joint_field(a.field, b.field);
  if (a == b) throw Error(Errc::EqualPoints, "join of " + a.str() + " with itself");
  return ProjLine::make(f, cross(f, a.c, b.c));
}

ProjPoint meet(const ProjLine& a, const ProjLine& b) {
  const Field& f = joint_field(a.field, b.field);
  if (a == b) throw Error(Errc::EqualLines, "meet of " + a.str() + " with itself");
  return ProjPoint::make(f, cross(f, a.c, b.c));
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  const Field& f = joint_field(p.field, l.field);
  return dot(f, p.c, l.c) == 0;
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  const Field& f = joint_field(a.field, b.field);
  joint_field(a.field, c.field);
  return dot(f, cross(f, a.c, b.c), c.c) == 0;
}

namespace {

// Coordinates of p in the pencil alpha*b0 + beta*b1; (alpha:beta) up to scale.
struct PencilCoord {
  uint32_t alpha, beta;
};

PencilCoord pencil_coord(const Field& f, const std::array<uint32_t, 3>& b0,
                         const std::array<uint32_t, 3>& b1,
                         const std::array<uint32_t, 3>& p) {
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = r1 + 1; r2 < 3; ++r2) {
      uint32_t det = f.sub(f.mul(b0[size_t(r1)], b1[size_t(r2)]),
                           f.mul(b0[size_t(r2)], b1[size_t(r1)]));
      if (det == 0) continue;
      uint32_t alpha = f.sub(f.mul(p[size_t(r1)], b1[size_t(r2)]),
                             f.mul(p[size_t(r2)], b1[size_t(r1)]));
      uint32_t beta = f.sub(f.mul(b0[size_t(r1)], p[size_t(r2)]),
                            f.mul(b0[size_t(r2)], p[size_t(r1)]));
      return {alpha, beta};
    }
  throw Error(Errc::DegeneratePoints, "dependent basis points");
}

}  // namespace

CrossRatioValue cross_ratio(const ProjPoint& a, const ProjPoint& b,
                            const ProjPoint& c, const ProjPoint& d) {
  const Field& f = joint_field(a.field, b.field);
  joint_field(a.field, c.field);
  joint_field(a.field, d.field);
  if (a == b || a == c || b == c || d == a || d == b)
    throw Error(Errc::DegeneratePoints, "repeated point in cross-ratio");
  if (!collinear(a, b, c) || !collinear(a, b, d))
    throw Error(Errc::NotCollinear, "cross-ratio of non-collinear points");

  PencilCoord pc = pencil_coord(f, a.c, b.c, c.c);
  PencilCoord pd = pencil_coord(f, a.c, b.c, d.c);
  // parameters relative to (a,b): a at 0, b at infinity
  uint32_t num = f.mul(pc.beta, pd.alpha);
  uint32_t den = f.mul(pc.alpha, pd.beta);
  if (den == 0) return {true, f.zero()};
  return {false, f.elem(f.div(num, den))};
}

ProjPoint harmonic_conjugate_cr(const ProjPoint& y, const ProjPoint& z,
                                const ProjPoint& x) {
  const Field& f = joint_field(y.field, z.field);
  joint_field(y.field, x.field);
  if (y == z || x == y || x == z)
    throw Error(Errc::DegeneratePoints, "conjugate needs three distinct points");
  if (!collinear(y, z, x))
    throw Error(Errc::NotCollinear, x.str() + " not on the line of " + y.str() +
                                        ", " + z.str());
  PencilCoord px = pencil_coord(f, y.c, z.c, x.c);
  // parameter t = beta/alpha maps to -t
  std::array<uint32_t, 3> raw{};
  for (int i = 0; i < 3; ++i)
    raw[size_t(i)] = f.sub(f.mul(px.alpha, y.c[size_t(i)]),
                           f.mul(px.beta, z.c[size_t(i)]));
  return ProjPoint::make(f, raw);
}

ProjPoint parse_point(const Field& f, const std::string& text) {
  return ProjPoint::make(f, parse_triple(f, text, '[', ']'));
}

ProjLine parse_line(const Field& f, const std::string& text) {
  return ProjLine::make(f, parse_triple(f, text, '<', '>'));
}

// ---------------------------------------------------------------------------
// Plane

struct Plane::LineFrame {
  std::array<uint32_t, 3> b0{}, b1{};  // chart basis: param t -> b0 + t*b1
  std::vector<int> pt_of_param;        // size q+1, slot q holds the b1 point
};

namespace {

// Index layout for canonical triples: [1,y,z] -> y*q+z, [0,1,z] -> q^2+z,
// [0,0,1] -> q^2+q. Lines use the same formula on their triples.
int triple_index(uint32_t q, const std::array<uint32_t, 3>& c) {
  if (c[0] == 1) return int(c[1] * q + c[2]);
  if (c[1] == 1) return int(q * q + c[2]);
  return int(q * q + q);
}

std::array<uint32_t, 3> triple_at(uint32_t q, int idx) {
  uint32_t i = uint32_t(idx);
  if (i < q * q) return {1, i / q, i % q};
  if (i < q * q + q) return {0, 1, i - q * q};
  return {0, 0, 1};
}

}  // namespace

Plane::Plane(FieldPtr f, uint32_t max_order) : field_(std::move(f)) {
  q_ = field_->order();
  if (q_ > max_order)
    throw Error(Errc::TooLarge, "plane order " + std::to_string(q_) +
                                    " exceeds bound " + std::to_string(max_order));
  n_ = int(q_ * q_ + q_ + 1);
  const Field& F = *field_;

  pts_.reserve(size_t(n_));
  lns_.reserve(size_t(n_));
  for (int i = 0; i < n_; ++i) {
    pts_.push_back(ProjPoint{field_.get(), triple_at(q_, i)});
    lns_.push_back(ProjLine{field_.get(), triple_at(q_, i)});
  }

  frames_.resize(size_t(n_));
  line_pts_.resize(size_t(n_));
  pt_lns_.resize(size_t(n_));
  for (int ln = 0; ln < n_; ++ln) {
    const auto& l = lns_[size_t(ln)].c;
    LineFrame& fr = frames_[size_t(ln)];
    // null-space basis of <a,b,c>
    if (l[2] != 0) {
      uint32_t ci = F.inv(l[2]);
      fr.b0 = {1, 0, F.neg(F.mul(l[0], ci))};
      fr.b1 = {0, 1, F.neg(F.mul(l[1], ci))};
    } else if (l[1] != 0) {
      uint32_t bi = F.inv(l[1]);
      fr.b0 = {1, F.neg(F.mul(l[0], bi)), 0};
      fr.b1 = {0, 0, 1};
    } else {
      fr.b0 = {0, 1, 0};
      fr.b1 = {0, 0, 1};
    }
    fr.pt_of_param.resize(q_ + 1);
    auto& members = line_pts_[size_t(ln)];
    members.reserve(q_ + 1);
    for (uint32_t t = 0; t <= q_; ++t) {
      std::array<uint32_t, 3> raw{};
      if (t == q_) {
        raw = fr.b1;
      } else {
        for (int i = 0; i < 3; ++i)
          raw[size_t(i)] = F.add(fr.b0[size_t(i)], F.mul(t, fr.b1[size_t(i)]));
      }
      int pt = triple_index(q_, normalize_triple(F, raw));
      fr.pt_of_param[t] = pt;
      members.push_back(pt);
    }
    std::sort(members.begin(), members.end());
    for (int pt : members) pt_lns_[size_t(pt)].push_back(ln);
  }
  for (auto& v : pt_lns_) std::sort(v.begin(), v.end());
}

Plane::~Plane() = default;
Plane::Plane(Plane&&) noexcept = default;
Plane& Plane::operator=(Plane&&) noexcept = default;

int Plane::index_of(const ProjPoint& p) const {
  joint_field(field_.get(), p.field);
  return triple_index(q_, p.c);
}

int Plane::index_of(const ProjLine& l) const {
  joint_field(field_.get(), l.field);
  return triple_index(q_, l.c);
}

int Plane::line_through(int p1, int p2) const {
  if (p1 == p2) throw Error(Errc::EqualPoints, "join of a point with itself");
  const Field& F = *field_;
  auto raw = cross(F, pts_[size_t(p1)].c, pts_[size_t(p2)].c);
  return triple_index(q_, normalize_triple(F, raw));
}

int Plane::meet_of(int l1, int l2) const {
  if (l1 == l2) throw Error(Errc::EqualLines, "meet of a line with itself");
  const Field& F = *field_;
  auto raw = cross(F, lns_[size_t(l1)].c, lns_[size_t(l2)].c);
  return triple_index(q_, normalize_triple(F, raw));
}

bool Plane::incident(int pt, int ln) const {
  return dot(*field_, pts_[size_t(pt)].c, lns_[size_t(ln)].c) == 0;
}

const std::vector<int>& Plane::line_points(int ln) const { return line_pts_[size_t(ln)]; }
const std::vector<int>& Plane::point_lines(int pt) const { return pt_lns_[size_t(pt)]; }

uint32_t Plane::param_on_line(int ln, int pt) const {
  const LineFrame& fr = frames_[size_t(ln)];
  PencilCoord pc = pencil_coord(*field_, fr.b0, fr.b1, pts_[size_t(pt)].c);
  if (pc.alpha == 0) return q_;
  return field_->div(pc.beta, pc.alpha);
}

int Plane::point_at_param(int ln, uint32_t param) const {
  return frames_[size_t(ln)].pt_of_param[param == q_ ? q_ : param];
}

uint32_t Plane::conj_param(uint32_t a, uint32_t c, uint32_t b) const {
  const Field& F = *field_;
  const uint32_t INF = q_;
  if (a == c || b == a || b == c)
    throw Error(Errc::DegeneratePoints, "conjugate needs three distinct parameters");
  if (F.characteristic() == 2) return b;
  if (b == INF) {
    // conjugate of the chart infinity is the midpoint of the pair
    uint32_t two_inv = F.inv(F.add(1, 1));
    return F.mul(F.add(a, c), two_inv);
  }
  if (a == INF) return F.sub(F.add(c, c), b);
  if (c == INF) return F.sub(F.add(a, a), b);
  uint32_t den = F.sub(F.add(b, b), F.add(a, c));
  if (den == 0) return INF;
  uint32_t num = F.sub(F.add(F.mul(a, b), F.mul(b, c)),
                       F.add(F.mul(a, c), F.mul(a, c)));
  return F.div(num, den);
}

int Plane::conj_on_line(int ln, int a, int c, int b) const {
  uint32_t pa = param_on_line(ln, a);
  uint32_t pc = param_on_line(ln, c);
  uint32_t pb = param_on_line(ln, b);
  return point_at_param(ln, conj_param(pa, pc, pb));
}

const IncidenceStructure& Plane::structure() const {
  if (!structure_) {
    std::vector<std::string> pl, ll;
    pl.reserve(size_t(n_));
    ll.reserve(size_t(n_));
    for (int i = 0; i < n_; ++i) {
      pl.push_back(pts_[size_t(i)].str());
      ll.push_back(lns_[size_t(i)].str());
    }
    const_cast<Plane*>(this)->structure_ = std::make_unique<IncidenceStructure>(
        IncidenceStructure::from_lines(n_, line_pts_, std::move(pl), std::move(ll),
                                       /*validate=*/false));
  }
  return *structure_;
}

}  // namespace harmonic
