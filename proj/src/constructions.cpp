#include "harmonic/constructions.hpp"

#include <algorithm>

namespace harmonic {

namespace {

void require_prime(uint32_t p, const char* what) {
  if (p < 2 || !is_prime(p))
    throw Error(Errc::NonPrimeParameter, std::string(what) + " requires a prime, got " +
                                             std::to_string(p));
}

ProjPoint coord(const FieldPtr& f, uint32_t x, uint32_t y, uint32_t z) {
  return ProjPoint::make(*f, {x, y, z});
}

}  // namespace

LabeledStructure lp(uint32_t p) {
  require_prime(p, "lp");
  FieldPtr f = Field::make(p);
  // indices: a_i = i, b_i = p+i, c_i = 2p+i, d = 3p
  const int a0 = 0, b0 = int(p), c0 = int(2 * p), d = int(3 * p);
  std::vector<ProjPoint> coords(size_t(3 * p + 1), ProjPoint{});
  std::vector<std::string> labels(size_t(3 * p + 1));
  for (uint32_t i = 0; i < p; ++i) {
    coords[size_t(a0) + i] = coord(f, 0, i, 1);
    coords[size_t(b0) + i] = coord(f, 1, i, 1);
    coords[size_t(c0) + i] = coord(f, 1, i, 0);
  }
  coords[size_t(d)] = coord(f, 0, 1, 0);
  for (uint32_t i = 0; i < 3 * p + 1; ++i) labels[i] = coords[i].str();

  std::vector<std::vector<int>> lines;
  std::vector<std::string> line_labels;
  std::vector<int> leg;
  for (int base : {a0, b0, c0}) {
    leg.clear();
    for (uint32_t i = 0; i < p; ++i) leg.push_back(base + int(i));
    leg.push_back(d);
    lines.push_back(leg);
  }
  line_labels.push_back("<1,0,0>");
  line_labels.push_back("<1,0," + f->format(f->neg(1)) + ">");
  line_labels.push_back("<0,0,1>");
  for (uint32_t j = 0; j < p; ++j)
    for (uint32_t i = 0; i < p; ++i) {
      lines.push_back({a0 + int(i), b0 + int((i + j) % p), c0 + int(j)});
      line_labels.push_back("<" + std::to_string(j) + "," + f->format(f->neg(1)) +
                            "," + std::to_string(i) + ">");
    }
  LabeledStructure out;
  out.name = "lp:" + std::to_string(p);
  out.inc = IncidenceStructure::from_lines(int(3 * p + 1), std::move(lines),
                                           std::move(labels), std::move(line_labels));
  out.field = f;
  out.coords = std::move(coords);
  return out;
}

LabeledStructure reid(uint32_t n) {
  if (n < 2) throw Error(Errc::BadArgument, "reid requires n >= 2");
  // indices: a_i = i, b_i = n+i, c_0 = 2n, c_1 = 2n+1, d = 2n+2
  const int a0 = 0, b0 = int(n), c0 = int(2 * n), c1 = int(2 * n + 1), d = int(2 * n + 2);
  std::vector<std::string> labels(size_t(2 * n + 3));
  for (uint32_t i = 0; i < n; ++i) {
    labels[size_t(a0) + i] = "a" + std::to_string(i);
    labels[size_t(b0) + i] = "b" + std::to_string(i);
  }
  labels[size_t(c0)] = "c0";
  labels[size_t(c1)] = "c1";
  labels[size_t(d)] = "d";

  std::vector<std::vector<int>> lines;
  std::vector<int> row;
  for (int base : {a0, b0}) {
    row.clear();
    for (uint32_t i = 0; i < n; ++i) row.push_back(base + int(i));
    row.push_back(d);
    lines.push_back(row);
  }
  lines.push_back({c0, c1, d});
  for (uint32_t i = 0; i < n; ++i) {
    lines.push_back({a0 + int(i), b0 + int(i), c0});
    lines.push_back({a0 + int(i), b0 + int((i + 1) % n), c1});
  }
  LabeledStructure out;
  out.name = "reid:" + std::to_string(n);
  out.inc = IncidenceStructure::from_lines(int(2 * n + 3), std::move(lines),
                                           std::move(labels));
  return out;
}

LabeledStructure reid_in_lp(uint32_t p) {
  require_prime(p, "reid_in_lp");
  FieldPtr f = Field::make(p);
  const int a0 = 0, b0 = int(p), c0 = int(2 * p), c1 = int(2 * p + 1), d = int(2 * p + 2);
  std::vector<ProjPoint> coords(size_t(2 * p + 3), ProjPoint{});
  std::vector<std::string> labels(size_t(2 * p + 3));
  for (uint32_t i = 0; i < p; ++i) {
    coords[size_t(a0) + i] = coord(f, 0, i, 1);
    coords[size_t(b0) + i] = coord(f, 1, i, 1);
    labels[size_t(a0) + i] = "a" + std::to_string(i);
    labels[size_t(b0) + i] = "b" + std::to_string(i);
  }
  coords[size_t(c0)] = coord(f, 1, 0, 0);
  coords[size_t(c1)] = coord(f, 1, 1, 0);
  coords[size_t(d)] = coord(f, 0, 1, 0);
  labels[size_t(c0)] = "c0";
  labels[size_t(c1)] = "c1";
  labels[size_t(d)] = "d";

  std::vector<std::vector<int>> lines;
  std::vector<int> row;
  for (int base : {a0, b0}) {
    row.clear();
    for (uint32_t i = 0; i < p; ++i) row.push_back(base + int(i));
    row.push_back(d);
    lines.push_back(row);
  }
  lines.push_back({c0, c1, d});
  for (uint32_t i = 0; i < p; ++i) {
    lines.push_back({a0 + int(i), b0 + int(i), c0});
    lines.push_back({a0 + int(i), b0 + int((i + 1) % p), c1});
  }
  LabeledStructure out;
  out.name = "reid_in_lp:" + std::to_string(p);
  out.inc = IncidenceStructure::from_lines(int(2 * p + 3), std::move(lines),
                                           std::move(labels));
  out.field = f;
  out.coords = std::move(coords);
  return out;
}

LabeledStructure group_expansion(uint32_t p, uint32_t m) {
  require_prime(p, "group_expansion");
  if (m < 1) throw Error(Errc::BadArgument, "group_expansion requires m >= 1");
  FieldPtr f = Field::make(p, m);
  uint32_t q = f->order();
  const int a0 = 0, b0 = int(q), c0 = int(2 * q), d = int(3 * q);
  std::vector<ProjPoint> coords(size_t(3 * q + 1), ProjPoint{});
  std::vector<std::string> labels(size_t(3 * q + 1));
  for (uint32_t g = 0; g < q; ++g) {
    coords[size_t(a0) + g] = coord(f, 0, g, 1);
    coords[size_t(b0) + g] = coord(f, 1, g, 1);
    coords[size_t(c0) + g] = coord(f, 1, g, 0);
  }
  coords[size_t(d)] = coord(f, 0, 1, 0);
  for (uint32_t i = 0; i < 3 * q + 1; ++i) labels[i] = coords[i].str();

  std::vector<std::vector<int>> lines;
  std::vector<int> leg;
  for (int base : {a0, b0, c0}) {
    leg.clear();
    for (uint32_t g = 0; g < q; ++g) leg.push_back(base + int(g));
    leg.push_back(d);
    lines.push_back(leg);
  }
  for (uint32_t j = 0; j < q; ++j)
    for (uint32_t i = 0; i < q; ++i)
      lines.push_back({a0 + int(i), b0 + int(f->add(i, j)), c0 + int(j)});
  LabeledStructure out;
  out.name = "group_expansion:" + std::to_string(p) + "," + std::to_string(m);
  out.inc = IncidenceStructure::from_lines(int(3 * q + 1), std::move(lines),
                                           std::move(labels));
  out.field = f;
  out.coords = std::move(coords);
  return out;
}

namespace {

LabeledStructure quadrangle_config(bool with_fano_line) {
  // role order (y, x, z, o, q, r, s)
  const int y = 0, x = 1, z = 2, o = 3, q = 4, r = 5, s = 6;
  std::vector<std::vector<int>> lines = {{y, x, z}, {y, o, q}, {y, r, s},
                                         {z, o, s}, {z, q, r}, {x, q, s}};
  if (with_fano_line) lines.push_back({x, o, r});
  std::vector<std::string> labels = {"y", "x", "z", "o", "q", "r", "s"};

  LabeledStructure out;
  out.name = with_fano_line ? "fano" : "nonfano";
  out.inc = IncidenceStructure::from_lines(7, std::move(lines), std::move(labels));
  out.field = Field::make(with_fano_line ? 2 : 3);
  const FieldPtr& f = out.field;
  if (with_fano_line) {
    out.coords = {coord(f, 1, 0, 0), coord(f, 1, 1, 0), coord(f, 0, 1, 0),
                  coord(f, 0, 0, 1), coord(f, 1, 0, 1), coord(f, 1, 1, 1),
                  coord(f, 0, 1, 1)};
  } else {
    out.coords = {coord(f, 1, 0, 0), coord(f, 1, 2, 0), coord(f, 0, 1, 0),
                  coord(f, 0, 0, 1), coord(f, 1, 0, 1), coord(f, 1, 1, 1),
                  coord(f, 0, 1, 1)};
  }
  return out;
}

}  // namespace

LabeledStructure fano() { return quadrangle_config(true); }
LabeledStructure nonfano() { return quadrangle_config(false); }

LabeledStructure pg(FieldPtr f, uint32_t max_order) {
  Plane pl(f, max_order);
  LabeledStructure out;
  out.name = "pg:" + f->descriptor();
  out.inc = pl.structure();
  out.field = std::move(f);
  out.coords.reserve(size_t(pl.num_points()));
  for (int i = 0; i < pl.num_points(); ++i) out.coords.push_back(pl.point(i));
  return out;
}

LabeledStructure build_named(const std::string& name, uint32_t p, uint32_t m) {
  if (name == "lp") return lp(p);
  if (name == "reid") return reid(p);
  if (name == "reid_in_lp") return reid_in_lp(p);
  if (name == "group_expansion") return group_expansion(p, m == 0 ? 1 : m);
  if (name == "fano") return fano();
  if (name == "nonfano") return nonfano();
  if (name == "pg") return pg(Field::make(p, m == 0 ? 1 : m));
  throw Error(Errc::BadArgument, "unknown structure name '" + name + "'");
}

}  // namespace harmonic
