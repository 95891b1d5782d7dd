#include "harmonic/inc_format.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "harmonic/errors.hpp"

namespace harmonic {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void syntax(int lno, const std::string& what) {
  throw Error(Errc::SyntaxError, "line " + std::to_string(lno) + ": " + what);
}

constexpr long kMaxPoints = 1000000;

}  // namespace

IncidenceStructure parse_incidence(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lno = 0;
  long n = -1;
  std::vector<std::vector<int>> lines;
  std::vector<std::string> labels;
  bool any_label = false;
  // pair of point ids -> text line of the long line that first declared it
  std::map<std::pair<int, int>, int> pair_at;
  std::set<std::vector<int>> seen;

  while (std::getline(in, raw)) {
    ++lno;
    std::string body = raw.substr(0, raw.find('#'));
    body = trim(body);
    if (body.empty()) continue;

    std::istringstream is(body);
    std::string head;
    is >> head;

    if (n < 0) {
      if (head != "points") syntax(lno, "expected 'points N' header, got '" + head + "'");
      long v = -1;
      if (!(is >> v) || v < 0) syntax(lno, "point count must be a nonnegative integer");
      if (v > kMaxPoints) syntax(lno, "point count " + std::to_string(v) + " exceeds limit");
      std::string extra;
      if (is >> extra) syntax(lno, "trailing token '" + extra + "' after point count");
      n = v;
      labels.assign(size_t(n), "");
      continue;
    }

    if (head == "label") {
      long idx = -1;
      if (!(is >> idx)) syntax(lno, "label needs a point index");
      if (idx < 0 || idx >= n) syntax(lno, "label index " + std::to_string(idx) + " out of range");
      std::string rest;
      std::getline(is, rest);
      rest = trim(rest);
      if (rest.empty()) syntax(lno, "label needs text");
      labels[size_t(idx)] = rest;
      any_label = true;
      continue;
    }

    if (head == "line:") {
      std::vector<int> pts;
      long v;
      while (is >> v) {
        if (v < 0 || v >= n) syntax(lno, "point index " + std::to_string(v) + " out of range");
        pts.push_back(int(v));
      }
      if (!is.eof()) {
        std::string bad;
        is.clear();
        is >> bad;
        syntax(lno, "'" + bad + "' is not a point index");
      }
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      if (pts.size() < 3) syntax(lno, "a long line needs at least 3 distinct points");
      if (seen.count(pts)) continue;  // repeated declaration of the same line
      for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
          auto key = std::make_pair(pts[i], pts[j]);
          auto it = pair_at.find(key);
          if (it != pair_at.end())
            throw Error(Errc::InvariantViolation,
                        "points " + std::to_string(pts[i]) + " and " + std::to_string(pts[j]) +
                            " lie on two long lines (declared at lines " +
                            std::to_string(it->second) + " and " + std::to_string(lno) + ")");
          pair_at.emplace(key, lno);
        }
      seen.insert(pts);
      lines.push_back(std::move(pts));
      continue;
    }

    syntax(lno, "unrecognized directive '" + head + "'");
  }

  if (n < 0) throw Error(Errc::SyntaxError, "missing 'points N' header");
  return IncidenceStructure::from_lines(int(n), lines,
                                        any_label ? labels : std::vector<std::string>{},
                                        {}, /*validate=*/false);
}

std::string emit_incidence(const IncidenceStructure& s) {
  std::ostringstream out;
  out << "points " << s.num_points() << "\n";
  if (s.has_labels()) {
    for (int i = 0; i < s.num_points(); ++i)
      if (!s.point_label(i).empty()) out << "label " << i << " " << s.point_label(i) << "\n";
  }
  for (int ln = 0; ln < s.num_lines(); ++ln) {
    out << "line:";
    for (int p : s.line(ln)) out << " " << p;
    out << "\n";
  }
  return out.str();
}

}  // namespace harmonic
