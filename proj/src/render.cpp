#include "legcob/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "legcob/errors.hpp"

namespace legcob {

namespace {

// Column layout: gap runs and event blocks alternate, three text columns
// each; strand row r sits on text row 2(r-1), with odd rows left for the
// turns and crossing middles.
constexpr int kCell = 3;

struct Canvas {
  std::vector<std::string> rows;

  void put(int y, int x, char c) {
    if (y < 0) return;
    if (y >= static_cast<int>(rows.size())) rows.resize(y + 1);
    std::string& line = rows[y];
    if (x >= static_cast<int>(line.size())) line.resize(x + 1, ' ');
    line[x] = c;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::string line : rows) {
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << '\n';
    }
    return os.str();
  }
};

std::string render_ascii(const FrontWord& w, const RenderSpec& spec) {
  if (w.empty()) return "";
  const std::vector<int> cs = gap_counts(w);
  const int m = static_cast<int>(w.size());
  Canvas cv;
  Orientation o;
  if (spec.show_orientations) o = orient(w);

  for (int g = 0; g <= m; ++g) {
    const int x0 = 2 * kCell * g;
    for (int r = 1; r <= cs[g]; ++r) {
      const int y = 2 * (r - 1);
      for (int dx = 0; dx < kCell; ++dx) cv.put(y, x0 + dx, '-');
      if (spec.show_orientations) {
        const auto it = o.dir.find({g, r});
        if (it != o.dir.end())
          cv.put(y, x0 + 1, it->second > 0 ? '>' : '<');
      }
    }
  }

  auto jog = [&cv](int x0, int yl, int yr) {
    cv.put(yl, x0, '-');
    cv.put(yl, x0 + 1, yl < yr ? '.' : '\'');
    const int lo = std::min(yl, yr), hi = std::max(yl, yr);
    for (int y = lo + 1; y < hi; ++y) cv.put(y, x0 + 1, '|');
    cv.put(yr, x0 + 1, yl < yr ? '\'' : '.');
    cv.put(yr, x0 + 2, '-');
  };

  for (int e = 1; e <= m; ++e) {
    const Token t = w[e - 1];
    const int x0 = 2 * kCell * e - kCell;
    const int yt = 2 * (t.row - 1), ym = yt + 1, yb = yt + 2;
    if (t.kind == 'X') {
      cv.put(yt, x0, '\\');
      cv.put(yt, x0 + 2, '/');
      cv.put(ym, x0 + 1, '\\');
      cv.put(yb, x0, '/');
      cv.put(yb, x0 + 2, '\\');
      for (int r = 1; r <= cs[e - 1]; ++r) {
        if (r == t.row || r == t.row + 1) continue;
        const int y = 2 * (r - 1);
        for (int dx = 0; dx < kCell; ++dx) cv.put(y, x0 + dx, '-');
      }
    } else if (t.kind == 'L') {
      cv.put(yt, x0 + 1, '.');
      cv.put(yt, x0 + 2, '-');
      cv.put(ym, x0, '(');
      cv.put(yb, x0 + 1, '\'');
      cv.put(yb, x0 + 2, '-');
      for (int r = 1; r <= cs[e - 1]; ++r) {
        if (r < t.row) {
          const int y = 2 * (r - 1);
          for (int dx = 0; dx < kCell; ++dx) cv.put(y, x0 + dx, '-');
        } else {
          jog(x0, 2 * (r - 1), 2 * (r + 1));
        }
      }
    } else {  // 'R'
      cv.put(yt, x0, '-');
      cv.put(yt, x0 + 1, '.');
      cv.put(ym, x0 + 2, ')');
      cv.put(yb, x0, '-');
      cv.put(yb, x0 + 1, '\'');
      for (int r = 1; r <= cs[e - 1]; ++r) {
        if (r < t.row) {
          const int y = 2 * (r - 1);
          for (int dx = 0; dx < kCell; ++dx) cv.put(y, x0 + dx, '-');
        } else if (r >= t.row + 2) {
          jog(x0, 2 * (r - 1), 2 * (r - 3));
        }
      }
    }
  }
  return cv.str();
}

std::string render_svg(const FrontWord& w, const RenderSpec& spec) {
  const std::vector<int> cs = gap_counts(w);
  const int m = static_cast<int>(w.size());
  int rmax = 0;
  for (int c : cs) rmax = std::max(rmax, c);
  const int total_w = 60 * m + 60;
  const int total_h = 20 * (rmax + 2);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
     << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << total_w
     << ' ' << total_h << "\">\n";
  if (!w.empty()) {
    os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
    const auto lane = [](int r) { return 20 * r; };
    Orientation o;
    if (spec.show_orientations) o = orient(w);
    for (int g = 0; g <= m; ++g) {
      const int x0 = 60 * g + 15;
      for (int r = 1; r <= cs[g]; ++r) {
        os << "<line class=\"strand\" x1=\"" << x0 << "\" y1=\"" << lane(r)
           << "\" x2=\"" << x0 + 30 << "\" y2=\"" << lane(r) << "\"/>\n";
        if (spec.show_orientations) {
          const auto it = o.dir.find({g, r});
          if (it != o.dir.end())
            os << "<text class=\"dir\" x=\"" << x0 + 11 << "\" y=\""
               << lane(r) - 4 << "\" font-size=\"10\">"
               << (it->second > 0 ? "&gt;" : "&lt;") << "</text>\n";
        }
      }
    }
    for (int e = 1; e <= m; ++e) {
      const Token t = w[e - 1];
      const int x0 = 60 * e - 15;
      const int yt = lane(t.row), yb = lane(t.row + 1);
      if (t.kind == 'X') {
        os << "<line class=\"crossing\" x1=\"" << x0 << "\" y1=\"" << yt
           << "\" x2=\"" << x0 + 30 << "\" y2=\"" << yb << "\"/>\n";
        os << "<line class=\"under\" x1=\"" << x0 << "\" y1=\"" << yb
           << "\" x2=\"" << x0 + 12 << "\" y2=\"" << yb - 8 << "\"/>\n";
        os << "<line class=\"under\" x1=\"" << x0 + 18 << "\" y1=\""
           << yt + 8 << "\" x2=\"" << x0 + 30 << "\" y2=\"" << yt << "\"/>\n";
      } else if (t.kind == 'L') {
        os << "<path class=\"cusp\" d=\"M " << x0 + 30 << ' ' << yt
           << " A 10 10 0 0 0 " << x0 + 30 << ' ' << yb << "\"/>\n";
      } else {
        os << "<path class=\"cusp\" d=\"M " << x0 << ' ' << yt
           << " A 10 10 0 0 1 " << x0 << ' ' << yb << "\"/>\n";
      }
      for (int r = 1; r <= cs[e - 1]; ++r) {
        int target = r;
        if (t.kind == 'X') {
          if (r == t.row || r == t.row + 1) continue;
        } else if (t.kind == 'L') {
          if (r >= t.row) target = r + 2;
        } else {
          if (r == t.row || r == t.row + 1) continue;
          if (r >= t.row + 2) target = r - 2;
        }
        if (target == r)
          os << "<line class=\"strand\" x1=\"" << x0 << "\" y1=\"" << lane(r)
             << "\" x2=\"" << x0 + 30 << "\" y2=\"" << lane(r) << "\"/>\n";
        else
          os << "<polyline class=\"shift\" points=\"" << x0 << ',' << lane(r)
             << ' ' << x0 + 10 << ',' << lane(r) << ' ' << x0 + 20 << ','
             << lane(target) << ' ' << x0 + 30 << ',' << lane(target)
             << "\"/>\n";
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_front(const FrontWord& w, const RenderSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0)
    throw DomainError("render dimensions must be positive");
  validate_front(w);
  if (spec.format == RenderFormat::Svg) return render_svg(w, spec);
  return render_ascii(w, spec);
}

}  // namespace legcob
