#include "cli/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "mtile/errors.hpp"

namespace mtile::cli {

namespace {

// Upper bound on drawn translates; a window this crowded is a typo.
constexpr long kMaxTranslates = 200000;

Rational parse_window_number(std::string_view s) {
  const auto dotpos = s.find('.');
  if (dotpos == std::string_view::npos) return mtile::parse_rational(s);
  const std::string_view whole = s.substr(0, dotpos), frac = s.substr(dotpos + 1);
  const bool negative = !whole.empty() && whole.front() == '-';
  const std::string_view digits = negative ? whole.substr(1) : whole;
  auto all_digits = [](std::string_view d) {
    return std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if ((digits.empty() && frac.empty()) || !all_digits(digits) || !all_digits(frac)) {
    throw ParseError("not a number: \"" + std::string(s) + "\"");
  }
  const Integer num(std::string(digits.empty() ? "0" : digits) + std::string(frac), 10);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  return ratio(negative ? Integer(-num) : num, den);
}

Rational round6(const FieldElement& x) { return approx(x, Rational(1, 10000000)); }

struct Box {
  FieldElement xmin, ymin, xmax, ymax;
};

Box bounding_box(const Polygon& p) {
  const auto& vs = p.vertices();
  Box b{vs[0].x, vs[0].y, vs[0].x, vs[0].y};
  for (const auto& v : vs) {
    if (compare(v.x, b.xmin) < 0) b.xmin = v.x;
    if (compare(v.x, b.xmax) > 0) b.xmax = v.x;
    if (compare(v.y, b.ymin) < 0) b.ymin = v.y;
    if (compare(v.y, b.ymax) > 0) b.ymax = v.y;
  }
  return b;
}

class SvgWriter {
 public:
  explicit SvgWriter(const Window& w) : w_(w) {
    const Rational width = w.xmax - w.xmin, height = w.ymax - w.ymin;
    stroke_ = std::max(width, height) / 400;
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" "
         << "viewBox=\"" << fixed6(w.xmin) << ' ' << fixed6(-w.ymax) << ' ' << fixed6(width) << ' '
         << fixed6(height) << "\">\n"
         << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
         << "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n"
         << "<rect x=\"" << fixed6(w.xmin) << "\" y=\"" << fixed6(-w.ymax) << "\" width=\"" << fixed6(width)
         << "\" height=\"" << fixed6(height) << "\" fill=\"white\"/>\n";
  }

  const Rational& stroke() const { return stroke_; }

  // Points are flipped (y up in the plane, y down in SVG).
  std::string point(const Rational& x, const Rational& y) const {
    return fixed6(x) + "," + fixed6(-y);
  }

  void polygon(const std::vector<std::pair<Rational, Rational>>& pts, const std::string& style) {
    out_ << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out_ << (i ? " " : "") << point(pts[i].first, pts[i].second);
    }
    out_ << "\" " << style << "/>\n";
  }

  void dot(const Rational& x, const Rational& y) {
    out_ << "<circle cx=\"" << fixed6(x) << "\" cy=\"" << fixed6(-y) << "\" r=\"" << fixed6(2 * stroke_)
         << "\" fill=\"black\"/>\n";
  }

  void arrow(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1,
             const std::string& color, const std::string& label, const std::string& index) {
    out_ << "<line x1=\"" << fixed6(x0) << "\" y1=\"" << fixed6(-y0) << "\" x2=\"" << fixed6(x1)
         << "\" y2=\"" << fixed6(-y1) << "\" stroke=\"" << color << "\" stroke-width=\"" << fixed6(stroke_)
         << "\" marker-end=\"url(#arrow)\"/>\n";
    const Rational mx = (x0 + x1) / 2, my = (y0 + y1) / 2;
    out_ << "<text x=\"" << fixed6(mx + 2 * stroke_) << "\" y=\"" << fixed6(-my - 2 * stroke_)
         << "\" font-size=\"" << fixed6(12 * stroke_) << "\" fill=\"" << color << "\">" << label
         << "<tspan baseline-shift=\"sub\" font-size=\"" << fixed6(8 * stroke_) << "\">" << index
         << "</tspan></text>\n";
  }

  void raw(const std::string& s) { out_ << s; }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  Window w_;
  Rational stroke_;
  std::ostringstream out_;
};

}  // namespace

std::string fixed6(const Rational& q) {
  const Rational scaled = q * 1000000;
  const Integer r = floor(scaled + Rational(1, 2));
  const Integer mag = abs(r);
  const Integer whole = mag / 1000000;
  std::string frac = Integer(mag % 1000000).get_str();
  frac.insert(0, 6 - frac.size(), '0');
  return (sgn(r) < 0 ? "-" : "") + whole.get_str() + "." + frac;
}

Window parse_window(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    try {
      parts.push_back(parse_window_number(piece));
    } catch (const ParseError& e) {
      throw ParseError(std::string("--window: ") + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw ParseError("--window: expected xmin,ymin,xmax,ymax");
  Window w{parts[0], parts[1], parts[2], parts[3]};
  if (w.xmin >= w.xmax || w.ymin >= w.ymax) throw ParseError("--window: empty rectangle");
  return w;
}

Window default_window(const Polygon& polygon) {
  const Box b = bounding_box(polygon);
  const Rational x0 = round6(b.xmin), x1 = round6(b.xmax), y0 = round6(b.ymin), y1 = round6(b.ymax);
  const Rational cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  const Rational hw = 3 * (x1 - x0) / 2, hh = 3 * (y1 - y0) / 2;
  return {cx - hw, cy - hh, cx + hw, cy + hh};
}

std::string render_svg(const Polygon& polygon, const std::optional<LatticeBasis>& lattice,
                       const Window& window) {
  const Field& f = polygon.field();
  SvgWriter svg(window);
  const std::string sw = "stroke-width=\"" + fixed6(svg.stroke()) + "\"";

  std::vector<std::pair<Rational, Rational>> base;
  for (const auto& v : polygon.vertices()) base.emplace_back(round6(v.x), round6(v.y));

  if (!lattice) {
    svg.polygon(base, "fill=\"#4a90d9\" fill-opacity=\"0.2\" stroke=\"#1f3b57\" " + sw);
    const EdgePairing pairing = edge_pairs(polygon);
    for (std::size_t j = 1; j <= pairing.n; ++j) {
      const auto& a = base[j - 1];
      const auto& b = base[j % base.size()];
      svg.arrow(a.first, a.second, b.first, b.second, "#c0392b", "e", std::to_string(j));
      const Rational mx = (a.first + b.first) / 2, my = (a.second + b.second) / 2;
      const Rational tx = round6(pairing.tau[j - 1].x), ty = round6(pairing.tau[j - 1].y);
      svg.arrow(mx, my, mx + tx, my + ty, "#27ae60", "\xCF\x84", std::to_string(j));
    }
    return svg.finish();
  }

  // Lattice coordinates of (window corner - vertex) bound every translate
  // that can reach the window.
  const Box b = bounding_box(polygon);
  std::optional<Integer> mlo, mhi, nlo, nhi;
  for (const Rational& cx : {window.xmin, window.xmax}) {
    for (const Rational& cy : {window.ymin, window.ymax}) {
      const PlanarVector corner(f, cx, cy);
      for (const auto& v : polygon.vertices()) {
        const BasisCoords c = coords_in_basis(corner - v, lattice->b1(), lattice->b2());
        const Integer m0 = floor(c.alpha), m1 = ceil(c.alpha), n0 = floor(c.beta), n1 = ceil(c.beta);
        if (!mlo || m0 < *mlo) mlo = m0;
        if (!mhi || m1 > *mhi) mhi = m1;
        if (!nlo || n0 < *nlo) nlo = n0;
        if (!nhi || n1 > *nhi) nhi = n1;
      }
    }
  }
  const Integer count = (*mhi - *mlo + 1) * (*nhi - *nlo + 1);
  if (count > kMaxTranslates) throw SpecificationError("--window: too many translates to draw");

  const FieldElement wx0(f, window.xmin), wx1(f, window.xmax), wy0(f, window.ymin), wy1(f, window.ymax);
  std::ostringstream dots;
  svg.raw("<g fill=\"#4a90d9\" fill-opacity=\"0.15\" stroke=\"#1f3b57\" " + sw + ">\n");
  std::vector<std::pair<Rational, Rational>> origins;
  for (Integer m = *mlo; m <= *mhi; ++m) {
    for (Integer n = *nlo; n <= *nhi; ++n) {
      const PlanarVector l = lattice->at(m, n);
      const bool meets = compare(b.xmin + l.x, wx1) <= 0 && compare(b.xmax + l.x, wx0) > 0 &&
                         compare(b.ymin + l.y, wy1) <= 0 && compare(b.ymax + l.y, wy0) > 0;
      if (!meets) continue;
      std::vector<std::pair<Rational, Rational>> pts;
      for (const auto& v : polygon.vertices()) pts.emplace_back(round6(v.x + l.x), round6(v.y + l.y));
      svg.polygon(pts, "");
      origins.emplace_back(round6(l.x), round6(l.y));
    }
  }
  svg.raw("</g>\n");
  svg.polygon(base, "fill=\"none\" stroke=\"#c0392b\" " + sw);
  for (const auto& [x, y] : origins) svg.dot(x, y);
  return svg.finish();
}

}  // namespace mtile::cli
