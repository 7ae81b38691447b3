#include "origami/svg.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "origami/error.hpp"

namespace origami {

std::string pair_glyph(std::size_t k) {
  std::string s(1, static_cast<char>('a' + k % 26));
  if (k >= 26) s += std::to_string(k / 26);
  return s;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

const char* kHeader =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";

const char* kDefs =
    "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
    "orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n";

struct Pt {
  double x, y;
};

}  // namespace

std::string render_svg(const Origami& o, const SvgLayout& layout) {
  if (!o.connected()) throw Disconnected("render_svg needs a connected origami");
  const std::size_t d = o.degree();
  const DoubleCover c = double_cover(o);

  // Rows: horizontal cylinders, walked to the right from the upright copy of
  // their smallest square.
  std::vector<int> row_of(d, -1), col_of(d, 0), turned(d, 0);
  int rows = 0;
  std::size_t width = 0;
  for (std::size_t l = 0; l < d; ++l) {
    if (row_of[l] != -1) continue;
    const Point start = label_index(static_cast<Label>(l + 1));
    Point a = start;
    int col = 0;
    do {
      row_of[a / 2] = rows;
      col_of[a / 2] = col++;
      turned[a / 2] = a % 2;
      a = c.X(a);
    } while (a != start);
    width = std::max(width, static_cast<std::size_t>(col));
    ++rows;
  }

  // Glyph per glued pair: mu pairs first, then nu pairs, by smaller label.
  std::map<std::pair<int, Point>, std::size_t> glyph;
  std::size_t next = 0;
  for (int kind = 0; kind < 2; ++kind) {
    const Perm& g = kind == 0 ? o.mu().perm() : o.nu().perm();
    for (Point i = 0; i < 2 * d; ++i) {
      if (i < g(i)) {
        glyph[{kind, i}] = next;
        glyph[{kind, g(i)}] = next;
        ++next;
      }
    }
  }

  const double cell = layout.cell, m = layout.margin;
  const double W = 2 * m + cell * static_cast<double>(width), H = 2 * m + cell * rows;
  std::ostringstream out;
  out << kHeader << " width=\"" << num(W) << "\" height=\"" << num(H) << "\" viewBox=\"0 0 " << num(W) << " "
      << num(H) << "\">\n"
      << kDefs << "<g font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";

  for (std::size_t l = 0; l < d; ++l) {
    const double x0 = m + cell * col_of[l], y0 = m + cell * row_of[l];
    auto to_px = [&](Pt p) {
      if (turned[l]) p = {1 - p.x, 1 - p.y};
      return Pt{x0 + cell * p.x, y0 + cell * (1 - p.y)};
    };
    out << "<g class=\"square\" id=\"sq" << l + 1 << "\">\n";
    out << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(cell) << "\" height=\""
        << num(cell) << "\" fill=\"#f4f4f4\" stroke=\"#333\"/>\n";
    const Pt centre = to_px({0.5, 0.5});
    out << "<text x=\"" << num(centre.x) << "\" y=\"" << num(centre.y) << "\" font-size=\"" << num(cell * 0.3)
        << "\"" << (turned[l] ? " transform=\"rotate(180 " + num(centre.x) + " " + num(centre.y) + ")\"" : "")
        << ">" << l + 1 << "</text>\n";

    for (int kind = 0; kind < 2; ++kind) {
      const Perm& g = kind == 0 ? o.mu().perm() : o.nu().perm();
      for (int sign : {1, -1}) {
        const Point side = label_index(sign * static_cast<Label>(l + 1));
        const Point partner = g(side);
        const bool flip = (side % 2) == (partner % 2);
        const bool reversed = flip && side > partner;
        // Own chart: mu sides are vertical edges with upward arrows, nu
        // sides horizontal edges with rightward arrows.
        Pt a, b, label;
        const double e = sign > 0 ? 1.0 : 0.0;
        const double inward = sign > 0 ? 0.85 : 0.15;
        if (kind == 0) {
          a = {e, 0.3};
          b = {e, 0.7};
          label = {inward, 0.5};
        } else {
          a = {0.3, e};
          b = {0.7, e};
          label = {0.5, inward};
        }
        if (reversed) std::swap(a, b);
        const Pt pa = to_px(a), pb = to_px(b), pl = to_px(label);
        out << "<line class=\"" << (flip ? "flip" : "translation") << (reversed ? " reversed" : "") << "\" x1=\""
            << num(pa.x) << "\" y1=\"" << num(pa.y) << "\" x2=\"" << num(pb.x) << "\" y2=\"" << num(pb.y)
            << "\" stroke=\"" << (flip ? "#c0392b" : "#2c3e50") << "\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
        out << "<text class=\"glyph\" x=\"" << num(pl.x) << "\" y=\"" << num(pl.y) << "\" font-size=\""
            << num(cell * 0.2) << "\">" << pair_glyph(glyph[{kind, side}]) << "</text>\n";
      }
    }
    out << "</g>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string render_dessin_svg(const Origami& o, const SvgLayout& layout) {
  const Dessin ds = dessin(o);
  const double cell = layout.cell, m = layout.margin;
  const std::size_t rows = std::max({ds.degree, ds.h_vertices.size(), ds.v_vertices.size()});
  const double W = 2 * m + cell * 4, H = 2 * m + cell * static_cast<double>(rows);
  auto pos = [&](int column, std::size_t i) { return Pt{m + cell * (0.5 + 1.5 * column), m + cell * (0.5 + i)}; };
  std::ostringstream out;
  out << kHeader << " width=\"" << num(W) << "\" height=\"" << num(H) << "\" viewBox=\"0 0 " << num(W) << " "
      << num(H) << "\">\n<g font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
  for (const auto& e : ds.edges) {
    const Pt a = pos(1, e.square);
    const Pt b = pos(e.kind == Dessin::Kind::h ? 0 : 2, e.vertex);
    out << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
        << "\" stroke=\"#555\"/>\n";
  }
  auto vertex = [&](Pt p, const char* fill, const std::string& text) {
    out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(cell * 0.2) << "\" fill=\""
        << fill << "\" stroke=\"#333\"/>\n<text x=\"" << num(p.x) << "\" y=\"" << num(p.y) << "\" font-size=\""
        << num(cell * 0.15) << "\">" << text << "</text>\n";
  };
  for (std::size_t i = 0; i < ds.h_vertices.size(); ++i) vertex(pos(0, i), "#ffffff", pair_glyph(i));
  for (std::size_t i = 0; i < ds.degree; ++i) vertex(pos(1, i), "#000000", "");
  for (std::size_t i = 0; i < ds.v_vertices.size(); ++i) vertex(pos(2, i), "#bbbbbb", pair_glyph(ds.h_vertices.size() + i));
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace origami
