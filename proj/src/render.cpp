#include "braidseed/render.hpp"

#include <algorithm>
#include <sstream>

#include "braidseed/exchange.hpp"
#include "braidseed/plabic.hpp"

namespace braidseed {

RenderFormat parse_render_format(const std::string& text) {
  if (text == "svg") return RenderFormat::Svg;
  if (text == "dot") return RenderFormat::Dot;
  if (text == "tikz") return RenderFormat::Tikz;
  throw InvalidInput("unknown render format '" + text + "' (expected svg, dot or tikz)");
}

RenderTarget parse_render_target(const std::string& text) {
  if (text == "plabic") return RenderTarget::Plabic;
  if (text == "quiver") return RenderTarget::Quiver;
  throw InvalidInput("unknown render target '" + text + "' (expected plabic or quiver)");
}

namespace {

constexpr int kUnit = 40;    // horizontal column pitch and strand spacing
constexpr int kMargin = 40;
constexpr int kCrossHalf = 14;

struct Layout {
  int n = 2, k = 0;

  int col_x(int position) const { return kMargin + position * kUnit; }
  int left_x() const { return kMargin; }
  int right_x() const { return kMargin + (k + 1) * kUnit; }
  // Strand 1 at the bottom; SVG y grows downward.
  int strand_y(int strand) const { return kMargin + (n - strand) * kUnit; }
  int gap_y(int gap) const { return strand_y(gap) - kUnit / 2; }
  int width() const { return right_x() + kMargin; }
  int height() const { return kMargin + n * kUnit; }
};

// Region cells of one gap: maximal x-intervals between columns at that gap.
struct RegionCell {
  int gap = 0;
  int from_position = 0;  // 0 = left border
  int to_position = 0;    // k+1 = right border
  std::vector<std::pair<int, int64_t>> films;  // (vertex id, multiplicity)
};

std::vector<RegionCell> region_cells(const PlabicDiagram& diagram, const FilmSet& films) {
  std::vector<RegionCell> cells;
  const int k = static_cast<int>(diagram.columns.size());
  for (int gap = 1; gap <= diagram.n - 1; ++gap) {
    std::vector<int> splits{0};
    for (const PlabicColumn& col : diagram.columns)
      if (col.gap == gap) splits.push_back(col.position);
    splits.push_back(k + 1);
    for (size_t a = 0; a + 1 < splits.size(); ++a) {
      RegionCell cell;
      cell.gap = gap;
      cell.from_position = splits[a];
      cell.to_position = splits[a + 1];
      // Film multiplicities are constant across the cell; sample the interval
      // just right of the left boundary.
      int interval = splits[a];
      for (size_t i = 0; i < films.films.size(); ++i) {
        int64_t mult = films.slices[i][interval].gap_mult(gap);
        if (mult > 0) cell.films.emplace_back(films.films[i].vertex_id, mult);
      }
      std::sort(cell.films.begin(), cell.films.end());
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

std::string film_label(const std::vector<std::pair<int, int64_t>>& list) {
  std::string text;
  for (auto& [id, mult] : list) {
    if (!text.empty()) text += ",";
    text += std::to_string(id);
    if (mult > 1) text += "x" + std::to_string(mult);
  }
  return text;
}

std::string svg_header(int width, int height) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
      << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" "
         "markerHeight=\"7\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/>"
         "</marker></defs>\n";
  return out.str();
}

void svg_line(std::ostringstream& out, int x1, int y1, int x2, int y2, const std::string& style) {
  out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" "
      << style << "/>\n";
}

std::string render_plabic_svg(const PlabicDiagram& diagram, const std::vector<RegionCell>& cells,
                              std::optional<int> film) {
  Layout lay{diagram.n, static_cast<int>(diagram.columns.size())};
  std::ostringstream out;
  out << svg_header(lay.width(), lay.height());

  // Film overlay first so strands draw on top.
  if (film) {
    for (const RegionCell& cell : cells) {
      bool covered = std::any_of(cell.films.begin(), cell.films.end(),
                                 [&](auto& p) { return p.first == *film; });
      if (!covered) continue;
      int x1 = cell.from_position == 0 ? lay.left_x() : lay.col_x(cell.from_position);
      int x2 = cell.to_position == lay.k + 1 ? lay.right_x() : lay.col_x(cell.to_position);
      int y = lay.strand_y(cell.gap + 1);
      out << "<rect x=\"" << x1 << "\" y=\"" << y << "\" width=\"" << (x2 - x1) << "\" height=\""
          << kUnit << "\" fill=\"#f6c8d8\"/>\n";
    }
  }

  const std::string strand_style = "stroke=\"black\" stroke-width=\"2\"";
  // Horizontal strand segments, broken at crossings.
  for (int strand = 1; strand <= diagram.n; ++strand) {
    int y = lay.strand_y(strand);
    int x = lay.left_x();
    for (const PlabicColumn& col : diagram.columns) {
      if (col.kind == ColumnKind::Crossing && (col.gap == strand || col.gap + 1 == strand)) {
        int cx = lay.col_x(col.position);
        svg_line(out, x, y, cx - kCrossHalf, y, strand_style);
        x = cx + kCrossHalf;
      }
    }
    svg_line(out, x, y, lay.right_x(), y, strand_style);
  }

  // Columns.
  for (const PlabicColumn& col : diagram.columns) {
    int cx = lay.col_x(col.position);
    int y_low = lay.strand_y(col.gap);
    int y_high = lay.strand_y(col.gap + 1);
    if (col.kind == ColumnKind::Bridge) {
      svg_line(out, cx, y_high, cx, y_low, "stroke=\"black\" stroke-width=\"3\"");
      out << "<circle cx=\"" << cx << "\" cy=\"" << y_high
          << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
      out << "<circle cx=\"" << cx << "\" cy=\"" << y_low
          << "\" r=\"4\" fill=\"black\" stroke=\"black\"/>\n";
    } else {
      // Positive crossing: the southwest-northeast strand stays unbroken.
      int third = (2 * kCrossHalf) / 3;
      svg_line(out, cx - kCrossHalf, y_high, cx - kCrossHalf + third, y_high + third, strand_style);
      svg_line(out, cx + kCrossHalf - third, y_low - third, cx + kCrossHalf, y_low, strand_style);
      svg_line(out, cx - kCrossHalf, y_low, cx + kCrossHalf, y_high, strand_style);
    }
  }

  // Region labels.
  for (const RegionCell& cell : cells) {
    if (cell.films.empty()) continue;
    int x1 = cell.from_position == 0 ? lay.left_x() : lay.col_x(cell.from_position);
    int x2 = cell.to_position == lay.k + 1 ? lay.right_x() : lay.col_x(cell.to_position);
    out << "<text x=\"" << (x1 + x2) / 2 << "\" y=\"" << lay.gap_y(cell.gap) + 4
        << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#c2185b\">" << film_label(cell.films)
        << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

std::string render_plabic_tikz(const PlabicDiagram& diagram, const FilmSet& films,
                               const std::vector<RegionCell>& cells, std::optional<int> film) {
  (void)films;
  const int k = static_cast<int>(diagram.columns.size());
  std::ostringstream out;
  out << "\\begin{tikzpicture}[scale=0.8]\n";
  if (film) {
    for (const RegionCell& cell : cells) {
      bool covered = std::any_of(cell.films.begin(), cell.films.end(),
                                 [&](auto& p) { return p.first == *film; });
      if (!covered) continue;
      double x1 = cell.from_position == 0 ? 0.0 : cell.from_position;
      double x2 = cell.to_position == k + 1 ? k + 1 : cell.to_position;
      out << "\\fill[pink!40] (" << x1 << "," << cell.gap << ") rectangle (" << x2 << ","
          << cell.gap + 1 << ");\n";
    }
  }
  for (int strand = 1; strand <= diagram.n; ++strand) {
    double x = 0;
    for (const PlabicColumn& col : diagram.columns) {
      if (col.kind == ColumnKind::Crossing && (col.gap == strand || col.gap + 1 == strand)) {
        out << "\\draw[thick] (" << x << "," << strand << ") -- (" << col.position - 0.35 << ","
            << strand << ");\n";
        x = col.position + 0.35;
      }
    }
    out << "\\draw[thick] (" << x << "," << strand << ") -- (" << k + 1 << "," << strand << ");\n";
  }
  for (const PlabicColumn& col : diagram.columns) {
    double cx = col.position;
    if (col.kind == ColumnKind::Bridge) {
      out << "\\draw[ultra thick] (" << cx << "," << col.gap << ") -- (" << cx << "," << col.gap + 1
          << ");\n";
      out << "\\node[circle, draw=black, fill=white, inner sep=1.5pt] at (" << cx << "," << col.gap + 1
          << ") {};\n";
      out << "\\node[circle, draw=black, fill=black, inner sep=1.5pt] at (" << cx << "," << col.gap
          << ") {};\n";
    } else {
      out << "\\draw[thick] (" << cx - 0.35 << "," << col.gap + 1 << ") -- (" << cx - 0.15 << ","
          << col.gap + 0.8 << ");\n";
      out << "\\draw[thick] (" << cx + 0.15 << "," << col.gap + 0.2 << ") -- (" << cx + 0.35 << ","
          << col.gap << ");\n";
      out << "\\draw[thick] (" << cx - 0.35 << "," << col.gap << ") -- (" << cx + 0.35 << ","
          << col.gap + 1 << ");\n";
    }
  }
  for (const RegionCell& cell : cells) {
    if (cell.films.empty()) continue;
    double x1 = cell.from_position == 0 ? 0.0 : cell.from_position;
    double x2 = cell.to_position == k + 1 ? k + 1 : cell.to_position;
    out << "\\node[magenta, font=\\scriptsize] at (" << (x1 + x2) / 2 << "," << cell.gap + 0.5 << ") {"
        << film_label(cell.films) << "};\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

struct QuiverArrow {
  int from = 0, to = 0;  // 1-based vertex ids
  int64_t weight_twice = 0;  // positive
};

std::vector<QuiverArrow> quiver_arrows(const Quiver& quiver) {
  std::vector<QuiverArrow> arrows;
  const int size = quiver.m + quiver.f;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      int64_t w2 = quiver.weight_twice.at(i, j);
      if (w2 > 0)
        arrows.push_back({i + 1, j + 1, w2});
      else if (w2 < 0)
        arrows.push_back({j + 1, i + 1, -w2});
    }
  return arrows;
}

std::string weight_label(int64_t weight_twice) {
  if (weight_twice == 2) return "";
  return Dyadic::from_twice(weight_twice).str();
}

std::string render_quiver_svg(const FilmSet& films, const Quiver& quiver, int n, int k) {
  Layout lay{n, k};
  std::ostringstream out;
  out << svg_header(lay.width(), lay.height());
  std::vector<std::pair<int, int>> pos(films.films.size() + 1);
  for (const SoapFilm& film : films.films)
    pos[film.vertex_id] = {lay.col_x(film.origin_position), lay.gap_y(film.origin_gap)};
  for (const QuiverArrow& arrow : quiver_arrows(quiver)) {
    auto [x1, y1] = pos[arrow.from];
    auto [x2, y2] = pos[arrow.to];
    bool half = arrow.weight_twice % 2 != 0;
    out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\" stroke=\"" << (half ? "#d32f2f" : "black") << "\" stroke-width=\"1.5\""
        << (half ? " stroke-dasharray=\"6 3\"" : "") << " marker-end=\"url(#arrow)\"/>\n";
    std::string label = weight_label(arrow.weight_twice);
    if (!label.empty())
      out << "<text x=\"" << (x1 + x2) / 2 + 5 << "\" y=\"" << (y1 + y2) / 2 - 5
          << "\" font-size=\"10\">" << label << "</text>\n";
  }
  for (const SoapFilm& film : films.films) {
    auto [x, y] = pos[film.vertex_id];
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"11\" fill=\"white\" stroke=\""
        << (film.frozen ? "#d32f2f" : "#2e7d32") << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << y + 4 << "\" font-size=\"11\" text-anchor=\"middle\">"
        << film.vertex_id << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_quiver_dot(const FilmSet& films, const Quiver& quiver) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (const SoapFilm& film : films.films)
    out << "  v" << film.vertex_id << " [label=\"" << film.vertex_id << "\", color=\""
        << (film.frozen ? "red" : "green") << "\"];\n";
  for (const QuiverArrow& arrow : quiver_arrows(quiver)) {
    out << "  v" << arrow.from << " -> v" << arrow.to;
    std::vector<std::string> attrs;
    if (arrow.weight_twice % 2 != 0) attrs.push_back("style=dashed, color=red");
    std::string label = weight_label(arrow.weight_twice);
    if (!label.empty()) attrs.push_back("label=\"" + label + "\"");
    if (!attrs.empty()) {
      out << " [" << attrs[0];
      for (size_t i = 1; i < attrs.size(); ++i) out << ", " << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_quiver_tikz(const FilmSet& films, const Quiver& quiver) {
  std::ostringstream out;
  out << "\\begin{tikzpicture}[scale=0.8]\n";
  for (const SoapFilm& film : films.films)
    out << "\\node[draw, circle, " << (film.frozen ? "red" : "green") << "] (v" << film.vertex_id
        << ") at (" << film.origin_position << "," << film.origin_gap + 0.5 << ") {"
        << film.vertex_id << "};\n";
  for (const QuiverArrow& arrow : quiver_arrows(quiver)) {
    bool half = arrow.weight_twice % 2 != 0;
    std::string label = weight_label(arrow.weight_twice);
    out << "\\draw[->" << (half ? ", dashed, red" : "") << "] (v" << arrow.from << ") to ";
    if (!label.empty()) out << "node[midway, above, font=\\scriptsize] {$" << label << "$} ";
    out << "(v" << arrow.to << ");\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace

std::string render(const Permutation& u, const BraidWord& beta, const RenderOptions& options) {
  PlabicDiagram diagram = build_diagram(u, beta);
  FilmSet films = propagate_films_with_history(diagram);

  if (options.film) {
    bool known = std::any_of(films.films.begin(), films.films.end(),
                             [&](const SoapFilm& f) { return f.vertex_id == *options.film; });
    if (!known) throw InvalidInput("unknown film vertex id " + std::to_string(*options.film));
  }

  if (options.target == RenderTarget::Plabic) {
    if (options.format == RenderFormat::Dot)
      throw InvalidInput("unsupported combination: the plabic target has no dot form");
    std::vector<RegionCell> cells = region_cells(diagram, films);
    if (options.format == RenderFormat::Svg)
      return render_plabic_svg(diagram, cells, options.film);
    return render_plabic_tikz(diagram, films, cells, options.film);
  }

  IntMatrix h2 = half_arrow_matrix_twice(diagram, films);
  Quiver quiver = quiver_from_half_arrows(h2, films.m, films.f);
  switch (options.format) {
    case RenderFormat::Svg:
      return render_quiver_svg(films, quiver, diagram.n, static_cast<int>(diagram.columns.size()));
    case RenderFormat::Dot:
      return render_quiver_dot(films, quiver);
    case RenderFormat::Tikz:
      return render_quiver_tikz(films, quiver);
  }
  throw InternalError("unreachable render format");
}

}  // namespace braidseed
