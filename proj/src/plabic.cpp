#include "braidseed/plabic.hpp"

#include <algorithm>

namespace braidseed {

PlabicDiagram build_diagram(const Permutation& u, const BraidWord& beta) {
  DemazureTrace trace = demazure_trace(u, beta);
  if (!trace.nonempty) throw EmptyVariety("u is not a subword of beta: the braid variety is empty");
  PlabicDiagram d;
  d.n = beta.n;
  d.columns.reserve(beta.length());
  for (int j = 1; j <= beta.length(); ++j) {
    ColumnKind kind = trace.in_J(j) ? ColumnKind::Bridge : ColumnKind::Crossing;
    d.columns.push_back({kind, beta.letters[j - 1], j});
  }
  d.bridge_positions = trace.J;
  return d;
}

bool Sheet::operator<(const Sheet& o) const {
  if (low != o.low) return low < o.low;
  if (high != o.high) return high < o.high;
  if (markers != o.markers) return markers < o.markers;
  return mult < o.mult;
}

int64_t FilmSlice::gap_mult(int gap) const {
  int64_t total = 0;
  for (const Sheet& s : sheets)
    if (s.covers(gap)) total = checked_add(total, s.mult);
  return total;
}

void FilmSlice::canonicalize() {
  std::sort(sheets.begin(), sheets.end());
  std::vector<Sheet> merged;
  for (Sheet& s : sheets) {
    if (!merged.empty() && merged.back().low == s.low && merged.back().high == s.high &&
        merged.back().markers == s.markers) {
      merged.back().mult = checked_add(merged.back().mult, s.mult);
    } else {
      merged.push_back(std::move(s));
    }
  }
  sheets = std::move(merged);
}

AnomalyCounters& AnomalyCounters::operator+=(const AnomalyCounters& o) {
  pinched_pass += o.pinched_pass;
  crossing_both_interior += o.crossing_both_interior;
  multiplicity_gt1 += o.multiplicity_gt1;
  return *this;
}

FilmSlice step_crossing(const FilmSlice& state, int gap, AnomalyCounters* counters) {
  const int i = gap;
  FilmSlice out;
  out.sheets.reserve(state.sheets.size());
  for (Sheet s : state.sheets) {
    if (s.high <= i - 2 || s.low >= i + 2) {
      // does not touch strands i, i+1
    } else if (s.low == i + 1) {
      // bottom edge rides the front strand down; the back strand enters the
      // interior and the film passes over it
      s.low = i;
      s.markers[i + 1] = Marker::Over;
    } else if (s.high == i - 1) {
      // top edge rides the back strand up; the film passes under the front
      // strand
      s.high = i;
      s.markers[i] = Marker::Under;
    } else if (s.low == i && s.high == i) {
      // pinched between the two crossing strands; passes through unchanged
      if (counters) ++counters->pinched_pass;
    } else if (s.low == i) {
      s.low = i + 1;
      s.markers.erase(i + 1);  // strand i+1 becomes the new bottom edge
    } else if (s.high == i) {
      s.high = i - 1;
      s.markers.erase(i);  // strand i becomes the new top edge
    } else {
      // both crossing strands interior: markers follow their strands
      if (counters) ++counters->crossing_both_interior;
      auto mi = s.markers.find(i);
      auto mj = s.markers.find(i + 1);
      bool has_i = mi != s.markers.end();
      bool has_j = mj != s.markers.end();
      Marker vi = has_i ? mi->second : Marker::Over;
      Marker vj = has_j ? mj->second : Marker::Over;
      s.markers.erase(i);
      s.markers.erase(i + 1);
      if (has_i) s.markers[i + 1] = vi;
      if (has_j) s.markers[i] = vj;
    }
    out.sheets.push_back(std::move(s));
  }
  out.canonicalize();
  return out;
}

std::pair<FilmSlice, BridgeLocal> step_bridge(const FilmSlice& state, int gap) {
  const int i = gap;
  BridgeLocal local;
  local.a = state.gap_mult(i + 1);
  local.b = state.gap_mult(i);
  local.c = state.gap_mult(i - 1);

  FilmSlice out;
  out.sheets.reserve(state.sheets.size());
  for (const Sheet& s : state.sheets) {
    if (!s.covers(i)) {
      out.sheets.push_back(s);
      continue;
    }
    auto top = s.markers.find(i + 1);
    auto bottom = s.markers.find(i);
    bool passes = (top != s.markers.end() && top->second == Marker::Over) ||
                  (bottom != s.markers.end() && bottom->second == Marker::Under);
    if (passes) {
      out.sheets.push_back(s);
      continue;
    }
    // Cut: the portions strictly below and strictly above gap i survive,
    // clinging flush at strands i and i+1.
    if (s.low <= i - 1) {
      Sheet lower;
      lower.low = s.low;
      lower.high = i - 1;
      lower.mult = s.mult;
      for (auto& [strand, marker] : s.markers)
        if (strand <= i - 1) lower.markers.emplace(strand, marker);
      out.sheets.push_back(std::move(lower));
    }
    if (s.high >= i + 1) {
      Sheet upper;
      upper.low = i + 1;
      upper.high = s.high;
      upper.mult = s.mult;
      for (auto& [strand, marker] : s.markers)
        if (strand >= i + 2) upper.markers.emplace(strand, marker);
      out.sheets.push_back(std::move(upper));
    }
  }
  out.canonicalize();
  local.d = out.gap_mult(i);
  return {std::move(out), local};
}

namespace {

struct FilmScan {
  SoapFilm film;
  AnomalyCounters anomalies;
  std::vector<FilmSlice> slices;  // filled only when with_history
};

FilmScan scan_film(const PlabicDiagram& diagram, int origin_position, bool with_history) {
  FilmScan result;
  const int n = diagram.n;
  const int gap = diagram.columns[origin_position - 1].gap;

  SoapFilm& film = result.film;
  film.origin_position = origin_position;
  film.origin_gap = gap;
  film.bridge_local[origin_position] = BridgeLocal{0, 0, 0, 1};

  FilmSlice state;
  state.sheets.push_back(Sheet{gap, gap, 1, {}});

  if (with_history) {
    result.slices.assign(diagram.columns.size() + 1, FilmSlice{});
    result.slices[origin_position - 1] = state;
  }

  auto note_multiplicity = [&](const FilmSlice& slice) {
    for (int g = 1; g <= n - 1; ++g)
      if (slice.gap_mult(g) >= 2) {
        ++result.anomalies.multiplicity_gt1;
        break;
      }
  };

  for (int p = origin_position - 1; p >= 1; --p) {
    const PlabicColumn& col = diagram.columns[p - 1];
    if (col.kind == ColumnKind::Crossing) {
      state = step_crossing(state, col.gap, &result.anomalies);
    } else {
      auto [next, local] = step_bridge(state, col.gap);
      state = std::move(next);
      film.bridge_local[col.position] = local;
    }
    note_multiplicity(state);
    if (with_history) result.slices[p - 1] = state;
  }

  film.boundary.assign(n - 1, 0);
  for (int g = 1; g <= n - 1; ++g) film.boundary[g - 1] = state.gap_mult(g);
  film.frozen = std::any_of(film.boundary.begin(), film.boundary.end(), [](int64_t x) { return x != 0; });
  return result;
}

FilmSet assemble(std::vector<FilmScan>&& scans, bool with_history) {
  FilmSet set;
  for (FilmScan& scan : scans) set.anomalies += scan.anomalies;

  // Canonical vertex order: mutables left to right, then frozens left to right.
  std::vector<int> order(scans.size());
  for (size_t i = 0; i < scans.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (scans[a].film.frozen != scans[b].film.frozen) return !scans[a].film.frozen;
    return scans[a].film.origin_position < scans[b].film.origin_position;
  });

  for (size_t rank = 0; rank < order.size(); ++rank) {
    FilmScan& scan = scans[order[rank]];
    scan.film.vertex_id = static_cast<int>(rank) + 1;
    if (!scan.film.frozen) ++set.m;
    set.films.push_back(std::move(scan.film));
    if (with_history) set.slices.push_back(std::move(scan.slices));
  }
  set.f = static_cast<int>(set.films.size()) - set.m;
  return set;
}

}  // namespace

FilmSet propagate_films_serial(const PlabicDiagram& diagram) {
  std::vector<FilmScan> scans;
  scans.reserve(diagram.bridge_positions.size());
  for (int p : diagram.bridge_positions) scans.push_back(scan_film(diagram, p, false));
  return assemble(std::move(scans), false);
}

FilmSet propagate_films(const PlabicDiagram& diagram) {
  const int count = static_cast<int>(diagram.bridge_positions.size());
  std::vector<FilmScan> scans(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < count; ++i) scans[i] = scan_film(diagram, diagram.bridge_positions[i], false);
  return assemble(std::move(scans), false);
}

FilmSet propagate_films_with_history(const PlabicDiagram& diagram) {
  std::vector<FilmScan> scans;
  scans.reserve(diagram.bridge_positions.size());
  for (int p : diagram.bridge_positions) scans.push_back(scan_film(diagram, p, true));
  return assemble(std::move(scans), true);
}

}  // namespace braidseed
