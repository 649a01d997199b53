// plabic.hpp: 3D plabic graphs and leftward soap-film propagation.
//
// Strands are numbered 1..n bottom to top; gap i sits between strands i and
// i+1. A film's cross-section at a vertical slice is a set of sheets; a sheet
// covers gaps [low..high] and may carry Over/Under wrap markers on its
// interior strands (low+1..high). Films are born at bridges and swept left.
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "braidseed/braid.hpp"

namespace braidseed {

enum class ColumnKind { Crossing, Bridge };

struct PlabicColumn {
  ColumnKind kind;
  int gap;       // 1..n-1
  int position;  // 1..k
};

struct PlabicDiagram {
  int n = 2;
  std::vector<PlabicColumn> columns;  // columns[j-1].position == j
  std::vector<int> bridge_positions;  // sorted, equals J
};

// Throws EmptyVariety if u is not a subword of beta.
PlabicDiagram build_diagram(const Permutation& u, const BraidWord& beta);

enum class Marker { Over, Under };

struct Sheet {
  int low = 0;   // lowest covered gap
  int high = 0;  // highest covered gap
  int64_t mult = 1;
  std::map<int, Marker> markers;  // strand -> marker, strands in [low+1..high]

  bool covers(int gap) const { return low <= gap && gap <= high; }
  bool operator==(const Sheet&) const = default;
  bool operator<(const Sheet& o) const;
};

struct FilmSlice {
  std::vector<Sheet> sheets;

  bool empty() const { return sheets.empty(); }
  int64_t gap_mult(int gap) const;
  // Sorts sheets and merges identical ones by adding multiplicities.
  void canonicalize();
  bool operator==(const FilmSlice&) const = default;
};

// Occurrences of propagation situations the worked examples never exercise,
// surfaced in analysis output so discrepancies stay visible.
struct AnomalyCounters {
  int64_t pinched_pass = 0;            // sheet covering exactly the crossing gap
  int64_t crossing_both_interior = 0;  // both crossing strands interior to one sheet
  int64_t multiplicity_gt1 = 0;        // some gap reached total multiplicity >= 2

  AnomalyCounters& operator+=(const AnomalyCounters& o);
  bool operator==(const AnomalyCounters&) const = default;
};

// Region multiplicities of one film around one bridge: a above, b right,
// c below, d left.
struct BridgeLocal {
  int64_t a = 0, b = 0, c = 0, d = 0;
  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool operator==(const BridgeLocal&) const = default;
};

// Reading right to left through a positive crossing at the given gap.
FilmSlice step_crossing(const FilmSlice& state, int gap, AnomalyCounters* counters = nullptr);

// Reading right to left through a bridge at the given gap; returns the new
// slice plus (a,b,c,d) with b the gap multiplicity before and d after.
std::pair<FilmSlice, BridgeLocal> step_bridge(const FilmSlice& state, int gap);

struct SoapFilm {
  int origin_position = 0;  // the bridge the film starts at
  int origin_gap = 0;
  int vertex_id = 0;  // canonical: mutables 1..m, then frozens m+1..m+f
  bool frozen = false;
  std::vector<int64_t> boundary;          // length n-1
  std::map<int, BridgeLocal> bridge_local;  // bridge position -> locals
};

struct FilmSet {
  int m = 0, f = 0;
  std::vector<SoapFilm> films;  // sorted by vertex_id
  AnomalyCounters anomalies;
  // slices[i][j] = slice of films[i] in the open region between columns j and
  // j+1 (j = 0 is the left border strip). Filled only by the history variant.
  std::vector<std::vector<FilmSlice>> slices;
};

FilmSet propagate_films_serial(const PlabicDiagram& diagram);
// OpenMP over films; output is identical to the serial reference.
FilmSet propagate_films(const PlabicDiagram& diagram);
// Serial, additionally records per-interval slices for rendering.
FilmSet propagate_films_with_history(const PlabicDiagram& diagram);

}  // namespace braidseed
