#include "braidseed/exchange.hpp"

#include <algorithm>
#include <array>

namespace braidseed {

namespace {

enum Region { kAbove = 0, kRight = 1, kBelow = 2, kLeft = 3 };

// The six half arrows around a bridge, as (source region, target region).
constexpr std::array<std::pair<Region, Region>, 6> kTemplates = {{
    {kLeft, kRight},
    {kLeft, kRight},
    {kAbove, kLeft},
    {kRight, kAbove},
    {kBelow, kLeft},
    {kRight, kBelow},
}};

int64_t region_mult(const BridgeLocal& local, Region r) {
  switch (r) {
    case kAbove:
      return local.a;
    case kRight:
      return local.b;
    case kBelow:
      return local.c;
    case kLeft:
      return local.d;
  }
  return 0;
}

}  // namespace

IntMatrix half_arrow_matrix_twice(const PlabicDiagram& diagram, const FilmSet& films) {
  const int size = static_cast<int>(films.films.size());
  IntMatrix counts(size, size);  // counts.at(x, y) = # half arrows x -> y

  for (int bridge_pos : diagram.bridge_positions) {
    // Films born at or right of this bridge have recorded locals here.
    std::vector<std::pair<int, const BridgeLocal*>> present;
    for (int x = 0; x < size; ++x) {
      auto it = films.films[x].bridge_local.find(bridge_pos);
      if (it == films.films[x].bridge_local.end()) {
        if (films.films[x].origin_position >= bridge_pos)
          throw InternalError("missing bridge-local data at position " + std::to_string(bridge_pos));
        continue;
      }
      if (!it->second.is_zero()) present.emplace_back(x, &it->second);
    }
    for (auto& [x, lx] : present)
      for (auto& [y, ly] : present)
        for (auto& [src, dst] : kTemplates) {
          int64_t w = checked_mul(region_mult(*lx, src), region_mult(*ly, dst));
          if (w != 0) counts.at(x, y) = checked_add(counts.at(x, y), w);
        }
  }

  IntMatrix h2(size, size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) h2.at(x, y) = checked_sub(counts.at(x, y), counts.at(y, x));
  return h2;
}

IntMatrix boundary_correction_matrix_twice(const FilmSet& films) {
  const int size = static_cast<int>(films.films.size());
  IntMatrix d2(size, size);
  for (int x = 0; x < size; ++x)
    for (int y = x; y < size; ++y) {
      int64_t v = boundary_form_twice(films.films[x].boundary, films.films[y].boundary);
      d2.at(x, y) = v;
      d2.at(y, x) = v;
    }
  return d2;
}

BhatResult assemble_bhat(const IntMatrix& h_twice, const IntMatrix& d_twice, int m, int f) {
  IntMatrix sum = h_twice + d_twice;
  const int size = m + f;
  if (sum.rows() != size || sum.cols() != size) throw InternalError("Bhat assembly shape mismatch");
  BhatResult result;
  result.bhat = IntMatrix(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      if (sum.at(i, j) % 2 != 0)
        throw InternalError("integrality violation: Bhat entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") = " + Dyadic::from_twice(sum.at(i, j)).str());
      result.bhat.at(i, j) = sum.at(i, j) / 2;
    }
  result.btilde = result.bhat.top_rows(m);
  result.det = det_bareiss(result.bhat);
  int64_t expected = (size % 2 == 0) ? 1 : -1;
  if (result.det != expected)
    throw InternalError("determinant violation: det Bhat = " + std::to_string(result.det) +
                        ", expected " + std::to_string(expected));
  return result;
}

IntMatrix unimodular_inverse(const IntMatrix& bhat) { return inverse_unimodular(bhat); }

ExchangeData analyze_exchange(const PlabicDiagram& diagram, const FilmSet& films) {
  ExchangeData data;
  data.m = films.m;
  data.f = films.f;
  data.h_twice = half_arrow_matrix_twice(diagram, films);
  data.d_twice = boundary_correction_matrix_twice(films);
  BhatResult b = assemble_bhat(data.h_twice, data.d_twice, data.m, data.f);
  data.bhat = std::move(b.bhat);
  data.btilde = std::move(b.btilde);
  data.det = b.det;
  data.a = unimodular_inverse(data.bhat);
  return data;
}

Quiver quiver_from_half_arrows(const IntMatrix& h_twice, int m, int f) {
  if (h_twice.rows() != m + f || h_twice.cols() != m + f)
    throw InternalError("quiver shape mismatch");
  for (int i = 0; i < m + f; ++i) {
    if (h_twice.at(i, i) != 0) throw InternalError("quiver has a loop");
    for (int j = 0; j < m + f; ++j) {
      if (h_twice.at(i, j) != -h_twice.at(j, i)) throw InternalError("quiver weights not antisymmetric");
      if ((i < m || j < m) && h_twice.at(i, j) % 2 != 0)
        throw InternalError("half-integral arrow adjacent to a mutable vertex");
    }
  }
  return Quiver{m, f, h_twice};
}

IntMatrix mutate(const IntMatrix& b, int k, int m) {
  if (k < 1 || k > m) throw InvalidInput("mutation index " + std::to_string(k) + " is not mutable");
  if (b.rows() != b.cols() && b.rows() != m)
    throw InvalidInput("mutate expects a square matrix or the m x (m+f) exchange matrix");
  if (k > b.rows() || k > b.cols()) throw InvalidInput("mutation index out of range");
  const int kk = k - 1;
  IntMatrix r(b.rows(), b.cols());
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      if (i == kk || j == kk) {
        r.at(i, j) = checked_sub(0, b.at(i, j));
        continue;
      }
      int64_t bik = b.at(i, kk);
      int64_t bkj = b.at(kk, j);
      int64_t bump = checked_add(checked_mul(std::abs(bik), bkj), checked_mul(bik, std::abs(bkj)));
      r.at(i, j) = checked_add(b.at(i, j), bump / 2);
    }
  return r;
}

namespace {

BraidWord strip_first(const BraidWord& beta) {
  BraidWord rest;
  rest.n = beta.n;
  rest.letters.assign(beta.letters.begin() + 1, beta.letters.end());
  return rest;
}

InductiveResult build_recursive(const Permutation& u, const BraidWord& beta) {
  DemazureTrace trace = demazure_trace(u, beta);
  if (!trace.nonempty) throw EmptyVariety("u is not a subword of beta: the braid variety is empty");
  if (beta.length() == 0) return InductiveResult{IntMatrix(0, 0), IntMatrix(0, 0), {}};

  const int letter = beta.letters[0];
  BraidWord rest = strip_first(beta);

  if (!trace.in_J(1)) {
    // Case A: the leftmost letter is a crossing consumed by u.
    Permutation u_rest = u.s_times(letter);
    DemazureTrace sub_trace = demazure_trace(u_rest, rest);
    if (!sub_trace.nonempty) throw InternalError("Case A produced an empty stripped pair");
    for (int p : trace.J)
      if (!sub_trace.in_J(p - 1)) throw InternalError("Case A changed the bridge pattern");
    if (sub_trace.J.size() != trace.J.size()) throw InternalError("Case A changed the bridge count");

    InductiveResult sub = build_recursive(u_rest, rest);
    InductiveStep step;
    step.case_kind = 'A';
    step.letter = letter;
    sub.steps.push_back(std::move(step));
    return sub;
  }

  // Case B: the leftmost letter is a bridge; u is a subword of the rest.
  InductiveResult sub = build_recursive(u, rest);

  PlabicDiagram diagram = build_diagram(u, beta);
  FilmSet films = propagate_films(diagram);
  PlabicDiagram sub_diagram = build_diagram(u, rest);
  FilmSet sub_films = propagate_films(sub_diagram);

  const int size = films.m + films.f;
  if (size != sub_films.m + sub_films.f + 1) throw InternalError("Case B bridge count mismatch");

  // vertex_id-ordered index of the smaller pair's film by origin position.
  std::vector<int> sub_index_by_position(rest.length() + 1, -1);
  for (int idx = 0; idx < static_cast<int>(sub_films.films.size()); ++idx)
    sub_index_by_position[sub_films.films[idx].origin_position] = idx;

  int new_index = -1;
  std::vector<int> reorder(size, -1);
  for (int x = 0; x < size; ++x) {
    const SoapFilm& film = films.films[x];
    if (film.origin_position == 1) {
      new_index = x;
      continue;
    }
    reorder[x] = sub_index_by_position[film.origin_position - 1];
    if (reorder[x] < 0) throw InternalError("Case B film correspondence is incomplete");
  }
  if (new_index != films.m)
    throw InternalError("new frozen vertex is not at canonical index m+1");

  // Z1 and its inverse: the smaller matrices with the new row/column adjoined
  // as -1 on the diagonal, carried into the bigger canonical order.
  IntMatrix z1(size, size);
  IntMatrix z1_inv(size, size);
  z1.at(new_index, new_index) = -1;
  z1_inv.at(new_index, new_index) = -1;
  for (int y = 0; y < size; ++y) {
    if (y == new_index) continue;
    for (int x = 0; x < size; ++x) {
      if (x == new_index) continue;
      z1.at(y, x) = sub.bhat.at(reorder[y], reorder[x]);
      z1_inv.at(y, x) = sub.a.at(reorder[y], reorder[x]);
    }
  }

  // L carries bhat_{y,m+1} = a+c-b-d, R carries bhat_{m+1,x} = b-d, read off
  // the leftmost bridge's local multiplicities.
  IntMatrix l = IntMatrix::identity(size);
  IntMatrix r = IntMatrix::identity(size);
  for (int x = 0; x < size; ++x) {
    if (x == new_index) continue;
    const BridgeLocal& loc = films.films[x].bridge_local.at(1);
    l.at(x, new_index) = checked_sub(checked_add(loc.a, loc.c), checked_add(loc.b, loc.d));
    r.at(new_index, x) = checked_sub(loc.b, loc.d);
  }
  // (I + N)^{-1} = I - N for these single-line unipotent factors.
  IntMatrix l_inv = IntMatrix::identity(size) + IntMatrix::identity(size) - l;
  IntMatrix r_inv = IntMatrix::identity(size) + IntMatrix::identity(size) - r;

  InductiveResult result;
  result.bhat = l_inv * z1 * r_inv;
  result.a = r * z1_inv * l;
  result.steps = std::move(sub.steps);
  InductiveStep step;
  step.case_kind = 'B';
  step.letter = letter;
  step.l = std::move(l);
  step.r = std::move(r);
  step.reorder = std::move(reorder);
  result.steps.push_back(std::move(step));
  return result;
}

}  // namespace

InductiveResult inductive_build(const Permutation& u, const BraidWord& beta) {
  InductiveResult result = build_recursive(u, beta);

  PlabicDiagram diagram = build_diagram(u, beta);
  FilmSet films = propagate_films(diagram);
  ExchangeData direct = analyze_exchange(diagram, films);
  if (result.bhat != direct.bhat || result.a != direct.a)
    throw InternalError("inductive route disagrees with direct route");
  return result;
}

}  // namespace braidseed
