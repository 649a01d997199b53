#include <doctest.h>

#include <random>

#include "braidseed/exchange.hpp"
#include "corpus.hpp"
#include "golden.hpp"

using namespace braidseed;

namespace {

ExchangeData analyze_pair(const Permutation& u, const BraidWord& beta) {
  PlabicDiagram d = build_diagram(u, beta);
  FilmSet films = propagate_films(d);
  return analyze_exchange(d, films);
}

// Independent quiver-level mutation on nonnegative arrow multisets, counted
// in half-arrow units: (1) paths through k compose, (2) arrows at k reverse,
// (3) 2-cycles cancel.
IntMatrix quiver_mutate_oracle(const IntMatrix& weight_twice, int k0) {
  const int size = weight_twice.rows();
  std::vector<std::vector<int64_t>> count(size, std::vector<int64_t>(size, 0));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (weight_twice.at(i, j) > 0) count[i][j] = weight_twice.at(i, j);

  std::vector<std::vector<int64_t>> next = count;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      if (i == k0 || j == k0) continue;
      // full arrows i->k and k->j introduce full arrows i->j
      next[i][j] += (count[i][k0] / 2) * (count[k0][j] / 2) * 2;
    }
  for (int i = 0; i < size; ++i) {
    if (i == k0) continue;
    std::swap(next[i][k0], next[k0][i]);
  }
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      int64_t cancel = std::min(next[i][j], next[j][i]);
      next[i][j] -= cancel;
      next[j][i] -= cancel;
    }

  IntMatrix out(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) out.at(i, j) = next[i][j] - next[j][i];
  return out;
}

}  // namespace

TEST_CASE("example A matrices") {
  ExchangeData data = analyze_pair(golden::example_a_u(), golden::example_a_beta());
  CHECK(data.m == 0);
  CHECK(data.f == 4);
  CHECK(data.h_twice == golden::example_a_h_twice());
  CHECK(data.d_twice == golden::example_a_d_twice());
  CHECK(data.bhat == golden::example_a_bhat());
  CHECK(data.det == 1);
  CHECK((data.bhat * data.a).is_identity());
}

TEST_CASE("running example matrices") {
  ExchangeData data = analyze_pair(golden::example_b_u(), golden::example_b_beta());
  CHECK(data.m == 4);
  CHECK(data.f == 6);
  CHECK(data.h_twice == golden::example_b_h_twice());
  // D = block-diag(0, N')
  IntMatrix expected_d(10, 10);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) expected_d.at(4 + i, 4 + j) = golden::example_b_n_prime_twice().at(i, j);
  CHECK(data.d_twice == expected_d);
  CHECK(data.bhat == golden::example_b_bhat());
  CHECK(data.det == 1);
  CHECK(data.a == golden::example_b_a());
  CHECK(data.btilde == golden::example_b_bhat().top_rows(4));
}

TEST_CASE("examples C and D inverse matrices") {
  ExchangeData c = analyze_pair(golden::example_c_u(), golden::example_c_beta());
  CHECK(c.m == 6);
  CHECK(c.f == 5);
  CHECK(c.a == golden::example_c_a());
  // H pinned by the example's quiver: 14 full arrows and 4 half arrows.
  IntMatrix quiver(11, 11);
  for (auto& arrow : golden::example_c_quiver_arrows_twice()) {
    quiver.at(arrow[0] - 1, arrow[1] - 1) = arrow[2];
    quiver.at(arrow[1] - 1, arrow[0] - 1) = -arrow[2];
  }
  CHECK(c.h_twice == quiver);

  ExchangeData d = analyze_pair(golden::example_d_u(), golden::example_d_beta());
  CHECK(d.m == 4);
  CHECK(d.f == 3);
  CHECK(d.a == golden::example_d_a());
}

TEST_CASE("H row of the leftmost bridge matches the local formula") {
  auto instances = corpus::nonempty_instances(211, 150, 5, 9);
  for (const auto& [u, beta] : instances) {
    PlabicDiagram d = build_diagram(u, beta);
    if (d.columns.empty() || d.columns[0].kind != ColumnKind::Bridge) continue;
    FilmSet films = propagate_films(d);
    IntMatrix h2 = half_arrow_matrix_twice(d, films);
    int row = -1;
    for (const SoapFilm& film : films.films)
      if (film.origin_position == 1) row = film.vertex_id - 1;
    REQUIRE(row >= 0);
    for (const SoapFilm& film : films.films) {
      if (film.origin_position == 1) continue;
      const BridgeLocal& loc = film.bridge_local.at(1);
      // 2*H_{m+1,x} = 2 b_x - (a_x + c_x)
      CHECK(h2.at(row, film.vertex_id - 1) == 2 * loc.b - loc.a - loc.c);
    }
  }
}

TEST_CASE("assemble_bhat rejects broken inputs") {
  IntMatrix h2 = golden::example_a_h_twice();
  IntMatrix d2 = golden::example_a_d_twice();
  SUBCASE("integrality") {
    d2.at(0, 1) = 2;  // makes an odd sum
    CHECK_THROWS_AS(assemble_bhat(h2, d2, 0, 4), InternalError);
  }
  SUBCASE("determinant") {
    d2.at(0, 0) = 0;
    CHECK_THROWS_AS(assemble_bhat(h2, d2, 0, 4), InternalError);
  }
  SUBCASE("empty") {
    BhatResult empty = assemble_bhat(IntMatrix(0, 0), IntMatrix(0, 0), 0, 0);
    CHECK(empty.det == 1);
    CHECK(empty.bhat.rows() == 0);
  }
}

TEST_CASE("unimodular_inverse basics") {
  CHECK(unimodular_inverse(IntMatrix::identity(5)) == IntMatrix::identity(5));
  IntMatrix bhat = golden::example_b_bhat();
  IntMatrix a = unimodular_inverse(bhat);
  CHECK((a * bhat).is_identity());
  IntMatrix singular(2, 2);
  singular.at(0, 0) = 2;
  singular.at(1, 1) = 2;
  CHECK_THROWS_AS(unimodular_inverse(singular), InternalError);
}

TEST_CASE("quiver from half arrows") {
  ExchangeData b = analyze_pair(golden::example_b_u(), golden::example_b_beta());
  Quiver q = quiver_from_half_arrows(b.h_twice, b.m, b.f);
  // the worked half-arrow sum: a single half arrow 5 -> 10 among the frozens
  CHECK(q.weight(4, 9) == Dyadic::from_twice(1));
  // integer arrows adjacent to mutables, e.g. 2 -> 7 and 7 -> 6
  CHECK(q.weight(1, 6) == Dyadic::from_int(-1));
  CHECK(q.weight(6, 5) == Dyadic::from_twice(1));

  ExchangeData a = analyze_pair(golden::example_a_u(), golden::example_a_beta());
  Quiver qa = quiver_from_half_arrows(a.h_twice, a.m, a.f);
  // all-frozen 4-cycle of half arrows 2->1, 1->4, 3->2, 4->3
  CHECK(qa.weight(1, 0).twice() == 1);
  CHECK(qa.weight(0, 3).twice() == 1);
  CHECK(qa.weight(2, 1).twice() == 1);
  CHECK(qa.weight(3, 2).twice() == 1);

  Quiver empty = quiver_from_half_arrows(IntMatrix(0, 0), 0, 0);
  CHECK(empty.weight_twice.rows() == 0);

  IntMatrix bad(2, 2);
  bad.at(0, 1) = 1;
  bad.at(1, 0) = -1;
  CHECK_THROWS_AS(quiver_from_half_arrows(bad, 1, 1), InternalError);
}

TEST_CASE("mutation is an involution") {
  std::mt19937_64 rng(307);
  std::uniform_int_distribution<int> m_dist(1, 5);
  std::uniform_int_distribution<int> f_dist(0, 4);
  std::uniform_int_distribution<int64_t> entry(-3, 3);
  for (int trial = 0; trial < 10000; ++trial) {
    int m = m_dist(rng);
    int f = f_dist(rng);
    bool square = (rng() % 2) == 0;
    int rows = square ? m + f : m;
    // the involution holds for arbitrary integer entries
    IntMatrix b(rows, m + f);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < m + f; ++j) b.at(i, j) = entry(rng);
    int k = 1 + static_cast<int>(rng() % m);
    CHECK(mutate(mutate(b, k, m), k, m) == b);
  }
}

TEST_CASE("mutation with a zero row and column only flips signs at k") {
  IntMatrix b(3, 3);
  b.at(0, 1) = 2;
  b.at(1, 0) = -2;
  IntMatrix mutated = mutate(b, 3, 3);
  CHECK(mutated == b);

  CHECK_THROWS_AS(mutate(b, 4, 3), InvalidInput);
  CHECK_THROWS_AS(mutate(b, 0, 3), InvalidInput);
}

TEST_CASE("matrix mutation agrees with quiver-level mutation") {
  // Bhat agrees with the quiver weights H on every entry adjacent to a
  // mutable vertex, and mutation at a mutable k changes any entry by a term
  // built from such entries only. Hence mu_k(Bhat) - D = mu_k(quiver H),
  // compared in doubled units.
  auto instances = corpus::nonempty_instances(311, 220, 5, 9);
  std::mt19937_64 rng(313);
  int exercised = 0;
  for (const auto& [u, beta] : instances) {
    if (exercised >= 100) break;
    ExchangeData data = analyze_pair(u, beta);
    if (data.m == 0) continue;
    ++exercised;
    int k = 1 + static_cast<int>(rng() % data.m);
    IntMatrix mutated_bhat = mutate(data.bhat, k, data.m);
    IntMatrix lhs = mutated_bhat + mutated_bhat - data.d_twice;
    IntMatrix rhs = quiver_mutate_oracle(data.h_twice, k - 1);
    CHECK(lhs == rhs);
  }
  CHECK(exercised >= 100);
}

TEST_CASE("running example first mutation agrees with the quiver rule") {
  ExchangeData data = analyze_pair(golden::example_b_u(), golden::example_b_beta());
  IntMatrix mutated_bhat = mutate(data.bhat, 1, data.m);
  IntMatrix lhs = mutated_bhat + mutated_bhat - data.d_twice;
  CHECK(lhs == quiver_mutate_oracle(data.h_twice, 0));
}

TEST_CASE("case A leaves Bhat unchanged") {
  auto instances = corpus::nonempty_instances(317, 400, 5, 9);
  int exercised = 0;
  for (const auto& [u, beta] : instances) {
    if (beta.length() == 0) continue;
    DemazureTrace trace = demazure_trace(u, beta);
    if (trace.in_J(1)) continue;
    BraidWord rest{beta.n, {beta.letters.begin() + 1, beta.letters.end()}};
    Permutation u_rest = u.s_times(beta.letters[0]);
    if (!is_nonempty(u_rest, rest)) continue;
    ++exercised;
    ExchangeData big = analyze_pair(u, beta);
    ExchangeData small = analyze_pair(u_rest, rest);
    CHECK(big.bhat == small.bhat);
    CHECK(big.h_twice == small.h_twice);
    CHECK(big.d_twice == small.d_twice);
    if (exercised >= 200) break;
  }
  CHECK(exercised > 50);
}

TEST_CASE("case B entry and H-comparison identities") {
  auto instances = corpus::nonempty_instances(331, 300, 5, 9);
  int exercised = 0;
  for (const auto& [u, beta] : instances) {
    if (beta.length() == 0) continue;
    DemazureTrace trace = demazure_trace(u, beta);
    if (!trace.in_J(1)) continue;
    ++exercised;
    BraidWord rest{beta.n, {beta.letters.begin() + 1, beta.letters.end()}};

    PlabicDiagram big_d = build_diagram(u, beta);
    FilmSet big_films = propagate_films(big_d);
    ExchangeData big = analyze_exchange(big_d, big_films);
    PlabicDiagram small_d = build_diagram(u, rest);
    FilmSet small_films = propagate_films(small_d);
    ExchangeData small = analyze_exchange(small_d, small_films);

    // bigger canonical index -> smaller canonical index, by origin position
    const int size = big.m + big.f;
    std::vector<int> to_small(size, -1);
    int new_index = -1;
    for (int x = 0; x < size; ++x) {
      int pos = big_films.films[x].origin_position;
      if (pos == 1) {
        new_index = x;
        continue;
      }
      for (int y = 0; y < size - 1; ++y)
        if (small_films.films[y].origin_position == pos - 1) to_small[x] = y;
      REQUIRE(to_small[x] >= 0);
    }
    REQUIRE(new_index == big.m);

    for (int y = 0; y < size; ++y) {
      if (y == new_index) continue;
      for (int x = 0; x < size; ++x) {
        if (x == new_index) continue;
        // bhat'_{y',x'} = bhat_{y,x} + bhat_{m+1,x} bhat_{y,m+1}
        int64_t lhs = small.bhat.at(to_small[y], to_small[x]);
        int64_t rhs = big.bhat.at(y, x) +
                      big.bhat.at(new_index, x) * big.bhat.at(y, new_index);
        CHECK(lhs == rhs);
        // 2H'_{y',x'} = 2H_{y,x} + (2H_{m+1,x} 2D_{m+1,y} - 2D_{m+1,x} 2H_{m+1,y}) / 2
        int64_t h_lhs = 2 * small.h_twice.at(to_small[y], to_small[x]);
        int64_t h_rhs = 2 * big.h_twice.at(y, x) +
                        big.h_twice.at(new_index, x) * big.d_twice.at(new_index, y) -
                        big.d_twice.at(new_index, x) * big.h_twice.at(new_index, y);
        CHECK(h_lhs == h_rhs);
      }
    }
    if (exercised >= 150) break;
  }
  CHECK(exercised > 50);
}

TEST_CASE("inductive route matches the direct route") {
  InductiveResult one = inductive_build(Permutation(2), parse_word("1", 2));
  IntMatrix minus_one(1, 1);
  minus_one.at(0, 0) = -1;
  CHECK(one.bhat == minus_one);
  CHECK(one.a == minus_one);

  InductiveResult running = inductive_build(golden::example_b_u(), golden::example_b_beta());
  CHECK(running.bhat == golden::example_b_bhat());
  CHECK(running.a == golden::example_b_a());
  CHECK(running.steps.size() == 13);
}

TEST_CASE("per-step L Bhat R = Z1 on example A") {
  // Walk the suffixes of example A and check the factorization at each
  // Case B prepend against directly assembled matrices.
  Permutation u = golden::example_a_u();
  BraidWord beta = golden::example_a_beta();
  int checked = 0;
  Permutation current_u = u;
  BraidWord current = beta;
  while (current.length() > 0) {
    DemazureTrace trace = demazure_trace(current_u, current);
    BraidWord rest{current.n, {current.letters.begin() + 1, current.letters.end()}};
    if (!trace.in_J(1)) {
      current_u = current_u.s_times(current.letters[0]);
      current = rest;
      continue;
    }
    InductiveResult ind = inductive_build(current_u, current);
    const InductiveStep& step = ind.steps.back();
    REQUIRE(step.case_kind == 'B');
    ExchangeData direct = analyze_pair(current_u, current);
    ExchangeData small = analyze_pair(current_u, rest);
    const int size = direct.m + direct.f;
    IntMatrix z1(size, size);
    for (int y = 0; y < size; ++y)
      for (int x = 0; x < size; ++x) {
        if (step.reorder[y] < 0 || step.reorder[x] < 0) {
          if (y == x) z1.at(y, x) = -1;
          continue;
        }
        z1.at(y, x) = small.bhat.at(step.reorder[y], step.reorder[x]);
      }
    CHECK(step.l * direct.bhat * step.r == z1);
    ++checked;
    current = rest;
  }
  CHECK(checked == 4);
}

TEST_CASE("inductive route agrees on a random corpus") {
  auto instances = corpus::nonempty_instances(337, 60, 4, 8);
  for (const auto& [u, beta] : instances) {
    ExchangeData direct = analyze_pair(u, beta);
    InductiveResult ind = inductive_build(u, beta);  // throws on disagreement
    CHECK(ind.bhat == direct.bhat);
    CHECK(ind.a == direct.a);
  }
}
