#include <doctest.h>

#include <random>

#include "braidseed/braid.hpp"
#include "golden.hpp"

using namespace braidseed;

TEST_CASE("parse_word accepts the running example") {
  BraidWord w = parse_word("5 4 3 2 1 4 3 4 2 5 3 4 5", 6);
  CHECK(w.letters == std::vector<int>{5, 4, 3, 2, 1, 4, 3, 4, 2, 5, 3, 4, 5});
  CHECK(parse_word("5,4,3", 6).letters == std::vector<int>{5, 4, 3});
}

TEST_CASE("parse_word edge cases") {
  CHECK(parse_word("", 3).letters.empty());
  CHECK_THROWS_AS(parse_word("3", 3), InvalidInput);
  CHECK_THROWS_AS(parse_word("0", 3), InvalidInput);
  CHECK_THROWS_AS(parse_word("1 x", 3), InvalidInput);
  CHECK_THROWS_AS(parse_word("1", 1), InvalidInput);
}

TEST_CASE("permutation basics") {
  Permutation w0 = Permutation::longest(6);
  CHECK(w0.oneline() == std::vector<int>{6, 5, 4, 3, 2, 1});
  CHECK(w0.length() == 15);
  CHECK(Permutation(5).length() == 0);

  Permutation u = Permutation::from_word(6, {4, 3, 4});
  CHECK(u.oneline() == std::vector<int>{1, 2, 5, 4, 3, 6});
  CHECK(u.length() == 3);
  CHECK(u.inverse() == u);
  CHECK_THROWS_AS(Permutation::from_oneline({1, 1, 2}), InvalidInput);
}

TEST_CASE("demazure_quotient") {
  Permutation id4(4);
  CHECK(demazure_quotient(id4, 1) == id4);
  CHECK(demazure_quotient(id4, 3) == id4);

  Permutation s2 = Permutation::from_word(4, {2});
  CHECK(demazure_quotient(s2, 2) == id4);

  // Position 13 of the running example stalls: u quotient s_5 keeps u.
  Permutation u = golden::example_b_u();
  CHECK(demazure_quotient(u, 5) == u);

  CHECK_THROWS_AS(demazure_quotient(id4, 4), InvalidInput);
}

TEST_CASE("demazure quotient is idempotent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<int> oneline(n);
    for (int i = 0; i < n; ++i) oneline[i] = i + 1;
    std::shuffle(oneline.begin(), oneline.end(), rng);
    Permutation v = Permutation::from_oneline(oneline);
    int i = 1 + static_cast<int>(rng() % (n - 1));
    Permutation once = demazure_quotient(v, i);
    CHECK(demazure_quotient(once, i) == once);
    CHECK((once.length() == v.length() || once.length() == v.length() - 1));
  }
}

TEST_CASE("demazure_trace matches the worked examples") {
  DemazureTrace b = demazure_trace(golden::example_b_u(), golden::example_b_beta());
  CHECK(b.J == golden::example_b_J());
  CHECK(b.nonempty);

  DemazureTrace a = demazure_trace(golden::example_a_u(), golden::example_a_beta());
  CHECK(a.J == golden::example_a_J());

  DemazureTrace c = demazure_trace(golden::example_c_u(), golden::example_c_beta());
  CHECK(c.J == golden::example_c_J());

  DemazureTrace d = demazure_trace(golden::example_d_u(), golden::example_d_beta());
  CHECK(d.J == golden::example_d_J());

  // The identity never shortens, so every position stalls.
  BraidWord beta = parse_word("1 2 1 2", 3);
  DemazureTrace id_trace = demazure_trace(Permutation(3), beta);
  CHECK(id_trace.J == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("is_nonempty basics") {
  CHECK(is_nonempty(golden::example_a_u(), golden::example_a_beta()));
  CHECK(is_nonempty(Permutation(2), BraidWord{2, {}}));
  CHECK_FALSE(is_nonempty(Permutation::from_word(2, {1}), BraidWord{2, {}}));
}

namespace {

// Oracle: u is a subword of beta iff some subsequence of beta is a reduced
// word of u.
bool subword_by_enumeration(const Permutation& u, const BraidWord& beta) {
  int k = beta.length();
  for (uint32_t mask = 0; mask < (uint32_t(1) << k); ++mask) {
    if (__builtin_popcount(mask) != u.length()) continue;
    Permutation p(beta.n);
    for (int i = 0; i < k; ++i)
      if (mask & (uint32_t(1) << i)) p = p.times_s(beta.letters[i]);
    if (p == u) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("is_nonempty agrees with exhaustive subsequence search") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> n_dist(2, 4);
  for (int trial = 0; trial < 300; ++trial) {
    int n = n_dist(rng);
    std::uniform_int_distribution<int> len_dist(0, 10);
    std::uniform_int_distribution<int> letter_dist(1, n - 1);
    BraidWord beta;
    beta.n = n;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) beta.letters.push_back(letter_dist(rng));
    std::vector<int> oneline(n);
    for (int i = 0; i < n; ++i) oneline[i] = i + 1;
    std::shuffle(oneline.begin(), oneline.end(), rng);
    Permutation u = Permutation::from_oneline(oneline);
    CHECK(is_nonempty(u, beta) == subword_by_enumeration(u, beta));
  }
}

TEST_CASE("reflect matches the local triple table") {
  CHECK(reflect(2, {0, 0, 0}) == std::vector<int64_t>{0, 0, 0});
  // triples (a_{i-1}, a_i, a_{i+1})
  CHECK(reflect(2, {1, 0, 0}) == std::vector<int64_t>{1, 1, 0});
  CHECK(reflect(2, {1, 1, 0}) == std::vector<int64_t>{1, 0, 0});
  CHECK(reflect(2, {1, 1, 1}) == std::vector<int64_t>{1, 1, 1});
  CHECK(reflect(2, {0, 0, 1}) == std::vector<int64_t>{0, 1, 1});
  CHECK(reflect(2, {0, 1, 1}) == std::vector<int64_t>{0, 0, 1});
  // out-of-range neighbors are 0
  CHECK(reflect(1, {1, 0, 0}) == std::vector<int64_t>{-1, 0, 0});
  CHECK(reflect(3, {0, 0, 1}) == std::vector<int64_t>{0, 0, -1});
  CHECK_THROWS_AS(reflect(4, std::vector<int64_t>{0, 0, 0}), InvalidInput);
}

TEST_CASE("boundary form worked values") {
  CHECK(boundary_form({0, 0, 1}, {0, 1, 0}) == Dyadic::from_twice(1));
  CHECK(boundary_form({0, 0, 1}, {1, 0, 0}) == Dyadic::from_twice(0));
  for (int i = 0; i < 3; ++i) {
    std::vector<int64_t> e(3, 0);
    e[i] = 1;
    CHECK(boundary_form(e, e) == Dyadic::from_int(-1));
  }
  CHECK_THROWS_AS(boundary_form({1, 0}, {1, 0, 0}), InvalidInput);
}

TEST_CASE("boundary form is symmetric and R_i-invariant; R_i is an involution") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> len_dist(1, 7);
  std::uniform_int_distribution<int64_t> entry(-4, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    int len = len_dist(rng);
    std::vector<int64_t> a(len), b(len);
    for (auto& x : a) x = entry(rng);
    for (auto& x : b) x = entry(rng);
    CHECK(boundary_form_twice(a, b) == boundary_form_twice(b, a));
    int i = 1 + static_cast<int>(rng() % len);
    CHECK(boundary_form_twice(reflect(i, a), reflect(i, b)) == boundary_form_twice(a, b));
    CHECK(reflect(i, reflect(i, a)) == a);
  }
}

TEST_CASE("reduced_word goldens") {
  CHECK(reduced_word(Permutation(4)).empty());
  CHECK(reduced_word(Permutation::longest(3)) == std::vector<int>{1, 2, 1});

  Permutation u = Permutation::from_oneline({1, 2, 5, 4, 3, 6});
  std::vector<int> word = reduced_word(u);
  CHECK(word.size() == 3);
  CHECK(Permutation::from_word(6, word) == u);
}

TEST_CASE("reduced_word length and product on random permutations") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    std::vector<int> oneline(n);
    for (int i = 0; i < n; ++i) oneline[i] = i + 1;
    std::shuffle(oneline.begin(), oneline.end(), rng);
    Permutation p = Permutation::from_oneline(oneline);
    std::vector<int> word = reduced_word(p);
    CHECK(static_cast<int>(word.size()) == p.length());
    CHECK(Permutation::from_word(n, word) == p);
    // lexicographically smallest: no earlier letter works at the first spot
    if (!word.empty()) {
      for (int i = 1; i < word[0]; ++i) {
        Permutation shorter = p.s_times(i);
        CHECK(shorter.length() >= p.length());
      }
    }
  }
}
