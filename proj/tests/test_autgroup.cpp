#include <doctest.h>

#include "braidseed/autgroup.hpp"
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

}  // namespace

TEST_CASE("kernel basis on the running example") {
  ExchangeData data = analyze_pair(golden::example_b_u(), golden::example_b_beta());
  auto basis = kernel_basis(data.bhat, data.a, data.m, data.f);
  REQUIRE(basis.size() == 6);
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 10; ++i) CHECK(basis[j][i] == golden::example_b_a().at(i, 4 + j));
}

TEST_CASE("kernel basis is empty when f = 0 and checks out on a corpus") {
  // beta a reduced word of u: no bridges at all
  ExchangeData empty = analyze_pair(Permutation::from_word(2, {1}), parse_word("1", 2));
  CHECK(empty.f == 0);
  CHECK(kernel_basis(empty.bhat, empty.a, empty.m, empty.f).empty());

  auto instances = corpus::nonempty_instances(401, 120, 5, 9);
  for (const auto& [u, beta] : instances) {
    ExchangeData data = analyze_pair(u, beta);
    auto basis = kernel_basis(data.bhat, data.a, data.m, data.f);  // throws if Btilde v != 0
    CHECK(static_cast<int>(basis.size()) == data.f);
  }
}

TEST_CASE("torus action strings match the worked examples") {
  ExchangeData b = analyze_pair(golden::example_b_u(), golden::example_b_beta());
  TorusAction action = torus_action(b.a, b.m, b.f);
  for (int i = 1; i <= 10; ++i)
    CHECK(torus_action_string(action, i) == golden::example_b_torus_strings()[i - 1]);

  ExchangeData d = analyze_pair(golden::example_d_u(), golden::example_d_beta());
  TorusAction d_action = torus_action(d.a, d.m, d.f);
  CHECK(torus_action_string(d_action, 4) == "x_4 → t_3 x_4");
  CHECK(torus_action_string(d_action, 1) == "x_1 → x_1");
  for (int i = 1; i <= 7; ++i)
    CHECK(torus_action_string(d_action, i) == golden::example_d_torus_strings()[i - 1]);
}

TEST_CASE("torus_action_string rejects out-of-range variables") {
  ExchangeData d = analyze_pair(golden::example_d_u(), golden::example_d_beta());
  TorusAction action = torus_action(d.a, d.m, d.f);
  CHECK_THROWS_AS(torus_action_string(action, 0), InvalidInput);
  CHECK_THROWS_AS(torus_action_string(action, 8), InvalidInput);
}

TEST_CASE("torus weights are the last f columns of A") {
  auto instances = corpus::nonempty_instances(409, 60, 5, 8);
  for (const auto& [u, beta] : instances) {
    ExchangeData data = analyze_pair(u, beta);
    TorusAction action = torus_action(data.a, data.m, data.f);
    for (int i = 0; i < data.m + data.f; ++i)
      for (int j = 0; j < data.f; ++j) CHECK(action.weights.at(i, j) == data.a.at(i, data.m + j));
  }
}

TEST_CASE("sign report classifications") {
  ExchangeData c = analyze_pair(golden::example_c_u(), golden::example_c_beta());
  SignReport c_report = sign_report(c.a);
  CHECK(c_report.all_nonpositive);
  CHECK(c_report.violations.empty());

  ExchangeData d = analyze_pair(golden::example_d_u(), golden::example_d_beta());
  SignReport d_report = sign_report(d.a);
  CHECK_FALSE(d_report.all_nonpositive);
  std::vector<std::vector<int64_t>> got;
  for (const SignViolation& v : d_report.violations) got.push_back({v.row, v.col, v.entry});
  CHECK(got == golden::example_d_positive_entries());

  CHECK(sign_report(IntMatrix(3, 3)).all_nonpositive);
}

TEST_CASE("survey n=2 lengths 1..3 has exactly six records") {
  SurveyOptions options;
  options.n = 2;
  options.min_len = 1;
  options.max_len = 3;
  SurveyResult result = survey(options);
  CHECK(result.emitted == 6);
  CHECK(result.skipped_empty == 0);
  CHECK_FALSE(result.truncated);

  // Hand check of the third row: u = id, beta = (1,1) has a frozen film at
  // position 1 and a mutable one at position 2, Bhat = [[0,-1],[1,-1]] and
  // A = [[-1,1],[-1,0]], so the sign phenomenon fails there.
  std::string expected =
      "n,u_word,beta,m,f,distinct_letters,det_ok,sign_all_nonpositive\n"
      "2,,1,0,1,1,true,true\n"
      "2,1,1,0,0,1,true,true\n"
      "2,,1 1,1,1,1,true,false\n"
      "2,1,1 1,0,1,1,true,true\n"
      "2,,1 1 1,2,1,1,true,false\n"
      "2,1,1 1 1,1,1,1,true,false\n";
  CHECK(result.csv == expected);
}

TEST_CASE("survey includes the mixed-sign example") {
  SurveyOptions options;
  options.n = 4;
  options.min_len = 9;
  options.max_len = 9;
  options.u_word = std::vector<int>{1, 2};
  options.budget = 30000;
  SurveyResult result = survey(options);
  CHECK(result.csv.find("4,1 2,1 3 1 2 1 3 2 2 3,4,3,3,true,false\n") != std::string::npos);
}

TEST_CASE("survey is deterministic and respects the budget") {
  SurveyOptions options;
  options.n = 3;
  options.min_len = 0;
  options.max_len = 4;

  options.jobs = 1;
  SurveyResult serial = survey(options);
  options.jobs = 4;
  SurveyResult parallel = survey(options);
  CHECK(serial.csv == parallel.csv);
  CHECK(serial.emitted == parallel.emitted);

  options.jobs = 0;
  options.budget = 10;
  SurveyResult truncated = survey(options);
  CHECK(truncated.truncated);
  CHECK(truncated.csv.find("# truncated") != std::string::npos);

  SurveyOptions empty_range;
  empty_range.n = 3;
  empty_range.min_len = 2;
  empty_range.max_len = 2;
  empty_range.u_word = std::vector<int>{1};
  SurveyResult some = survey(empty_range);
  CHECK(some.emitted + some.skipped_empty == 4);
}
