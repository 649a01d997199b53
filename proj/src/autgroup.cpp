#include "braidseed/autgroup.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "braidseed/exchange.hpp"
#include "braidseed/plabic.hpp"

namespace braidseed {

std::vector<std::vector<int64_t>> kernel_basis(const IntMatrix& bhat, const IntMatrix& a, int m, int f) {
  const int size = m + f;
  if (bhat.rows() != size || a.rows() != size) throw InternalError("kernel_basis shape mismatch");
  IntMatrix btilde = bhat.top_rows(m);
  std::vector<std::vector<int64_t>> basis;
  basis.reserve(f);
  for (int j = m; j < size; ++j) {
    std::vector<int64_t> v(size);
    for (int i = 0; i < size; ++i) v[i] = a.at(i, j);
    for (int r = 0; r < m; ++r) {
      int64_t dot = 0;
      for (int i = 0; i < size; ++i) dot = checked_add(dot, checked_mul(btilde.at(r, i), v[i]));
      if (dot != 0) throw InternalError("kernel basis vector fails Btilde * v = 0");
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

TorusAction torus_action(const IntMatrix& a, int m, int f) {
  if (a.rows() != m + f || a.cols() != m + f) throw InternalError("torus_action shape mismatch");
  TorusAction t;
  t.m = m;
  t.f = f;
  t.weights = IntMatrix(m + f, f);
  for (int i = 0; i < m + f; ++i)
    for (int j = 0; j < f; ++j) t.weights.at(i, j) = a.at(i, m + j);
  return t;
}

std::string torus_action_string(const TorusAction& action, int i) {
  if (i < 1 || i > action.m + action.f) throw InvalidInput("variable index out of range");
  std::ostringstream out;
  out << "x_" << i << " → ";
  for (int j = 1; j <= action.f; ++j) {
    int64_t e = action.weights.at(i - 1, j - 1);
    if (e == 0) continue;
    out << "t_" << j;
    if (e != 1) out << "^{" << e << "}";
    out << " ";
  }
  out << "x_" << i;
  return out.str();
}

SignReport sign_report(const IntMatrix& a) {
  SignReport report;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) > 0) report.violations.push_back({i + 1, j + 1, a.at(i, j)});
  report.all_nonpositive = report.violations.empty();
  return report;
}

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> oneline(n);
  for (int i = 0; i < n; ++i) oneline[i] = i + 1;
  std::vector<Permutation> result;
  do {
    result.push_back(Permutation::from_oneline(oneline));
  } while (std::next_permutation(oneline.begin(), oneline.end()));
  return result;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

struct SurveyInstance {
  Permutation u;
  BraidWord beta;
};

}  // namespace

SurveyResult survey(const SurveyOptions& options) {
  if (options.n < 2) throw InvalidInput("survey needs n >= 2");
  if (options.min_len < 0 || options.max_len < options.min_len)
    throw InvalidInput("survey needs 0 <= min-len <= max-len");

  std::vector<Permutation> us;
  if (options.u_word) {
    us.push_back(Permutation::from_word(options.n, *options.u_word));
  } else {
    us = all_permutations(options.n);
  }

  // Materialize the instance list in output order, applying the budget.
  SurveyResult result;
  std::vector<SurveyInstance> instances;
  bool truncated = false;
  for (int len = options.min_len; len <= options.max_len && !truncated; ++len) {
    std::vector<int> word(len, 1);
    while (true) {
      for (const Permutation& u : us) {
        if (static_cast<int64_t>(instances.size()) >= options.budget) {
          truncated = true;
          break;
        }
        BraidWord beta;
        beta.n = options.n;
        beta.letters = word;
        instances.push_back({u, beta});
      }
      if (truncated) break;
      // next word in lexicographic order
      int pos = len - 1;
      while (pos >= 0 && word[pos] == options.n - 1) {
        word[pos] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++word[pos];
    }
  }
  result.truncated = truncated;

  struct Row {
    bool empty_variety = true;
    std::string text;
  };
  std::vector<Row> rows(instances.size());

  [[maybe_unused]] int jobs = options.jobs;
#ifdef _OPENMP
  if (jobs <= 0) jobs = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
  for (int64_t idx = 0; idx < static_cast<int64_t>(instances.size()); ++idx) {
    const SurveyInstance& inst = instances[idx];
    DemazureTrace trace = demazure_trace(inst.u, inst.beta);
    if (!trace.nonempty) continue;

    PlabicDiagram diagram = build_diagram(inst.u, inst.beta);
    FilmSet films = propagate_films_serial(diagram);
    ExchangeData data = analyze_exchange(diagram, films);

    std::vector<int> distinct = inst.beta.letters;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    bool det_ok = data.det == ((data.m + data.f) % 2 == 0 ? 1 : -1);
    SignReport signs = sign_report(data.a);

    std::ostringstream line;
    line << inst.beta.n << ',' << join_ints(reduced_word(inst.u)) << ',' << join_ints(inst.beta.letters)
         << ',' << data.m << ',' << data.f << ',' << distinct.size() << ','
         << (det_ok ? "true" : "false") << ',' << (signs.all_nonpositive ? "true" : "false") << '\n';
    rows[idx] = {false, line.str()};
  }

  std::string csv = "n,u_word,beta,m,f,distinct_letters,det_ok,sign_all_nonpositive\n";
  for (const Row& row : rows) {
    if (row.empty_variety) {
      ++result.skipped_empty;
    } else {
      csv += row.text;
      ++result.emitted;
    }
  }
  if (truncated) csv += "# truncated: instance budget " + std::to_string(options.budget) + " reached\n";
  result.csv = std::move(csv);
  return result;
}

}  // namespace braidseed
