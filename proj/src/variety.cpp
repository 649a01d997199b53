#include "braidseed/variety.hpp"

#include <algorithm>
#include <sstream>

namespace braidseed {

Poly Poly::constant(int64_t c) {
  Poly p;
  if (c != 0) p.terms[0] = c;
  return p;
}

Poly Poly::variable(int var_index) {
  if (var_index < 1 || var_index > 64) throw InvalidInput("variable index out of supported range 1..64");
  Poly p;
  p.terms[uint64_t(1) << (var_index - 1)] = 1;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (auto& [mask, coeff] : o.terms) {
    int64_t merged = checked_add(r.terms.count(mask) ? r.terms[mask] : 0, coeff);
    if (merged == 0)
      r.terms.erase(mask);
    else
      r.terms[mask] = merged;
  }
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (auto& [ma, ca] : terms)
    for (auto& [mb, cb] : o.terms) {
      if (ma & mb) throw InternalError("non-multilinear product; braid matrices keep variables disjoint");
      uint64_t mask = ma | mb;
      int64_t merged = checked_add(r.terms.count(mask) ? r.terms[mask] : 0, checked_mul(ca, cb));
      if (merged == 0)
        r.terms.erase(mask);
      else
        r.terms[mask] = merged;
    }
  return r;
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m;
  m.n = n;
  m.entries.assign(static_cast<size_t>(n) * n, Poly{});
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(1);
  return m;
}

PolyMatrix PolyMatrix::multiply(const PolyMatrix& o, int64_t max_terms) const {
  if (n != o.n) throw InternalError("polynomial matrix shape mismatch");
  PolyMatrix r;
  r.n = n;
  r.entries.assign(static_cast<size_t>(n) * n, Poly{});
  int64_t total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly sum;
      for (int k = 0; k < n; ++k) {
        const Poly& a = at(i, k);
        const Poly& b = o.at(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        sum = sum + a * b;
      }
      total += static_cast<int64_t>(sum.terms.size());
      if (total > max_terms)
        throw CapacityError("polynomial term budget " + std::to_string(max_terms) +
                            " exceeded; raise --max-terms or shrink the input");
      r.at(i, j) = std::move(sum);
    }
  return r;
}

PolyMatrix braid_letter_matrix(int i, int var_index, int n) {
  if (i < 1 || i > n - 1) throw InvalidInput("braid letter out of range");
  PolyMatrix m = PolyMatrix::identity(n);
  m.at(i - 1, i - 1) = Poly::variable(var_index);
  m.at(i - 1, i) = Poly::constant(-1);
  m.at(i, i - 1) = Poly::constant(1);
  m.at(i, i) = Poly{};
  return m;
}

std::vector<int> monomial_vars(uint64_t mask) {
  std::vector<int> vars;
  for (int v = 1; v <= 64; ++v)
    if (mask & (uint64_t(1) << (v - 1))) vars.push_back(v);
  return vars;
}

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<std::vector<int>, int64_t>> terms;
  for (auto& [mask, coeff] : p.terms) terms.push_back({monomial_vars(mask), coeff});
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });

  std::ostringstream out;
  bool first = true;
  for (auto& [vars, coeff] : terms) {
    int64_t c = coeff;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (vars.empty()) {
      out << c;
      continue;
    }
    if (c != 1) out << c << "*";
    for (size_t i = 0; i < vars.size(); ++i) {
      if (i) out << "*";
      out << "z" << vars[i];
    }
  }
  return out.str();
}

VarietyEquations raw_equations(const Permutation& u, const BraidWord& beta, int64_t max_terms) {
  const int n = beta.n;
  Permutation w0 = Permutation::longest(n);
  std::vector<int> lift = reduced_word(u.inverse().compose(w0));

  VarietyEquations eq;
  eq.extended_word = beta.letters;
  eq.extended_word.insert(eq.extended_word.end(), lift.begin(), lift.end());
  eq.s = static_cast<int>(eq.extended_word.size());
  if (eq.s > 64)
    throw CapacityError("extended word needs " + std::to_string(eq.s) + " variables; at most 64 supported");

  PolyMatrix product = PolyMatrix::identity(n);
  for (int l = 0; l < eq.s; ++l)
    product = product.multiply(braid_letter_matrix(eq.extended_word[l], l + 1, n), max_terms);

  // w0^{-1} acts by row permutation: row i of the result is row w0(i) of the
  // product, i.e. the rows are reversed.
  for (int r = 2; r <= n; ++r)
    for (int c = 1; c < r; ++c) eq.equations.push_back(product.at(n - r, c - 1));
  return eq;
}

VarietyEquations defining_equations(const Permutation& u, const BraidWord& beta, int64_t max_terms) {
  if (!is_nonempty(u, beta)) throw EmptyVariety("u is not a subword of beta: the braid variety is empty");
  return raw_equations(u, beta, max_terms);
}

DimensionReport dimension_report(const Permutation& u, const BraidWord& beta) {
  DimensionReport report;
  report.nonempty = is_nonempty(u, beta);
  const int n = beta.n;
  const int binom = n * (n - 1) / 2;
  report.s = beta.length() + (binom - u.length());
  if (report.nonempty) {
    report.dim = beta.length() - u.length();
    if (report.dim != report.s - binom) throw InternalError("dimension formulas disagree");
  }
  return report;
}

}  // namespace braidseed
