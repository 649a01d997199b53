// variety.hpp: symbolic braid matrices over Z[z_1..z_s] and the defining
// equations, dimension, and nonemptiness of the braid variety.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braidseed/braid.hpp"
#include "braidseed/exact.hpp"

namespace braidseed {

// Multilinear sparse polynomial: each variable appears with degree at most 1
// (every z_l lives in exactly one braid-letter factor), so a monomial is a
// subset of variables stored as a bitmask. Supports up to 64 variables.
struct Poly {
  std::map<uint64_t, int64_t> terms;  // mask -> coefficient

  static Poly constant(int64_t c);
  static Poly variable(int var_index);  // 1-based

  bool is_zero() const { return terms.empty(); }
  Poly operator+(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly&) const = default;
};

struct PolyMatrix {
  int n = 0;
  std::vector<Poly> entries;

  static PolyMatrix identity(int n);
  Poly& at(int r, int c) { return entries[static_cast<size_t>(r) * n + c]; }
  const Poly& at(int r, int c) const { return entries[static_cast<size_t>(r) * n + c]; }
  PolyMatrix multiply(const PolyMatrix& o, int64_t max_terms) const;
};

// Identity outside rows/columns {i, i+1}; the 2x2 block there is
// [[z_var, -1], [1, 0]].
PolyMatrix braid_letter_matrix(int i, int var_index, int n);

// Canonical text form, e.g. "z1*z2 - 1"; terms ordered by descending degree
// then ascending variable sequence.
std::string poly_to_string(const Poly& p);

// Sorted 1-based variable indices of a monomial mask.
std::vector<int> monomial_vars(uint64_t mask);

struct VarietyEquations {
  int s = 0;                   // variable count
  std::vector<int> extended_word;  // beta followed by the lift of u^{-1} w0
  std::vector<Poly> equations;  // the n(n-1)/2 strictly-below-diagonal entries
};

// Equations of the braid variety: strictly-below-diagonal entries of
// w0^{-1} B_{beta . beta(u^{-1} w0)}(z_1..z_s). Throws EmptyVariety when u is
// not a subword of beta; raw_equations skips that check (the empty system is
// then inconsistent).
VarietyEquations defining_equations(const Permutation& u, const BraidWord& beta, int64_t max_terms = 200000);
VarietyEquations raw_equations(const Permutation& u, const BraidWord& beta, int64_t max_terms = 200000);

struct DimensionReport {
  bool nonempty = false;
  int dim = 0;  // ell(beta) - ell(u); meaningful only when nonempty
  int s = 0;
};

DimensionReport dimension_report(const Permutation& u, const BraidWord& beta);

}  // namespace braidseed
