// exchange.hpp: assembly of the half-arrow matrix H, the boundary correction
// matrix D, the square matrix Bhat = H + D with det = (-1)^(m+f), its integer
// inverse A (direct and inductive L/R routes), the quiver, and matrix
// mutation.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidseed/exact.hpp"
#include "braidseed/plabic.hpp"

namespace braidseed {

// Doubled half-arrow matrix 2H. At every bridge the six half-arrow templates
// (regions: a above, b right, c below, d left) are d->b, d->b, a->d, b->a,
// c->d, b->c; raw counts are products of region multiplicities and
// H = (count(x->y) - count(y->x)) / 2.
IntMatrix half_arrow_matrix_twice(const PlabicDiagram& diagram, const FilmSet& films);

// Doubled boundary correction matrix 2D with D_ij = (boundary_i, boundary_j).
IntMatrix boundary_correction_matrix_twice(const FilmSet& films);

struct BhatResult {
  IntMatrix bhat;    // integer (m+f) x (m+f)
  IntMatrix btilde;  // first m rows
  int64_t det = 1;
};

// Checks integrality of (H2 + D2)/2 and det = (-1)^(m+f); throws
// InternalError on violation.
BhatResult assemble_bhat(const IntMatrix& h_twice, const IntMatrix& d_twice, int m, int f);

IntMatrix unimodular_inverse(const IntMatrix& bhat);

// Everything the direct route produces for one (u, beta).
struct ExchangeData {
  int m = 0, f = 0;
  IntMatrix h_twice, d_twice;
  IntMatrix bhat, btilde;
  int64_t det = 1;
  IntMatrix a;
};

ExchangeData analyze_exchange(const PlabicDiagram& diagram, const FilmSet& films);

// Ice quiver represented by its antisymmetric weight table; entries adjacent
// to a mutable vertex are integers, frozen-frozen entries may be
// half-integral.
struct Quiver {
  int m = 0, f = 0;
  IntMatrix weight_twice;  // weight(i,j) doubled

  Dyadic weight(int i, int j) const { return Dyadic::from_twice(weight_twice.at(i, j)); }
};

Quiver quiver_from_half_arrows(const IntMatrix& h_twice, int m, int f);

// Matrix mutation at mutable index k (1-based). Accepts the full square
// matrix or the m x (m+f) extended exchange matrix; mutation twice is the
// identity.
IntMatrix mutate(const IntMatrix& b, int k, int m);

struct InductiveStep {
  char case_kind = 'B';  // 'A': leftmost letter consumed by u; 'B': new frozen vertex
  int letter = 0;
  IntMatrix l, r;           // case B only
  std::vector<int> reorder;  // case B: canonical index -> previous-step index, -1 for the new vertex
};

struct InductiveResult {
  IntMatrix bhat;
  IntMatrix a;
  std::vector<InductiveStep> steps;
};

// Builds Bhat and A by stripping the leftmost letter recursively (Case A
// leaves the matrices unchanged, Case B conjugates by the L/R factors).
// The result is kept in canonical vertex order at every step and verified
// against the direct route; disagreement throws InternalError.
InductiveResult inductive_build(const Permutation& u, const BraidWord& beta);

}  // namespace braidseed
