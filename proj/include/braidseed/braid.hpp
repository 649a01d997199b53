// braid.hpp: positive braid words, permutations, Demazure quotients,
// the subexpression set J, the gap reflection R_i, and the boundary
// correction bilinear form.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidseed/exact.hpp"

namespace braidseed {

// A positive braid word on n strands: letters over {1,..,n-1}.
struct BraidWord {
  int n = 2;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const BraidWord&) const = default;
};

// Parses whitespace- or comma-separated letters. The empty string is the
// empty word.
BraidWord parse_word(const std::string& text, int n);

// Permutation of {1,..,n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity

  static Permutation from_oneline(const std::vector<int>& images);
  // Product s_{w[0]} s_{w[1]} ... applied as id * s_j left to right.
  static Permutation from_word(int n, const std::vector<int>& word);
  static Permutation longest(int n);  // w0(i) = n+1-i

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& oneline() const { return img_; }

  Permutation inverse() const;
  // (this o other)(x) = this(other(x))
  Permutation compose(const Permutation& other) const;
  // Right multiplication by s_i: swaps positions i, i+1 of the one-line form.
  Permutation times_s(int i) const;
  // Left multiplication by s_i: swaps values i, i+1.
  Permutation s_times(int i) const;

  int length() const;  // inversion count
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

// v * s_i when that shortens v, else v.
Permutation demazure_quotient(const Permutation& v, int i);

// Demazure recursion u_k := u, u_{j-1} := u_j quotient s_{i_j}, together with
// J = { j : u_j = u_{j-1} }. Positions in J become bridges, the rest
// crossings; the variety is nonempty iff u_0 is the identity.
struct DemazureTrace {
  std::vector<Permutation> useq;  // useq[j] = u_j for j = 0..k
  std::vector<int> J;             // sorted, 1-based positions
  bool nonempty = false;

  bool in_J(int position) const;
};

DemazureTrace demazure_trace(const Permutation& u, const BraidWord& beta);
bool is_nonempty(const Permutation& u, const BraidWord& beta);

// R_i(v): v_i -> -v_i + v_{i-1} + v_{i+1}, out-of-range neighbors 0.
// Reflection in e_i with respect to the boundary correction form.
std::vector<int64_t> reflect(int i, const std::vector<int64_t>& v);

// Twice the boundary correction form: 2*(a,b) with (a,b) = a^T M b,
// M = -1/2 times the type-A Cartan matrix. Always an integer.
int64_t boundary_form_twice(const std::vector<int64_t>& a, const std::vector<int64_t>& b);
Dyadic boundary_form(const std::vector<int64_t>& a, const std::vector<int64_t>& b);

// Lexicographically smallest reduced word, via repeated smallest
// left-descent extraction.
std::vector<int> reduced_word(const Permutation& p);

}  // namespace braidseed
