// autgroup.hpp: kernel basis of the extended exchange matrix, the torus
// action on cluster variables, sign classification of A, and enumeration
// surveys.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidseed/braid.hpp"
#include "braidseed/exact.hpp"

namespace braidseed {

// The last f columns of A; each lies in the kernel of the first m rows of
// Bhat. Verified before returning.
std::vector<std::vector<int64_t>> kernel_basis(const IntMatrix& bhat, const IntMatrix& a, int m, int f);

// Exponent table of the (C*)^f action: weights(i, j) = a_{i, m+j}.
struct TorusAction {
  int m = 0, f = 0;
  IntMatrix weights;  // (m+f) x f
  bool operator==(const TorusAction&) const = default;
};

TorusAction torus_action(const IntMatrix& a, int m, int f);

// "x_7 -> t_1^{-1} t_2^{-1} t_3^{-2} t_4^{-1} t_5^{-1} x_7" with a unicode
// arrow; exponent 1 and zero factors omitted, "x_i -> x_i" when all vanish.
std::string torus_action_string(const TorusAction& action, int i);

struct SignViolation {
  int row = 0, col = 0;  // 1-based
  int64_t entry = 0;
  bool operator==(const SignViolation&) const = default;
};

struct SignReport {
  bool all_nonpositive = true;
  std::vector<SignViolation> violations;  // row-major order
  bool operator==(const SignReport&) const = default;
};

SignReport sign_report(const IntMatrix& a);

struct SurveyOptions {
  int n = 2;
  int min_len = 0;
  int max_len = 0;
  std::optional<std::vector<int>> u_word;  // nullopt: all u in S_n
  int jobs = 0;                            // 0: library default
  int64_t budget = 1000000;                // max instances examined
};

struct SurveyResult {
  std::string csv;  // header + rows, LF line endings
  int64_t emitted = 0;
  int64_t skipped_empty = 0;
  bool truncated = false;
};

// One row per nonempty (u, beta) in order of (|beta|, beta, u one-line).
// Deterministic: identical options give byte-identical csv regardless of the
// worker count.
SurveyResult survey(const SurveyOptions& options);

}  // namespace braidseed
