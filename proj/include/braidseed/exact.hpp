// exact.hpp: overflow-checked integer arithmetic, dyadic rationals, and
// dense exact matrices (integer and half-integer) with fraction-free
// determinant and unimodular inversion.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidseed {

// Raised on malformed user input (CLI maps it to exit code 2).
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when u is not a subword of beta (CLI maps it to exit code 3).
struct EmptyVariety : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised on violated engine invariants: non-integral Bhat, wrong determinant,
// route disagreement (CLI maps it to exit code 4).
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when exact 64/128-bit arithmetic would overflow. Inputs that large
// are outside the supported range; we fail loudly instead of returning
// wrong numbers.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

// Exact rational with denominator dividing 2, stored as twice its value.
class Dyadic {
 public:
  Dyadic() = default;
  static Dyadic from_int(int64_t v) { return Dyadic(checked_mul(v, 2)); }
  static Dyadic from_twice(int64_t n2) { return Dyadic(n2); }

  int64_t twice() const { return n2_; }
  bool is_integer() const { return n2_ % 2 == 0; }
  int64_t as_int() const;
  bool is_zero() const { return n2_ == 0; }

  Dyadic operator+(Dyadic o) const { return Dyadic(checked_add(n2_, o.n2_)); }
  Dyadic operator-(Dyadic o) const { return Dyadic(checked_sub(n2_, o.n2_)); }
  Dyadic operator-() const { return Dyadic(checked_sub(0, n2_)); }
  bool operator==(const Dyadic&) const = default;

  // "3", "-2", "1/2", "-3/2"
  std::string str() const;

 private:
  explicit Dyadic(int64_t n2) : n2_(n2) {}
  int64_t n2_ = 0;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  int64_t& at(int r, int c) { return v_[static_cast<size_t>(r) * cols_ + c]; }
  int64_t at(int r, int c) const { return v_[static_cast<size_t>(r) * cols_ + c]; }

  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix&) const = default;

  bool is_zero() const;
  bool is_identity() const;

  IntMatrix top_rows(int m) const;

  // Simultaneous row/column permutation: result(i,j) = (*this)(perm[i], perm[j]).
  // perm is 0-based and must be a bijection on rows()==cols().
  IntMatrix permuted_symmetric(const std::vector<int>& perm) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<int64_t> v_;
};

class DyadicMatrix {
 public:
  DyadicMatrix() = default;
  DyadicMatrix(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols) {}

  // Interprets an integer matrix as holding doubled values.
  static DyadicMatrix from_twice(const IntMatrix& twice);
  IntMatrix twice() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Dyadic& at(int r, int c) { return v_[static_cast<size_t>(r) * cols_ + c]; }
  Dyadic at(int r, int c) const { return v_[static_cast<size_t>(r) * cols_ + c]; }

  bool operator==(const DyadicMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Dyadic> v_;
};

// Determinant of a square integer matrix by fraction-free (Bareiss)
// elimination over 128-bit intermediates. The empty matrix has determinant 1.
int64_t det_bareiss(const IntMatrix& mat);

// Integer inverse of a matrix with determinant +-1. Throws InternalError if
// det is not a unit or the inverse fails verification.
IntMatrix inverse_unimodular(const IntMatrix& mat);

}  // namespace braidseed
