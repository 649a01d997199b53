#include "braidseed/exact.hpp"

#include <algorithm>
#include <numeric>

namespace braidseed {

namespace {

using int128 = __int128;

constexpr int128 kInt128Max = (static_cast<int128>(INT64_MAX) << 64) | static_cast<int128>(UINT64_MAX);
constexpr int128 kInt128Min = -kInt128Max - 1;

int128 mul128(int128 a, int128 b) {
  if (a == 0 || b == 0) return 0;
  if (a == kInt128Min || b == kInt128Min) throw CapacityError("128-bit overflow in exact arithmetic");
  if (a == -1) return -b;
  if (b == -1) return -a;
  int128 q = kInt128Max / (b > 0 ? b : -b);
  if ((a > 0 ? a : -a) > q) throw CapacityError("128-bit overflow in exact arithmetic");
  return a * b;
}

int128 add128(int128 a, int128 b) {
  if (b > 0 && a > kInt128Max - b) throw CapacityError("128-bit overflow in exact arithmetic");
  if (b < 0 && a < kInt128Min - b) throw CapacityError("128-bit overflow in exact arithmetic");
  return a + b;
}

int64_t narrow64(int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN) throw CapacityError(std::string("value exceeds 64 bits in ") + what);
  return static_cast<int64_t>(v);
}

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Rational over 128-bit integers, always reduced with positive denominator.
struct Rat {
  int128 num = 0;
  int128 den = 1;

  static Rat of(int128 n) { return Rat{n, 1}; }

  void reduce() {
    if (num == 0) {
      den = 1;
      return;
    }
    int128 g = gcd128(num, den);
    num /= g;
    den /= g;
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }

  bool is_zero() const { return num == 0; }

  Rat operator+(const Rat& o) const {
    Rat r{add128(mul128(num, o.den), mul128(o.num, den)), mul128(den, o.den)};
    r.reduce();
    return r;
  }
  Rat operator-(const Rat& o) const {
    Rat r{add128(mul128(num, o.den), -mul128(o.num, den)), mul128(den, o.den)};
    r.reduce();
    return r;
  }
  Rat operator*(const Rat& o) const {
    Rat r{mul128(num, o.num), mul128(den, o.den)};
    r.reduce();
    return r;
  }
  Rat operator/(const Rat& o) const {
    if (o.num == 0) throw InternalError("rational division by zero");
    Rat r{mul128(num, o.den), mul128(den, o.num)};
    r.reduce();
    return r;
  }
};

}  // namespace

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("64-bit overflow in exact arithmetic");
  return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw CapacityError("64-bit overflow in exact arithmetic");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("64-bit overflow in exact arithmetic");
  return r;
}

int64_t Dyadic::as_int() const {
  if (n2_ % 2 != 0) throw InternalError("dyadic value " + str() + " is not an integer");
  return n2_ / 2;
}

std::string Dyadic::str() const {
  if (n2_ % 2 == 0) return std::to_string(n2_ / 2);
  return std::to_string(n2_) + "/2";
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix shape mismatch in +");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = checked_add(v_[i], o.v_[i]);
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix shape mismatch in -");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = checked_sub(v_[i], o.v_[i]);
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InternalError("matrix shape mismatch in *");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      int64_t aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(aik, o.at(k, j)));
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](int64_t x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

IntMatrix IntMatrix::top_rows(int m) const {
  if (m < 0 || m > rows_) throw InternalError("top_rows out of range");
  IntMatrix r(m, cols_);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  return r;
}

IntMatrix IntMatrix::permuted_symmetric(const std::vector<int>& perm) const {
  if (rows_ != cols_ || static_cast<int>(perm.size()) != rows_)
    throw InternalError("bad permutation in permuted_symmetric");
  IntMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(perm[i], perm[j]);
  return r;
}

DyadicMatrix DyadicMatrix::from_twice(const IntMatrix& twice) {
  DyadicMatrix r(twice.rows(), twice.cols());
  for (int i = 0; i < twice.rows(); ++i)
    for (int j = 0; j < twice.cols(); ++j) r.at(i, j) = Dyadic::from_twice(twice.at(i, j));
  return r;
}

IntMatrix DyadicMatrix::twice() const {
  IntMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).twice();
  return r;
}

int64_t det_bareiss(const IntMatrix& mat) {
  if (mat.rows() != mat.cols()) throw InternalError("determinant of non-square matrix");
  int n = mat.rows();
  if (n == 0) return 1;

  std::vector<int128> w(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[static_cast<size_t>(i) * n + j] = mat.at(i, j);
  auto e = [&](int i, int j) -> int128& { return w[static_cast<size_t>(i) * n + j]; };

  int sign = 1;
  int128 prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (e(k, k) == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (e(r, k) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(e(k, j), e(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        e(i, j) = add128(mul128(e(i, j), e(k, k)), -mul128(e(i, k), e(k, j))) / prev;
    prev = e(k, k);
  }
  return narrow64(sign * e(n - 1, n - 1), "determinant");
}

IntMatrix inverse_unimodular(const IntMatrix& mat) {
  if (mat.rows() != mat.cols()) throw InternalError("inverse of non-square matrix");
  int n = mat.rows();
  if (n == 0) return IntMatrix(0, 0);

  // Gauss-Jordan over exact rationals on [mat | I].
  std::vector<Rat> w(static_cast<size_t>(n) * 2 * n);
  auto e = [&](int i, int j) -> Rat& { return w[static_cast<size_t>(i) * 2 * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) e(i, j) = Rat::of(mat.at(i, j));
    e(i, n + i) = Rat::of(1);
  }

  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (!e(r, k).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw InternalError("singular matrix in inverse_unimodular");
    if (piv != k)
      for (int j = 0; j < 2 * n; ++j) std::swap(e(k, j), e(piv, j));
    Rat pivot = e(k, k);
    for (int j = 0; j < 2 * n; ++j) e(k, j) = e(k, j) / pivot;
    for (int i = 0; i < n; ++i) {
      if (i == k || e(i, k).is_zero()) continue;
      Rat factor = e(i, k);
      for (int j = 0; j < 2 * n; ++j) e(i, j) = e(i, j) - factor * e(k, j);
    }
  }

  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = e(i, n + j);
      if (v.den != 1) throw InternalError("inverse is not integral; determinant is not a unit");
      inv.at(i, j) = narrow64(v.num, "inverse entry");
    }

  if (!(mat * inv).is_identity() || !(inv * mat).is_identity())
    throw InternalError("inverse verification failed");
  return inv;
}

}  // namespace braidseed
