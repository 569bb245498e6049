#pragma once

// Exact linear algebra over Q with integer-normalized representations.
//
// Every routine takes and returns integer data. Rational intermediate
// results are never materialized: elimination is fraction-free and each
// updated row is divided by its content immediately, which keeps entries
// small on the 100+ column matrices that show up in operad products.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace manin {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using QVector = std::vector<Rational>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Dense row-major matrix. Rows are exposed as spans.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using QMatrix = Matrix<Rational>;

/// Divides by the gcd of the entries and makes the first nonzero entry
/// positive. The zero vector is returned unchanged.
IntVector content_normalize(IntVector v);

/// Scales a rational vector by the lcm of its denominators and then
/// content-normalizes it.
IntVector clear_denominators(std::span<const Rational> v);

QVector to_rational(std::span<const Integer> v);

/// Canonical basis of a subspace of Q^d: integer-primitive reduced row
/// echelon form with positive pivots. Two bases span the same space iff
/// they compare equal.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<IntVector>& rows() const { return rows_; }
  const IntVector& row(std::size_t i) const { return rows_[i]; }

  /// Column index of the first nonzero entry of each row.
  std::vector<std::size_t> pivots() const;

  friend bool operator==(const EchelonBasis&, const EchelonBasis&) = default;

 private:
  friend EchelonBasis echelonize(std::vector<IntVector>&& rows, std::size_t d);
  EchelonBasis(std::size_t d, std::vector<IntVector> rows) : ambient_dim_(d), rows_(std::move(rows)) {}

  std::size_t ambient_dim_;
  std::vector<IntVector> rows_;
};

/// Weights of a diagonal bilinear form; every entry is +1 or -1.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<int> signs);

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<int>& values() const { return signs_; }

 private:
  std::vector<int> signs_;
};

EchelonBasis echelonize(std::span<const IntVector> rows, std::size_t d);
/// Same as above, reusing the storage of `rows`.
EchelonBasis echelonize(std::vector<IntVector>&& rows, std::size_t d);
EchelonBasis echelonize(const IntMatrix& m);

bool span_contains(const EchelonBasis& basis, std::span<const Integer> v);
bool span_equal(const EchelonBasis& a, const EchelonBasis& b);

EchelonBasis sum_spaces(const EchelonBasis& a, const EchelonBasis& b);

/// Intersection by eliminating the doubled matrix [a_i | a_i ; b_j | 0]:
/// rows whose left half vanishes carry a basis of the intersection in
/// their right half.
EchelonBasis intersect(const EchelonBasis& a, const EchelonBasis& b);

/// Null space {v : m v = 0}.
EchelonBasis kernel(const IntMatrix& m);

/// Row-wise rank of an integer matrix.
std::size_t rank(const IntMatrix& m);

/// Kronecker product: entry i*b + j (0-based) is u_i * v_j.
IntVector kron(std::span<const Integer> u, std::span<const Integer> v);
QVector kron(std::span<const Rational> u, std::span<const Rational> v);
QMatrix kron(const QMatrix& a, const QMatrix& b);

enum class ComplementMethod {
  gram_schmidt,  // scaled integer Gram-Schmidt, then elimination
  kernel,        // null space of the sign-twisted rows
};

/// Annihilator of `a` under the form <f, x> = sum_k s_k f_k x_k.
EchelonBasis signed_complement(const EchelonBasis& a, const SignVector& s,
                               ComplementMethod method = ComplementMethod::gram_schmidt);

/// Integer matrix Q of shape (d - dim R) x d whose kernel is exactly span(R).
/// Column k holds the non-pivot coordinates of e_k reduced modulo R, all
/// columns scaled by the lcm of R's pivot entries.
IntMatrix quotient_coords(const EchelonBasis& r);

IntVector mat_vec(const IntMatrix& m, std::span<const Integer> v);

QMatrix multiply(const QMatrix& a, const QMatrix& b);
QMatrix transpose(const QMatrix& a);
/// Gauss-Jordan inverse; nullopt when `a` is singular or not square.
std::optional<QMatrix> invert(const QMatrix& a);
bool is_integral(const QMatrix& a);

Integer dot(std::span<const Integer> u, std::span<const Integer> v);

std::string to_string(std::span<const Integer> v);

}  // namespace manin
