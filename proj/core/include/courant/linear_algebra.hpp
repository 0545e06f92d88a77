#pragma once

#include <optional>
#include <vector>

#include "courant/polynomial.hpp"
#include "courant/scalar.hpp"

namespace courant {

/// Dense constant matrix over Q(i).
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }

  ScalarMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;
  /// Gauss-Jordan inverse; nullopt when singular or not square.
  std::optional<ScalarMatrix> inverse() const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Sylvester inertia of a real symmetric matrix.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Throws if the matrix is not real symmetric.
Inertia inertia(const ScalarMatrix& m);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant of a square polynomial matrix by expansion over column
/// subsets (exact; exponential in the size, fine for the small frames used).
Polynomial determinant(const PolyMatrix& m, std::size_t nvars);

/// Inverse of a polynomial matrix whose determinant is a nonzero constant.
std::optional<PolyMatrix> unimodular_inverse(const PolyMatrix& m, std::size_t nvars);

}  // namespace courant
