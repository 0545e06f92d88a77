#include "courant/linear_algebra.hpp"

#include <unordered_map>

#include "courant/error.hpp"

namespace courant {

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool ScalarMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::optional<ScalarMatrix> ScalarMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  std::size_t n = rows_;
  ScalarMatrix a = *this;
  ScalarMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    Scalar scale = a(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Scalar factor = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shape mismatch");
  ScalarMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& ark = a(r, k);
      if (ark.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

Inertia inertia(const ScalarMatrix& m) {
  if (!m.is_symmetric()) throw Error("inertia of a non-symmetric matrix");
  std::size_t n = m.rows();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (!m(r, c).is_real()) throw Error("inertia of a non-real matrix");
    }
  }
  // Symmetric elimination A -> S^T A S, keeping the matrix symmetric. A zero
  // pivot with a nonzero off-diagonal entry is first repaired by adding the
  // partner row/column.
  ScalarMatrix a = m;
  Inertia out;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && !a(i, i).is_zero()) {
        p = i;
        break;
      }
    }
    if (p == n) {
      bool repaired = false;
      for (std::size_t i = 0; i < n && !repaired; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n && !repaired; ++j) {
          if (done[j] || i == j || a(i, j).is_zero()) continue;
          // row_i += row_j; col_i += col_j
          for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
          for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
          repaired = true;
          p = i;
        }
      }
      if (!repaired) break;
    }
    const Scalar pivot = a(p, p);
    if (pivot.re() > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
    done[p] = true;
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || a(r, p).is_zero()) continue;
      Scalar factor = a(r, p) / pivot;
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= factor * a(p, c);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != r) a(c, r) = a(r, c);
      }
    }
  }
  out.zero = n - out.positive - out.negative;
  return out;
}

Polynomial determinant(const PolyMatrix& m, std::size_t nvars) {
  std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error("determinant of a non-square matrix");
  }
  if (n == 0) return Polynomial::constant(nvars, Scalar(1));
  if (n > 20) throw Error("matrix too large for subset determinant");
  // minor[mask] = determinant of the first popcount(mask) rows restricted to
  // the columns in mask (Laplace expansion along the last used row).
  std::unordered_map<std::uint32_t, Polynomial> minor;
  minor.emplace(0U, Polynomial::constant(nvars, Scalar(1)));
  std::vector<std::uint32_t> layer{0U};
  for (std::size_t row = 0; row < n; ++row) {
    std::unordered_map<std::uint32_t, Polynomial> next;
    for (std::uint32_t mask : layer) {
      const Polynomial& base = minor.at(mask);
      if (base.is_zero()) continue;
      for (std::size_t col = 0; col < n; ++col) {
        if (mask & (1U << col)) continue;
        if (m[row][col].is_zero()) continue;
        // sign: number of used columns greater than col
        int above = 0;
        for (std::size_t c = col + 1; c < n; ++c) {
          if (mask & (1U << c)) ++above;
        }
        Polynomial term = base * m[row][col];
        if (above % 2 == 1) term = -term;
        std::uint32_t key = mask | (1U << col);
        auto it = next.find(key);
        if (it == next.end()) {
          next.emplace(key, std::move(term));
        } else {
          it->second += term;
        }
      }
    }
    minor = std::move(next);
    layer.clear();
    for (const auto& [k, v] : minor) layer.push_back(k);
  }
  std::uint32_t full = (n == 32) ? 0xFFFFFFFFU : ((1U << n) - 1U);
  auto it = minor.find(full);
  return it == minor.end() ? Polynomial(nvars) : it->second;
}

std::optional<PolyMatrix> unimodular_inverse(const PolyMatrix& m, std::size_t nvars) {
  std::size_t n = m.size();
  Polynomial det = determinant(m, nvars);
  if (det.is_zero() || !det.is_constant()) return std::nullopt;
  Scalar inv_det = det.constant_term().inverse();
  PolyMatrix out(n, std::vector<Polynomial>(n, Polynomial(nvars)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      PolyMatrix sub;
      sub.reserve(n - 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r) continue;
        std::vector<Polynomial> row;
        row.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j) {
          if (j != c) row.push_back(m[i][j]);
        }
        sub.push_back(std::move(row));
      }
      Polynomial cof = determinant(sub, nvars);
      if ((r + c) % 2 == 1) cof = -cof;
      // adjugate is the transposed cofactor matrix
      out[c][r] = cof * inv_det;
    }
  }
  return out;
}

}  // namespace courant
