#include "green/matrix.hpp"

namespace green {

namespace {

std::size_t weight(const RationalFunction& f) {
  return f.numerator().term_count() + f.denominator().term_count();
}

}  // namespace

Matrix<RationalFunction> mat_inverse(Matrix<RationalFunction> m) {
  if (!m.is_square()) throw Singular("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  auto inv = Matrix<RationalFunction>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    // Sparsest nonzero pivot keeps intermediate fractions small.
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      if (pivot == n || weight(m(r, col)) < weight(m(pivot, col))) pivot = r;
    }
    if (pivot == n) throw Singular("matrix is singular (no pivot in column " + std::to_string(col) + ")");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(col, j), m(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    const RationalFunction scale = m(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const RationalFunction factor = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(col, j).is_zero()) m(r, j) -= factor * m(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

Matrix<RationalFunction> to_rational(const Matrix<LaurentPoly>& m) {
  return m.map([](const LaurentPoly& p) { return RationalFunction(p); });
}

}  // namespace green
