#include "exactcat/field.hpp"

#include <limits>
#include <string>

namespace exactcat {

bool is_prime(Residue n) {
  if (n < 2) return false;
  for (Residue d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(Residue p) : p_(p) {
  // Products of two residues summed over a few hundred terms must fit in int64.
  if (!is_prime(p) || p > 46337)
    throw std::invalid_argument("field characteristic must be a prime below 46337, got " +
                                std::to_string(p));
}

Residue PrimeField::inv(Residue a) const {
  a = reduce(a);
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  // Extended Euclid.
  Residue t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    const Residue q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  return reduce(t);
}

Echelon rref(const PrimeField& field, const Matrix& m) {
  Echelon out{field.reduce(m), {}};
  Matrix& a = out.reduced;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const Residue scale = field.inv(a(row, col));
    for (Eigen::Index c = col; c < cols; ++c) a(row, c) = field.mul(a(row, c), scale);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Residue factor = a(r, col);
      for (Eigen::Index c = col; c < cols; ++c)
        a(r, c) = field.sub(a(r, c), field.mul(factor, a(row, c)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const PrimeField& field, const Matrix& m) {
  return rref(field, m).pivots.size();
}

std::optional<Matrix> solve(const PrimeField& field, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: a.rows != b.rows");
  const Eigen::Index n = a.cols();
  const Echelon e = rref(field, hstack(a, b));
  Matrix x = zeros(n, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const Eigen::Index col = e.pivots[i];
    if (col >= n) return std::nullopt;  // pivot in the augmented block
    x.row(col) = e.reduced.block(static_cast<Eigen::Index>(i), n, 1, b.cols());
  }
  return x;
}

Matrix kernel_basis(const PrimeField& field, const Matrix& m) {
  const Eigen::Index n = m.cols();
  const Echelon e = rref(field, m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  Matrix basis = zeros(n, n - static_cast<Eigen::Index>(e.pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      basis(e.pivots[i], k) = field.neg(e.reduced(static_cast<Eigen::Index>(i), free));
    ++k;
  }
  return basis;
}

Matrix image_basis(const PrimeField& field, const Matrix& m) {
  const Echelon e = rref(field, m);
  Matrix out(m.rows(), static_cast<Eigen::Index>(e.pivots.size()));
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    out.col(static_cast<Eigen::Index>(i)) = field.reduce(m.col(e.pivots[i]));
  return out;
}

CokernelProjection cokernel_projection(const PrimeField& field, const Matrix& m) {
  // Rows of the left null space annihilate the column space.
  Matrix left = kernel_basis(field, m.transpose());
  CokernelProjection out;
  out.proj = left.transpose();
  out.dim = out.proj.rows();
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out = zeros(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

bool is_zero(const Matrix& m) { return m.size() == 0 || (m.array() == 0).all(); }

}  // namespace exactcat
