#pragma once

// Exact dense linear algebra over a prime field F_p.
//
// Matrices are plain Eigen integer matrices whose entries are kept as
// canonical residues in [0, p). Every routine that can produce a value
// outside that range goes through PrimeField::reduce. Pivoting is
// deterministic (leftmost pivot column, first nonzero row below the current
// one) so bases, solutions and projections are reproducible bit for bit.

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace exactcat {

using Residue = std::int64_t;
using Matrix = Eigen::Matrix<Residue, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Residue, Eigen::Dynamic, 1>;

class PrimeField {
 public:
  explicit PrimeField(Residue p = 2);

  Residue characteristic() const noexcept { return p_; }

  Residue reduce(Residue v) const noexcept {
    Residue r = v % p_;
    return r < 0 ? r + p_ : r;
  }
  Residue add(Residue a, Residue b) const noexcept { return reduce(a + b); }
  Residue sub(Residue a, Residue b) const noexcept { return reduce(a - b); }
  Residue neg(Residue a) const noexcept { return reduce(-a); }
  Residue mul(Residue a, Residue b) const noexcept { return reduce(a * b); }
  Residue inv(Residue a) const;

  template <typename Derived>
  Matrix reduce(const Eigen::MatrixBase<Derived>& m) const {
    Matrix out = m;
    for (Eigen::Index i = 0; i < out.size(); ++i) out.data()[i] = reduce(out.data()[i]);
    return out;
  }

  /// Product reduced mod p.
  template <typename A, typename B>
  Matrix mul(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) const {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: dimension mismatch");
    return reduce(a.derived() * b.derived());
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Residue p_;
};

bool is_prime(Residue n);

/// Result of row reduction: the reduced row echelon form and its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<Eigen::Index> pivots;
};

Echelon rref(const PrimeField& field, const Matrix& m);

std::size_t rank(const PrimeField& field, const Matrix& m);

/// Some x with a * x = b, free variables set to zero; empty if inconsistent.
std::optional<Matrix> solve(const PrimeField& field, const Matrix& a, const Matrix& b);

/// Columns form a basis of the null space, one column per free variable.
Matrix kernel_basis(const PrimeField& field, const Matrix& m);

/// Columns form a basis of the column space (the pivot columns of m).
Matrix image_basis(const PrimeField& field, const Matrix& m);

struct CokernelProjection {
  Matrix proj;  // dim x rows(m), full row rank, proj * m == 0
  Eigen::Index dim = 0;
};

CokernelProjection cokernel_projection(const PrimeField& field, const Matrix& m);

inline Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }
inline Matrix zeros(Eigen::Index r, Eigen::Index c) { return Matrix::Zero(r, c); }

/// Horizontal / vertical concatenation; either side may be empty.
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

bool is_zero(const Matrix& m);

/// Calls visit(v) for every vector in F_p^n, in lexicographic order of coordinates
/// (first coordinate varies slowest). Stops early if visit returns false.
template <typename Visitor>
void for_each_vector(const PrimeField& field, Eigen::Index n, Visitor&& visit) {
  Vector v = Vector::Zero(n);
  const Residue p = field.characteristic();
  while (true) {
    if (!visit(static_cast<const Vector&>(v))) return;
    Eigen::Index i = n - 1;
    while (i >= 0 && v(i) == p - 1) {
      v(i) = 0;
      --i;
    }
    if (i < 0) return;
    ++v(i);
  }
}

}  // namespace exactcat
