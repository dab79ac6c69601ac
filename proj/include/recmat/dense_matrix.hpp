#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "recmat/scalar.hpp"

namespace recmat {

/// Exact dense matrix, row-major, single field throughout. Used for
/// materialized windows, brute-force oracles and truncations.
class DenseMatrix {
  public:
    DenseMatrix() : field_(Field::rational()), rows_(0), cols_(0) {}
    DenseMatrix(Field f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

    static DenseMatrix identity(const Field& f, int n);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }

    DenseMatrix mul(const DenseMatrix& o) const;
    DenseMatrix add(const DenseMatrix& o) const;
    DenseMatrix sub(const DenseMatrix& o) const;
    DenseMatrix transpose() const;
    DenseMatrix scaled(const Scalar& c) const;
    DenseMatrix kron(const DenseMatrix& o) const;

    /// Leading n x n window.
    DenseMatrix window(int n) const;
    /// Contiguous block of size h x w at (i0, j0).
    DenseMatrix block(int i0, int j0, int h, int w) const;

    bool is_diagonal() const;
    bool is_symmetric() const;

    bool operator==(const DenseMatrix& o) const;
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

  private:
    Field field_;
    int rows_, cols_;
    std::vector<Scalar> e_;
};

/// Determinants of all leading principal minors (orders 1..n), one
/// fraction-free elimination pass. Requires every leading minor nonzero
/// except possibly the full one; throws SingularMinorAtError when an
/// intermediate pivot vanishes. Dispatches to integer / Gaussian-integer
/// arithmetic when the entries allow, plain field arithmetic otherwise.
std::vector<Scalar> leading_minors(const DenseMatrix& m);

/// Determinant with row pivoting (any nonsingular pattern, any field).
Scalar det(const DenseMatrix& m);

/// Exact inverse; nullopt when singular.
std::optional<DenseMatrix> inverse(const DenseMatrix& m);

struct LdltFactors {
    DenseMatrix lower;          // unit lower triangular
    std::vector<Scalar> diag;   // pivots d_k = det(A(k+1))/det(A(k))
};

/// Symmetric fraction-free LDL^t without pivoting; zero pivot is a hard
/// error (SingularMinorAtError).
LdltFactors symmetric_ldlt(const DenseMatrix& m);

/// Doolittle LU, L unit lower triangular, U upper; no pivoting.
std::pair<DenseMatrix, DenseMatrix> lu_unipotent(const DenseMatrix& m);

}  // namespace recmat
