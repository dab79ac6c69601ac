#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "recmat/dense_matrix.hpp"

namespace recmat {

/// Finite linear presentation of a recurrence matrix: a sequence
/// A = (A[0], A[1], ...) of 2^n x 2^n matrices whose quarter-block shifts
/// stay inside the span of `dim` basis states.
///
/// Column j of shift(s,t) holds the coordinates of rho(s,t)A_j in the state
/// basis, so the (s,t) quarter of A_j[n+1] is sum_k shift(s,t)_{k,j} A_k[n].
/// The designated element is select . (A_1..A_a); the zero element is the
/// empty presentation with dim 0.
class Presentation {
  public:
    Presentation(Field f, int dim, std::vector<Scalar> init,
                 std::array<DenseMatrix, 4> shift, std::vector<Scalar> select,
                 std::vector<std::string> state_names = {});

    static Presentation zero(const Field& f);
    static Presentation identity(const Field& f);

    const Field& field() const { return field_; }
    int dim() const { return dim_; }
    const std::vector<Scalar>& init() const { return init_; }
    const std::vector<Scalar>& select() const { return select_; }
    const DenseMatrix& shift_matrix(int s, int t) const { return shift_[2 * s + t]; }
    const std::vector<std::string>& state_names() const { return names_; }

    /// Same states, select replaced by e_i (designate state i, 0-based).
    Presentation with_select(int state) const;
    Presentation with_select(std::vector<Scalar> sel) const;

  private:
    Field field_;
    int dim_;
    std::vector<Scalar> init_;
    std::array<DenseMatrix, 4> shift_;
    std::vector<Scalar> select_;
    std::vector<std::string> names_;
};

/// Finitely many leading windows of a matrix sequence; level k is 2^k x 2^k.
struct TruncatedSequence {
    std::vector<DenseMatrix> levels;

    int depth() const { return static_cast<int>(levels.size()) - 1; }
    void validate() const;  // sizes and single field
};

// --- core operations -------------------------------------------------------

/// The 2^level x 2^level matrix of the designated element.
DenseMatrix materialize(const Presentation& p, int level);

/// Single entry in O(level * dim^2): walk the binary digits of (i, j) from
/// most significant to least through the shift matrices, then apply pi_0.
Scalar entry(const Presentation& p, int level, std::uint64_t i, std::uint64_t j);

Presentation shift(const Presentation& p, int s, int t);
Presentation scale(const Presentation& p, const Scalar& lambda);
Presentation add(const Presentation& p, const Presentation& q);

/// Product per the quarter-block expansion
///   rho(s,t)(XY) = rho(s,0)X rho(0,t)Y + rho(s,1)X rho(1,t)Y
/// on pair states A_i B_j, immediately reduced to a basis of the orbit of
/// its select vector (same element, dim <= dim(p) * dim(q)).
Presentation mul(const Presentation& p, const Presentation& q);

Presentation transpose(const Presentation& p);

/// Equivalent presentation whose states are a basis of the recursive closure
/// of the designated element: forward orbit span, then quotient by the
/// saturated kernel filtration. Idempotent.
Presentation minimize(const Presentation& p);

struct ZeroCertificate {
    bool zero = false;
    int closure_dim = 0;   // dim of the orbit span of select
    int depth = 0;         // BFS depth at which the span stabilized
    // witness entry when nonzero
    int witness_level = -1;
    std::uint64_t witness_row = 0, witness_col = 0;
};

/// Exact zero test with proof: the orbit span V of select is recursively
/// closed, so pi_0 vanishing on V forces every entry of every level to zero.
ZeroCertificate is_zero(const Presentation& p);

bool equal(const Presentation& p, const Presentation& q);

/// First level at which the kernel filtration of the state span stabilizes.
int saturation_level(const Presentation& p);

/// Submatrix on rows congruent to s and columns congruent to t mod 2.
DenseMatrix left_shift_window(const DenseMatrix& w, int s, int t);

/// Checks diagonality of materializations up to `depth`.
bool is_diagonal(const Presentation& p, int depth = 4);

/// k-th diagonal entry in O(log k * dim^2) by walking the binary digits of k
/// through shift(b,b). Throws NotDiagonalError when the window check fails.
Scalar diag_entry(const Presentation& p, std::uint64_t k);

/// Streams diagonal entries 0..count-1 by depth-first sharing of digit
/// prefixes (amortized O(dim^2) per entry). Skips the diagonality check when
/// `checked` is false.
void for_each_diag_entry(const Presentation& p, std::uint64_t count,
                         const std::function<void(std::uint64_t, const Scalar&)>& fn,
                         bool check = true);

// --- tensor products -------------------------------------------------------

/// A x X = (A[0] x X, A[1] x X, ...) for a fixed 2^K x 2^K matrix X, kept in
/// factored form. Materializes at level n + K as materialize(A, n) x X.
struct TensorElement {
    Presentation base;
    DenseMatrix factor;      // square, size 2^K
    int factor_level = 0;    // K

    DenseMatrix materialize(int level) const;  // level >= K
};

TensorElement tensor_const(const Presentation& p, const DenseMatrix& x);
TensorElement mul(const TensorElement& a, const TensorElement& b);
TensorElement add(const TensorElement& a, const TensorElement& b);  // same factor size

}  // namespace recmat
