#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recmat/presentation.hpp"

namespace recmat::catalog {

/// Loads a named preset, verbatim from the source presentations.
///
/// Convergent matrices and factors: "P", "L_P", "D_P", "Linv_P", "V", "L_V",
/// "D_V", "Z", "L_Z", "D_Z", "M_Z", "U_Z", "E_Z", "J", "L_J", "D_J",
/// "T" (lower triangular Beeblebrox), "Minv_T", "Id".
/// Group generators: "gammaL.a" .. "gammaL.d", "gammaZ.a" .. "gammaZ.c",
/// "tri.L1" .. "tri.L3", each also with an ".inv" suffix.
/// The designated element is the first state unless the name says otherwise.
Presentation preset(const std::string& id);

std::vector<std::string> preset_names();

/// gamma in the psi-reduction of the q=i matrix: either parity or chi_B.
enum class GammaKind { Mod2, ChiB };

/// Section 7.2 tensor elements: Z' = Z x [[1,1],[1,0]] and its L', D'.
TensorElement zprime();
TensorElement zprime_lower();
TensorElement zprime_diag();

/// Section 7.3 tensor elements at a rational specialization (x, y).
/// Throws SingularSpecializationError when y = 1, x^2 - 2x + y = 0 or x = 0.
TensorElement mprime(const Scalar& x, const Scalar& y, GammaKind gamma);
TensorElement mprime_lower(const Scalar& x, const Scalar& y, GammaKind gamma);
TensorElement mprime_diag(const Scalar& x, const Scalar& y, GammaKind gamma);

enum class BruteKind {
    Mod2,
    Valuation,
    Beeblebrox,
    Jacobi,
    Fermat,
    PascalQ,
    ZPrime,
    MPrime,
    TriangularBeeblebrox,
};

struct BruteParams {
    Scalar q;              // PascalQ
    Scalar x, y;           // MPrime
    GammaKind gamma = GammaKind::ChiB;
};

/// The n x n matrix built from exact big-integer binomials (or q-binomial
/// evaluations) and the relevant character.
DenseMatrix brute_matrix(BruteKind kind, int n, const BruteParams& params = {});

/// Exact determinant of brute_matrix via fraction-free elimination.
Scalar brute_det(BruteKind kind, int n, const BruteParams& params = {});

/// Determinants of all leading windows 1..n in one elimination pass.
std::vector<Scalar> brute_leading_dets(BruteKind kind, int n,
                                       const BruteParams& params = {});

struct RowCheck {
    std::uint64_t row = 0;
    std::uint64_t plus_count = 0;
    std::uint64_t minus_count = 0;
    bool ok = false;  // no -1 at all, or balanced counts with a power-of-2 count
};

/// Row n of chi_B(C(n, k)): counts of +1/-1 and the Granville property.
RowCheck triangular_row_check(std::uint64_t n);

/// Prop 4.1 construction: lower bidiagonal with subdiagonal -omega over F_p.
Presentation bidiagonal_fp(std::int64_t omega, std::int64_t p);

}  // namespace recmat::catalog
