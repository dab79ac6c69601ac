#include "recmat/presentation.hpp"

#include <random>

#include "doctest.h"
#include "recmat/binom.hpp"
#include "recmat/catalog.hpp"

using namespace recmat;
using catalog::preset;

namespace {

const Field Q = Field::rational();

Presentation random_presentation(std::mt19937_64& rng, int dim) {
    std::uniform_int_distribution<long> coef(-2, 2);
    std::array<DenseMatrix, 4> sh{DenseMatrix(Q, dim, dim), DenseMatrix(Q, dim, dim),
                                  DenseMatrix(Q, dim, dim), DenseMatrix(Q, dim, dim)};
    for (auto& m : sh)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m.at(i, j) = Scalar::integer(coef(rng), Q);
    std::vector<Scalar> init, sel;
    for (int i = 0; i < dim; ++i) {
        init.push_back(Scalar::integer(coef(rng), Q));
        sel.push_back(Scalar::integer(i == 0 ? 1 : 0, Q));
    }
    return Presentation(Q, dim, init, sh, sel);
}

}  // namespace

TEST_CASE("materialize the catalog examples") {
    DenseMatrix p1 = materialize(preset("P"), 1);
    CHECK(p1 == catalog::brute_matrix(catalog::BruteKind::Mod2, 2));

    DenseMatrix z2 = materialize(preset("Z"), 2);
    long expect[4][4] = {{1, 1, 1, 1}, {1, 0, -1, 0}, {1, -1, 0, 0}, {1, 0, 0, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(z2.at(i, j) == Scalar::integer(expect[i][j], Q));

    DenseMatrix zero3 = materialize(Presentation::zero(Q), 3);
    CHECK(zero3 == DenseMatrix(Q, 8, 8));
}

TEST_CASE("entry walks binary digits") {
    CHECK(entry(preset("Z"), 2, 2, 1) == Scalar::integer(-1, Q));
    for (std::uint64_t k : {0ull, 1ull, 513ull, 1023ull})
        CHECK(entry(preset("P"), 10, 0, k) == Scalar::one(Q));
    // chi_B(C(8,3)) = chi_B(56) = 0 at a deep level
    CHECK(entry(preset("Z"), 20, 3, 5) == Scalar::zero(Q));
    CHECK_THROWS_AS(entry(preset("Z"), 2, 4, 0), IndexOutOfRangeError);

    for (const char* name : {"P", "Z", "J", "L_Z", "V"}) {
        Presentation p = preset(name);
        for (int lev = 0; lev <= 4; ++lev) {
            DenseMatrix w = materialize(p, lev);
            for (int i = 0; i < w.rows(); ++i)
                for (int j = 0; j < w.cols(); ++j)
                    CHECK(entry(p, lev, i, j) == w.at(i, j));
        }
    }
}

TEST_CASE("block consistency of catalog presets") {
    for (const char* name :
         {"P", "L_P", "D_P", "Linv_P", "V", "L_V", "D_V", "Z", "L_Z", "D_Z", "M_Z",
          "U_Z", "E_Z", "J", "L_J", "D_J", "T", "Minv_T"}) {
        Presentation p = preset(name);
        for (int lev = 0; lev <= 3; ++lev) {
            DenseMatrix big = materialize(p, lev + 1);
            int h = 1 << lev;
            for (int s = 0; s < 2; ++s)
                for (int t = 0; t < 2; ++t)
                    CHECK(big.block(s * h, t * h, h, h) ==
                          materialize(shift(p, s, t), lev));
        }
    }
}

TEST_CASE("shift identities") {
    CHECK(equal(shift(preset("P"), 0, 0), preset("P")));
    CHECK(is_zero(shift(preset("P"), 1, 1)).zero);
    Presentation z = preset("Z");
    CHECK(equal(shift(z, 0, 1), z.with_select(1)));
    CHECK(equal(shift(z, 1, 0), z.with_select(2)));
}

TEST_CASE("scale") {
    Presentation id = Presentation::identity(Q);
    Presentation five = scale(id, Scalar::integer(5, Q));
    for (int lev = 0; lev <= 4; ++lev)
        CHECK(materialize(five, lev) ==
              DenseMatrix::identity(Q, 1 << lev).scaled(Scalar::integer(5, Q)));
    CHECK(is_zero(scale(preset("P"), Scalar::zero(Q))).zero);
    CHECK(equal(scale(preset("L_Z").with_select(1), Scalar::rational(1, 2)),
                preset("gammaL.b")));
    CHECK_THROWS_AS(scale(preset("P"), Scalar::zero(Field::gaussian())),
                    FieldMismatchError);
}

TEST_CASE("add") {
    Presentation z = preset("Z");
    CHECK(equal(add(z, Presentation::zero(Q)), z));
    CHECK(is_zero(add(z, scale(z, Scalar::integer(-1, Q)))).zero);
}

TEST_CASE("parity elements: strict complexity drops") {
    // A[n] = ((1 + (-1)^n)/2) Id, B[n] = ((1 - (-1)^n)/2) Id: the sum is the
    // identity (complexity 1) and the product is zero (complexity 0)
    std::array<DenseMatrix, 4> sh{DenseMatrix(Q, 2, 2), DenseMatrix(Q, 2, 2),
                                  DenseMatrix(Q, 2, 2), DenseMatrix(Q, 2, 2)};
    sh[0].at(1, 0) = sh[0].at(0, 1) = Scalar::one(Q);
    sh[3].at(1, 0) = sh[3].at(0, 1) = Scalar::one(Q);
    std::vector<Scalar> init{Scalar::one(Q), Scalar::zero(Q)};
    Presentation a(Q, 2, init, sh, {Scalar::one(Q), Scalar::zero(Q)});
    Presentation b(Q, 2, init, sh, {Scalar::zero(Q), Scalar::one(Q)});
    CHECK(equal(add(a, b), Presentation::identity(Q)));
    CHECK(minimize(add(a, b)).dim() == 1);
    Presentation prod = mul(a, b);
    CHECK(is_zero(prod).zero);
    CHECK(minimize(prod).dim() == 0);
}

TEST_CASE("mul materializes to the dense product") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 8; ++rep) {
        Presentation p = random_presentation(rng, 2);
        Presentation q = random_presentation(rng, 3);
        Presentation pq = mul(p, q);
        for (int lev = 0; lev <= 5; ++lev)
            CHECK(materialize(pq, lev) ==
                  materialize(p, lev).mul(materialize(q, lev)));
    }
}

TEST_CASE("catalog inverses multiply to the identity") {
    CHECK(equal(mul(preset("L_P"), preset("Linv_P")), Presentation::identity(Q)));
    CHECK(equal(mul(preset("D_P"), preset("D_P")), Presentation::identity(Q)));
}

TEST_CASE("transpose") {
    Presentation z = preset("Z");
    CHECK(equal(transpose(z), z));
    CHECK(equal(transpose(z.with_select(1)), z.with_select(2)));
    CHECK(equal(transpose(transpose(preset("L_P"))), preset("L_P")));
    // anti-homomorphism
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 6; ++rep) {
        Presentation p = random_presentation(rng, 2);
        Presentation q = random_presentation(rng, 2);
        CHECK(equal(transpose(mul(p, q)), mul(transpose(q), transpose(p))));
    }
}

TEST_CASE("minimize finds the true complexity") {
    CHECK(minimize(preset("Z")).dim() == 3);
    CHECK(minimize(preset("J")).dim() == 9);
    CHECK(minimize(preset("L_J")).dim() == 20);
    CHECK(minimize(preset("V")).dim() == 2);
    for (const char* name : {"P", "Z", "L_Z", "D_Z", "J", "V", "T"}) {
        Presentation p = preset(name);
        Presentation m = minimize(p);
        CHECK(equal(m, p));
        Presentation mm = minimize(m);
        CHECK(mm.dim() == m.dim());  // idempotent
        CHECK(equal(mm, m));
    }
}

TEST_CASE("complexity bounds after minimization") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        Presentation p = random_presentation(rng, 2);
        Presentation q = random_presentation(rng, 2);
        int dp = minimize(p).dim(), dq = minimize(q).dim();
        CHECK(minimize(scale(p, Scalar::integer(7, Q))).dim() == dp);
        CHECK(minimize(add(p, q)).dim() <= dp + dq);
        CHECK(minimize(mul(p, q)).dim() <= dp * dq);
    }
}

TEST_CASE("is_zero certificates") {
    auto cert = is_zero(Presentation::zero(Q));
    CHECK(cert.zero);
    Presentation z = preset("Z");
    CHECK(is_zero(add(z, scale(z, Scalar::integer(-1, Q)))).zero);

    auto bad = is_zero(add(z, scale(preset("P"), Scalar::integer(-1, Q))));
    CHECK_FALSE(bad.zero);
    CHECK(bad.witness_level >= 0);
    // the witness entry really does differ
    Scalar zv = entry(z, bad.witness_level, bad.witness_row, bad.witness_col);
    Scalar pv = entry(preset("P"), bad.witness_level, bad.witness_row, bad.witness_col);
    CHECK(zv != pv);
    CHECK(bad.closure_dim > 0);
}

TEST_CASE("is_zero agrees with materialization to saturation depth") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        Presentation p = random_presentation(rng, 2);
        int sat = saturation_level(p);
        bool all0 = true;
        for (int lev = 0; lev <= sat + 1; ++lev)
            if (!(materialize(p, lev) == DenseMatrix(Q, 1 << lev, 1 << lev))) {
                all0 = false;
                break;
            }
        CHECK(is_zero(p).zero == all0);
    }
}

TEST_CASE("equal") {
    CHECK(equal(preset("Z"), preset("Z")));
    CHECK_FALSE(equal(preset("Z"), preset("P")));
    CHECK_THROWS_AS(equal(preset("Z"), preset("V")), FieldMismatchError);
}

TEST_CASE("left shift windows") {
    DenseMatrix z4 = materialize(preset("Z"), 2);
    DenseMatrix l00 = left_shift_window(z4, 0, 0);
    // chi_B(C(2(s+t), 2s)) = chi_B(C(s+t, s)): the 2x2 Pascal-mod-2 pattern
    CHECK(l00 == materialize(preset("Z"), 1));
    DenseMatrix l10 = left_shift_window(z4, 1, 0);
    CHECK(l10.at(0, 0) == Scalar::one(Q));
    CHECK(l10.at(0, 1) == Scalar::integer(-1, Q));
    CHECK(l10.at(1, 0) == Scalar::one(Q));
    CHECK(l10.at(1, 1) == Scalar::zero(Q));
    DenseMatrix two(Q, 2, 2);
    two.at(0, 0) = Scalar::integer(5, Q);
    CHECK(left_shift_window(two, 0, 0).at(0, 0) == Scalar::integer(5, Q));
    DenseMatrix odd(Q, 3, 3);
    CHECK_THROWS_AS(left_shift_window(odd, 0, 0), OddSizeError);
}

TEST_CASE("left-recursive closure of Z windows validates Thm 2.5 empirically") {
    // lambda(0,0) halves Z exactly: checked on windows through level 6
    for (int lev = 1; lev <= 6; ++lev) {
        DenseMatrix w = materialize(preset("Z"), lev);
        CHECK(left_shift_window(w, 0, 0) == materialize(preset("Z"), lev - 1));
    }
}

TEST_CASE("diagonal access") {
    Presentation dz = preset("D_Z");
    CHECK(diag_entry(dz, 0) == Scalar::one(Q));
    CHECK(diag_entry(dz, 2) == Scalar::integer(3, Q));
    CHECK(diag_entry(dz, 3) == Scalar::rational(-1, 3));
    for (std::uint64_t k = 0; k < 64; ++k)
        CHECK(diag_entry(dz, k) == binom::beeblebrox_f(k));
    // D_J diagonal carries g
    Presentation dj = preset("D_J");
    for (std::uint64_t k = 0; k < 64; ++k)
        CHECK(diag_entry(dj, k) == binom::jacobi_g(k));
    CHECK_THROWS_AS(diag_entry(preset("Z"), 1), NotDiagonalError);

    std::vector<Scalar> streamed;
    for_each_diag_entry(dz, 100, [&](std::uint64_t k, const Scalar& v) {
        CHECK(k == streamed.size());
        streamed.push_back(v);
    });
    for (std::uint64_t k = 0; k < 100; ++k) CHECK(streamed[k] == diag_entry(dz, k));
}

TEST_CASE("tensor elements") {
    Presentation z = preset("Z");
    DenseMatrix x(Q, 2, 2);
    x.at(0, 0) = x.at(0, 1) = x.at(1, 0) = Scalar::one(Q);
    TensorElement zp = tensor_const(z, x);
    CHECK(zp.materialize(3) == materialize(z, 2).kron(x));

    // trivial 1x1 factor
    DenseMatrix one(Q, 1, 1);
    one.at(0, 0) = Scalar::one(Q);
    TensorElement p1 = tensor_const(preset("P"), one);
    CHECK(p1.materialize(2) == materialize(preset("P"), 2));

    DenseMatrix bad(Q, 3, 3);
    CHECK_THROWS_AS(tensor_const(z, bad), NonDyadicSizeError);

    // product law (A x X)(B x Y) = AB x XY
    TensorElement prod = mul(zp, zp);
    CHECK(prod.materialize(3) == zp.materialize(3).mul(zp.materialize(3)));
}

TEST_CASE("saturation levels are small for the catalog") {
    CHECK(saturation_level(preset("P")) == 0);
    for (const char* name : {"Z", "L_Z", "D_Z", "J", "V"})
        CHECK(saturation_level(preset(name)) <= 4);
}

TEST_CASE("S_k shift law over a prime field") {
    // (S_k[n])_{i,j} = omega^{2^n k + i + j}, omega of order 5 in F_11:
    // the quarter blocks obey rho(s,t) S_k = S_{s+t+2k}
    const Field f11 = Field::prime(11);
    auto omega_pow = [&](std::uint64_t e) {
        std::int64_t r = 1;
        for (std::uint64_t i = 0; i < e % 5; ++i) r = r * 3 % 11;
        return Scalar::prime(r, f11);
    };
    auto sk_window = [&](std::uint64_t k, int lev) {
        int n = 1 << lev;
        DenseMatrix m(f11, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = omega_pow((std::uint64_t{1} << lev) * k + i + j);
        return m;
    };
    for (std::uint64_t k = 1; k <= 8; ++k)
        for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t)
                for (int lev = 1; lev <= 3; ++lev) {
                    DenseMatrix full = sk_window(k, lev);
                    int h = 1 << (lev - 1);
                    CHECK(full.block(s * h, t * h, h, h) ==
                          sk_window(s + t + 2 * k, lev - 1));
                }
}
