#include "recmat/dense_matrix.hpp"

#include <random>

#include "doctest.h"
#include "recmat/binom.hpp"

using namespace recmat;

namespace {

DenseMatrix from_ints(const Field& f, std::vector<std::vector<long>> rows) {
    DenseMatrix m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) =
                Scalar::integer(rows[i][j], f);
    return m;
}

}  // namespace

TEST_CASE("leading minors of the Fermat matrix are all 1") {
    const Field q = Field::rational();
    int n = 12;
    DenseMatrix m(q, n, n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            m.at(s, t) = Scalar::rational(mpq_class(binom::binomial(s + t, s)));
    for (const Scalar& d : leading_minors(m)) CHECK(d == Scalar::one(q));
}

TEST_CASE("leading minors agree with pivoted determinants") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coef(-4, 4);
    const Field q = Field::rational();
    for (int rep = 0; rep < 20; ++rep) {
        int n = 5;
        DenseMatrix m(q, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Scalar::integer(coef(rng), q);
        std::vector<Scalar> minors;
        try {
            minors = leading_minors(m);
        } catch (const SingularMinorAtError&) {
            continue;  // zero intermediate minor; not this test's subject
        }
        for (int k = 1; k <= n; ++k) CHECK(minors[k - 1] == det(m.window(k)));
    }
}

TEST_CASE("gaussian-integer minors use the exact-division path") {
    const Field g = Field::gaussian();
    DenseMatrix m(g, 3, 3);
    // V(3): i^{v2(C(s+t,s))}
    long re[3][3] = {{1, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    long im[3][3] = {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Scalar::gaussian(re[i][j], im[i][j]);
    auto minors = leading_minors(m);
    CHECK(minors[0] == Scalar::one(g));
    CHECK(minors[1] == Scalar::gaussian(-1, 1));
    CHECK(minors[2] == Scalar::gaussian(0, -2));
    CHECK(det(m) == Scalar::gaussian(0, -2));
}

TEST_CASE("inverse") {
    const Field q = Field::rational();
    DenseMatrix m = from_ints(q, {{1, 1}, {1, 0}});
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m.mul(*inv) == DenseMatrix::identity(q, 2));
    CHECK_FALSE(inverse(from_ints(q, {{1, 1}, {1, 1}})).has_value());
}

TEST_CASE("symmetric fraction-free LDL^t") {
    const Field q = Field::rational();
    DenseMatrix m = from_ints(q, {{1, 1, 1, 1}, {1, 2, 3, 4}, {1, 3, 6, 10}, {1, 4, 10, 20}});
    LdltFactors f = symmetric_ldlt(m);
    DenseMatrix d(q, 4, 4);
    for (int i = 0; i < 4; ++i) d.at(i, i) = f.diag[i];
    CHECK(f.lower.mul(d).mul(f.lower.transpose()) == m);
    for (int i = 0; i < 4; ++i) CHECK(f.lower.at(i, i) == Scalar::one(q));
    CHECK_THROWS_AS(symmetric_ldlt(from_ints(q, {{0, 1}, {1, 0}})), SingularMinorAtError);
}

TEST_CASE("LDL^t over a prime field") {
    const Field f5 = Field::prime(5);
    DenseMatrix m(f5, 3, 3);
    long vals[3][3] = {{1, 2, 3}, {2, 1, 4}, {3, 4, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Scalar::integer(vals[i][j], f5);
    LdltFactors f = symmetric_ldlt(m);
    DenseMatrix d(f5, 3, 3);
    for (int i = 0; i < 3; ++i) d.at(i, i) = f.diag[i];
    CHECK(f.lower.mul(d).mul(f.lower.transpose()) == m);
}

TEST_CASE("unipotent LU") {
    const Field q = Field::rational();
    DenseMatrix m = from_ints(q, {{2, 1, 1}, {4, 3, 3}, {8, 7, 9}});
    auto [l, u] = lu_unipotent(m);
    CHECK(l.mul(u) == m);
    for (int i = 0; i < 3; ++i) {
        CHECK(l.at(i, i) == Scalar::one(q));
        for (int j = i + 1; j < 3; ++j) {
            CHECK(l.at(i, j).is_zero());
            CHECK(u.at(j, i).is_zero());
        }
    }
}

TEST_CASE("kron") {
    const Field q = Field::rational();
    DenseMatrix a = from_ints(q, {{1, 2}, {3, 4}});
    DenseMatrix b = from_ints(q, {{0, 1}, {1, 0}});
    DenseMatrix k = a.kron(b);
    CHECK(k.rows() == 4);
    CHECK(k.at(0, 1) == Scalar::integer(1, q));
    CHECK(k.at(0, 3) == Scalar::integer(2, q));
    CHECK(k.at(3, 2) == Scalar::integer(4, q));
}
