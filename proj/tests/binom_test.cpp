#include "recmat/binom.hpp"

#include "doctest.h"

using namespace recmat;
using namespace recmat::binom;

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(30, 15) == 155117520);
    CHECK_THROWS_AS(binomial(3, 5), OutOfRangeError);
}

TEST_CASE("digit_sum") {
    CHECK(digit_sum(0, 2) == 0);
    CHECK(digit_sum(5, 2) == 2);
    CHECK(digit_sum(7, 2) == 3);
    CHECK(digit_sum(255, 10) == 12);
}

TEST_CASE("lucas") {
    CHECK(lucas_mod_p(3, 1, 2) == 1);
    CHECK(lucas_mod_p(4, 2, 2) == 0);
    CHECK(lucas_mod_p(10, 5, 3) == 0);
    CHECK_THROWS_AS(lucas_mod_p(4, 2, 4), NotPrimeError);
    // against exact binomials
    for (std::uint64_t n = 0; n <= 512; ++n)
        for (std::int64_t p : {2, 3, 5, 7}) {
            std::uint64_t k = (n * 37 + 11) % (n + 1);
            mpz_class expect = binomial(n, k) % p;
            CHECK(lucas_mod_p(n, k, p) == expect.get_si());
        }
}

TEST_CASE("kummer carries") {
    CHECK(kummer_valuation(1, 1, 2) == 1);
    CHECK(kummer_valuation(2, 2, 2) == 1);
    CHECK(kummer_valuation(3, 1, 2) == 2);
    // against direct 2-valuation of the binomial
    for (std::uint64_t s = 0; s <= 60; ++s)
        for (std::uint64_t t = 0; t <= 60; ++t) {
            mpz_class b = binomial(s + t, s);
            int v = 0;
            while (mpz_even_p(b.get_mpz_t())) {
                b /= 2;
                ++v;
            }
            CHECK(kummer_valuation(s, t, 2) == v);
        }
}

TEST_CASE("factorial valuation identity") {
    for (std::int64_t p : {2, 3, 5})
        for (long x : {0L, 1L, 97L, 1024L, 9999L, 10000L}) {
            // v_p(x!) the long way
            mpz_class direct = 0;
            for (mpz_class pk = p; pk <= x; pk *= p) direct += mpz_class(x) / pk;
            CHECK(factorial_valuation(x, p) == direct);
        }
}

TEST_CASE("characters") {
    CHECK(chi_B(1) == 1);
    CHECK(chi_B(3) == -1);
    CHECK(chi_B(6) == 0);
    CHECK(chi_B(-3) == 1);  // -3 = 1 mod 4
    CHECK(chi_J(7) == 1);
    CHECK(chi_J(3) == -1);
    CHECK(chi_J(4) == 0);
    CHECK(chi_J(mpz_class(-1)) == 1);
}

TEST_CASE("chi_B of binomials via the recursion") {
    CHECK(chi_B_binomial(2, 1) == 0);
    CHECK(chi_B_binomial(3, 1) == -1);
    CHECK(chi_B_binomial(7, 3) == -1);
    for (std::uint64_t n = 0; n < 300; ++n)
        for (std::uint64_t k = 0; k <= n; ++k)
            CHECK(chi_B_binomial(n, k) == chi_B(binomial(n, k)));
}

TEST_CASE("folding sequence") {
    CHECK(folding(1) == 1);
    CHECK(folding(3) == -1);
    CHECK(folding(6) == -1);
    CHECK_THROWS_AS(folding(0), OutOfRangeError);
    // recursive law f(2^n + a) = -f(2^n - a)
    for (int n = 1; n <= 10; ++n)
        for (std::uint64_t a = 1; a < (std::uint64_t{1} << n); ++a)
            CHECK(folding((std::uint64_t{1} << n) + a) ==
                  -folding((std::uint64_t{1} << n) - a));
    for (int n = 0; n <= 16; ++n) CHECK(folding(std::uint64_t{1} << n) == 1);
}

TEST_CASE("beeblebrox f") {
    CHECK(beeblebrox_f(0) == Scalar::rational(1, 1));
    CHECK(beeblebrox_f(2) == Scalar::rational(3, 1));
    CHECK(beeblebrox_f(7) == Scalar::rational(-1, 9));
    // recursion agrees with the closed form
    for (std::uint64_t n = 0; n < (1 << 16); ++n)
        CHECK(beeblebrox_f(n) == beeblebrox_f_recursive(n));
}

TEST_CASE("jacobi g") {
    CHECK(jacobi_g(0) == Scalar::rational(1, 1));
    CHECK(jacobi_g(1) == Scalar::rational(-1, 1));
    CHECK(jacobi_g(2) == Scalar::rational(3, 1));
}

TEST_CASE("q-binomial polynomials") {
    CHECK(qbinomial_poly(5, 0) == IntPolynomial::one());
    CHECK(qbinomial_poly(2, 1) == IntPolynomial({1, 1}));
    CHECK(qbinomial_poly(4, 2) == IntPolynomial({1, 1, 2, 1, 1}));
    for (std::uint64_t n = 0; n <= 24; ++n)
        for (std::uint64_t k = 0; k <= n; ++k) {
            IntPolynomial p = qbinomial_poly(n, k);
            CHECK(p == qbinomial_poly(n, n - k));      // symmetry
            CHECK(p.palindromic());                    // rotation identity
            CHECK(p.eval_int(1) == binomial(n, k));    // q = 1
            CHECK(p.degree() == static_cast<int>(k * (n - k)));
            for (const auto& c : p.coeffs()) CHECK(sgn(c) >= 0);
        }
}

TEST_CASE("q-binomial at roots of unity") {
    const Field qi = Field::gaussian();
    CHECK(qbinomial_eval_root(2, 1, 4) == Scalar::gaussian(1, 1));
    CHECK(qbinomial_eval_root(3, 1, 4) == Scalar::gaussian(0, 1));
    CHECK(qbinomial_eval_root(5, 1, 4) == Scalar::one(qi));
    CHECK_THROWS_AS(qbinomial_eval_root(3, 1, 3), UnsupportedOrderError);
    CHECK_THROWS_AS(qbinomial_eval_root(1, 2, 4), OutOfRangeError);
    // roll the polynomial rows once instead of rebuilding the triangle per pair
    std::vector<IntPolynomial> row{IntPolynomial::one()};
    for (std::uint64_t a = 0; a < 64; ++a) {
        for (std::uint64_t b = 0; b <= a; ++b)
            for (int n : {1, 2, 4}) {
                Scalar direct = row[b].eval(
                    n == 1 ? Scalar::one(qi)
                           : (n == 2 ? -Scalar::one(qi) : Scalar::gaussian(0, 1)));
                CHECK(qbinomial_eval_root(a, b, n) == direct);
            }
        std::vector<IntPolynomial> next(row.size() + 1);
        next[0] = IntPolynomial::one();
        for (std::size_t j = 1; j < next.size(); ++j) {
            IntPolynomial left = j < row.size() ? row[j].shifted(static_cast<int>(j))
                                                : IntPolynomial();
            next[j] = left.add(row[j - 1]);
        }
        row = std::move(next);
    }
}

TEST_CASE("determinant formulas, small closed values") {
    CHECK(det_formula(DetKind::Mod2, 2) == Scalar::rational(-1, 1));
    CHECK(det_formula(DetKind::Beeblebrox, 3) == Scalar::rational(-3, 1));
    CHECK(det_formula(DetKind::Valuation, 3) == Scalar::gaussian(0, -2));
    CHECK(det_formula(DetKind::Jacobi, 2) == Scalar::rational(-1, 1));
    CHECK_THROWS_AS(det_formula(DetKind::Mod2, 0), OutOfRangeError);
}
