#include "recmat/scalar.hpp"

#include <random>

#include "doctest.h"

using namespace recmat;

namespace {

Scalar q(long n, long d = 1) { return Scalar::rational(n, d); }
Scalar gi(long re, long im) { return Scalar::gaussian(re, im); }

}  // namespace

TEST_CASE("gaussian norm and inverse") {
    // (1+i)(1-i) = 2
    CHECK(gi(1, 1) * gi(1, -1) == gi(2, 0));
    // (-1+i)^-1 = -1/2 - 1/2 i
    CHECK(gi(-1, 1).inverse() ==
          Scalar::gaussian(mpq_class(-1, 2), mpq_class(-1, 2)));
}

TEST_CASE("prime field arithmetic") {
    const Field f7 = Field::prime(7);
    CHECK(Scalar::prime(3, f7) * Scalar::prime(5, f7) == Scalar::one(f7));
    CHECK(Scalar::prime(3, f7).inverse() == Scalar::prime(5, f7));
    CHECK_THROWS_AS(Field::prime(6), NotPrimeError);
    CHECK_THROWS_AS(Scalar::prime(1, 9), NotPrimeError);
}

TEST_CASE("field mixing is a hard error") {
    CHECK_THROWS_AS(q(1) + gi(1, 0), FieldMismatchError);
    CHECK_THROWS_AS(q(1) * Scalar::prime(1, 7), FieldMismatchError);
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(q(1) / q(0), DivisionByZeroError);
    CHECK_THROWS_AS(Scalar::zero(Field::gaussian()).inverse(), DivisionByZeroError);
}

TEST_CASE("formatting") {
    CHECK(Scalar::rational(-1, 3).str() == "-1/3");
    CHECK(gi(-1, 1).str() == "-1+1i");
    CHECK(gi(0, -1).str() == "0-1i");
    CHECK(Scalar::gaussian(mpq_class(1, 2), mpq_class(-3, 4)).str() == "1/2-3/4i");
    CHECK(q(5).str() == "5");
    CHECK(Scalar::prime(12, 7).str() == "5");
}

TEST_CASE("parsing canonicalizes") {
    const Field fq = Field::rational();
    CHECK(Scalar::parse("2/4", fq) == Scalar::rational(1, 2));
    CHECK(Scalar::parse("-6/4", fq) == Scalar::rational(-3, 2));
    CHECK(Scalar::parse("-1+1i", Field::gaussian()) == gi(-1, 1));
    CHECK(Scalar::parse("3i", Field::gaussian()) == gi(0, 3));
    CHECK(Scalar::parse("10", Field::prime(7)) == Scalar::prime(3, 7));
    CHECK_THROWS_AS(Scalar::parse("1/0", fq), ParseError);
    CHECK_THROWS_AS(Scalar::parse("", fq), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1+2j", Field::gaussian()), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1 2", fq), ParseError);
}

TEST_CASE("parse/format round trips") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    const Field fq = Field::rational(), fg = Field::gaussian();
    for (int iter = 0; iter < 300; ++iter) {
        Scalar a = Scalar::rational(num(rng), den(rng));
        CHECK(Scalar::parse(a.str(), fq) == a);
        Scalar g = Scalar::gaussian(mpq_class(num(rng), den(rng)),
                                    mpq_class(num(rng), den(rng)));
        CHECK(Scalar::parse(g.str(), fg) == g);
    }
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    auto rnd_q = [&] { return Scalar::rational(num(rng), den(rng)); };
    auto rnd_g = [&] {
        return Scalar::gaussian(mpq_class(num(rng), den(rng)),
                                mpq_class(num(rng), den(rng)));
    };
    const Field f41 = Field::prime(41);
    std::uniform_int_distribution<long> res(0, 40);
    auto rnd_p = [&] { return Scalar::prime(res(rng), f41); };
    auto axioms = [](auto gen) {
        for (int iter = 0; iter < 200; ++iter) {
            auto a = gen(), b = gen(), c = gen();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(a.field()));
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(a.field()));
        }
    };
    axioms(rnd_q);
    axioms(rnd_g);
    axioms(rnd_p);
}

TEST_CASE("canonical form is unique") {
    CHECK(Scalar::rational(2, 4).str() == Scalar::rational(1, 2).str());
    CHECK(Scalar::rational(-2, -4).str() == "1/2");
    CHECK(Scalar::rational(mpq_class(6, -4)).str() == "-3/2");
}

TEST_CASE("pow") {
    CHECK(q(3).pow(4) == q(81));
    CHECK(q(2).pow(-3) == Scalar::rational(1, 8));
    CHECK(gi(0, 1).pow(2) == gi(-1, 0));
}
