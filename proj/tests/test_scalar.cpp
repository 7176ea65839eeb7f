#include <doctest.h>

#include <random>

#include "homprelie/scalar.hpp"

using namespace homprelie;

TEST_SUITE("scalar") {

TEST_CASE("rational canonical form") {
    Field q = Field::rationals();
    CHECK(Scalar::parse("6/4", q).str() == "3/2");
    CHECK(Scalar::parse("-7/2", q).str() == "-7/2");
    CHECK(Scalar::parse("3/-6", q).str() == "-1/2");
    CHECK(Scalar::parse("0/5", q).str() == "0");
    CHECK(Scalar::parse("12", q).str() == "12");
    CHECK(Scalar::from_int(-3, q).str() == "-3");
}

TEST_CASE("rational arithmetic is exact") {
    Field q = Field::rationals();
    Scalar a = Scalar::parse("1/3", q);
    Scalar b = Scalar::parse("1/6", q);
    CHECK((a + b).str() == "1/2");
    CHECK((a - b).str() == "1/6");
    CHECK((a * b).str() == "1/18");
    CHECK((a / b).str() == "2");
    CHECK((-a).str() == "-1/3");
    CHECK(a.inverse().str() == "3");
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), CheckError);
}

TEST_CASE("large magnitudes stay exact") {
    Field q = Field::rationals();
    Scalar big = Scalar::parse("123456789123456789123456789", q);
    Scalar one = Scalar::one(q);
    CHECK((big * big / big).str() == "123456789123456789123456789");
    CHECK((big + one - big).str() == "1");
}

TEST_CASE("prime field residues") {
    Field f7 = Field::prime(7);
    CHECK(Scalar::parse("-1", f7).str() == "6");
    CHECK(Scalar::parse("10", f7).str() == "3");
    CHECK(Scalar::parse("1/2", f7).str() == "4");  // 2 * 4 = 8 = 1 mod 7
    CHECK((Scalar::from_int(3, f7) * Scalar::from_int(5, f7)).str() == "1");
    CHECK(Scalar::from_int(4, f7).inverse().str() == "2");
    CHECK_THROWS_AS(Scalar::zero(f7).inverse(), CheckError);
    CHECK_THROWS_AS(Field::prime(4), ParseError);
    CHECK_THROWS_AS(Field::prime(1), ParseError);
}

TEST_CASE("parse rejects malformed scalars") {
    Field q = Field::rationals();
    CHECK_THROWS_AS(Scalar::parse("1.5", q), ParseError);
    CHECK_THROWS_AS(Scalar::parse("", q), ParseError);
    CHECK_THROWS_AS(Scalar::parse("a", q), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/0", q), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/2/3", q), ParseError);
}

TEST_CASE("mixed-field arithmetic is rejected") {
    Scalar a = Scalar::one(Field::rationals());
    Scalar b = Scalar::one(Field::prime(5));
    CHECK_THROWS_AS(a + b, InternalError);
}

TEST_CASE("field axioms hold on random samples") {
    std::mt19937 rng(20240811);
    auto random_rational = [&] {
        long long n = static_cast<long long>(rng() % 41) - 20;
        long long d = 1 + rng() % 12;
        return Scalar::rational(Rational(n, d));
    };
    Field q = Field::rationals();
    for (int iter = 0; iter < 200; ++iter) {
        Scalar a = random_rational(), b = random_rational(), c = random_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(q));
    }
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 101ull}) {
        Field fp = Field::prime(p);
        for (int iter = 0; iter < 200; ++iter) {
            Scalar a = Scalar::residue(rng(), fp);
            Scalar b = Scalar::residue(rng(), fp);
            Scalar c = Scalar::residue(rng(), fp);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(fp));
        }
    }
}

} // TEST_SUITE
