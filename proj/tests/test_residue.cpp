#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "heis/residue.hpp"

using namespace heis;

TEST_CASE("basic_rep") {
    CHECK(basic_rep(7, 5) == 2);
    CHECK(basic_rep(-1, 4) == 3);
    CHECK(basic_rep(12, 12) == 0);
    CHECK(basic_rep(-13, 5) == 2);
    CHECK_THROWS_AS(basic_rep(1, 0), modulus_error);
}

TEST_CASE("hat map") {
    CHECK(hat(3, 6) == 9);
    CHECK(hat(1, 6) == 1);
    CHECK(basic_rep(hat(9, 6), 12) == 9);
    CHECK_THROWS_AS(hat(1, 0), modulus_error);
}

TEST_CASE("hat congruence mod 2N for N = 2(2k+1)") {
    for (long long k = 0; k <= 10; ++k) {
        long long n = 2 * (2 * k + 1);
        for (long long a = -3 * n; a <= 3 * n; ++a) {
            CHECK(basic_rep(hat(a, n), 2 * n) == basic_rep(hat(a + n, n), 2 * n));
            CHECK(basic_rep(hat(a, n), 2 * n) == basic_rep(hat(basic_rep(a, n), n), 2 * n));
        }
    }
}

TEST_CASE("Residue arithmetic and modulus discipline") {
    Residue a(5, 7), b(4, 7);
    CHECK((a + b).value() == 2);
    CHECK((a * b).value() == 6);
    CHECK((a - b).value() == 1);
    CHECK((-a).value() == 2);
    CHECK(Residue(-3, 7).value() == 4);
    CHECK_THROWS_AS(a + Residue(1, 5), modulus_error);
}

TEST_CASE("bezout pinned choices") {
    auto check_identity = [](const BezoutPair& p) {
        CHECK(p.mu1 * p.d2 - p.mu2 * p.d1 == 1);
    };
    BezoutPair p23 = bezout(2, 3);
    CHECK(p23.mu1 == 1);
    CHECK(p23.mu2 == 1);
    check_identity(p23);
    BezoutPair p43 = bezout(4, 3);
    CHECK(p43.mu1 == -1);
    CHECK(p43.mu2 == -1);
    check_identity(p43);
    BezoutPair p45 = bezout(4, 5);
    CHECK(p45.mu1 == 1);
    CHECK(p45.mu2 == 1);
    check_identity(p45);
    for (long long k = 0; k <= 10; ++k) {
        check_identity(bezout(2, 2 * k + 1));
        if ((2 * k + 1) % 4 == 1 && k > 0) check_identity(bezout(4, 2 * k + 1));
    }
    for (long long d1 = 2; d1 <= 12; ++d1)
        for (long long d2 = 2; d2 <= 12; ++d2)
            if (std::gcd(d1, d2) == 1) {
                BezoutPair p = bezout(d1, d2);
                check_identity(p);
                CHECK(std::abs(p.mu1) <= d1);
            }
    CHECK_THROWS_AS(bezout(4, 6), coprime_error);
}

TEST_CASE("crt decompose/compose examples") {
    auto [a, b] = crt_decompose(Residue(5, 6), 2, 3);
    CHECK(a == Residue(1, 2));
    CHECK(b == Residue(2, 3));
    auto z = crt_decompose(Residue(0, 6), 2, 3);
    CHECK(z.first.value() == 0);
    CHECK(z.second.value() == 0);
    auto [c, d] = crt_decompose(Residue(7, 12), 4, 3);
    CHECK(c == Residue(3, 4));
    CHECK(d == Residue(1, 3));

    CHECK(crt_compose(Residue(1, 2), Residue(2, 3)) == Residue(5, 6));
    CHECK(crt_compose(Residue(0, 2), Residue(0, 3)) == Residue(0, 6));
    CHECK(crt_compose(Residue(3, 4), Residue(1, 3)) == Residue(7, 12));
    CHECK_THROWS_AS(crt_compose(Residue(1, 2), Residue(1, 4)), coprime_error);
    CHECK_THROWS_AS(crt_decompose(Residue(1, 8), 2, 4), coprime_error);
}

TEST_CASE("crt bijectivity and ring homomorphism, d1*d2 <= 120") {
    for (long long d1 = 2; d1 <= 60; ++d1)
        for (long long d2 = 2; d1 * d2 <= 120; ++d2) {
            if (std::gcd(d1, d2) != 1) continue;
            long long n = d1 * d2;
            for (long long a = 0; a < n; ++a) {
                auto [x, y] = crt_decompose(Residue(a, n), d1, d2);
                REQUIRE(crt_compose(x, y) == Residue(a, n));
            }
            // homomorphism spot: enough pairs to pin both operations
            for (long long a = 0; a < n; ++a) {
                long long b = (a * 7 + 3) % n;
                auto [x1, y1] = crt_decompose(Residue(a, n), d1, d2);
                auto [x2, y2] = crt_decompose(Residue(b, n), d1, d2);
                auto sum = crt_decompose(Residue(a + b, n), d1, d2);
                auto prod = crt_decompose(Residue(a * b, n), d1, d2);
                REQUIRE(sum.first == x1 + x2);
                REQUIRE(sum.second == y1 + y2);
                REQUIRE(prod.first == x1 * x2);
                REQUIRE(prod.second == y1 * y2);
            }
        }
}

TEST_CASE("hat/CRT bridge identities for N = 2(2k+1)") {
    for (long long k = 0; k <= 10; ++k) {
        long long m = 2 * k + 1, n = 2 * m;
        for (long long a = 0; a < n; ++a) {
            Residue lhs = crt_compose(Residue(basic_rep(a, 2), 4), Residue(a, m));
            CHECK(lhs == Residue(hat(a, n), 2 * n));
            Residue lhs2 = crt_compose(Residue(2 * basic_rep(a, 2), 4), Residue(0, m));
            CHECK(lhs2 == Residue(hat(a, n) * n, 2 * n));
        }
    }
}
