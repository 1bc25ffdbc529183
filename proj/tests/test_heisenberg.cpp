#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "heis/heisenberg.hpp"

using namespace heis;

namespace {

double mdiff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("heis_mul") {
    long long n = 5;
    HeisElement pinv(0, 0, -1, n), q(0, 1, 0, n);
    HeisElement r = heis_mul(pinv, q);  // P^{-1} Q = omega^{-1} Q P^{-1}
    CHECK(r == HeisElement(-2, 1, -1, n));
    HeisElement x(3, 2, 4, n);
    CHECK(heis_mul(HeisElement::identity(n), x) == x);
    CHECK(heis_mul(x, HeisElement::identity(n)) == x);
    CHECK(heis_mul(x, heis_inv(x)) == HeisElement::identity(n));
    CHECK(heis_mul(heis_inv(x), x) == HeisElement::identity(n));
    CHECK_THROWS_AS(heis_mul(x, HeisElement(0, 0, 0, 4)), modulus_error);
}

TEST_CASE("heis_pow agrees with repeated multiplication") {
    for (long long n : {2, 3, 4, 6})
        for (long long e = 0; e < 2; ++e)
            for (long long q = 0; q < n; ++q)
                for (long long p = 0; p < n; ++p) {
                    HeisElement x(e, q, p, n);
                    HeisElement acc = HeisElement::identity(n);
                    for (long long c = 0; c <= 2 * n; ++c) {
                        CHECK(heis_pow(x, c) == acc);
                        CHECK(heis_pow(x, -c) == heis_inv(acc));
                        acc = heis_mul(acc, x);
                    }
                }
    HeisElement pq = heis_mul(HeisElement(0, 0, 1, 5), HeisElement(0, 1, 0, 5));
    CHECK(heis_pow(pq, 2) == heis_mul(pq, pq));
    CHECK(heis_pow(pq, 0) == HeisElement::identity(5));
}

TEST_CASE("elements of order N") {
    // omega_{2N}^{-ab(N-1)} P^a Q^b has order dividing N
    for (long long n : {3, 4, 6})
        for (long long a = 0; a < n; ++a)
            for (long long b = 0; b < n; ++b) {
                HeisElement paqb = heis_mul(HeisElement(0, 0, a, n), HeisElement(0, b, 0, n));
                HeisElement x(-a * b * (n - 1) + paqb.e, paqb.q, paqb.p, n);
                CHECK(heis_pow(x, n) == HeisElement::identity(n));
            }
}

TEST_CASE("center") {
    long long n = 6;
    for (long long e = 0; e < 2 * n; ++e) {
        HeisElement z(e, 0, 0, n);
        for (long long q = 0; q < n; ++q)
            for (long long p = 0; p < n; ++p) {
                HeisElement x(1, q, p, n);
                CHECK(heis_mul(z, x) == heis_mul(x, z));
            }
    }
}

TEST_CASE("schrodinger matrices") {
    const auto& s2 = schrodinger(2);
    CHECK(mdiff(s2.qmat, (Eigen::MatrixXcd(2, 2) << 1, 0, 0, -1).finished()) < 1e-12);
    CHECK(mdiff(s2.pmat, (Eigen::MatrixXcd(2, 2) << 0, 1, 1, 0).finished()) < 1e-12);
    for (long long n = 1; n <= 12; ++n) {
        const auto& s = schrodinger(n);
        std::complex<double> omega = std::polar(1.0, 2.0 * M_PI / (double)n);
        CHECK(mdiff(s.pmat * s.qmat, omega * s.qmat * s.pmat) < 1e-12);
        Eigen::MatrixXcd qn = Eigen::MatrixXcd::Identity(n, n), pn = qn;
        for (long long i = 0; i < n; ++i) {
            qn = s.qmat * qn;
            pn = s.pmat * pn;
        }
        CHECK(mdiff(qn, Eigen::MatrixXcd::Identity(n, n)) < 1e-11);
        CHECK(mdiff(pn, Eigen::MatrixXcd::Identity(n, n)) < 1e-11);
    }
}

TEST_CASE("to_matrix is a multiplicative isomorphism") {
    long long n = 6;
    CHECK(mdiff(to_matrix(HeisElement::identity(n)),
                Eigen::MatrixXcd::Identity(n, n)) < 1e-12);
    CHECK(mdiff(to_matrix(HeisElement(n, 0, 0, n)),
                -Eigen::MatrixXcd::Identity(n, n)) < 1e-12);
    CHECK(mdiff(to_matrix(HeisElement(0, 1, 0, n)), schrodinger(n).qmat) < 1e-12);
    CHECK(mdiff(to_matrix(HeisElement(0, 0, 1, n)), schrodinger(n).pmat) < 1e-12);

    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> de(0, 2 * n - 1), dq(0, n - 1);
    for (int trial = 0; trial < 1000; ++trial) {
        HeisElement x(de(rng), dq(rng), dq(rng), n);
        HeisElement y(de(rng), dq(rng), dq(rng), n);
        CHECK(mdiff(to_matrix(heis_mul(x, y)), to_matrix(x) * to_matrix(y)) < 1e-12);
    }
}

TEST_CASE("to_matrix is faithful at small N") {
    for (long long n : {2, 3, 4}) {
        std::vector<Eigen::MatrixXcd> seen;
        long long count = 0;
        for (long long e = 0; e < 2 * n; ++e)
            for (long long q = 0; q < n; ++q)
                for (long long p = 0; p < n; ++p) {
                    Eigen::MatrixXcd m = to_matrix(HeisElement(e, q, p, n));
                    for (const auto& prev : seen) CHECK(mdiff(m, prev) > 1e-6);
                    seen.push_back(m);
                    ++count;
                }
        CHECK(count == 2 * n * n * n);
    }
}
