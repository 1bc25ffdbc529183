#pragma once

#include <complex>
#include <Eigen/Dense>

#include "heis/residue.hpp"

namespace heis {

// Normal form w^e Q^n P^p where w = omega_{2N} = exp(i*pi/N); e lives mod 2N,
// the Q/P exponents mod N.
struct HeisElement {
    long long e;  // phase exponent, mod 2n
    long long q;  // Q exponent, mod n
    long long p;  // P exponent, mod n
    long long n;

    HeisElement() : e(0), q(0), p(0), n(1) {}
    HeisElement(long long e_, long long q_, long long p_, long long n_)
        : e(basic_rep(e_, 2 * n_)), q(basic_rep(q_, n_)),
          p(basic_rep(p_, n_)), n(n_) {}

    static HeisElement identity(long long n) { return HeisElement(0, 0, 0, n); }

    friend bool operator==(const HeisElement& x, const HeisElement& y) {
        return x.e == y.e && x.q == y.q && x.p == y.p && x.n == y.n;
    }
    friend bool operator!=(const HeisElement& x, const HeisElement& y) { return !(x == y); }
};

HeisElement heis_mul(const HeisElement& x, const HeisElement& y);
HeisElement heis_inv(const HeisElement& x);
HeisElement heis_pow(const HeisElement& x, long long c);

struct SchrodingerPair {
    Eigen::MatrixXcd qmat;
    Eigen::MatrixXcd pmat;
};

// Q = diag(omega^i), P = sum |i-1><i|; cached per dimension.
const SchrodingerPair& schrodinger(long long n);

Eigen::MatrixXcd to_matrix(const HeisElement& x);

}  // namespace heis
