#include "heis/heisenberg.hpp"

#include <map>
#include <mutex>

namespace heis {

namespace {

void check_n(const HeisElement& x, const HeisElement& y) {
    if (x.n != y.n) throw modulus_error("heis: modulus mismatch");
}

}  // namespace

// (Q^n P^p)(Q^n' P^p') = omega^{p n'} Q^{n+n'} P^{p+p'} with PQ = omega QP,
// i.e. a phase exponent shift of 2*p*n' in omega_{2N} units.
HeisElement heis_mul(const HeisElement& x, const HeisElement& y) {
    check_n(x, y);
    return HeisElement(x.e + y.e + 2 * x.p * y.q, x.q + y.q, x.p + y.p, x.n);
}

HeisElement heis_inv(const HeisElement& x) {
    return HeisElement(-x.e + 2 * x.p * x.q, -x.q, -x.p, x.n);
}

HeisElement heis_pow(const HeisElement& x, long long c) {
    // Reordering (Q^n P^p)^c collects c(c-1)/2 swaps of P^p past Q^n.
    return HeisElement(c * x.e + x.q * x.p * c * (c - 1), c * x.q, c * x.p, x.n);
}

const SchrodingerPair& schrodinger(long long n) {
    if (n < 1) throw modulus_error("schrodinger: dimension must be positive");
    static std::map<long long, SchrodingerPair> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    SchrodingerPair sp;
    sp.qmat = Eigen::MatrixXcd::Zero(n, n);
    sp.pmat = Eigen::MatrixXcd::Zero(n, n);
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (long long i = 0; i < n; ++i) {
        sp.qmat((Eigen::Index)i, (Eigen::Index)i) =
            std::polar(1.0, two_pi * (double)i / (double)n);
        sp.pmat((Eigen::Index)basic_rep(i - 1, n), (Eigen::Index)i) = 1.0;
    }
    return cache.emplace(n, std::move(sp)).first->second;
}

Eigen::MatrixXcd to_matrix(const HeisElement& x) {
    long long n = x.n;
    const double pi = 3.14159265358979323846;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    // (w^e Q^a P^b)|i> = w^e omega^{a((i-b) mod n)} |i-b>
    for (long long i = 0; i < n; ++i) {
        long long row = basic_rep(i - x.p, n);
        double arg = pi * (double)x.e / (double)n + 2.0 * pi * (double)(x.q * row) / (double)n;
        m((Eigen::Index)row, (Eigen::Index)i) = std::polar(1.0, arg);
    }
    return m;
}

}  // namespace heis
