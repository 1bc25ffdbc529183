#include "heis/residue.hpp"

#include <numeric>
#include <utility>

namespace heis {

namespace {

// Extended Euclid: returns (g, x, y) with x*a + y*b = g = gcd(a, b).
struct Egcd {
    long long g, x, y;
};

Egcd egcd(long long a, long long b) {
    if (b == 0) return {a, 1, 0};
    Egcd e = egcd(b, a % b);
    return {e.g, e.y, e.x - (a / b) * e.y};
}

}  // namespace

BezoutPair bezout(long long d1, long long d2) {
    if (d1 <= 0 || d2 <= 0) throw modulus_error("bezout: moduli must be positive");
    if (std::gcd(d1, d2) != 1) throw coprime_error("bezout: moduli are not coprime");

    // Pinned choices; downstream sign conventions depend on them.
    if (d1 == 2 && d2 % 2 == 1) return {1, (d2 - 1) / 2, d1, d2};
    if (d1 == 4 && d2 % 4 == 3) return {-1, -(d2 + 1) / 4, d1, d2};
    if (d1 == 4 && d2 % 4 == 1) return {1, (d2 - 1) / 4, d1, d2};

    // Generic: mu1*d2 = 1 mod d1, normalized to 0 <= mu1 < d1.
    Egcd e = egcd(d2, d1);
    long long mu1 = basic_rep(e.x, d1);
    long long mu2 = (mu1 * d2 - 1) / d1;
    return {mu1, mu2, d1, d2};
}

std::pair<Residue, Residue> crt_decompose(const Residue& r, long long d1, long long d2) {
    if (d1 <= 0 || d2 <= 0) throw modulus_error("crt_decompose: moduli must be positive");
    if (std::gcd(d1, d2) != 1) throw coprime_error("crt_decompose: moduli are not coprime");
    if (r.modulus() != d1 * d2)
        throw modulus_error("crt_decompose: residue modulus is not d1*d2");
    return {Residue(r.value(), d1), Residue(r.value(), d2)};
}

Residue crt_compose(const Residue& a, const Residue& b) {
    long long d1 = a.modulus(), d2 = b.modulus();
    if (std::gcd(d1, d2) != 1) throw coprime_error("crt_compose: moduli are not coprime");
    BezoutPair bz = bezout(d1, d2);
    return Residue(a.value() * bz.mu1 * d2 - b.value() * bz.mu2 * d1, d1 * d2);
}

}  // namespace heis
