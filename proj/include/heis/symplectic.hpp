#pragma once

#include <array>
#include <tuple>
#include <vector>

#include "heis/residue.hpp"

namespace heis {

struct membership_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct size_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// 2x2 matrix over Z_n, rows (a b; c d), entries stored as basic representatives.
struct Mat2 {
    long long a, b, c, d;
    long long n;

    Mat2() : a(1), b(0), c(0), d(1), n(1) {}
    Mat2(long long a_, long long b_, long long c_, long long d_, long long n_)
        : a(basic_rep(a_, n_)), b(basic_rep(b_, n_)),
          c(basic_rep(c_, n_)), d(basic_rep(d_, n_)), n(n_) {}

    static Mat2 identity(long long n) { return Mat2(1, 0, 0, 1, n); }

    std::tuple<long long, long long, long long, long long, long long> key() const {
        return {a, b, c, d, n};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) { return x.key() == y.key(); }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
    friend bool operator<(const Mat2& x, const Mat2& y) { return x.key() < y.key(); }
};

Mat2 mat_mul(const Mat2& x, const Mat2& y);
Residue mat_det(const Mat2& x);

bool is_sp(const Mat2& x);
// x has modulus 2*base_n; det must be 1 or 1+base_n mod 2*base_n.
bool is_sp_tilde(const Mat2& x, long long base_n);

// Element of Sp_n = SL(2, Z_n); the constructor enforces det = 1.
struct SpElement {
    Mat2 mat;

    SpElement() : mat(Mat2::identity(1)) {}
    explicit SpElement(const Mat2& m) : mat(m) {
        if (!is_sp(m)) throw membership_error("SpElement: determinant is not 1");
    }
    static SpElement identity(long long n) { return SpElement(Mat2::identity(n)); }
    long long n() const { return mat.n; }

    friend bool operator==(const SpElement& x, const SpElement& y) { return x.mat == y.mat; }
    friend bool operator!=(const SpElement& x, const SpElement& y) { return !(x == y); }
    friend bool operator<(const SpElement& x, const SpElement& y) { return x.mat < y.mat; }
};

// Element of S~p_{2N}: matrix mod 2N with det = 1 or 1+N.
struct SpTildeElement {
    Mat2 mat;      // modulus 2*base_n
    long long base_n;

    SpTildeElement(const Mat2& m, long long base_n_) : mat(m), base_n(base_n_) {
        if (m.n != 2 * base_n)
            throw modulus_error("SpTildeElement: matrix modulus must be 2N");
        if (!is_sp_tilde(m, base_n))
            throw membership_error("SpTildeElement: determinant is neither 1 nor 1+N");
    }
    friend bool operator==(const SpTildeElement& x, const SpTildeElement& y) {
        return x.mat == y.mat && x.base_n == y.base_n;
    }
};

SpElement sp_mul(const SpElement& x, const SpElement& y);
SpElement mat_inv(const SpElement& x);

inline SpElement sp_hq(long long n) { return SpElement(Mat2(1, 1, 0, 1, n)); }
inline SpElement sp_hp(long long n) { return SpElement(Mat2(1, 0, 1, 1, n)); }
inline SpElement sp_hj(long long n) { return SpElement(Mat2(0, 1, -1, 0, n)); }

// All of Sp_n in lexicographic (a,b,c,d) order.
std::vector<SpElement> enumerate_sp(long long n, long long bound = 24);

// Closure of {h_Q, h_P} under left multiplication; equals enumerate_sp.
std::vector<SpElement> generate_sp(long long n);

// Staggered factor: ((det - 1)/N) mod 2.
long long stg(const SpTildeElement& s);

// phi: Sp_2 -> S~p_4, S + 2*DeltaS with the linear DeltaS of the parity table.
SpTildeElement sp2_embed(const SpElement& s);

std::pair<SpElement, SpElement> crt_split_sp(const SpElement& s);
SpElement crt_compose_sp(const SpElement& s2, const SpElement& sodd);
SpTildeElement crt_compose_sp_tilde(const SpTildeElement& t4, const SpElement& sodd,
                                    long long base_n);

// Phi: Sp_N -> S~p_{2N} for N = 2(2k+1), the closed form of Corollary 1.
SpTildeElement phi_big(const SpElement& s);

// lambda = (lambda_2, lambda_{2k+1}): twisted factor isomorphism for N = 2(2k+1).
std::pair<SpElement, SpElement> lambda_split(const SpElement& s);

// A splitting Sp_2 -> S~p_4 as images aligned with enumerate_sp(2) order.
using Sp2Splitting = std::array<Mat2, 6>;
std::vector<Sp2Splitting> find_sp2_splittings();

}  // namespace heis
