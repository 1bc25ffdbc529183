#pragma once

#include <map>
#include <string>
#include <vector>

#include "heis/automorphisms.hpp"

namespace heis {

struct lift_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct intertwiner_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeilUnitary {
    Eigen::MatrixXcd mat;
    double tol = 1e-9;
};

// A full table S -> U(S) over Sp_n, with U(S1)U(S2) = U(S1 S2) within tol.
struct LinearRep {
    long long n = 1;
    double tol = 1e-9;
    std::vector<SpElement> elems;          // enumerate_sp order
    std::vector<Eigen::MatrixXcd> mats;    // aligned with elems
    std::map<Mat2, std::size_t> index;

    const Eigen::MatrixXcd& at(const SpElement& s) const {
        auto it = index.find(s.mat);
        if (it == index.end()) throw membership_error("LinearRep: unknown element");
        return mats[it->second];
    }
};

struct VerifyReport {
    bool pass = true;
    double max_deviation = 0.0;
    std::size_t pairs_checked = 0;
    std::string detail;  // first failure location, empty when pass
};

// U with U Q U^H = T(Q), U P U^H = T(P); unique up to phase by irreducibility,
// canonicalized so the first entry of largest modulus is positive real.
WeilUnitary solve_intertwiner(const Automorphism& t, double tol = 1e-9);

// The CRT basis change |i> -> |i mod 2> (x) |(-k i) mod (2k+1)>, verified
// against V (Q,P) V^H = (Q_2 (x) Q_{2k+1}, P_2 (x) P_{2k+1}^{-k}).
WeilUnitary build_v(long long k, double tol = 1e-9);

enum class U2Variant { PP, MM, PM, MP };

// Generator matrices of the four Sp_2 splittings u2^{tq tp}. Note the
// published (--) h_P matrix equals -(++ h_P) and reproduces neither its own
// adjoint-action label nor a linear rep; the corrected matrix (the unique one
// with t2^{--} adjoint action) is used.
std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> u2_generators(U2Variant v);

// Extension of the generator pair to all 6 elements of Sp_2.
LinearRep u2_table(U2Variant v, double tol = 1e-9);

// Self-contained linear lift intertwining the odd splitting: phase-corrected
// generator intertwiners + Cayley-graph BFS + all-pairs acceptance.
LinearRep lift_odd(long long n, double tol = 1e-9);

// N = 2(2k+1): table(S) = V^H (u2(lambda_2 S) (x) u_{2k+1}(lambda_{2k+1} S)) V,
// u2 variant ++ for odd k and -- for even k.
LinearRep lift_even(long long k, double tol = 1e-9);

// Unitarity, intertwining against the splitting Sigma, all-pairs
// multiplicativity; reports the max deviation.
VerifyReport verify_linear_rep(const LinearRep& rep);

}  // namespace heis
