#pragma once

#include <utility>
#include <vector>

#include "heis/heisenberg.hpp"
#include "heis/symplectic.hpp"

namespace heis {

struct obstruction_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Canonical encoding (S, xi_Q, xi_P) of T in Tp_N:
//   T(Q) = w^{par(delta,beta) - 2 xi_Q} Q^{delta} P^{-beta}
//   T(P) = w^{par(gamma,alpha) - 2 xi_P} Q^{-gamma} P^{alpha}
// where par(u,v) = 1 iff N is even and u, v are both odd (the implicit
// omega_{2N} prefactor of the general form).
struct Automorphism {
    SpElement s;
    long long xi_q;
    long long xi_p;

    Automorphism() : s(), xi_q(0), xi_p(0) {}
    Automorphism(const SpElement& s_, long long xi_q_, long long xi_p_)
        : s(s_), xi_q(basic_rep(xi_q_, s_.n())), xi_p(basic_rep(xi_p_, s_.n())) {}

    long long n() const { return s.n(); }
    static Automorphism identity(long long n) {
        return Automorphism(SpElement::identity(n), 0, 0);
    }

    friend bool operator==(const Automorphism& x, const Automorphism& y) {
        return x.s == y.s && x.xi_q == y.xi_q && x.xi_p == y.xi_p;
    }
    friend bool operator!=(const Automorphism& x, const Automorphism& y) {
        return !(x == y);
    }
};

struct KernelElement {
    long long xi_q;
    long long xi_p;
    long long n;

    KernelElement(long long xi_q_, long long xi_p_, long long n_)
        : xi_q(basic_rep(xi_q_, n_)), xi_p(basic_rep(xi_p_, n_)), n(n_) {}
    friend bool operator==(const KernelElement& x, const KernelElement& y) {
        return x.xi_q == y.xi_q && x.xi_p == y.xi_p && x.n == y.n;
    }
};

inline Automorphism kernel_auto(const KernelElement& k) {
    return Automorphism(SpElement::identity(k.n), k.xi_q, k.xi_p);
}

// Values of the simple-section 2-cocycle: the 2-torsion kernel elements
// T_{c1,c2}(Q,P) = (c1*Q, c2*P).
struct CocycleValue {
    int c1;
    int c2;
    bool trivial_odd = false;  // set when N is odd and the cocycle is trivially 1

    friend bool operator==(const CocycleValue& x, const CocycleValue& y) {
        return x.c1 == y.c1 && x.c2 == y.c2;
    }
};

// Images (T(Q), T(P)) in normal form.
std::pair<HeisElement, HeisElement> auto_images(const Automorphism& t);
// Canonical encoding from images; inverse of auto_images.
Automorphism auto_encode(const HeisElement& tq, const HeisElement& tp);

HeisElement apply(const Automorphism& t, const HeisElement& x);
Automorphism compose(const Automorphism& t1, const Automorphism& t2);
Automorphism auto_inverse(const Automorphism& t);
SpElement project(const Automorphism& t);

Automorphism splitting_odd(const SpElement& s);
Automorphism splitting_even(const SpElement& s);
// Dispatches on N mod 4; throws obstruction_error when 4 | N.
Automorphism splitting(const SpElement& s);

Automorphism tilde_t(const SpTildeElement& st);

// Semidirect law (a,g)(a',g') = (a + g.a', g g') with the conjugation action
// g.xi = S xi (column vector); (a,g) -> kernel(a) o Sigma(g) is then an
// isomorphism onto Tp_N.
KernelElement sp_act(const SpElement& g, const KernelElement& xi);
std::pair<KernelElement, SpElement> semidirect_compose(
    const std::pair<KernelElement, SpElement>& p1,
    const std::pair<KernelElement, SpElement>& p2);

// The simple (non-homomorphic) section S -> T~_{[S_(N)]_{2N}}.
Automorphism simple_section(const SpElement& s);
// Closed-form 2-cocycle of the simple section, left convention:
// T_{S1} T_{S2} = C(S1,S2) T_{S1 S2}.
CocycleValue simple_section_cocycle(const SpElement& s1, const SpElement& s2);
// Defect computed directly by composing simple-section automorphisms.
CocycleValue section_defect(const SpElement& s1, const SpElement& s2);

struct ObstructionReport {
    long long n;
    bool satisfiable;
    std::vector<long long> b_values;  // solutions of both relations, if any
};

ObstructionReport obstruction_check(long long n);

// b(S) = simple_section(S) o Sigma(S)^{-1}, indexed like enumerate_sp(n).
std::vector<KernelElement> coboundary_from_splitting(long long n);

}  // namespace heis
