#include "heis/automorphisms.hpp"

namespace heis {

namespace {

long long par(long long n, long long u, long long v) {
    return (n % 2 == 0 && basic_rep(u, n) % 2 == 1 && basic_rep(v, n) % 2 == 1) ? 1 : 0;
}

CocycleValue kernel_signs(const KernelElement& k) {
    long long n = k.n;
    if (n % 2 != 0) throw parity_error("kernel_signs: N must be even");
    auto sign = [&](long long xi) {
        if (xi == 0) return +1;
        if (xi == n / 2) return -1;
        throw membership_error("kernel_signs: value is not 2-torsion");
    };
    return {sign(k.xi_q), sign(k.xi_p), false};
}

}  // namespace

std::pair<HeisElement, HeisElement> auto_images(const Automorphism& t) {
    long long n = t.n();
    const Mat2& m = t.s.mat;
    HeisElement tq(par(n, m.d, m.b) - 2 * t.xi_q, m.d, -m.b, n);
    HeisElement tp(par(n, m.c, m.a) - 2 * t.xi_p, -m.c, m.a, n);
    return {tq, tp};
}

Automorphism auto_encode(const HeisElement& tq, const HeisElement& tp) {
    long long n = tq.n;
    long long delta = tq.q, beta = basic_rep(-tq.p, n);
    long long gamma = basic_rep(-tp.q, n), alpha = tp.p;
    SpElement s(Mat2(alpha, beta, gamma, delta, n));
    long long dq = basic_rep(par(n, delta, beta) - tq.e, 2 * n);
    long long dp = basic_rep(par(n, gamma, alpha) - tp.e, 2 * n);
    if (dq % 2 != 0 || dp % 2 != 0)
        throw membership_error("auto_encode: phase parity violates the general form");
    return Automorphism(s, dq / 2, dp / 2);
}

HeisElement apply(const Automorphism& t, const HeisElement& x) {
    if (t.n() != x.n) throw modulus_error("apply: modulus mismatch");
    auto [tq, tp] = auto_images(t);
    HeisElement r = heis_mul(heis_pow(tq, x.q), heis_pow(tp, x.p));
    return HeisElement(r.e + x.e, r.q, r.p, x.n);
}

Automorphism compose(const Automorphism& t1, const Automorphism& t2) {
    if (t1.n() != t2.n()) throw modulus_error("compose: modulus mismatch");
    auto [tq, tp] = auto_images(t2);
    return auto_encode(apply(t1, tq), apply(t1, tp));
}

Automorphism auto_inverse(const Automorphism& t) {
    Automorphism cand(mat_inv(t.s), 0, 0);
    Automorphism k = compose(cand, t);  // kernel element
    Automorphism corr(SpElement::identity(t.n()), -k.xi_q, -k.xi_p);
    return compose(corr, cand);
}

SpElement project(const Automorphism& t) { return t.s; }

Automorphism splitting_odd(const SpElement& s) {
    long long n = s.n();
    if (n % 2 == 0) throw parity_error("splitting_odd: N must be odd");
    const Mat2& m = s.mat;
    HeisElement tq(m.d * m.b * (n - 1), m.d, -m.b, n);
    HeisElement tp(m.c * m.a * (n - 1), -m.c, m.a, n);
    return auto_encode(tq, tp);
}

Automorphism splitting_even(const SpElement& s) {
    long long n = s.n();
    if (n % 4 != 2) throw parity_error("splitting_even: N must be 2 mod 4");
    const Mat2& m = s.mat;
    long long ha = hat(m.a, n), hb = hat(m.b, n), hc = hat(m.c, n), hd = hat(m.d, n);
    SpTildeElement shat(Mat2(ha, hb, hc, hd, 2 * n), n);
    long long g = stg(shat);
    HeisElement tq(-hd * hb + hc * ha * n + g * n, hd, -hb, n);
    HeisElement tp(-hc * ha + hd * hb * n + g * n, -hc, ha, n);
    return auto_encode(tq, tp);
}

Automorphism splitting(const SpElement& s) {
    long long n = s.n();
    if (n % 2 == 1) return splitting_odd(s);
    if (n % 4 == 2) return splitting_even(s);
    throw obstruction_error("no splitting exists when 4 divides N");
}

Automorphism tilde_t(const SpTildeElement& st) {
    long long n = st.base_n;
    const Mat2& m = st.mat;
    long long g = stg(st);
    HeisElement tq(-m.d * m.b + g * n, m.d, -m.b, n);
    HeisElement tp(-m.c * m.a + g * n, -m.c, m.a, n);
    return auto_encode(tq, tp);
}

KernelElement sp_act(const SpElement& g, const KernelElement& xi) {
    if (g.n() != xi.n) throw modulus_error("sp_act: modulus mismatch");
    const Mat2& m = g.mat;
    return KernelElement(m.a * xi.xi_q + m.b * xi.xi_p,
                         m.c * xi.xi_q + m.d * xi.xi_p, xi.n);
}

std::pair<KernelElement, SpElement> semidirect_compose(
    const std::pair<KernelElement, SpElement>& p1,
    const std::pair<KernelElement, SpElement>& p2) {
    long long n = p1.second.n();
    if (n % 4 == 0) throw obstruction_error("semidirect_compose: 4 | N, no splitting");
    KernelElement moved = sp_act(p1.second, p2.first);
    return {KernelElement(p1.first.xi_q + moved.xi_q, p1.first.xi_p + moved.xi_p, n),
            sp_mul(p1.second, p2.second)};
}

Automorphism simple_section(const SpElement& s) {
    long long n = s.n();
    const Mat2& m = s.mat;
    return tilde_t(SpTildeElement(Mat2(m.a, m.b, m.c, m.d, 2 * n), n));
}

CocycleValue simple_section_cocycle(const SpElement& s1, const SpElement& s2) {
    long long n = s1.n();
    if (s2.n() != n) throw modulus_error("simple_section_cocycle: modulus mismatch");
    if (n % 2 == 1) return {+1, +1, true};
    // Integer product of basic representatives (not reduced).
    const Mat2& x = s1.mat;
    const Mat2& y = s2.mat;
    long long ap = x.a * y.a + x.b * y.c, bp = x.a * y.b + x.b * y.d;
    long long cp = x.c * y.a + x.d * y.c, dp = x.c * y.b + x.d * y.d;
    auto angle = [&](long long v) { return (basic_rep(v, 2 * n) - basic_rep(v, n)) / n; };
    auto br = [&](long long u, long long v) {
        return basic_rep(angle(u) * basic_rep(v, n) + basic_rep(u, n) * angle(v), 2);
    };
    long long eq = (br(ap, bp) + br(ap, dp) + br(bp, cp)) % 2;
    long long ep = (br(cp, dp) + br(ap, dp) + br(bp, cp)) % 2;
    return {eq ? -1 : +1, ep ? -1 : +1, false};
}

CocycleValue section_defect(const SpElement& s1, const SpElement& s2) {
    long long n = s1.n();
    if (n % 2 == 1) return {+1, +1, true};
    Automorphism d = compose(compose(simple_section(s1), simple_section(s2)),
                             auto_inverse(simple_section(sp_mul(s1, s2))));
    if (d.s != SpElement::identity(n))
        throw membership_error("section_defect: defect is not a kernel element");
    return kernel_signs(KernelElement(d.xi_q, d.xi_p, n));
}

ObstructionReport obstruction_check(long long n) {
    if (n % 2 != 0) throw parity_error("obstruction_check: N must be even");
    // Relation 1 (T_{h_Q}^N = I): omega_N^{-b N(N-1)/2} = -1,
    // i.e. b * N(N-1)/2 = N/2 mod N.
    // Relation 2 (T_{h_Q} T_{h_J}^2 = T_{h_J}^2 T_{h_Q} on P): omega_N^{-2b} = 1,
    // i.e. 2b = 0 mod N.
    long long half_sum = n * (n - 1) / 2;
    ObstructionReport rep{n, false, {}};
    for (long long b = 0; b < n; ++b) {
        bool r1 = basic_rep(b * half_sum, n) == n / 2;
        bool r2 = basic_rep(2 * b, n) == 0;
        if (r1 && r2) rep.b_values.push_back(b);
    }
    rep.satisfiable = !rep.b_values.empty();
    return rep;
}

std::vector<KernelElement> coboundary_from_splitting(long long n) {
    if (n % 4 == 0) throw obstruction_error("coboundary_from_splitting: 4 | N");
    std::vector<KernelElement> out;
    for (const auto& s : enumerate_sp(n)) {
        Automorphism b = compose(simple_section(s), auto_inverse(splitting(s)));
        if (b.s != SpElement::identity(n))
            throw membership_error("coboundary_from_splitting: b(S) not in the kernel");
        out.emplace_back(b.xi_q, b.xi_p, n);
    }
    return out;
}

}  // namespace heis
