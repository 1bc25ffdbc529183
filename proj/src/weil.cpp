#include "heis/weil.hpp"

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <complex>

namespace heis {

namespace {

using Cx = std::complex<double>;

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::MatrixXcd phase_canonical(Eigen::MatrixXcd u) {
    double best = u.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < u.rows(); ++i)
        for (Eigen::Index j = 0; j < u.cols(); ++j)
            if (std::abs(u(i, j)) >= best - 1e-9) {
                Cx z = u(i, j);
                return u * (std::abs(z) / z);
            }
    return u;
}

LinearRep extend_by_generators(long long n, const Eigen::MatrixXcd& uq,
                               const Eigen::MatrixXcd& up, double tol,
                               bool check_pairs) {
    LinearRep rep;
    rep.n = n;
    rep.tol = tol;
    rep.elems = enumerate_sp(n);
    rep.mats.resize(rep.elems.size());
    for (std::size_t i = 0; i < rep.elems.size(); ++i) rep.index[rep.elems[i].mat] = i;

    const SpElement hq = sp_hq(n), hp = sp_hp(n);
    std::vector<bool> have(rep.elems.size(), false);
    std::size_t id = rep.index.at(Mat2::identity(n));
    rep.mats[id] = Eigen::MatrixXcd::Identity(n, n);
    have[id] = true;
    std::vector<std::size_t> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : frontier)
            for (const auto& [g, ug] : {std::pair{hq, uq}, std::pair{hp, up}}) {
                std::size_t j = rep.index.at(sp_mul(g, rep.elems[i]).mat);
                if (!have[j]) {
                    rep.mats[j] = ug * rep.mats[i];
                    have[j] = true;
                    next.push_back(j);
                }
            }
        frontier = std::move(next);
    }
    for (bool h : have)
        if (!h) throw lift_error("extend_by_generators: generators do not generate Sp_n");
    if (check_pairs) {
        for (std::size_t i = 0; i < rep.elems.size(); ++i)
            for (std::size_t j = 0; j < rep.elems.size(); ++j) {
                std::size_t k = rep.index.at(sp_mul(rep.elems[i], rep.elems[j]).mat);
                if (max_abs(rep.mats[i] * rep.mats[j] - rep.mats[k]) > tol)
                    throw lift_error("extend_by_generators: not multiplicative");
            }
    }
    return rep;
}

Automorphism sigma(const SpElement& s) { return splitting(s); }

}  // namespace

WeilUnitary solve_intertwiner(const Automorphism& t, double tol) {
    long long n = t.n();
    const auto& sch = schrodinger(n);
    auto [tq, tp] = auto_images(t);
    Eigen::MatrixXcd mq = to_matrix(tq), mp = to_matrix(tp);
    // vec (column-major): M U - U X = (I (x) M - X^T (x) I) vec(U).
    Eigen::Index nn = (Eigen::Index)(n * n);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd a(2 * nn, nn);
    a.topRows(nn) = Eigen::kroneckerProduct(id, mq) -
                    Eigen::kroneckerProduct(sch.qmat.transpose(), id);
    a.bottomRows(nn) = Eigen::kroneckerProduct(id, mp) -
                       Eigen::kroneckerProduct(sch.pmat.transpose(), id);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinV);
    if (svd.singularValues()((Eigen::Index)(nn - 1)) > tol)
        throw intertwiner_error("solve_intertwiner: no nullspace within tolerance");
    Eigen::VectorXcd v = svd.matrixV().col(nn - 1);
    Eigen::MatrixXcd u = Eigen::Map<Eigen::MatrixXcd>(v.data(), n, n);
    u /= std::sqrt((u * u.adjoint())(0, 0).real());
    u = phase_canonical(u);
    if (max_abs(u * sch.qmat * u.adjoint() - mq) > 1e3 * tol ||
        max_abs(u * sch.pmat * u.adjoint() - mp) > 1e3 * tol)
        throw intertwiner_error("solve_intertwiner: residual check failed");
    return {u, tol};
}

WeilUnitary build_v(long long k, double tol) {
    long long m = 2 * k + 1, n = 2 * m;
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(n, n);
    for (long long i = 0; i < n; ++i)
        v((Eigen::Index)(basic_rep(i, 2) * m + basic_rep(-k * i, m)), (Eigen::Index)i) = 1.0;
    const auto& big = schrodinger(n);
    const auto& s2 = schrodinger(2);
    const auto& sm = schrodinger(m);
    Eigen::MatrixXcd pmk = Eigen::MatrixXcd::Identity(m, m);
    for (long long j = 0; j < basic_rep(-k, m); ++j) pmk = sm.pmat * pmk;
    Eigen::MatrixXcd qt = Eigen::kroneckerProduct(s2.qmat, sm.qmat);
    Eigen::MatrixXcd pt = Eigen::kroneckerProduct(s2.pmat, pmk);
    if (max_abs(v * big.qmat * v.adjoint() - qt) > tol ||
        max_abs(v * big.pmat * v.adjoint() - pt) > tol)
        throw lift_error("build_v: conjugation identity failed");
    return {v, tol};
}

std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> u2_generators(U2Variant v) {
    const double s = 1.0 / std::sqrt(2.0);
    const Cx i(0, 1);
    Eigen::Matrix2cd hq_plus, hq_minus, hp_pp, hp_mm, hp_pm, hp_mp;
    hq_plus << s, s * i, -s * i, -s;      // tau_Q = +
    hq_minus << -s, s * i, -s * i, s;     // tau_Q = -
    hp_pp << 0, s * Cx(-1, -1), s * Cx(-1, 1), 0;   // tau_P = +
    hp_mm << 0, s * Cx(1, -1), s * Cx(1, 1), 0;     // tau_P = - (corrected sign)
    hp_pm = hp_mm;
    hp_mp = hp_pp;
    switch (v) {
        case U2Variant::PP: return {hq_plus, hp_pp};
        case U2Variant::MM: return {hq_minus, hp_mm};
        case U2Variant::PM: return {hq_plus, hp_pm};
        case U2Variant::MP: return {hq_minus, hp_mp};
    }
    throw std::logic_error("u2_generators: bad variant");
}

LinearRep u2_table(U2Variant v, double tol) {
    auto [uq, up] = u2_generators(v);
    return extend_by_generators(2, uq, up, tol, true);
}

LinearRep lift_odd(long long n, double tol) {
    if (n % 2 == 0) throw parity_error("lift_odd: n must be odd");
    if (n > 9) throw size_error("lift_odd: n exceeds bound");
    if (n == 1) {
        LinearRep rep;
        rep.n = 1;
        rep.tol = tol;
        rep.elems = enumerate_sp(1);
        rep.mats = {Eigen::MatrixXcd::Identity(1, 1)};
        rep.index[rep.elems[0].mat] = 0;
        return rep;
    }
    Eigen::MatrixXcd u0q = solve_intertwiner(splitting_odd(sp_hq(n)), tol).mat;
    Eigen::MatrixXcd u0p = solve_intertwiner(splitting_odd(sp_hp(n)), tol).mat;
    // A linear lift needs U(h)^n = I; U0^n is scalar by irreducibility, so the
    // admissible phase corrections are the n-th roots of its inverse.
    auto candidates = [&](const Eigen::MatrixXcd& u0) {
        Eigen::MatrixXcd pw = Eigen::MatrixXcd::Identity(n, n);
        for (long long j = 0; j < n; ++j) pw = u0 * pw;
        Cx c = pw(0, 0);
        std::vector<Cx> out;
        Cx base = std::pow(c, -1.0 / (double)n);
        for (long long j = 0; j < n; ++j)
            out.push_back(base * std::polar(1.0, 2.0 * 3.14159265358979323846 *
                                                     (double)j / (double)n));
        return out;
    };
    for (Cx zq : candidates(u0q))
        for (Cx zp : candidates(u0p)) {
            try {
                return extend_by_generators(n, zq * u0q, zp * u0p, tol, true);
            } catch (const lift_error&) {
                continue;
            }
        }
    throw lift_error("lift_odd: no phase correction yields a linear lift");
}

LinearRep lift_even(long long k, double tol) {
    long long m = 2 * k + 1, n = 2 * m;
    if (n > 24) throw size_error("lift_even: N exceeds bound");
    if (k == 0) return u2_table(U2Variant::MM, tol);
    LinearRep u2 = u2_table(k % 2 == 1 ? U2Variant::PP : U2Variant::MM, tol);
    LinearRep um = lift_odd(m, tol);
    Eigen::MatrixXcd v = build_v(k, tol).mat;
    LinearRep rep;
    rep.n = n;
    rep.tol = tol;
    rep.elems = enumerate_sp(n);
    rep.mats.resize(rep.elems.size());
    for (std::size_t i = 0; i < rep.elems.size(); ++i) {
        rep.index[rep.elems[i].mat] = i;
        auto [l2, lm] = lambda_split(rep.elems[i]);
        rep.mats[i] = v.adjoint() *
                      Eigen::kroneckerProduct(u2.at(l2), um.at(lm)).eval() * v;
    }
    return rep;
}

VerifyReport verify_linear_rep(const LinearRep& rep) {
    VerifyReport out;
    long long n = rep.n;
    const auto& sch = schrodinger(n);
    auto record = [&](double dev, const std::string& where) {
        out.max_deviation = std::max(out.max_deviation, dev);
        if (dev > rep.tol && out.pass) {
            out.pass = false;
            out.detail = where;
        }
    };
    auto name = [](const SpElement& s) {
        return "[" + std::to_string(s.mat.a) + "," + std::to_string(s.mat.b) + "," +
               std::to_string(s.mat.c) + "," + std::to_string(s.mat.d) + "]";
    };
    for (std::size_t i = 0; i < rep.elems.size(); ++i) {
        const auto& u = rep.mats[i];
        record(max_abs(u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)),
               "unitarity at " + name(rep.elems[i]));
        if (n > 1) {
            auto [tq, tp] = auto_images(sigma(rep.elems[i]));
            record(max_abs(u * sch.qmat * u.adjoint() - to_matrix(tq)),
                   "intertwining (Q) at " + name(rep.elems[i]));
            record(max_abs(u * sch.pmat * u.adjoint() - to_matrix(tp)),
                   "intertwining (P) at " + name(rep.elems[i]));
        }
    }
    for (std::size_t i = 0; i < rep.elems.size(); ++i)
        for (std::size_t j = 0; j < rep.elems.size(); ++j) {
            std::size_t k = rep.index.at(sp_mul(rep.elems[i], rep.elems[j]).mat);
            record(max_abs(rep.mats[i] * rep.mats[j] - rep.mats[k]),
                   "multiplicativity at " + name(rep.elems[i]) + "*" + name(rep.elems[j]));
            ++out.pairs_checked;
        }
    return out;
}

}  // namespace heis
