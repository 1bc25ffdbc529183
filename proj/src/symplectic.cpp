#include "heis/symplectic.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace heis {

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    if (x.n != y.n) throw modulus_error("mat_mul: modulus mismatch");
    return Mat2(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d, x.n);
}

Residue mat_det(const Mat2& x) {
    return Residue(x.a * x.d - x.b * x.c, x.n);
}

bool is_sp(const Mat2& x) {
    return mat_det(x).value() == basic_rep(1, x.n);
}

bool is_sp_tilde(const Mat2& x, long long base_n) {
    if (x.n != 2 * base_n) return false;
    long long det = mat_det(x).value();
    return det == basic_rep(1, x.n) || det == basic_rep(1 + base_n, x.n);
}

SpElement sp_mul(const SpElement& x, const SpElement& y) {
    return SpElement(mat_mul(x.mat, y.mat));
}

SpElement mat_inv(const SpElement& x) {
    const Mat2& m = x.mat;
    return SpElement(Mat2(m.d, -m.b, -m.c, m.a, m.n));
}

std::vector<SpElement> enumerate_sp(long long n, long long bound) {
    if (n < 1) throw modulus_error("enumerate_sp: modulus must be positive");
    if (n > bound) throw size_error("enumerate_sp: n exceeds bound");
    std::vector<SpElement> out;
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            for (long long c = 0; c < n; ++c)
                for (long long d = 0; d < n; ++d) {
                    Mat2 m(a, b, c, d, n);
                    if (is_sp(m)) out.push_back(SpElement(m));
                }
    return out;
}

std::vector<SpElement> generate_sp(long long n) {
    std::set<Mat2> seen;
    std::vector<SpElement> frontier{SpElement::identity(n)};
    seen.insert(frontier[0].mat);
    const SpElement gens[2] = {sp_hq(n), sp_hp(n)};
    while (!frontier.empty()) {
        std::vector<SpElement> next;
        for (const auto& s : frontier)
            for (const auto& g : gens) {
                SpElement t = sp_mul(g, s);
                if (seen.insert(t.mat).second) next.push_back(t);
            }
        frontier = std::move(next);
    }
    std::vector<SpElement> out;
    out.reserve(seen.size());
    for (const auto& m : seen) out.push_back(SpElement(m));
    return out;
}

long long stg(const SpTildeElement& s) {
    long long det = mat_det(s.mat).value();
    return basic_rep((det - 1) / s.base_n, 2);
}

SpTildeElement sp2_embed(const SpElement& s) {
    if (s.n() != 2) throw modulus_error("sp2_embed: input must be mod 2");
    const Mat2& m = s.mat;
    // Linear DeltaS; equals the quadratic form on Sp_2 by the parity table.
    long long da = m.a + m.c - 1, db = 1 - m.d;
    long long dc = 1 - m.a, dd = m.d + m.b - 1;
    return SpTildeElement(Mat2(m.a + 2 * da, m.b + 2 * db, m.c + 2 * dc, m.d + 2 * dd, 4), 2);
}

namespace {

long long odd_part_check(long long n) {
    if (n % 4 != 2) throw modulus_error("expected N = 2(2k+1)");
    return n / 2;
}

}  // namespace

std::pair<SpElement, SpElement> crt_split_sp(const SpElement& s) {
    long long m = odd_part_check(s.n());
    const Mat2& x = s.mat;
    return {SpElement(Mat2(x.a, x.b, x.c, x.d, 2)),
            SpElement(Mat2(x.a, x.b, x.c, x.d, m))};
}

SpElement crt_compose_sp(const SpElement& s2, const SpElement& sodd) {
    if (s2.n() != 2) throw modulus_error("crt_compose_sp: first factor must be mod 2");
    long long m = sodd.n();
    auto entry = [&](long long u, long long v) {
        return crt_compose(Residue(u, 2), Residue(v, m)).value();
    };
    return SpElement(Mat2(entry(s2.mat.a, sodd.mat.a), entry(s2.mat.b, sodd.mat.b),
                          entry(s2.mat.c, sodd.mat.c), entry(s2.mat.d, sodd.mat.d),
                          2 * m));
}

SpTildeElement crt_compose_sp_tilde(const SpTildeElement& t4, const SpElement& sodd,
                                    long long base_n) {
    if (t4.base_n != 2) throw modulus_error("crt_compose_sp_tilde: first factor must be mod 4");
    long long m = sodd.n();
    if (base_n != 2 * m) throw modulus_error("crt_compose_sp_tilde: factor shape mismatch");
    auto entry = [&](long long u, long long v) {
        return crt_compose(Residue(u, 4), Residue(v, m)).value();
    };
    return SpTildeElement(Mat2(entry(t4.mat.a, sodd.mat.a), entry(t4.mat.b, sodd.mat.b),
                               entry(t4.mat.c, sodd.mat.c), entry(t4.mat.d, sodd.mat.d),
                               2 * base_n),
                          base_n);
}

SpTildeElement phi_big(const SpElement& s) {
    long long n = s.n();
    odd_part_check(n);
    const Mat2& m = s.mat;
    long long ha = hat(m.a, n), hb = hat(m.b, n), hc = hat(m.c, n), hd = hat(m.d, n);
    return SpTildeElement(Mat2(ha + (ha - 1 + hc) * n, hb + (1 - hd) * n,
                               hc + (1 - ha) * n, hd + (hd - 1 + hb) * n, 2 * n),
                          n);
}

std::pair<SpElement, SpElement> lambda_split(const SpElement& s) {
    long long m = odd_part_check(s.n());
    long long k = (m - 1) / 2;
    const Mat2& x = s.mat;
    return {SpElement(Mat2(x.a, x.b, x.c, x.d, 2)),
            SpElement(Mat2(basic_rep(x.a, m), -k * basic_rep(x.b, m),
                           2 * basic_rep(x.c, m), basic_rep(x.d, m), m))};
}

std::vector<Sp2Splitting> find_sp2_splittings() {
    const auto g2 = enumerate_sp(2);
    std::map<Mat2, int> index;
    for (int i = 0; i < (int)g2.size(); ++i) index[g2[i].mat] = i;
    const Mat2 hq2 = sp_hq(2).mat, hp2 = sp_hp(2).mat;

    // All lifts of a mod-2 matrix to S~p_4 (each entry has two choices).
    auto lifts = [&](const Mat2& m) {
        std::vector<Mat2> out;
        for (int i = 0; i < 16; ++i) {
            Mat2 c(m.a + 2 * ((i >> 0) & 1), m.b + 2 * ((i >> 1) & 1),
                   m.c + 2 * ((i >> 2) & 1), m.d + 2 * ((i >> 3) & 1), 4);
            if (is_sp_tilde(c, 2)) out.push_back(c);
        }
        return out;
    };

    std::vector<Sp2Splitting> found;
    for (const Mat2& mq : lifts(hq2))
        for (const Mat2& mp : lifts(hp2)) {
            // Assign values along the Cayley graph from the identity.
            Sp2Splitting val;
            std::array<bool, 6> have{};
            val[index[Mat2::identity(2)]] = Mat2::identity(4);
            have[index[Mat2::identity(2)]] = true;
            bool grew = true, consistent = true;
            while (grew && consistent) {
                grew = false;
                for (int i = 0; i < 6 && consistent; ++i) {
                    if (!have[i]) continue;
                    for (const auto& [g, mg] : {std::pair{hq2, mq}, std::pair{hp2, mp}}) {
                        int j = index[mat_mul(g, g2[i].mat)];
                        Mat2 w = mat_mul(mg, val[i]);
                        if (!have[j]) {
                            val[j] = w;
                            have[j] = true;
                            grew = true;
                        } else if (val[j] != w) {
                            consistent = false;
                            break;
                        }
                    }
                }
            }
            if (!consistent) continue;
            // Section and homomorphism checks over all pairs.
            bool ok = true;
            for (int i = 0; i < 6 && ok; ++i) {
                Mat2 red(val[i].a, val[i].b, val[i].c, val[i].d, 2);
                if (red != g2[i].mat) ok = false;
                for (int j = 0; j < 6 && ok; ++j)
                    if (mat_mul(val[i], val[j]) !=
                        val[index[mat_mul(g2[i].mat, g2[j].mat)]])
                        ok = false;
            }
            if (ok) found.push_back(val);
        }
    return found;
}

}  // namespace heis
