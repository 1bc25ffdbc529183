#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <thread>

#include "heis/automorphisms.hpp"
#include "heis/weil.hpp"

using json = nlohmann::json;
using namespace heis;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitObstruction = 3;

struct Options {
    double tol = 1e-9;
    std::string format = "json";
    long long seed = 0;
    long long max_pairs = 0;  // 0 = default caps
};

unsigned worker_count() {
    if (const char* env = std::getenv("HEIS_THREADS")) {
        long v = std::atol(env);
        if (v > 0) return (unsigned)v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Partition [0, total) across workers; returns true iff every check passed.
bool parallel_all(std::size_t total, const std::function<bool(std::size_t)>& check) {
    unsigned workers = std::min<std::size_t>(worker_count(), total ? total : 1);
    std::atomic<bool> ok{true};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < total && ok.load(); i += workers)
                if (!check(i)) ok.store(false);
        });
    for (auto& t : pool) t.join();
    return ok.load();
}

Mat2 parse_mat(const std::string& str, long long n) {
    long long e[4];
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t used = 0;
        e[i] = std::stoll(str.substr(pos), &used);
        pos += used;
        if (i < 3) {
            if (pos >= str.size() || str[pos] != ',')
                throw std::invalid_argument("expected a,b,c,d");
            ++pos;
        }
    }
    if (pos != str.size()) throw std::invalid_argument("trailing characters in matrix");
    return Mat2(e[0], e[1], e[2], e[3], n);
}

json mat_json(const Mat2& m) { return json::array({m.a, m.b, m.c, m.d}); }

json complex_matrix_json(const Eigen::MatrixXcd& u) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < u.cols(); ++j)
            row.push_back(json::array({u(i, j).real(), u(i, j).imag()}));
        rows.push_back(row);
    }
    return rows;
}

void emit(const Options& opt, long long n, const std::string& command, json result,
          json max_deviation, json pairs_checked) {
    json out = {{"n", n},
                {"command", command},
                {"result", std::move(result)},
                {"max_deviation", std::move(max_deviation)},
                {"pairs_checked", std::move(pairs_checked)}};
    if (opt.format == "json") {
        std::cout << out.dump() << "\n";
    } else {
        std::cout << command << " (n=" << n << "): " << out["result"].dump();
        if (!out["max_deviation"].is_null())
            std::cout << "  max_deviation=" << out["max_deviation"].dump();
        if (!out["pairs_checked"].is_null())
            std::cout << "  pairs_checked=" << out["pairs_checked"].dump();
        std::cout << "\n";
    }
}

json auto_json(const Automorphism& t) {
    auto [tq, tp] = auto_images(t);
    return {{"matrix", mat_json(t.s.mat)},
            {"xi_q", t.xi_q},
            {"xi_p", t.xi_p},
            {"tq", {{"phase_exp", tq.e}, {"q", tq.q}, {"p", tq.p}}},
            {"tp", {{"phase_exp", tp.e}, {"q", tp.q}, {"p", tp.p}}}};
}

int verify_splitting(const Options& opt, long long n) {
    auto g = enumerate_sp(n);
    std::vector<Automorphism> sig;
    sig.reserve(g.size());
    for (const auto& s : g) sig.push_back(splitting(s));
    std::map<Mat2, std::size_t> index;
    for (std::size_t i = 0; i < g.size(); ++i) index[g[i].mat] = i;
    std::size_t total = g.size() * g.size();
    bool ok = parallel_all(total, [&](std::size_t i) {
        std::size_t a = i / g.size(), b = i % g.size();
        if (project(sig[a]) != g[a]) return false;
        return compose(sig[a], sig[b]) == sig[index.at(sp_mul(g[a], g[b]).mat)];
    });
    emit(opt, n, "verify splitting", ok ? "pass" : "fail", nullptr, total);
    return ok ? kExitPass : kExitVerifyFail;
}

int verify_cocycle(const Options& opt, long long n) {
    auto g = enumerate_sp(n);
    std::map<Mat2, std::size_t> index;
    for (std::size_t i = 0; i < g.size(); ++i) index[g[i].mat] = i;
    std::size_t m = g.size();
    std::size_t pairs = m * m;
    bool ok = parallel_all(pairs, [&](std::size_t i) {
        const auto& s1 = g[i / m];
        const auto& s2 = g[i % m];
        return simple_section_cocycle(s1, s2) == section_defect(s1, s2);
    });
    std::size_t triples = 0;
    bool triples_checked = n <= 6 || opt.max_pairs > 0;
    if (triples_checked) {
        triples = m * m * m;
        ok = ok && parallel_all(triples, [&](std::size_t i) {
                 const auto& s1 = g[i / (m * m)];
                 const auto& s2 = g[(i / m) % m];
                 const auto& s3 = g[i % m];
                 auto f12 = simple_section_cocycle(s1, s2);
                 auto f12_3 = simple_section_cocycle(sp_mul(s1, s2), s3);
                 auto f23 = simple_section_cocycle(s2, s3);
                 auto f1_23 = simple_section_cocycle(s1, sp_mul(s2, s3));
                 // Klein four-group: act on f23 by S1 then compare products.
                 KernelElement k(f23.c1 == -1 ? n / 2 : 0, f23.c2 == -1 ? n / 2 : 0, n);
                 KernelElement moved = sp_act(s1, k);
                 int a1 = moved.xi_q == 0 ? +1 : -1, a2 = moved.xi_p == 0 ? +1 : -1;
                 return f12.c1 * f12_3.c1 == a1 * f1_23.c1 &&
                        f12.c2 * f12_3.c2 == a2 * f1_23.c2;
             });
    }
    emit(opt, n, "verify cocycle",
         {{"status", ok ? "pass" : "fail"}, {"pairs", pairs}, {"triples", triples}},
         nullptr, pairs + triples);
    return ok ? kExitPass : kExitVerifyFail;
}

int verify_weil(const Options& opt, long long n) {
    LinearRep rep;
    if (n % 2 == 1)
        rep = lift_odd(n, opt.tol);
    else
        rep = lift_even((n / 2 - 1) / 2, opt.tol);
    VerifyReport r = verify_linear_rep(rep);
    emit(opt, n, "verify weil",
         r.pass ? json("pass") : json({{"status", "fail"}, {"at", r.detail}}),
         r.max_deviation, r.pairs_checked);
    return r.pass ? kExitPass : kExitVerifyFail;
}

int verify_crt(const Options& opt, long long n) {
    std::size_t checked = 0;
    bool ok = true;
    for (long long d1 = 2; d1 < n; ++d1) {
        if (n % d1 != 0) continue;
        long long d2 = n / d1;
        if (std::gcd(d1, d2) != 1) continue;
        for (long long a = 0; a < n && ok; ++a) {
            auto [r1, r2] = crt_decompose(Residue(a, n), d1, d2);
            ok = crt_compose(r1, r2) == Residue(a, n);
            for (long long b = 0; b < n && ok; ++b) {
                auto [s1, s2] = crt_decompose(Residue(b, n), d1, d2);
                ok = crt_decompose(Residue(a, n) * Residue(b, n), d1, d2) ==
                         std::pair{r1 * s1, r2 * s2} &&
                     crt_decompose(Residue(a, n) + Residue(b, n), d1, d2) ==
                         std::pair{r1 + s1, r2 + s2};
                ++checked;
            }
        }
    }
    emit(opt, n, "verify crt", ok ? "pass" : "fail", nullptr, checked);
    return ok ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructions and verification for the automorphism group Tp_N "
                 "of the finite Heisenberg group over Z_N"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--tol", opt.tol, "numeric tolerance for unitary comparisons");
    app.add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for randomized checks");
    app.add_option("--max-pairs", opt.max_pairs, "override the all-pairs/all-triples cap");

    long long n = 0;
    std::string mat_str, s1_str, s2_str;
    long long value = 0, r1 = 0, r2 = 0, d1 = 0, d2 = 0;

    auto* sp = app.add_subcommand("sp", "symplectic group listings and membership");
    auto* sp_list = sp->add_subcommand("list", "print all elements of Sp_N");
    sp_list->add_option("--n", n, "modulus")->required();
    auto* sp_check = sp->add_subcommand("check", "membership in Sp_N and S~p_2N");
    sp_check->add_option("--n", n, "modulus")->required();
    sp_check->add_option("--mat", mat_str, "row-major a,b,c,d")->required();

    auto* split = app.add_subcommand("split", "splitting automorphism Sigma(S)");
    split->add_option("--n", n, "modulus")->required();
    split->add_option("--mat", mat_str, "row-major a,b,c,d")->required();

    auto* verify = app.add_subcommand("verify", "exhaustive verification sweeps");
    verify->require_subcommand(1);
    auto* v_split = verify->add_subcommand("splitting", "Sigma homomorphism, all pairs");
    auto* v_coc = verify->add_subcommand("cocycle", "closed form vs defect + cocycle identity");
    auto* v_weil = verify->add_subcommand("weil", "linear lift verification");
    auto* v_crt = verify->add_subcommand("crt", "CRT round-trip and ring homomorphism");
    for (auto* v : {v_split, v_coc, v_weil, v_crt})
        v->add_option("--n", n, "modulus")->required();

    auto* coc = app.add_subcommand("cocycle", "simple-section 2-cocycle value");
    coc->add_option("--n", n, "modulus")->required();
    coc->add_option("--s1", s1_str, "first matrix a,b,c,d")->required();
    coc->add_option("--s2", s2_str, "second matrix a,b,c,d")->required();

    auto* weil = app.add_subcommand("weil", "lifted Weil unitary at S");
    weil->add_option("--n", n, "modulus")->required();
    weil->add_option("--mat", mat_str, "row-major a,b,c,d")->required();

    auto* crt = app.add_subcommand("crt", "two-factor CRT maps");
    auto* crt_dec = crt->add_subcommand("decompose", "residue -> factor pair");
    crt_dec->add_option("--n", n, "composite modulus")->required();
    crt_dec->add_option("--value", value, "residue value")->required();
    crt_dec->add_option("--d1", d1, "first factor (default 2 for N = 2(2k+1))");
    crt_dec->add_option("--d2", d2, "second factor");
    auto* crt_com = crt->add_subcommand("compose", "factor pair -> residue");
    crt_com->add_option("--r1", r1, "residue mod d1")->required();
    crt_com->add_option("--r2", r2, "residue mod d2")->required();
    crt_com->add_option("--d1", d1, "first modulus")->required();
    crt_com->add_option("--d2", d2, "second modulus")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (sp_list->parsed()) {
            json rows = json::array();
            for (const auto& s : enumerate_sp(n)) rows.push_back(mat_json(s.mat));
            emit(opt, n, "sp list", rows, nullptr, (long long)rows.size());
            return kExitPass;
        }
        if (sp_check->parsed()) {
            Mat2 m = parse_mat(mat_str, n);
            Mat2 m2n = Mat2(m.a, m.b, m.c, m.d, 2 * n);
            emit(opt, n, "sp check",
                 {{"matrix", mat_json(m)},
                  {"sp_member", is_sp(m)},
                  {"sp_tilde_member", is_sp_tilde(m2n, n)}},
                 nullptr, nullptr);
            return kExitPass;
        }
        if (split->parsed()) {
            if (n % 4 == 0) {
                std::cerr << "no splitting exists for N = " << n
                          << ": Tp_N is not a semidirect product when 4 | N "
                             "(two-generator phase obstruction)\n";
                return kExitObstruction;
            }
            Automorphism t = splitting(SpElement(parse_mat(mat_str, n)));
            emit(opt, n, "split", auto_json(t), nullptr, nullptr);
            return kExitPass;
        }
        if (v_split->parsed()) return verify_splitting(opt, n);
        if (v_coc->parsed()) return verify_cocycle(opt, n);
        if (v_weil->parsed()) {
            if (n % 4 == 0) {
                std::cerr << "no linear lift exists for N = " << n << " (4 | N)\n";
                return kExitObstruction;
            }
            return verify_weil(opt, n);
        }
        if (v_crt->parsed()) return verify_crt(opt, n);
        if (coc->parsed()) {
            CocycleValue c = simple_section_cocycle(SpElement(parse_mat(s1_str, n)),
                                                    SpElement(parse_mat(s2_str, n)));
            emit(opt, n, "cocycle",
                 {{"c1", c.c1}, {"c2", c.c2}, {"trivial_odd", c.trivial_odd}},
                 nullptr, nullptr);
            return kExitPass;
        }
        if (weil->parsed()) {
            if (n % 4 == 0) {
                std::cerr << "no linear lift exists for N = " << n << " (4 | N)\n";
                return kExitObstruction;
            }
            SpElement s(parse_mat(mat_str, n));
            LinearRep rep = n % 2 == 1 ? lift_odd(n, opt.tol)
                                       : lift_even((n / 2 - 1) / 2, opt.tol);
            emit(opt, n, "weil", complex_matrix_json(rep.at(s)), nullptr, nullptr);
            return kExitPass;
        }
        if (crt_dec->parsed()) {
            if (d1 == 0) {
                if (n % 4 != 2) throw modulus_error("crt decompose: give --d1/--d2");
                d1 = 2;
                d2 = n / 2;
            }
            auto [a, b] = crt_decompose(Residue(value, n), d1, d2);
            emit(opt, n, "crt decompose",
                 {{"r1", a.value()}, {"d1", d1}, {"r2", b.value()}, {"d2", d2}},
                 nullptr, nullptr);
            return kExitPass;
        }
        if (crt_com->parsed()) {
            Residue r = crt_compose(Residue(r1, d1), Residue(r2, d2));
            emit(opt, d1 * d2, "crt compose", {{"value", r.value()}, {"n", d1 * d2}},
                 nullptr, nullptr);
            return kExitPass;
        }
    } catch (const obstruction_error& e) {
        std::cerr << e.what() << "\n";
        return kExitObstruction;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
