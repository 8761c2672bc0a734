// arfcalc: exact computation of generalized and linking Arf invariants
// over Z and Z[x], with normal forms for the twisted quadratic Q-groups
// and brute-force verification suites.
//
// Exit codes: 0 success, 2 parse error, 3 precondition/membership error,
// 4 oracle counterexample found.

#include "arfcalc/arfinv.hpp"
#include "arfcalc/json_io.hpp"
#include "arfcalc/oracle.hpp"
#include "arfcalc/witt.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace arfcalc;
using arfcalc::io::json;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCounterexample = 4;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io::ParseError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw io::ParseError(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

int cmd_lgroups(const std::string& ring, bool unil) {
    if (unil) {
        auto t = unil_table();
        std::cout << "UNil-groups of Z:\n";
        for (int n = 0; n < 4; ++n) std::cout << "  UNil_" << n << " = " << t[n] << "\n";
        std::cout << "splitting: UNil_3(Z) = Q_0(Z[x])/Z_8 = Z_4[x] (+) Z_2[x]^3\n";
        return 0;
    }
    RingTag tag;
    if (ring == "z")
        tag = RingTag::Z;
    else if (ring == "zx")
        tag = RingTag::Zx;
    else
        throw io::ParseError("--ring must be z or zx");
    auto t = lgroups_table(tag);
    std::cout << "hyperquadratic L-groups of " << (tag == RingTag::Z ? "Z" : "Z[x]") << ":\n";
    for (int n = 0; n < 4; ++n) std::cout << "  Lhat^" << n << " = " << t[n] << "\n";
    return 0;
}

Mat matrix_input(const json& j) {
    if (j.is_object() && j.contains("matrix")) return io::mat_from_json(j.at("matrix"));
    return io::mat_from_json(j);
}

int cmd_reduce(const std::string& group, const std::string& input) {
    json j = load_json(input);
    if (group == "q0zx") {
        std::cout << io::q0class_to_json(reduce_q0_Zx(matrix_input(j))).dump() << "\n";
    } else if (group == "q3zx") {
        std::cout << io::q3class_to_json(reduce_q3_Zx(matrix_input(j))).dump() << "\n";
    } else if (group == "q1zx") {
        int v = reduce_q1_Zx(matrix_input(j));
        std::cout << json{{"group", "q1zx"}, {"value", v}}.dump() << "\n";
    } else if (group == "q0z" || group == "q1z" || group == "q2z" || group == "q3z") {
        if (!j.is_object() || !j.contains("a")) throw io::ParseError("scalar groups expect {\"a\": int}");
        int n = group[1] - '0';
        QnClassZ c = reduce_qn_Z(n, io::int_from_json(j.at("a")));
        std::cout << json{{"group", group}, {"value", c.value}}.dump() << "\n";
    } else {
        throw io::ParseError("unknown group: " + group);
    }
    return 0;
}

int cmd_arf(const std::string& mode, const std::string& input) {
    json j = load_json(input);
    if (mode == "classical") {
        if (!j.is_object() || !j.contains("psi")) throw io::ParseError("classical mode expects {\"psi\": bits, ...}");
        std::vector<std::vector<int>> grid = j.at("psi").get<std::vector<std::vector<int>>>();
        GF2Form f = GF2Form::from_bits(grid);
        std::vector<uint32_t> e, estar;
        auto vec_from = [&](const json& arr) {
            std::vector<uint32_t> out;
            for (const auto& row : arr) {
                uint32_t v = 0;
                for (std::size_t i = 0; i < row.size(); ++i)
                    if (row[i].get<int>() & 1) v |= 1u << i;
                out.push_back(v);
            }
            return out;
        };
        if (j.contains("lagrangian")) {
            e = vec_from(j.at("lagrangian"));
            estar = j.contains("complement") ? vec_from(j.at("complement")) : symplectic_complete(f, e);
        } else {
            std::tie(e, estar) = symplectic_basis(f);
        }
        std::cout << json{{"group", "arf_z2"}, {"value", classical_arf(f, e, estar)}}.dump() << "\n";
    } else if (mode == "generalized") {
        EpsForm f = io::form_from_json(j);
        if (!j.contains("witness")) throw io::ParseError("generalized mode expects a witness");
        LagrangianWitness w = io::witness_from_json(j.at("witness"));
        std::cout << io::q3class_to_json(generalized_arf_form(f, w)).dump() << "\n";
    } else if (mode == "linking") {
        LinkingResolution res = io::resolution_from_json(j);
        if (!j.is_object() || !j.contains("mu")) throw io::ParseError("linking mode expects mu values");
        std::vector<ResPoly> mu;
        for (const auto& m : j.at("mu")) mu.push_back(io::respoly_from_json(m, 2));
        std::cout << io::q0class_to_json(linking_arf(res, mu)).dump() << "\n";
    } else {
        throw io::ParseError("unknown arf mode: " + mode);
    }
    return 0;
}

int cmd_boundary(int n, const std::string& ring, const std::string& input) {
    json j = load_json(input);
    RingTag tag;
    if (ring == "z")
        tag = RingTag::Z;
    else if (ring == "zx")
        tag = RingTag::Zx;
    else
        throw io::ParseError("--ring must be z or zx");
    Mat x = xmatrix(tag);
    Mat m;
    if (tag == RingTag::Z) {
        if (!j.is_object() || !j.contains("a")) throw io::ParseError("ring z expects {\"a\": int}");
        m = Mat(1, 1);
        m.at(0, 0) = IntPoly::constant(io::int_from_json(j.at("a")));
    } else {
        m = matrix_input(j);
    }
    switch (n) {
        case 3: std::cout << io::form_to_json(boundary_q3_to_L2(m, x)).dump() << "\n"; break;
        case 1: std::cout << io::form_to_json(boundary_q1_to_L0(m, x)).dump() << "\n"; break;
        case 0: std::cout << io::formation_to_json(boundary_q0_to_formation(m, x)).dump() << "\n"; break;
        default: throw io::ParseError("--n must be 0, 1 or 3");
    }
    return 0;
}

int cmd_eval_linking(const std::string& input) {
    json j = load_json(input);
    LinkingResolution res = io::resolution_from_json(j);
    auto vec_from = [&](const json& arr) {
        std::vector<IntPoly> v;
        for (const auto& p : arr) v.push_back(io::poly_from_json(p));
        return v;
    };
    if (!j.contains("x") || !j.at("x").contains("x1") || !j.at("x").contains("x0"))
        throw io::ParseError("eval-linking expects x = {x1, x0}");
    auto x1 = vec_from(j.at("x").at("x1"));
    auto x0 = vec_from(j.at("x").at("x0"));
    std::vector<IntPoly> y1 = x1, y0 = x0;
    if (j.contains("y")) {
        y1 = vec_from(j.at("y").at("y1"));
        y0 = vec_from(j.at("y").at("y0"));
    }
    json out;
    out["lambda_xy"] = io::dyadic_to_json(eval_lambda(res, x1, x0, y1, y0));
    out["mu_x"] = io::dyadic_to_json(eval_mu(res, x1, x0));
    std::cout << out.dump() << "\n";
    return 0;
}

int run_hirzebruch_suite(long long trials, uint64_t seed, std::string& failure) {
    Rng rng(seed);
    for (long long t = 0; t < trials; ++t) {
        // random block sum of +-1 and E8 pieces, conjugated unimodularly
        IntSymForm f(0);
        int dim = 0;
        bool used_e8 = false;
        while (dim == 0 || (dim < 8 && rng.flip())) {
            int pick = static_cast<int>(rng.below(used_e8 ? 2 : 3));
            if (pick == 2 && dim <= 2) {
                f = direct_sum(f, e8_form());
                dim += 8;
                used_e8 = true;
            } else {
                IntSymForm b(1);
                b.at(0, 0) = pick == 0 ? 1 : -1;
                f = direct_sum(f, b);
                dim += 1;
            }
            if (dim >= 10) break;
        }
        int n = f.n;
        std::vector<Int> e(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 1;
        for (int op = 0; op < 3 * n; ++op) {
            int i = static_cast<int>(rng.below(n)), jj = static_cast<int>(rng.below(n));
            if (i == jj) continue;
            long long c = rng.range(-2, 2);
            for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(i) * n + k] += c * e[static_cast<std::size_t>(jj) * n + k];
        }
        IntSymForm g = congruence(f, e);
        int sig = signature(g);
        int m8 = signature_mod8(g);
        if (((sig % 8) + 8) % 8 != m8) {
            failure = "signature " + std::to_string(sig) + " vs mod-8 invariant " + std::to_string(m8);
            return 1;
        }
    }
    return 0;
}

int run_lift_suite(long long trials, uint64_t seed, std::string& failure);
int run_refinement_suite(long long trials, uint64_t seed, std::string& failure);

int cmd_oracle(const std::string& suite, long long trials, uint64_t seed, int max_dim) {
    using namespace arfcalc::oracle;
    if (suite == "arf") {
        // exhaustive equivalence classical_arf = democratic count
        long long checked = 0;
        for (int n = 2; n <= max_dim; n += 2) {
            if (n > 4) break;
            uint64_t total = 1ULL << (n * n);
            for (uint64_t bits = 0; bits < total; ++bits) {
                GF2Form f(n);
                for (int i = 0; i < n; ++i)
                    f.psi[i] = static_cast<uint32_t>((bits >> (i * n)) & ((1u << n) - 1));
                if (!f.symmetrization_nonsingular()) continue;
                auto [e, estar] = symplectic_basis(f);
                ++checked;
                if (classical_arf(f, e, estar) != arf_democratic(f)) {
                    std::cout << "suite=arf seed=0 trials=" << checked << " failures=1 FAIL\n";
                    std::cerr << "error: counterexample: psi bits " << bits << " dim " << n << "\n";
                    return kExitCounterexample;
                }
            }
        }
        Rng rng(seed);
        for (long long t = 0; t < trials; ++t) {
            GF2Form f(6);
            do {
                for (int i = 0; i < 6; ++i) f.psi[i] = static_cast<uint32_t>(rng.below(64));
            } while (!f.symmetrization_nonsingular());
            auto [e, estar] = symplectic_basis(f);
            ++checked;
            if (classical_arf(f, e, estar) != arf_democratic(f)) {
                std::cout << "suite=arf seed=" << seed << " trials=" << checked << " failures=1 FAIL\n";
                return kExitCounterexample;
            }
        }
        std::cout << "suite=arf seed=" << seed << " trials=" << checked << " failures=0 PASS\n";
        return 0;
    }
    if (suite == "hirzebruch") {
        std::string failure;
        if (run_hirzebruch_suite(trials, seed, failure)) {
            std::cout << "suite=hirzebruch seed=" << seed << " trials=" << trials << " failures=1 FAIL\n";
            std::cerr << "error: counterexample: " << failure << "\n";
            return kExitCounterexample;
        }
        std::cout << "suite=hirzebruch seed=" << seed << " trials=" << trials << " failures=0 PASS\n";
        return 0;
    }
    if (suite == "lift") {
        std::string failure;
        if (run_lift_suite(trials, seed, failure)) {
            std::cout << "suite=lift seed=" << seed << " trials=" << trials << " failures=1 FAIL\n";
            std::cerr << "error: counterexample: " << failure << "\n";
            return kExitCounterexample;
        }
        std::cout << "suite=lift seed=" << seed << " trials=" << trials << " failures=0 PASS\n";
        return 0;
    }
    if (suite == "refine") {
        std::string failure;
        if (run_refinement_suite(trials, seed, failure)) {
            std::cout << "suite=refine seed=" << seed << " trials=" << trials << " failures=1 FAIL\n";
            std::cerr << "error: counterexample: " << failure << "\n";
            return kExitCounterexample;
        }
        std::cout << "suite=refine seed=" << seed << " trials=" << trials << " failures=0 PASS\n";
        return 0;
    }
    Report rep = verify_reduction(qgroup_from_string(suite), trials, seed);
    std::cout << rep.summary() << "\n";
    if (!rep.passed()) {
        std::cerr << "error: counterexample: " << rep.counterexample << "\n";
        return kExitCounterexample;
    }
    return 0;
}

} // namespace

// Randomized resolution families shared by the lift and refinement suites.
namespace {

Mat random_unimodular_poly(Rng& rng, int n, int ops) {
    Mat u = Mat::identity(n);
    for (int k = 0; k < ops; ++k) {
        int i = static_cast<int>(rng.below(n)), j = static_cast<int>(rng.below(n));
        if (i == j) continue;
        IntPoly f;
        if (rng.flip())
            f = IntPoly::constant(rng.range(-1, 1));
        else
            f = IntPoly::monomial(rng.range(-1, 1), 1);
        // row_i += f * row_j
        for (int c = 0; c < n; ++c) u.at(i, c) = poly_add(u.at(i, c), poly_mul(f, u.at(j, c)));
    }
    return u;
}

IntPoly random_poly(Rng& rng, int deg, long long bound) {
    IntPoly p;
    p.c.resize(rng.below(deg + 1) + 1);
    for (auto& v : p.c) v = rng.range(-bound, bound);
    p.normalize();
    return p;
}

Mat random_sym(Rng& rng, int n, int deg, long long bound, bool even_entries) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            IntPoly p = random_poly(rng, deg, bound);
            if (even_entries) p = poly_scale(2, p);
            m.at(i, j) = p;
            m.at(j, i) = p;
        }
    return m;
}

LinkingResolution random_resolution(Rng& rng, int u) {
    // d = 2U keeps every invariant satisfiable for arbitrary delta
    LinkingResolution res;
    res.d = mat_scale(2, random_unimodular_poly(rng, u, 2 * u));
    res.delta = random_sym(rng, u, 2, 2, false);
    res.phi = random_sym(rng, u, 2, 2, true);
    return res;
}

int run_lift_suite(long long trials, uint64_t seed, std::string& failure) {
    Rng rng(seed);
    for (long long t = 0; t < trials; ++t) {
        int u = 1 + static_cast<int>(rng.below(3));
        LinkingResolution res = random_resolution(rng, u);
        std::vector<ResPoly> mu;
        for (int i = 0; i < u; ++i) mu.push_back(reduce_mod(res.delta.at(i, i), 2));
        Q0ClassZx base = linking_arf(res, mu);
        // perturb the lifts by even polynomials
        std::vector<IntPoly> p, q;
        for (int i = 0; i < u; ++i) {
            auto [pi, qi] = tate_decompose(mu[i]);
            p.push_back(poly_add(lift(pi), poly_scale(2, random_poly(rng, 2, 2))));
            q.push_back(poly_add(lift(qi), poly_scale(2, random_poly(rng, 2, 2))));
        }
        // perturb phi by d sigma d^t with sigma even-diagonal symmetric
        Mat sigma = random_sym(rng, u, 2, 2, false);
        for (int i = 0; i < u; ++i) sigma.at(i, i) = poly_scale(2, random_poly(rng, 2, 2));
        LinkingResolution res2 = res;
        res2.phi = mat_add(res.phi, mat_mul(res.d, mat_mul(sigma, transpose(res.d))));
        Q0ClassZx perturbed = linking_arf_with_lifts(res2, mu, p, q);
        if (!(perturbed == base)) {
            failure = "lift/phi perturbation changed the class at trial " + std::to_string(t);
            return 1;
        }
    }
    return 0;
}

std::vector<IntPoly> random_vec(Rng& rng, int u) {
    std::vector<IntPoly> v(u);
    for (auto& p : v) p = random_poly(rng, 2, 3);
    return v;
}

int run_refinement_suite(long long trials, uint64_t seed, std::string& failure) {
    Rng rng(seed);
    for (long long t = 0; t < trials; ++t) {
        int u = 1 + static_cast<int>(rng.below(3));
        LinkingResolution res = random_resolution(rng, u);
        auto x1 = random_vec(rng, u), x0 = random_vec(rng, u);
        auto y1 = random_vec(rng, u), y0 = random_vec(rng, u);
        // mu(x+y) = mu(x) + mu(y) + lambda(x,y) + lambda(y,x) in S^{-1}A/2A
        std::vector<IntPoly> sx1(u), sx0(u);
        for (int i = 0; i < u; ++i) {
            sx1[i] = poly_add(x1[i], y1[i]);
            sx0[i] = poly_add(x0[i], y0[i]);
        }
        Dyadic lhs = eval_mu(res, sx1, sx0);
        Dyadic sum = dy_add(eval_mu(res, x1, x0), eval_mu(res, y1, y0));
        sum = dy_add(sum, eval_lambda(res, x1, x0, y1, y0));
        sum = dy_add(sum, eval_lambda(res, y1, y0, x1, x0));
        Dyadic rhs = dy_mod(sum, 1);
        if (!(lhs == rhs)) {
            failure = "quadratic refinement failed at trial " + std::to_string(t);
            return 1;
        }
        // symmetry of lambda and its diagonal relation with mu
        Dyadic lxy = eval_lambda(res, x1, x0, y1, y0);
        Dyadic lyx = eval_lambda(res, y1, y0, x1, x0);
        if (!(lxy == lyx)) {
            failure = "lambda not symmetric at trial " + std::to_string(t);
            return 1;
        }
        Dyadic mux = dy_mod(eval_mu(res, x1, x0), 0);
        Dyadic lxx = eval_lambda(res, x1, x0, x1, x0);
        if (!(dy_mod(mux, 0) == lxx)) {
            failure = "mu does not refine lambda on the diagonal at trial " + std::to_string(t);
            return 1;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Arf-invariant calculator for algebraic L-theory over Z and Z[x]"};
    app.require_subcommand(1);

    auto* lg = app.add_subcommand("lgroups", "print the hyperquadratic L-group tables");
    std::string lg_ring = "z";
    bool lg_unil = false;
    lg->add_option("--ring", lg_ring, "ground ring: z or zx");
    lg->add_flag("--unil", lg_unil, "print the UNil table instead");

    auto* rd = app.add_subcommand("reduce", "reduce a matrix to its Q-group normal form");
    std::string rd_group, rd_input;
    rd->add_option("--group", rd_group, "q0zx, q3zx, q1zx, q0z, q1z, q2z or q3z")->required();
    rd->add_option("-i,--input", rd_input, "input JSON file")->required();

    auto* ar = app.add_subcommand("arf", "compute an Arf invariant");
    std::string ar_mode, ar_input;
    ar->add_option("--mode", ar_mode, "classical, generalized or linking")->required();
    ar->add_option("-i,--input", ar_input, "input JSON file")->required();

    auto* bd = app.add_subcommand("boundary", "boundary of a hyperquadratic class");
    int bd_n = 3;
    std::string bd_ring = "z", bd_input;
    bd->add_option("--n", bd_n, "dimension mod 4: 0, 1 or 3")->required();
    bd->add_option("--ring", bd_ring, "ground ring: z or zx");
    bd->add_option("-i,--input", bd_input, "input JSON file")->required();

    auto* ev = app.add_subcommand("eval-linking", "evaluate lambda and mu of a resolved linking form");
    std::string ev_input;
    ev->add_option("-i,--input", ev_input, "input JSON file")->required();

    auto* oc = app.add_subcommand("oracle", "run a brute-force verification suite");
    std::string oc_suite;
    long long oc_trials = 200;
    uint64_t oc_seed = 7;
    int oc_maxdim = 4;
    oc->add_option("--suite", oc_suite, "arf, q0zx, q3zx, q0z, q3z, hirzebruch, lift or refine")->required();
    oc->add_option("--trials", oc_trials, "number of randomized trials");
    oc->add_option("--seed", oc_seed, "random seed");
    oc->add_option("--max-dim", oc_maxdim, "exhaustive dimension bound for the arf suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*lg) return cmd_lgroups(lg_ring, lg_unil);
        if (*rd) return cmd_reduce(rd_group, rd_input);
        if (*ar) return cmd_arf(ar_mode, ar_input);
        if (*bd) return cmd_boundary(bd_n, bd_ring, bd_input);
        if (*ev) return cmd_eval_linking(ev_input);
        if (*oc) return cmd_oracle(oc_suite, oc_trials, oc_seed, oc_maxdim);
    } catch (const io::ParseError& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return kExitParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
