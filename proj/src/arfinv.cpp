#include "arfcalc/arfinv.hpp"

#include <stdexcept>

namespace arfcalc {

Mat bundle_map_from_diagonal(const Mat& mu) {
    int l = mu.rows;
    Mat g(2, l);
    for (int j = 0; j < l; ++j) {
        auto [p, q] = tate_decompose(reduce_mod(mu.at(j, j), 2));
        g.at(0, j) = lift(p);
        g.at(1, j) = lift(q);
    }
    return g;
}

Q3ClassZx generalized_arf_split(const SplitForm& s) {
    if (s.epsilon != -1) throw std::invalid_argument("generalized_arf: epsilon must be -1");
    if (!is_symmetric(s.mu) || !is_symmetric(s.nu))
        throw std::invalid_argument("generalized_arf: mu, nu must be symmetric");
    Mat g = bundle_map_from_diagonal(s.mu);
    Mat w = mat_mul(g, mat_mul(s.nu, transpose(g)));
    return reduce_q3_Zx(w);
}

Q3ClassZx generalized_arf_form(const EpsForm& f, const LagrangianWitness& w) {
    SplitResult sr = split_coordinates(f, w);
    return generalized_arf_split(sr.form);
}

Q0ClassZx linking_arf(const LinkingResolution& res, const std::vector<ResPoly>& mu_values) {
    std::vector<IntPoly> p, q;
    p.reserve(mu_values.size());
    q.reserve(mu_values.size());
    for (const auto& mv : mu_values) {
        auto [pi, qi] = tate_decompose(mv);
        p.push_back(lift(pi));
        q.push_back(lift(qi));
    }
    return linking_arf_with_lifts(res, mu_values, p, q);
}

Q0ClassZx linking_arf_with_lifts(const LinkingResolution& res, const std::vector<ResPoly>& mu_values,
                                 const std::vector<IntPoly>& p, const std::vector<IntPoly>& q) {
    validate_resolution(res);
    int u = res.size();
    if (static_cast<int>(mu_values.size()) != u)
        throw std::invalid_argument("linking_arf: one mu value per generator required");
    if (static_cast<int>(p.size()) != u || static_cast<int>(q.size()) != u)
        throw std::invalid_argument("linking_arf: lift length mismatch");
    for (int i = 0; i < u; ++i) {
        // delta's diagonal classes must be the prescribed mu values,
        // and the lifts must reduce to the Tate decomposition
        if (reduce_mod(res.delta.at(i, i), 2) != mu_values[i])
            throw std::domain_error("linking_arf: delta diagonal does not lift mu");
        auto [pi, qi] = tate_decompose(mu_values[i]);
        if (reduce_mod(p[i], 2) != pi || reduce_mod(q[i], 2) != qi)
            throw std::domain_error("linking_arf: lift not congruent to the Tate decomposition");
    }
    Mat f0(2, u);
    for (int i = 0; i < u; ++i) {
        f0.at(0, i) = p[i];
        f0.at(1, i) = q[i];
    }
    if (!mat_is_even(mat_mul(f0, res.d)))
        throw std::domain_error("linking_arf: f0 d not divisible by 2");
    Mat w = mat_mul(f0, mat_mul(res.phi, transpose(f0)));
    return reduce_q0_Zx(w);
}

EpsForm boundary_q3_to_L2(const Mat& m, const Mat& x) {
    int r = m.rows;
    if (!is_symmetric(m)) throw std::invalid_argument("boundary_q3_to_L2: M not symmetric");
    if (x.rows != r || x.cols != r) throw std::invalid_argument("boundary_q3_to_L2: X shape mismatch");
    Mat psi = vconcat(hconcat(m, Mat::identity(r)), hconcat(Mat::zero(r, r), x));
    return {-1, psi};
}

EpsForm boundary_q1_to_L0(const Mat& n, const Mat& x) {
    int r = n.rows;
    if (n.cols != r) throw std::invalid_argument("boundary_q1_to_L0: N not square");
    if (x.rows != r || x.cols != r) throw std::invalid_argument("boundary_q1_to_L0: X shape mismatch");
    Mat sym = mat_add(n, transpose(n));
    Mat inner = mat_sub(sym, mat_scale(2, mat_mul(transpose(n), mat_mul(x, n))));
    // exact division by 4 signals precondition failure otherwise
    Mat quarter;
    try {
        quarter = mat_half(mat_half(inner));
    } catch (const std::domain_error&) {
        throw std::domain_error("boundary_q1_to_L0: (N+N^t-2N^tXN)/4 not integral");
    }
    Mat top_right = mat_sub(Mat::identity(r), mat_scale(2, mat_mul(n, x)));
    Mat psi = vconcat(hconcat(quarter, top_right),
                      hconcat(Mat::zero(r, r), mat_neg(mat_scale(2, x))));
    return {1, psi};
}

SFormation boundary_q0_to_formation(const Mat& m, const Mat& x) {
    int r = m.rows;
    if (!check_numerator_q0(m, x)) throw std::domain_error("boundary_q0_to_formation: numerator condition fails");
    SFormation s;
    s.rank = r;
    s.f_inclusion = vconcat(Mat::identity(r), Mat::zero(r, r));
    s.g_inclusion = vconcat(mat_sub(Mat::identity(r), mat_mul(x, m)), m);
    if (!formation_g_is_lagrangian(s)) throw std::logic_error("boundary_q0_to_formation: G not a lagrangian");
    return s;
}

static Mat one_by_one(const Int& a) {
    Mat m(1, 1);
    m.at(0, 0) = IntPoly::constant(a);
    return m;
}

EpsForm boundary_q3_to_L2_Z(const Int& a) { return boundary_q3_to_L2(one_by_one(a), xmatrix(RingTag::Z)); }
EpsForm boundary_q1_to_L0_Z(const Int& a) { return boundary_q1_to_L0(one_by_one(a), xmatrix(RingTag::Z)); }
SFormation boundary_q0_to_formation_Z(const Int& a) {
    return boundary_q0_to_formation(one_by_one(a), xmatrix(RingTag::Z));
}

} // namespace arfcalc
