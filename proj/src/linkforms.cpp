#include "arfcalc/linkforms.hpp"

#include "arfcalc/qnormal.hpp"

#include <sstream>
#include <stdexcept>

namespace arfcalc {

void Dyadic::normalize() {
    if (num.is_zero()) {
        k = 0;
        return;
    }
    while (k > 0 && is_even_poly(num)) {
        num = half(num);
        --k;
    }
}

std::string Dyadic::str() const {
    std::ostringstream os;
    os << num.str() << "/2^" << k;
    return os.str();
}

Dyadic dy_add(const Dyadic& a, const Dyadic& b) {
    int k = std::max(a.k, b.k);
    IntPoly na = poly_scale(Int(1) << (k - a.k), a.num);
    IntPoly nb = poly_scale(Int(1) << (k - b.k), b.num);
    return Dyadic(poly_add(na, nb), k);
}

Dyadic dy_neg(const Dyadic& a) { return Dyadic(poly_neg(a.num), a.k); }

Dyadic dy_mod(const Dyadic& a, int e) {
    Int m = Int(1) << (a.k + e);
    IntPoly n = a.num;
    for (auto& v : n.c) {
        v %= m;
        if (v < 0) v += m;
    }
    n.normalize();
    return Dyadic(std::move(n), a.k);
}

void validate_resolution(const LinkingResolution& res) {
    int u = res.d.rows;
    if (res.d.cols != u || res.delta.rows != u || res.delta.cols != u || res.phi.rows != u ||
        res.phi.cols != u)
        throw std::domain_error("resolution: shape mismatch");
    if (!is_symmetric(res.delta)) throw std::domain_error("resolution: delta not symmetric");
    if (!is_symmetric(res.phi)) throw std::domain_error("resolution: phi not symmetric");
    int sign, m;
    if (!det_is_power_of_two(res.d, sign, m))
        throw std::domain_error("resolution: det(d) is not +-2^m");
    if (!is_quad(mat_mul(transpose(res.d), mat_mul(res.delta, res.d))))
        throw std::domain_error("resolution: d^t delta d not even-diagonal");
    if (!is_quad(mat_sub(res.phi, mat_mul(res.phi, mat_mul(res.delta, res.phi)))))
        throw std::domain_error("resolution: phi - phi delta phi not even-diagonal");
}

namespace {

// signed adjugate with det(d) = sign * 2^m: d^{-1} = inv / 2^m over Z[1/2][x]
struct DyadicInverse {
    Mat inv;
    int m = 0;
};

DyadicInverse dyadic_inverse(const Mat& d) {
    int sign, m;
    if (!det_is_power_of_two(d, sign, m)) throw std::domain_error("resolution: det(d) is not +-2^m");
    Mat adj = adjugate(d);
    return {sign < 0 ? mat_neg(adj) : adj, m};
}

IntPoly row_vec_col(const std::vector<IntPoly>& x, const Mat& m, const std::vector<IntPoly>& y) {
    // x^t M y
    IntPoly acc;
    for (int i = 0; i < m.rows; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < m.cols; ++j) {
            if (m.at(i, j).is_zero() || y[j].is_zero()) continue;
            acc = poly_add(acc, poly_mul(x[i], poly_mul(m.at(i, j), y[j])));
        }
    }
    return acc;
}

void check_vec(const std::vector<IntPoly>& v, int u, const char* who) {
    if (static_cast<int>(v.size()) != u) throw std::invalid_argument(std::string(who) + ": vector length mismatch");
}

} // namespace

Dyadic eval_lambda(const LinkingResolution& res, const std::vector<IntPoly>& x1,
                   const std::vector<IntPoly>& x0, const std::vector<IntPoly>& y1,
                   const std::vector<IntPoly>& y0) {
    validate_resolution(res);
    int u = res.size();
    check_vec(x1, u, "eval_lambda");
    check_vec(x0, u, "eval_lambda");
    check_vec(y1, u, "eval_lambda");
    check_vec(y0, u, "eval_lambda");
    DyadicInverse di = dyadic_inverse(res.d);
    // -x1^t (d^{-1} phi d^{-t}) y1 + x1^t d^{-1} y0 + x0^t d^{-t} y1
    Mat g = mat_mul(di.inv, mat_mul(res.phi, transpose(di.inv)));
    IntPoly t1 = poly_neg(row_vec_col(x1, g, y1));                   // / 2^{2m}
    IntPoly t2 = row_vec_col(x1, di.inv, y0);                        // / 2^m
    IntPoly t3 = row_vec_col(x0, transpose(di.inv), y1);             // / 2^m
    Dyadic val = dy_add(Dyadic(t1, 2 * di.m), Dyadic(poly_add(t2, t3), di.m));
    return dy_mod(val, 0);
}

Dyadic eval_mu(const LinkingResolution& res, const std::vector<IntPoly>& x1,
               const std::vector<IntPoly>& x0) {
    validate_resolution(res);
    int u = res.size();
    check_vec(x1, u, "eval_mu");
    check_vec(x0, u, "eval_mu");
    DyadicInverse di = dyadic_inverse(res.d);
    Mat g = mat_mul(di.inv, mat_mul(res.phi, transpose(di.inv)));
    IntPoly t1 = poly_neg(row_vec_col(x1, g, x1));
    IntPoly t2 = row_vec_col(x1, di.inv, x0);
    IntPoly t3 = row_vec_col(x0, transpose(di.inv), x1);
    IntPoly t4 = poly_neg(row_vec_col(x0, res.delta, x0)); // integral term
    Dyadic val = dy_add(Dyadic(t1, 2 * di.m), Dyadic(poly_add(t2, t3), di.m));
    val = dy_add(val, Dyadic(t4, 0));
    return dy_mod(val, 1);
}

void validate_s_formation(const SFormation& s) {
    if (!formation_g_is_lagrangian(s)) throw std::domain_error("formation: G is not a lagrangian");
    int sign, m;
    if (!det_is_power_of_two(hconcat(s.f_inclusion, s.g_inclusion), sign, m))
        throw std::domain_error("formation: det[F|G] is not +-2^m");
}

bool formation_g_is_lagrangian(const SFormation& s) {
    int n = s.rank;
    if (s.g_inclusion.rows != 2 * n || s.g_inclusion.cols != n) return false;
    Mat top = submat(s.g_inclusion, 0, 0, n, n);
    Mat bot = submat(s.g_inclusion, n, 0, n, n);
    // psi = (0 I; 0 0): psi restricted to G is top^t * bot
    Mat rest = mat_mul(transpose(top), bot);
    // isotropy for psi - psi^t and even diagonal for the quadratic condition
    if (!is_zero(mat_sub(rest, transpose(rest)))) return false;
    for (int i = 0; i < n; ++i)
        if (!is_even_poly(rest.at(i, i))) return false;
    return true;
}

SFormation canonical_formation(const Mat& m, const Mat& x) {
    int r = m.rows;
    if (!is_symmetric(m)) throw std::invalid_argument("canonical_formation: M not symmetric");
    if (x.rows != r || x.cols != r) throw std::invalid_argument("canonical_formation: X shape mismatch");
    if (!check_numerator_q0(m, x))
        throw std::domain_error("canonical_formation: M - MXM not even-diagonal");
    Mat I = Mat::identity(r);
    Mat two_i = mat_scale(2, I);
    // gamma1 = (I 0; -2X I-XM), gamma2 = (0 2I; 2I M)
    Mat g1 = vconcat(hconcat(I, Mat::zero(r, r)), hconcat(mat_neg(mat_scale(2, x)), mat_sub(I, mat_mul(x, m))));
    Mat g2 = vconcat(hconcat(Mat::zero(r, r), two_i), hconcat(two_i, m));
    SFormation s;
    s.rank = 2 * r;
    Mat f_top = Mat::identity(2 * r);
    s.f_inclusion = vconcat(f_top, Mat::zero(2 * r, 2 * r));
    s.g_inclusion = vconcat(g1, g2);
    validate_s_formation(s);
    return s;
}

Order2Form canonical_order2_form(const Mat& m, const Mat& x) {
    int r = m.rows;
    if (!is_symmetric(m)) throw std::invalid_argument("canonical_order2_form: M not symmetric");
    if (!mat_is_even(m)) throw std::domain_error("canonical_order2_form: M has an odd entry");
    if (x.rows != r || x.cols != r) throw std::invalid_argument("canonical_order2_form: X shape mismatch");
    Order2Form o;
    o.res.d = mat_scale(2, Mat::identity(r));
    o.res.delta = x;
    o.res.phi = m;
    validate_resolution(o.res);
    o.mu_values.reserve(r);
    for (int i = 0; i < r; ++i) o.mu_values.push_back(reduce_mod(x.at(i, i), 2));
    return o;
}

} // namespace arfcalc
