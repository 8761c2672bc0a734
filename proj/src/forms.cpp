#include "arfcalc/forms.hpp"

#include <stdexcept>

namespace arfcalc {

Mat symmetrize(const EpsForm& f) {
    if (f.epsilon != 1 && f.epsilon != -1) throw std::invalid_argument("symmetrize: epsilon must be +1 or -1");
    Mat t = transpose(f.psi);
    return f.epsilon == 1 ? mat_add(f.psi, t) : mat_sub(f.psi, t);
}

bool is_nonsingular(const EpsForm& f) {
    if (f.psi.rows != f.psi.cols) return false;
    return is_unimodular(symmetrize(f));
}

static void check_witness_shape(const EpsForm& f, const LagrangianWitness& w) {
    int n = f.dim();
    int l = w.inclusion.cols;
    if (f.psi.rows != f.psi.cols) throw std::invalid_argument("lagrangian: form matrix not square");
    if (w.inclusion.rows != n || w.complement.rows != n || w.complement.cols != l || n != 2 * l)
        throw std::invalid_argument("lagrangian: witness shape mismatch");
}

bool verify_lagrangian(const EpsForm& f, const LagrangianWitness& w) {
    check_witness_shape(f, w);
    Mat lam = symmetrize(f);
    Mat rest = mat_mul(transpose(w.inclusion), mat_mul(lam, w.inclusion));
    if (!is_zero(rest)) return false;
    return is_unimodular(hconcat(w.inclusion, w.complement));
}

bool is_quadratic_lagrangian(const EpsForm& f, const LagrangianWitness& w) {
    if (!verify_lagrangian(f, w)) return false;
    if (f.epsilon == 1) return true; // psi(x)(x) lands in {a - a} = 0 automatically
    Mat rest = mat_mul(transpose(w.inclusion), mat_mul(f.psi, w.inclusion));
    for (int i = 0; i < rest.rows; ++i)
        if (!is_even_poly(rest.at(i, i))) return false;
    return true;
}

static Mat unimodular_inverse(const Mat& a) {
    IntPoly d = det(a);
    if (d.degree() != 0 || (d.c[0] != 1 && d.c[0] != -1))
        throw std::domain_error("split_coordinates: off-diagonal block not invertible over Z[x]");
    Mat adj = adjugate(a);
    return d.c[0] == 1 ? adj : mat_neg(adj);
}

SplitResult split_coordinates(const EpsForm& f, const LagrangianWitness& w) {
    if (!is_nonsingular(f)) throw std::invalid_argument("split_coordinates: form is singular");
    if (!verify_lagrangian(f, w)) throw std::invalid_argument("split_coordinates: witness fails the lagrangian check");
    int l = w.inclusion.cols;
    int eps = f.epsilon;

    Mat U = hconcat(w.inclusion, w.complement);
    Mat psi1 = mat_mul(transpose(U), mat_mul(f.psi, U));
    Mat A = submat(psi1, 0, 0, l, l);
    Mat B = submat(psi1, 0, l, l, l);
    Mat C = submat(psi1, l, 0, l, l);
    Mat D = submat(psi1, l, l, l, l);

    // chi-reduce to (A lam; 0 D); lam is the top-right block of the symmetrization
    Mat lam = eps == 1 ? mat_add(B, transpose(C)) : mat_sub(B, transpose(C));
    Mat lam_inv = unimodular_inverse(lam);

    Mat T = U;
    Mat skewD = eps == 1 ? mat_add(D, transpose(D)) : mat_sub(D, transpose(D));
    Mat nu;
    if (!is_zero(skewD)) {
        // replace the complement: Bm = -(lam^t)^{-1} D^t, new block = Bm^t A Bm
        Mat Bm = mat_neg(mat_mul(transpose(lam_inv), transpose(D)));
        Mat V = Mat::identity(2 * l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) V.at(i, l + j) = Bm.at(i, j);
        T = mat_mul(T, V);
        nu = mat_mul(transpose(Bm), mat_mul(A, Bm));
    } else {
        nu = D;
    }
    Mat W = block_diag(Mat::identity(l), lam_inv);
    T = mat_mul(T, W);
    nu = mat_mul(transpose(lam_inv), mat_mul(nu, lam_inv));

    SplitForm s{eps, A, nu};
    // the defining invariants must hold by construction
    Mat smu = eps == 1 ? mat_add(s.mu, transpose(s.mu)) : mat_sub(s.mu, transpose(s.mu));
    Mat snu = eps == 1 ? mat_add(s.nu, transpose(s.nu)) : mat_sub(s.nu, transpose(s.nu));
    if (!is_zero(smu) || !is_zero(snu)) throw std::logic_error("split_coordinates: output invariant failed");
    Mat check = mat_mul(transpose(T), mat_mul(f.psi, T));
    if (!is_chi_equivalent(check, assemble_split(s).psi, eps))
        throw std::logic_error("split_coordinates: basis transform inconsistent");
    return {s, T};
}

EpsForm hyperbolic(int l, int epsilon) {
    if (l < 0) throw std::invalid_argument("hyperbolic: negative rank");
    Mat psi(2 * l, 2 * l);
    for (int i = 0; i < l; ++i) psi.at(i, l + i) = IntPoly::constant(1);
    return {epsilon, psi};
}

LagrangianWitness standard_witness(int l) {
    Mat inc(2 * l, l), comp(2 * l, l);
    for (int i = 0; i < l; ++i) {
        inc.at(i, i) = IntPoly::constant(1);
        comp.at(l + i, i) = IntPoly::constant(1);
    }
    return {inc, comp};
}

EpsForm direct_sum(const EpsForm& f, const EpsForm& g) {
    if (f.epsilon != g.epsilon) throw std::invalid_argument("direct_sum: sign mismatch");
    return {f.epsilon, block_diag(f.psi, g.psi)};
}

LagrangianWitness direct_sum_witness(const LagrangianWitness& a, const LagrangianWitness& b) {
    return {block_diag(a.inclusion, b.inclusion), block_diag(a.complement, b.complement)};
}

EpsForm assemble_split(const SplitForm& s) {
    int l = s.mu.rows;
    if (s.mu.cols != l || s.nu.rows != l || s.nu.cols != l)
        throw std::invalid_argument("assemble_split: block shape mismatch");
    Mat psi(2 * l, 2 * l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            psi.at(i, j) = s.mu.at(i, j);
            psi.at(l + i, l + j) = s.nu.at(i, j);
        }
    for (int i = 0; i < l; ++i) psi.at(i, l + i) = IntPoly::constant(1);
    return {s.epsilon, psi};
}

bool is_chi_equivalent(const Mat& a, const Mat& b, int epsilon) {
    Mat d = mat_sub(a, b);
    if (epsilon == 1) {
        // chi - chi^t: skew-symmetric
        return is_zero(mat_add(d, transpose(d)));
    }
    // chi + chi^t: symmetric with even diagonal
    return is_quad(d);
}

} // namespace arfcalc
