#ifndef ARFCALC_LINKFORMS_HPP
#define ARFCALC_LINKFORMS_HPP

#include "arfcalc/matrix.hpp"

namespace arfcalc {

/// Element of Z[1/2][x]: num / 2^k, canonical when k = 0 or num has an
/// odd coefficient.
struct Dyadic {
    IntPoly num;
    int k = 0;

    Dyadic() = default;
    Dyadic(IntPoly n, int denom_exp) : num(std::move(n)), k(denom_exp) { normalize(); }

    void normalize();
    bool is_zero() const { return num.is_zero(); }
    bool operator==(const Dyadic& o) const { return k == o.k && num == o.num; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }
    std::string str() const;
};

Dyadic dy_add(const Dyadic& a, const Dyadic& b);
Dyadic dy_neg(const Dyadic& a);
/// Canonical representative mod 2^e Z[x] (e = 0 for S^{-1}A/A, e = 1 for
/// S^{-1}A/2A): coefficients reduced into [0, 2^{k+e}).
Dyadic dy_mod(const Dyadic& a, int e);

/// Resolution data (d, delta, phi) presenting a quadratic linking form
/// with lagrangian over (Z[x], (2)^infty):
///   det(d) = +-2^m, d^t delta d in Quad, phi - phi delta phi in Quad.
struct LinkingResolution {
    Mat d;
    Mat delta;
    Mat phi;

    int size() const { return d.rows; }
};

/// Throws std::domain_error naming the violated invariant.
void validate_resolution(const LinkingResolution& res);

/// lambda((x1,x0),(y1,y0)) in Z[1/2][x]/Z[x], canonical representative.
Dyadic eval_lambda(const LinkingResolution& res, const std::vector<IntPoly>& x1,
                   const std::vector<IntPoly>& x0, const std::vector<IntPoly>& y1,
                   const std::vector<IntPoly>& y0);
/// mu((x1,x0)) in Z[1/2][x]/2Z[x], canonical representative.
Dyadic eval_mu(const LinkingResolution& res, const std::vector<IntPoly>& x1,
               const std::vector<IntPoly>& x0);

/// (-1)-quadratic S-formation (H_-(A^n); A^n, G).
struct SFormation {
    int rank = 0; // n = half dimension; inclusions are 2n x n
    Mat f_inclusion;
    Mat g_inclusion;
};

/// G spans a lagrangian of the hyperbolic (-1)-quadratic form and
/// [F|G] has determinant +-2^m.
void validate_s_formation(const SFormation& s);
/// Lagrangian conditions only (no S-invertibility); boundary images
/// may fail the determinant condition.
bool formation_g_is_lagrangian(const SFormation& s);

/// The canonical S-formation of a numerator matrix M (Sym_r, M - MXM
/// even-diagonal): (H_-(A^{2r}); A^{2r}, im((I 0; -2X I-XM),(0 2I; 2I M))).
SFormation canonical_formation(const Mat& m, const Mat& x);

/// The order-2 linking form of M with all entries in 2Z[x], presented by
/// the resolution d = 2I, delta = X, phi = M; the lagrangian U is the
/// x0-coordinate block, with mu|_U the diagonal classes of X.
struct Order2Form {
    LinkingResolution res;
    std::vector<ResPoly> mu_values; // mod 2 classes of mu on the lagrangian generators
};
Order2Form canonical_order2_form(const Mat& m, const Mat& x);

} // namespace arfcalc

#endif
