#ifndef ARFCALC_FORMS_HPP
#define ARFCALC_FORMS_HPP

#include "arfcalc/matrix.hpp"

namespace arfcalc {

/// epsilon-quadratic form: a representative matrix psi considered up to
/// psi ~ psi + chi - epsilon chi^t; its symmetrization is psi + epsilon psi^t.
struct EpsForm {
    int epsilon = -1; // +1 or -1
    Mat psi;

    int dim() const { return psi.rows; }
};

/// Lagrangian with an explicit direct complement: n x l inclusion and
/// complement column matrices with [inclusion | complement] unimodular.
struct LagrangianWitness {
    Mat inclusion;
    Mat complement;
};

/// Form in split coordinates (L + L*, (mu 1; 0 nu)) with
/// mu + eps mu^t = 0 and nu + eps nu^t = 0.
struct SplitForm {
    int epsilon = -1;
    Mat mu;
    Mat nu;
};

/// Result of split_coordinates: the split form plus the basis matrix T
/// with T^t psi T equal to (mu 1; 0 nu) up to chi - eps chi^t.
struct SplitResult {
    SplitForm form;
    Mat basis;
};

Mat symmetrize(const EpsForm& f);
bool is_nonsingular(const EpsForm& f);

/// Symmetrization-lagrangian test: inclusion^t (psi + eps psi^t) inclusion = 0
/// and [inclusion | complement] unimodular.
bool verify_lagrangian(const EpsForm& f, const LagrangianWitness& w);
/// Stronger predicate: additionally psi restricted to L is a
/// (-epsilon)-symmetrization, i.e. the lagrangian condition on psi(x)(x).
bool is_quadratic_lagrangian(const EpsForm& f, const LagrangianWitness& w);

/// Change basis by [inclusion | complement] and adjust the complement so
/// psi becomes (mu 1; 0 nu). Requires verify_lagrangian and is_nonsingular.
SplitResult split_coordinates(const EpsForm& f, const LagrangianWitness& w);

EpsForm hyperbolic(int l, int epsilon);
LagrangianWitness standard_witness(int l);
EpsForm direct_sum(const EpsForm& f, const EpsForm& g);
/// Witness for the evident lagrangian of a direct sum.
LagrangianWitness direct_sum_witness(const LagrangianWitness& a, const LagrangianWitness& b);

/// Reassemble a split form as the 2l x 2l matrix (mu 1; 0 nu).
EpsForm assemble_split(const SplitForm& s);

/// Whether a - b lies in {chi - eps chi^t}: for eps = -1 this means
/// symmetric with even diagonal, for eps = +1 skew-symmetric.
bool is_chi_equivalent(const Mat& a, const Mat& b, int epsilon);

} // namespace arfcalc

#endif
