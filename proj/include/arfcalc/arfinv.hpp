#ifndef ARFCALC_ARFINV_HPP
#define ARFCALC_ARFINV_HPP

#include "arfcalc/forms.hpp"
#include "arfcalc/gf2.hpp"
#include "arfcalc/linkforms.hpp"
#include "arfcalc/qnormal.hpp"

namespace arfcalc {

/// The classifying map g: L -> A[x]^2 built column-by-column from the
/// diagonal classes of mu via the Tate decomposition, with 0/1 lifts.
Mat bundle_map_from_diagonal(const Mat& mu);

/// Generalized Arf invariant of a split (-1)-quadratic form over Z[x]:
/// the Q_3 class of g nu g^t.
Q3ClassZx generalized_arf_split(const SplitForm& s);

/// Generalized Arf invariant of (K, psi; L): split coordinates followed
/// by generalized_arf_split.
Q3ClassZx generalized_arf_form(const EpsForm& f, const LagrangianWitness& w);

/// Linking Arf invariant of a resolved quadratic linking form with
/// lagrangian over (Z[x], (2)^infty): the Q_0 class of f0 phi f0^t with
/// f0 = (p; q) from the Tate decompositions of mu on the generators.
Q0ClassZx linking_arf(const LinkingResolution& res, const std::vector<ResPoly>& mu_values);
/// Same with caller-chosen integral lifts p, q (each congruent mod 2 to
/// the Tate decomposition of the corresponding mu value).
Q0ClassZx linking_arf_with_lifts(const LinkingResolution& res, const std::vector<ResPoly>& mu_values,
                                 const std::vector<IntPoly>& p, const std::vector<IntPoly>& q);

/// Boundary maps of the hyperquadratic L-groups into forms/formations.
EpsForm boundary_q3_to_L2(const Mat& m, const Mat& x);
EpsForm boundary_q1_to_L0(const Mat& n, const Mat& x);
SFormation boundary_q0_to_formation(const Mat& m, const Mat& x);

/// Convenience wrappers for the 1-even ring Z (r = 1, X = (1)).
EpsForm boundary_q3_to_L2_Z(const Int& a);
EpsForm boundary_q1_to_L0_Z(const Int& a);
SFormation boundary_q0_to_formation_Z(const Int& a);

} // namespace arfcalc

#endif
