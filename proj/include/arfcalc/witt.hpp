#ifndef ARFCALC_WITT_HPP
#define ARFCALC_WITT_HPP

#include "arfcalc/forms.hpp"

namespace arfcalc {

/// Symmetric form over Z (dense integer matrix).
struct IntSymForm {
    int n = 0;
    std::vector<Int> a; // row-major n*n

    IntSymForm() = default;
    explicit IntSymForm(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}
    static IntSymForm from_ints(const std::vector<std::vector<long long>>& grid);

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
    bool is_symmetric() const;
};

Int int_det(const IntSymForm& f);

/// Exact signature by congruence diagonalization over the rationals,
/// with hyperbolic handling of zero diagonal entries. Throws on
/// singular input.
int signature(const IntSymForm& f);

/// v with phi(u,u) = phi(u,v) mod 2 for all u; requires odd determinant.
std::vector<Int> characteristic_element(const IntSymForm& f);

/// phi(v,v) mod 8 for a characteristic element v; requires det = +-1.
int signature_mod8(const IntSymForm& f);

/// Witt class in L_2(Z) = Z_2 of a (-1)-quadratic form over Z with a
/// lagrangian witness for psi - psi^t: the Arf invariant of the mod 2
/// reduction.
int arf_L2(const EpsForm& f, const LagrangianWitness& w);

/// The rank-8 positive definite even unimodular form.
IntSymForm e8_form();

IntSymForm direct_sum(const IntSymForm& f, const IntSymForm& g);
/// E^t f E for an integer matrix E given row-major.
IntSymForm congruence(const IntSymForm& f, const std::vector<Int>& e_rowmajor);

} // namespace arfcalc

#endif
