#ifndef ARFCALC_GF2_HPP
#define ARFCALC_GF2_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace arfcalc {

/// Dense matrix over GF(2), rows as bitmasks (up to 32 columns).
struct GF2Mat {
    int rows = 0;
    int cols = 0;
    std::vector<uint32_t> r;

    GF2Mat() = default;
    GF2Mat(int nr, int nc) : rows(nr), cols(nc), r(nr, 0) {}
    int get(int i, int j) const { return (r[i] >> j) & 1u; }
    void set(int i, int j, int v) {
        if (v)
            r[i] |= 1u << j;
        else
            r[i] &= ~(1u << j);
    }
};

/// Solve m v = rhs over GF(2); returns false if inconsistent.
/// Free variables are set to 0.
bool gf2_solve(const GF2Mat& m, const std::vector<int>& rhs, std::vector<int>& sol);
int gf2_rank(GF2Mat m);

/// Quadratic form over Z_2: q(v) = v psi v^t with arbitrary psi.
struct GF2Form {
    int n = 0;
    std::vector<uint32_t> psi; // rows of psi

    GF2Form() = default;
    explicit GF2Form(int dim) : n(dim), psi(dim, 0) {}
    static GF2Form from_bits(const std::vector<std::vector<int>>& grid);

    int get(int i, int j) const { return (psi[i] >> j) & 1u; }
    void set(int i, int j, int v) {
        if (v)
            psi[i] |= 1u << j;
        else
            psi[i] &= ~(1u << j);
    }

    /// q(v) = v psi v^t
    int quad(uint32_t v) const;
    /// lambda(u, v) with lambda = psi + psi^t
    int bilinear(uint32_t u, uint32_t v) const;
    /// lambda = psi + psi^t nonsingular?
    bool symmetrization_nonsingular() const;
};

/// Arf invariant sum psi(e_i,e_i) psi(e*_i,e*_i); throws if the bases
/// violate the lagrangian / dual-basis conditions.
int classical_arf(const GF2Form& f, const std::vector<uint32_t>& e, const std::vector<uint32_t>& estar);

/// Complete a lagrangian basis e of psi + psi^t to a dual isotropic
/// basis e* with lambda(e*_i, e_j) = delta_ij, lambda(e*_i, e*_j) = 0.
std::vector<uint32_t> symplectic_complete(const GF2Form& f, const std::vector<uint32_t>& e);

/// A symplectic basis (e, e*) for the nonsingular alternating form
/// psi + psi^t; e spans a lagrangian.
std::pair<std::vector<uint32_t>, std::vector<uint32_t>> symplectic_basis(const GF2Form& f);

} // namespace arfcalc

#endif
