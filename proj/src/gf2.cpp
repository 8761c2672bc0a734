#include "arfcalc/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace arfcalc {

bool gf2_solve(const GF2Mat& m, const std::vector<int>& rhs, std::vector<int>& sol) {
    int nr = m.rows, nc = m.cols;
    std::vector<uint64_t> aug(nr);
    for (int i = 0; i < nr; ++i) aug[i] = m.r[i] | (static_cast<uint64_t>(rhs[i] & 1) << nc);
    std::vector<int> pivot_col(nr, -1);
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int p = -1;
        for (int i = row; i < nr; ++i)
            if ((aug[i] >> col) & 1) { p = i; break; }
        if (p < 0) continue;
        std::swap(aug[row], aug[p]);
        for (int i = 0; i < nr; ++i)
            if (i != row && ((aug[i] >> col) & 1)) aug[i] ^= aug[row];
        pivot_col[row] = col;
        ++row;
    }
    for (int i = row; i < nr; ++i)
        if ((aug[i] >> nc) & 1) return false;
    sol.assign(nc, 0);
    for (int i = 0; i < row; ++i) sol[pivot_col[i]] = static_cast<int>((aug[i] >> nc) & 1);
    return true;
}

int gf2_rank(GF2Mat m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int p = -1;
        for (int i = rank; i < m.rows; ++i)
            if ((m.r[i] >> col) & 1) { p = i; break; }
        if (p < 0) continue;
        std::swap(m.r[rank], m.r[p]);
        for (int i = 0; i < m.rows; ++i)
            if (i != rank && ((m.r[i] >> col) & 1)) m.r[i] ^= m.r[rank];
        ++rank;
    }
    return rank;
}

GF2Form GF2Form::from_bits(const std::vector<std::vector<int>>& grid) {
    GF2Form f(static_cast<int>(grid.size()));
    for (int i = 0; i < f.n; ++i) {
        if (static_cast<int>(grid[i].size()) != f.n) throw std::invalid_argument("from_bits: ragged grid");
        for (int j = 0; j < f.n; ++j) f.set(i, j, grid[i][j] & 1);
    }
    return f;
}

int GF2Form::quad(uint32_t v) const {
    int acc = 0;
    for (int i = 0; i < n; ++i)
        if ((v >> i) & 1) acc ^= std::popcount(psi[i] & v) & 1;
    return acc;
}

int GF2Form::bilinear(uint32_t u, uint32_t v) const {
    int acc = 0;
    for (int i = 0; i < n; ++i) {
        if ((u >> i) & 1) acc ^= std::popcount(psi[i] & v) & 1;
        if ((v >> i) & 1) acc ^= std::popcount(psi[i] & u) & 1;
    }
    return acc;
}

bool GF2Form::symmetrization_nonsingular() const {
    GF2Mat lam(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lam.set(i, j, get(i, j) ^ get(j, i));
    return gf2_rank(lam) == n;
}

int classical_arf(const GF2Form& f, const std::vector<uint32_t>& e, const std::vector<uint32_t>& estar) {
    std::size_t l = e.size();
    if (estar.size() != l || static_cast<int>(2 * l) != f.n)
        throw std::invalid_argument("classical_arf: basis sizes must be n/2");
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            if (f.bilinear(e[i], e[j]) != 0)
                throw std::invalid_argument("classical_arf: e is not isotropic");
            if (f.bilinear(estar[i], estar[j]) != 0)
                throw std::invalid_argument("classical_arf: e* is not isotropic");
            if (f.bilinear(estar[i], e[j]) != (i == j ? 1 : 0))
                throw std::invalid_argument("classical_arf: e* is not dual to e");
        }
    int acc = 0;
    for (std::size_t i = 0; i < l; ++i) acc ^= f.quad(e[i]) & f.quad(estar[i]);
    return acc;
}

std::vector<uint32_t> symplectic_complete(const GF2Form& f, const std::vector<uint32_t>& e) {
    int n = f.n;
    std::size_t l = e.size();
    if (static_cast<int>(2 * l) != n) throw std::invalid_argument("symplectic_complete: basis size must be n/2");
    if (!f.symmetrization_nonsingular())
        throw std::invalid_argument("symplectic_complete: singular symmetrization");
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            if (f.bilinear(e[i], e[j]) != 0)
                throw std::invalid_argument("symplectic_complete: e is not isotropic");
    // solve for u_i with lambda(u_i, e_j) = delta_ij
    GF2Mat sys(static_cast<int>(l), n);
    for (std::size_t j = 0; j < l; ++j)
        for (int k = 0; k < n; ++k) sys.set(static_cast<int>(j), k, f.bilinear(1u << k, e[j]));
    std::vector<uint32_t> u(l, 0);
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<int> rhs(l, 0);
        rhs[i] = 1;
        std::vector<int> sol;
        if (!gf2_solve(sys, rhs, sol)) throw std::invalid_argument("symplectic_complete: lagrangian is degenerate");
        uint32_t v = 0;
        for (int k = 0; k < n; ++k)
            if (sol[k]) v |= 1u << k;
        u[i] = v;
    }
    // make the duals isotropic: e*_i = u_i + sum_{j>i} lambda(u_i,u_j) e_j
    std::vector<uint32_t> estar = u;
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j)
            if (f.bilinear(u[i], u[j])) estar[i] ^= e[j];
    return estar;
}

std::pair<std::vector<uint32_t>, std::vector<uint32_t>> symplectic_basis(const GF2Form& f) {
    int n = f.n;
    if (n % 2 != 0) throw std::invalid_argument("symplectic_basis: odd dimension");
    if (!f.symmetrization_nonsingular())
        throw std::invalid_argument("symplectic_basis: singular symmetrization");
    std::vector<uint32_t> pool;
    for (int i = 0; i < n; ++i) pool.push_back(1u << i);
    std::vector<uint32_t> a, b;
    while (!pool.empty()) {
        uint32_t u = pool.back();
        pool.pop_back();
        int partner = -1;
        for (std::size_t k = 0; k < pool.size(); ++k)
            if (f.bilinear(u, pool[k])) { partner = static_cast<int>(k); break; }
        if (partner < 0) continue; // u pairs trivially with the rest; skip (cannot happen: nonsingular)
        uint32_t v = pool[partner];
        pool.erase(pool.begin() + partner);
        // reduce the remaining pool off the hyperbolic plane (u, v)
        for (auto& w : pool) {
            if (f.bilinear(w, v)) w ^= u;
            if (f.bilinear(w, u)) w ^= v;
        }
        a.push_back(u);
        b.push_back(v);
    }
    if (2 * a.size() != static_cast<std::size_t>(n)) throw std::logic_error("symplectic_basis: reduction incomplete");
    // a spans a lagrangian; fix duality lambda(b_i,a_j) = delta_ij holds by construction
    return {a, b};
}

} // namespace arfcalc
