#include "arfcalc/witt.hpp"

#include "arfcalc/gf2.hpp"

#include <stdexcept>

namespace arfcalc {

IntSymForm IntSymForm::from_ints(const std::vector<std::vector<long long>>& grid) {
    IntSymForm f(static_cast<int>(grid.size()));
    for (int i = 0; i < f.n; ++i) {
        if (static_cast<int>(grid[i].size()) != f.n) throw std::invalid_argument("from_ints: ragged grid");
        for (int j = 0; j < f.n; ++j) f.at(i, j) = grid[i][j];
    }
    return f;
}

bool IntSymForm::is_symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Int int_det(const IntSymForm& f) {
    int n = f.n;
    if (n == 0) return 1;
    // Bareiss over Z
    std::vector<Int> w = f.a;
    auto at = [&](int i, int j) -> Int& { return w[static_cast<std::size_t>(i) * n + j]; };
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return sign < 0 ? Int(-at(n - 1, n - 1)) : at(n - 1, n - 1);
}

namespace {

struct Rat {
    Int num, den; // den > 0, gcd(num, den) = 1

    Rat() : num(0), den(1) {}
    Rat(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    explicit Rat(const Int& n) : num(n), den(1) {}

    void normalize() {
        if (den < 0) {
            den = -den;
            num = -num;
        }
        if (num == 0) {
            den = 1;
            return;
        }
        Int g = boost::multiprecision::gcd(num < 0 ? Int(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    bool is_zero() const { return num == 0; }
    int sign() const { return num == 0 ? 0 : (num < 0 ? -1 : 1); }
};

Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::domain_error("rational division by zero");
    return Rat(a.num * b.den, a.den * b.num);
}

} // namespace

int signature(const IntSymForm& f) {
    if (!f.is_symmetric()) throw std::invalid_argument("signature: matrix not symmetric");
    if (int_det(f) == 0) throw std::domain_error("signature: singular form");
    int n = f.n;
    std::vector<Rat> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = Rat(f.at(i, j));
    auto at = [&](int i, int j) -> Rat& { return a[static_cast<std::size_t>(i) * n + j]; };

    std::vector<int> act(n);
    for (int i = 0; i < n; ++i) act[i] = i;
    int sig = 0;
    while (!act.empty()) {
        int pi = -1;
        for (std::size_t k = 0; k < act.size(); ++k)
            if (!at(act[k], act[k]).is_zero()) { pi = static_cast<int>(k); break; }
        if (pi >= 0) {
            int p = act[pi];
            sig += at(p, p).sign();
            act.erase(act.begin() + pi);
            for (int i : act) {
                if (at(i, p).is_zero()) continue;
                Rat c = at(i, p) / at(p, p);
                for (int j : act) at(i, j) = at(i, j) - c * at(p, j);
            }
        } else {
            // all active diagonal entries zero: split off a hyperbolic pair
            int p = -1, q = -1;
            for (std::size_t k = 0; k < act.size() && p < 0; ++k)
                for (std::size_t l = k + 1; l < act.size(); ++l)
                    if (!at(act[k], act[l]).is_zero()) {
                        p = act[k];
                        q = act[l];
                        break;
                    }
            if (p < 0) break; // zero block; contributes nothing (cannot happen when nonsingular)
            Rat h = at(p, q);
            std::vector<int> rest;
            for (int i : act)
                if (i != p && i != q) rest.push_back(i);
            // project the rest off the hyperbolic plane spanned by p, q:
            // A'_ij = A_ij - (A_ip A_jq + A_iq A_jp)/h
            for (std::size_t k = 0; k < rest.size(); ++k)
                for (std::size_t l = k; l < rest.size(); ++l) {
                    int i = rest[k], j = rest[l];
                    Rat v = at(i, j) - (at(i, p) * at(j, q) + at(i, q) * at(j, p)) / h;
                    at(i, j) = v;
                    at(j, i) = v;
                }
            act = rest;
            // the split-off block (0 h; h 0) has signature 0
        }
    }
    return sig;
}

std::vector<Int> characteristic_element(const IntSymForm& f) {
    if (!f.is_symmetric()) throw std::invalid_argument("characteristic_element: matrix not symmetric");
    Int d = int_det(f);
    if ((d & 1) == 0) throw std::domain_error("characteristic_element: determinant is even");
    int n = f.n;
    GF2Mat m(n, n);
    std::vector<int> rhs(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.set(i, j, static_cast<int>(f.at(i, j) & 1));
        rhs[i] = static_cast<int>(f.at(i, i) & 1);
    }
    std::vector<int> v;
    if (!gf2_solve(m, rhs, v)) throw std::domain_error("characteristic_element: mod 2 system singular");
    std::vector<Int> out(n);
    for (int i = 0; i < n; ++i) out[i] = v[i];
    return out;
}

int signature_mod8(const IntSymForm& f) {
    Int d = int_det(f);
    if (d != 1 && d != -1) throw std::domain_error("signature_mod8: form not unimodular");
    std::vector<Int> v = characteristic_element(f);
    Int q = 0;
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j) q += v[i] * f.at(i, j) * v[j];
    Int r = q % 8;
    if (r < 0) r += 8;
    return static_cast<int>(r);
}

int arf_L2(const EpsForm& f, const LagrangianWitness& w) {
    if (f.epsilon != -1) throw std::invalid_argument("arf_L2: form must be (-1)-quadratic");
    for (const auto& p : f.psi.e)
        if (p.degree() > 0) throw std::invalid_argument("arf_L2: form must be over Z");
    if (!verify_lagrangian(f, w)) throw std::invalid_argument("arf_L2: witness fails the lagrangian check");
    int n = f.dim(), l = n / 2;
    GF2Form g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((f.psi.at(i, j).coeff(0) & 1) != 0) g.set(i, j, 1);
    std::vector<uint32_t> e(l, 0);
    for (int j = 0; j < l; ++j)
        for (int i = 0; i < n; ++i)
            if ((w.inclusion.at(i, j).coeff(0) & 1) != 0) e[j] |= 1u << i;
    std::vector<uint32_t> estar = symplectic_complete(g, e);
    return classical_arf(g, e, estar);
}

IntSymForm e8_form() {
    return IntSymForm::from_ints({
        {2, -1, 0, 0, 0, 0, 0, 0},
        {-1, 2, -1, 0, 0, 0, 0, 0},
        {0, -1, 2, -1, 0, 0, 0, 0},
        {0, 0, -1, 2, -1, 0, 0, 0},
        {0, 0, 0, -1, 2, -1, 0, -1},
        {0, 0, 0, 0, -1, 2, -1, 0},
        {0, 0, 0, 0, 0, -1, 2, 0},
        {0, 0, 0, 0, -1, 0, 0, 2},
    });
}

IntSymForm direct_sum(const IntSymForm& f, const IntSymForm& g) {
    IntSymForm r(f.n + g.n);
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j) r.at(i, j) = f.at(i, j);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) r.at(f.n + i, f.n + j) = g.at(i, j);
    return r;
}

IntSymForm congruence(const IntSymForm& f, const std::vector<Int>& e) {
    int n = f.n;
    if (static_cast<int>(e.size()) != n * n) throw std::invalid_argument("congruence: size mismatch");
    IntSymForm tmp(n), r(n);
    // tmp = f * E
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int k = 0; k < n; ++k) s += f.at(i, k) * e[static_cast<std::size_t>(k) * n + j];
            tmp.at(i, j) = s;
        }
    // r = E^t * tmp
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int k = 0; k < n; ++k) s += e[static_cast<std::size_t>(k) * n + i] * tmp.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

} // namespace arfcalc
