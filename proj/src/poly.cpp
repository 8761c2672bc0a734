#include "arfcalc/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace arfcalc {

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.emplace_back(v);
    normalize();
}

IntPoly IntPoly::constant(const Int& v) {
    IntPoly p;
    if (v != 0) p.c.push_back(v);
    return p;
}

IntPoly IntPoly::monomial(const Int& v, std::size_t degree) {
    IntPoly p;
    if (v != 0) {
        p.c.assign(degree + 1, Int(0));
        p.c[degree] = v;
    }
    return p;
}

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string IntPoly::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << "]";
    return os.str();
}

ResPoly::ResPoly(int m, std::vector<int> coeffs) : modulus(m), c(std::move(coeffs)) {
    normalize();
}

void ResPoly::normalize() {
    for (auto& v : c) {
        v %= modulus;
        if (v < 0) v += modulus;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string ResPoly::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << "] mod " << modulus;
    return os.str();
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
    r.normalize();
    return r;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Int(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
    r.normalize();
    return r;
}

IntPoly poly_neg(const IntPoly& a) {
    IntPoly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

IntPoly poly_scale(const Int& k, const IntPoly& a) {
    if (k == 0) return IntPoly();
    IntPoly r = a;
    for (auto& v : r.c) v *= k;
    return r;
}

IntPoly poly_shift(const IntPoly& a, std::size_t k) {
    if (a.is_zero()) return a;
    IntPoly r;
    r.c.assign(a.c.size() + k, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
    return r;
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw std::domain_error("poly_divexact: not divisible");
    IntPoly r = a;
    IntPoly q;
    q.c.assign(a.degree() - b.degree() + 1, Int(0));
    const Int& lead = b.c.back();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Int t = r.c.back() / lead;
        if (t * lead != r.c.back()) throw std::domain_error("poly_divexact: not divisible");
        std::size_t shift = r.degree() - b.degree();
        q.c[shift] = t;
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= t * b.c[i];
        r.normalize();
    }
    if (!r.is_zero()) throw std::domain_error("poly_divexact: not divisible");
    q.normalize();
    return q;
}

ResPoly reduce_mod(const IntPoly& a, int m) {
    if (m != 2 && m != 4 && m != 8) throw std::invalid_argument("reduce_mod: modulus must be 2, 4 or 8");
    ResPoly r(m);
    r.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        Int v = a.c[i] % m;
        if (v < 0) v += m;
        r.c[i] = static_cast<int>(v);
    }
    r.normalize();
    return r;
}

bool is_even_poly(const IntPoly& a) {
    for (const auto& v : a.c)
        if ((v & 1) != 0) return false;
    return true;
}

IntPoly half(const IntPoly& a) {
    IntPoly r = a;
    for (auto& v : r.c) {
        if ((v & 1) != 0) throw std::domain_error("half: polynomial has an odd coefficient");
        v >>= 1;
    }
    return r;
}

ResPoly res_add(const ResPoly& a, const ResPoly& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("res_add: modulus mismatch");
    ResPoly r(a.modulus);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
    r.normalize();
    return r;
}

ResPoly res_neg(const ResPoly& a) {
    ResPoly r = a;
    for (auto& v : r.c) v = -v;
    r.normalize();
    return r;
}

IntPoly lift(const ResPoly& a) {
    IntPoly r;
    r.c.reserve(a.c.size());
    for (int v : a.c) r.c.emplace_back(v);
    r.normalize();
    return r;
}

std::pair<ResPoly, ResPoly> tate_decompose(const TateClass& a) {
    if (a.modulus != 2) throw std::invalid_argument("tate_decompose: class must be mod 2");
    ResPoly p(2), q(2);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        if (i % 2 == 0) {
            p.c.resize(std::max(p.c.size(), i / 2 + 1), 0);
            p.c[i / 2] = 1;
        } else {
            q.c.resize(std::max(q.c.size(), i / 2 + 1), 0);
            q.c[i / 2] = 1;
        }
    }
    p.normalize();
    q.normalize();
    return {p, q};
}

TateClass tate_compose(const ResPoly& p, const ResPoly& q) {
    if (p.modulus != 2 || q.modulus != 2) throw std::invalid_argument("tate_compose: inputs must be mod 2");
    TateClass a(2);
    // p^2 contributes to even degrees, q^2 x to odd degrees
    for (std::size_t i = 0; i < p.c.size(); ++i)
        if (p.c[i]) {
            a.c.resize(std::max(a.c.size(), 2 * i + 1), 0);
            a.c[2 * i] ^= 1;
        }
    for (std::size_t i = 0; i < q.c.size(); ++i)
        if (q.c[i]) {
            a.c.resize(std::max(a.c.size(), 2 * i + 2), 0);
            a.c[2 * i + 1] ^= 1;
        }
    a.normalize();
    return a;
}

} // namespace arfcalc
