#ifndef ARFCALC_POLY_HPP
#define ARFCALC_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace arfcalc {

using Int = boost::multiprecision::cpp_int;

/// Dense polynomial over Z, coefficients in ascending degree.
/// Normalized: no trailing zero coefficient; the zero polynomial is
/// the empty coefficient list.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly constant(const Int& v);
    static IntPoly monomial(const Int& v, std::size_t degree);

    void normalize();
    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Int coeff(std::size_t i) const { return i < c.size() ? c[i] : Int(0); }

    bool operator==(const IntPoly& o) const { return c == o.c; }
    bool operator!=(const IntPoly& o) const { return c != o.c; }

    std::string str() const;
};

/// Polynomial over Z_m for m in {2,4,8}; coefficients reduced into [0,m).
struct ResPoly {
    int modulus = 2;
    std::vector<int> c;

    ResPoly() = default;
    explicit ResPoly(int m) : modulus(m) {}
    ResPoly(int m, std::vector<int> coeffs);

    void normalize();
    bool is_zero() const { return c.empty(); }
    int coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    bool operator==(const ResPoly& o) const { return modulus == o.modulus && c == o.c; }
    bool operator!=(const ResPoly& o) const { return !(*this == o); }

    std::string str() const;
};

/// Element of the Tate cohomology ring Hhat^0(Z_2; Z[x]) = Z_2[x].
using TateClass = ResPoly;

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_neg(const IntPoly& a);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_scale(const Int& k, const IntPoly& a);
// a * x^k
IntPoly poly_shift(const IntPoly& a, std::size_t k);

/// Exact division; throws std::domain_error if b does not divide a.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);

/// Reduce coefficientwise into [0,m); m must be one of {2,4,8} (any
/// positive power of two is accepted internally).
ResPoly reduce_mod(const IntPoly& a, int m);

bool is_even_poly(const IntPoly& a);
/// Exact halving; contract violation if any coefficient is odd.
IntPoly half(const IntPoly& a);

ResPoly res_add(const ResPoly& a, const ResPoly& b);
ResPoly res_neg(const ResPoly& a);
/// Lift to Z[x] with coefficients in [0, modulus).
IntPoly lift(const ResPoly& a);

/// Inverse of tate_compose: a = p^2 + q^2 x in Z_2[x] with
/// p_j = a_{2j}, q_j = a_{2j+1}.
std::pair<ResPoly, ResPoly> tate_decompose(const TateClass& a);
/// (p,q) -> p^2 + q^2 x over Z_2[x] (squaring is Frobenius).
TateClass tate_compose(const ResPoly& p, const ResPoly& q);

} // namespace arfcalc

#endif
