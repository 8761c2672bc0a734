#ifndef ARFCALC_QNORMAL_HPP
#define ARFCALC_QNORMAL_HPP

#include "arfcalc/matrix.hpp"

#include <array>

namespace arfcalc {

enum class RingTag { Z, Zx };

/// The diagonal basis matrix X: (1) over Z, diag(1, x) over Z[x].
Mat xmatrix(RingTag ring);
int xrank(RingTag ring);

/// Normal form for Q_0 over Z[x]: Z_8 + Z_4[x] + Z_2[x]^3.
struct Q0ClassZx {
    int s = 0;      // mod 8
    ResPoly t{4};   // mod 4
    ResPoly u1{2};  // mod 2
    ResPoly u2{2};
    ResPoly u3{2};

    bool is_zero() const { return s == 0 && t.is_zero() && u1.is_zero() && u2.is_zero() && u3.is_zero(); }
    bool operator==(const Q0ClassZx& o) const {
        return s == o.s && t == o.t && u1 == o.u1 && u2 == o.u2 && u3 == o.u3;
    }
    bool operator!=(const Q0ClassZx& o) const { return !(*this == o); }
    std::string str() const;
};

/// Normal form for Q_3 over Z[x]: Z_2[x].
struct Q3ClassZx {
    ResPoly value{2};

    bool is_zero() const { return value.is_zero(); }
    bool operator==(const Q3ClassZx& o) const { return value == o.value; }
    bool operator!=(const Q3ClassZx& o) const { return !(*this == o); }
    std::string str() const { return value.str(); }
};

/// Normal form for the hyperquadratic L-groups of Z.
struct QnClassZ {
    int n = 0;     // dimension mod 4
    int value = 0; // mod 8 (n=0), mod 2 (n=1,3), 0 (n=2)

    bool operator==(const QnClassZ& o) const { return n == o.n && value == o.value; }
    bool operator!=(const QnClassZ& o) const { return !(*this == o); }
};

Q0ClassZx q_add(const Q0ClassZx& a, const Q0ClassZx& b);
Q3ClassZx q_add(const Q3ClassZx& a, const Q3ClassZx& b);
QnClassZ q_add(const QnClassZ& a, const QnClassZ& b);
template <class C> bool q_equal(const C& a, const C& b) { return a == b; }

/// Numerator membership for Q_0: M symmetric with M - MXM of even diagonal.
bool check_numerator_q0(const Mat& m, const Mat& x);

/// Coefficient isomorphisms for the twisted Q-groups of the rank-1 pieces.
/// f01: requires a - a_0 in 2Z[x]; f0x: requires c in 2Z[x].
struct F01Value {
    int s = 0;     // mod 8
    ResPoly a4{4};
    ResPoly a2{2};
};
F01Value f01(const IntPoly& a);
struct F0xValue {
    ResPoly a4{4};
    ResPoly a2{2};
};
F0xValue f0x(const IntPoly& c);
ResPoly fm1_1(const IntPoly& d);
ResPoly fm1_x(const IntPoly& d);

/// Reduce a symmetric 2x2 matrix over Z[x] to its Q_0 normal form.
/// Throws if the numerator condition fails or the off-diagonal entry is odd.
Q0ClassZx reduce_q0_Zx(const Mat& m);
/// Reduce a symmetric 2x2 matrix over Z[x] to its Q_3 normal form.
Q3ClassZx reduce_q3_Zx(const Mat& m);
/// Reduce a 2x2 matrix over Z[x] to its Q_1 normal form (a_0 mod 2).
/// Throws if the numerator conditions fail.
int reduce_q1_Zx(const Mat& n);
/// Hyperquadratic classes over Z: a mod 8 / mod 2 / 0 depending on n.
QnClassZ reduce_qn_Z(int n, const Int& a);

/// Right inverses of the reductions, used by the surjectivity checks.
Mat preimage_q0zx(const Q0ClassZx& cls);
Mat preimage_q3zx(const Q3ClassZx& cls);

/// Printable table of the hyperquadratic L-groups, n = 0..3.
std::array<std::string, 4> lgroups_table(RingTag ring);
/// Printable table of UNil_n(Z), n = 0..3.
std::array<std::string, 4> unil_table();

} // namespace arfcalc

#endif
