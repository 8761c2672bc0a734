#include "arfcalc/qnormal.hpp"

#include <sstream>
#include <stdexcept>

namespace arfcalc {

Mat xmatrix(RingTag ring) {
    if (ring == RingTag::Z) return Mat::from_ints({{1}});
    Mat x(2, 2);
    x.at(0, 0) = IntPoly::constant(1);
    x.at(1, 1) = IntPoly::monomial(1, 1);
    return x;
}

int xrank(RingTag ring) { return ring == RingTag::Z ? 1 : 2; }

std::string Q0ClassZx::str() const {
    std::ostringstream os;
    os << "(s=" << s << ", t=" << t.str() << ", u1=" << u1.str() << ", u2=" << u2.str()
       << ", u3=" << u3.str() << ")";
    return os.str();
}

Q0ClassZx q_add(const Q0ClassZx& a, const Q0ClassZx& b) {
    Q0ClassZx r;
    r.s = (a.s + b.s) % 8;
    r.t = res_add(a.t, b.t);
    r.u1 = res_add(a.u1, b.u1);
    r.u2 = res_add(a.u2, b.u2);
    r.u3 = res_add(a.u3, b.u3);
    return r;
}

Q3ClassZx q_add(const Q3ClassZx& a, const Q3ClassZx& b) { return {res_add(a.value, b.value)}; }

QnClassZ q_add(const QnClassZ& a, const QnClassZ& b) {
    if (a.n != b.n) throw std::invalid_argument("q_add: group mismatch");
    int m = a.n % 4 == 0 ? 8 : (a.n % 4 == 2 ? 1 : 2);
    return {a.n, (a.value + b.value) % m};
}

bool check_numerator_q0(const Mat& m, const Mat& x) {
    if (!is_symmetric(m)) return false;
    bool x_diag = true;
    for (int i = 0; i < x.rows && x_diag; ++i)
        for (int j = 0; j < x.cols; ++j)
            if (i != j && !x.at(i, j).is_zero()) {
                x_diag = false;
                break;
            }
    if (!x_diag) {
        Mat mxm = mat_mul(m, mat_mul(x, m));
        return is_quad(mat_sub(m, mxm));
    }
    // diagonal X: (MXM)_ii = sum_k M_ik^2 X_kk, and squaring mod 2 is the
    // Frobenius coefficient spread, so the even-diagonal test is linear-time
    for (int i = 0; i < m.rows; ++i) {
        ResPoly diag = reduce_mod(m.at(i, i), 2);
        for (int k = 0; k < m.rows; ++k) {
            ResPoly mik = reduce_mod(m.at(i, k), 2);
            ResPoly sq(2);
            if (!mik.is_zero()) {
                sq.c.assign(2 * mik.c.size() - 1, 0);
                for (std::size_t d = 0; d < mik.c.size(); ++d) sq.c[2 * d] = mik.c[d];
            }
            ResPoly xkk = reduce_mod(x.at(k, k), 2);
            ResPoly term(2);
            for (std::size_t a = 0; a < sq.c.size(); ++a) {
                if (!sq.c[a]) continue;
                for (std::size_t b = 0; b < xkk.c.size(); ++b) {
                    if (!xkk.c[b]) continue;
                    term.c.resize(std::max(term.c.size(), a + b + 1), 0);
                    term.c[a + b] ^= 1;
                }
            }
            diag = res_add(diag, term);
        }
        if (!diag.is_zero()) return false;
    }
    return true;
}

// Sum over the dyadic index chain (2i+1), 2(2i+1), 4(2i+1), ...
static Int dyadic_sum(const IntPoly& a, int i, int offset) {
    Int s = 0;
    for (long long idx = 2LL * i + 1; idx - offset <= a.degree(); idx *= 2)
        s += a.coeff(static_cast<std::size_t>(idx - offset));
    return s;
}

static int mod_small(const Int& v, int m) {
    Int r = v % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

static Int half_checked(const Int& v, const char* who) {
    if ((v & 1) != 0) throw std::domain_error(std::string(who) + ": inexact division by 2");
    return v >> 1;
}

F01Value f01(const IntPoly& a) {
    for (std::size_t k = 1; k < a.c.size(); ++k)
        if ((a.c[k] & 1) != 0) throw std::domain_error("f01: a - a_0 not in 2Z[x]");
    F01Value v;
    v.s = mod_small(a.coeff(0), 8);
    int dmax = a.degree();
    for (int i = 0; 2 * i + 1 <= dmax; ++i) {
        Int c = half_checked(dyadic_sum(a, i, 0), "f01");
        v.a4.c.resize(i + 1, 0);
        v.a4.c[i] = mod_small(c, 4);
    }
    for (int k = 0; 2 * k + 2 <= dmax; ++k) {
        Int c = half_checked(a.coeff(2 * k + 2), "f01");
        v.a2.c.resize(k + 1, 0);
        v.a2.c[k] = mod_small(c, 2);
    }
    v.a4.normalize();
    v.a2.normalize();
    return v;
}

F0xValue f0x(const IntPoly& c) {
    if (!is_even_poly(c)) throw std::domain_error("f0x: polynomial not in 2Z[x]");
    F0xValue v;
    int dmax = c.degree();
    for (int i = 0; 2 * i <= dmax; ++i) {
        Int s = half_checked(dyadic_sum(c, i, 1), "f0x");
        v.a4.c.resize(i + 1, 0);
        v.a4.c[i] = mod_small(s, 4);
    }
    for (int k = 0; 2 * k + 1 <= dmax; ++k) {
        Int s = half_checked(c.coeff(2 * k + 1), "f0x");
        v.a2.c.resize(k + 1, 0);
        v.a2.c[k] = mod_small(s, 2);
    }
    v.a4.normalize();
    v.a2.normalize();
    return v;
}

ResPoly fm1_1(const IntPoly& d) {
    ResPoly v(2);
    int dmax = d.degree();
    if (dmax >= 0) {
        v.c.resize(1, 0);
        v.c[0] = mod_small(d.coeff(0), 2);
    }
    for (int i = 0; 2 * i + 1 <= dmax; ++i) {
        int b = mod_small(dyadic_sum(d, i, 0), 2);
        if (b) {
            v.c.resize(std::max<std::size_t>(v.c.size(), i + 2), 0);
            v.c[i + 1] = 1;
        }
    }
    v.normalize();
    return v;
}

ResPoly fm1_x(const IntPoly& d) {
    ResPoly v(2);
    int dmax = d.degree();
    for (int i = 0; 2 * i <= dmax; ++i) {
        int b = mod_small(dyadic_sum(d, i, 1), 2);
        if (b) {
            v.c.resize(std::max<std::size_t>(v.c.size(), i + 1), 0);
            v.c[i] = 1;
        }
    }
    v.normalize();
    return v;
}

static void require_sym2(const Mat& m, const char* who) {
    if (m.rows != 2 || m.cols != 2) throw std::invalid_argument(std::string(who) + ": matrix must be 2x2");
    if (!is_symmetric(m)) throw std::invalid_argument(std::string(who) + ": matrix not symmetric");
}

Q0ClassZx reduce_q0_Zx(const Mat& m) {
    require_sym2(m, "reduce_q0_Zx");
    Mat x = xmatrix(RingTag::Zx);
    if (!check_numerator_q0(m, x)) throw std::domain_error("reduce_q0_Zx: M - MXM not even-diagonal");
    const IntPoly& b = m.at(0, 1);
    if (!is_even_poly(b)) throw std::domain_error("reduce_q0_Zx: off-diagonal entry is odd");
    // M + 2(N+N^t) - 4N^tXN with N = (0 -b/2; 0 0) diagonalizes M
    IntPoly a = m.at(0, 0);
    IntPoly cp = poly_sub(m.at(1, 1), poly_mul(b, b));
    F01Value fa = f01(a);
    F0xValue fc = f0x(cp);
    Q0ClassZx cls;
    cls.s = fa.s;
    cls.t = res_add(fa.a4, res_neg(fc.a4));
    ResPoly d2(2);
    d2.c.assign(fa.a4.c.begin(), fa.a4.c.end());
    d2.modulus = 2;
    d2.normalize();
    cls.u1 = d2;
    cls.u2 = fa.a2;
    cls.u3 = fc.a2;
    return cls;
}

Q3ClassZx reduce_q3_Zx(const Mat& m) {
    require_sym2(m, "reduce_q3_Zx");
    // M ~ diag(a - b^2 x, c - b^2) via L = (0 -b; -b 0); d = a + cx mod 2
    IntPoly d = poly_add(m.at(0, 0), poly_shift(m.at(1, 1), 1));
    return {fm1_1(d)};
}

int reduce_q1_Zx(const Mat& n) {
    if (n.rows != 2 || n.cols != 2) throw std::invalid_argument("reduce_q1_Zx: matrix must be 2x2");
    Mat sym = mat_add(n, transpose(n));
    if (!mat_is_even(sym)) throw std::domain_error("reduce_q1_Zx: N + N^t not in 2Sym_2");
    Mat x = xmatrix(RingTag::Zx);
    Mat q = mat_sub(mat_half(sym), mat_mul(transpose(n), mat_mul(x, n)));
    if (!is_quad(q)) throw std::domain_error("reduce_q1_Zx: (N+N^t)/2 - N^tXN not even-diagonal");
    return mod_small(n.at(0, 0).coeff(0), 2);
}

QnClassZ reduce_qn_Z(int n, const Int& a) {
    int nm = ((n % 4) + 4) % 4;
    switch (nm) {
        case 0: return {0, mod_small(a, 8)};
        case 2: return {2, 0};
        default: return {nm, mod_small(a, 2)};
    }
}

Mat preimage_q0zx(const Q0ClassZx& cls) {
    // d = 0/1 lift of u1; e = d - t mod 4
    ResPoly d(4);
    d.c.assign(cls.u1.c.begin(), cls.u1.c.end());
    d.normalize();
    ResPoly e = res_add(d, res_neg(cls.t));

    int imax = std::max(std::max(d.degree(), e.degree()), std::max(cls.u2.degree(), cls.u3.degree()));
    IntPoly a, cp;
    a.c.assign(2 * (imax + 1) + 1, Int(0));
    cp.c.assign(2 * (imax + 1), Int(0));
    a.c[0] = cls.s;
    for (int i = 0; i <= imax; ++i) {
        // odd slots carry the A_4 part; subtract the even-slot spill-over
        // (index chains (2i+1)2^{j-1} - 1 for j >= 1)
        long long spill_a = 0, spill_c = 0;
        for (long long half_idx = 2LL * i + 1; half_idx - 1 <= cls.u2.degree(); half_idx *= 2)
            spill_a += cls.u2.coeff(static_cast<std::size_t>(half_idx - 1));
        for (long long half_idx = 2LL * i + 1; half_idx - 1 <= cls.u3.degree(); half_idx *= 2)
            spill_c += cls.u3.coeff(static_cast<std::size_t>(half_idx - 1));
        int ba = ((d.coeff(i) - static_cast<int>(spill_a % 4)) % 4 + 4) % 4;
        int bc = ((e.coeff(i) - static_cast<int>(spill_c % 4)) % 4 + 4) % 4;
        a.c[2 * i + 1] = 2 * ba;
        a.c[2 * i + 2] = 2 * cls.u2.coeff(i);
        cp.c[2 * i] = 2 * bc;
        cp.c[2 * i + 1] = 2 * cls.u3.coeff(i);
    }
    a.normalize();
    cp.normalize();
    Mat m(2, 2);
    m.at(0, 0) = a;
    m.at(1, 1) = cp;
    return m;
}

Mat preimage_q3zx(const Q3ClassZx& cls) {
    IntPoly a;
    if (cls.value.coeff(0)) a = IntPoly::constant(1);
    for (int i = 1; i <= cls.value.degree(); ++i)
        if (cls.value.coeff(i)) a = poly_add(a, IntPoly::monomial(1, 2 * (i - 1) + 1));
    Mat m(2, 2);
    m.at(0, 0) = a;
    return m;
}

std::array<std::string, 4> lgroups_table(RingTag ring) {
    if (ring == RingTag::Z) return {"Z_8", "Z_2", "0", "Z_2"};
    return {"Z_8 (+) Z_4[x] (+) Z_2[x]^3", "Z_2", "0", "Z_2[x]"};
}

std::array<std::string, 4> unil_table() {
    return {"0", "0", "x.Z_2[x]", "Z_4[x] (+) Z_2[x]^3"};
}

} // namespace arfcalc
