#include "arfcalc/oracle.hpp"

#include "arfcalc/qnormal.hpp"

#include <sstream>
#include <stdexcept>

namespace arfcalc::oracle {

int arf_democratic(const GF2Form& f) {
    if (f.n > 16) throw std::invalid_argument("arf_democratic: dimension too large");
    uint64_t total = 1ULL << f.n;
    uint64_t zeros = 0;
    for (uint64_t v = 0; v < total; ++v)
        if (f.quad(static_cast<uint32_t>(v)) == 0) ++zeros;
    return zeros * 2 > total ? 0 : 1;
}

QGroup qgroup_from_string(const std::string& name) {
    if (name == "q0zx") return QGroup::q0zx;
    if (name == "q3zx") return QGroup::q3zx;
    if (name == "q0z") return QGroup::q0z;
    if (name == "q3z") return QGroup::q3z;
    throw std::invalid_argument("unknown Q-group: " + name);
}

std::string qgroup_name(QGroup g) {
    switch (g) {
        case QGroup::q0zx: return "q0zx";
        case QGroup::q3zx: return "q3zx";
        case QGroup::q0z: return "q0z";
        default: return "q3z";
    }
}

namespace {

// Self-contained polynomial arithmetic on small coefficient vectors so
// the denominator expansions share nothing with the main matrix code.
using OPoly = std::vector<long long>;

OPoly oadd(const OPoly& a, const OPoly& b) {
    OPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

OPoly oscale(long long k, const OPoly& a) {
    OPoly r = a;
    for (auto& v : r) v *= k;
    return r;
}

OPoly omul(const OPoly& a, const OPoly& b) {
    if (a.empty() || b.empty()) return {};
    OPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

using OMat = std::vector<std::vector<OPoly>>;

OMat osquare(int n) { return OMat(n, std::vector<OPoly>(n)); }

OMat omatadd(const OMat& a, const OMat& b) {
    OMat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] = oadd(r[i][j], b[i][j]);
    return r;
}

OMat omatscale(long long k, const OMat& a) {
    OMat r = a;
    for (auto& row : r)
        for (auto& p : row) p = oscale(k, p);
    return r;
}

OMat omatmul(const OMat& a, const OMat& b) {
    std::size_t n = a.size(), m = b[0].size(), kk = b.size();
    OMat r(n, std::vector<OPoly>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < kk; ++k)
            for (std::size_t j = 0; j < m; ++j) r[i][j] = oadd(r[i][j], omul(a[i][k], b[k][j]));
    return r;
}

OMat otranspose(const OMat& a) {
    OMat r(a[0].size(), std::vector<OPoly>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

OMat oxmat() {
    OMat x = osquare(2);
    x[0][0] = {1};
    x[1][1] = {0, 1};
    return x;
}

Mat to_mat(const OMat& a) {
    Mat m(static_cast<int>(a.size()), static_cast<int>(a[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            IntPoly p;
            p.c.reserve(a[i][j].size());
            for (long long v : a[i][j]) p.c.emplace_back(v);
            p.normalize();
            m.at(static_cast<int>(i), static_cast<int>(j)) = std::move(p);
        }
    return m;
}

OPoly rand_opoly(Rng& rng, int deg_bound, long long bound) {
    OPoly p(static_cast<std::size_t>(rng.below(deg_bound + 1)) + 1, 0);
    for (auto& v : p) v = rng.range(-bound, bound);
    return p;
}

OMat rand_sym2(Rng& rng, int deg, long long bound, bool even_diag) {
    OMat m = osquare(2);
    m[0][0] = rand_opoly(rng, deg, bound);
    m[1][1] = rand_opoly(rng, deg, bound);
    if (even_diag) {
        m[0][0] = oscale(2, m[0][0]);
        m[1][1] = oscale(2, m[1][1]);
    }
    m[0][1] = rand_opoly(rng, deg, bound);
    m[1][0] = m[0][1];
    return m;
}

OMat rand_full2(Rng& rng, int deg, long long bound) {
    OMat m = osquare(2);
    for (auto& row : m)
        for (auto& p : row) p = rand_opoly(rng, deg, bound);
    return m;
}

} // namespace

Mat sample_denominator(QGroup g, Rng& rng, int deg_bound, long long coeff_bound) {
    switch (g) {
        case QGroup::q0zx: {
            // 4 Quad + 2(N + N^t) - 4 N^t X N
            OMat quad = rand_sym2(rng, deg_bound, coeff_bound, true);
            OMat n = rand_full2(rng, deg_bound, coeff_bound);
            OMat nt = otranspose(n);
            OMat d = omatadd(omatscale(4, quad), omatscale(2, omatadd(n, nt)));
            d = omatadd(d, omatscale(-4, omatmul(nt, omatmul(oxmat(), n))));
            return to_mat(d);
        }
        case QGroup::q3zx: {
            // Quad + L - LXL
            OMat quad = rand_sym2(rng, deg_bound, coeff_bound, true);
            OMat l = rand_sym2(rng, deg_bound, coeff_bound, false);
            OMat d = omatadd(quad, l);
            d = omatadd(d, omatscale(-1, omatmul(l, omatmul(oxmat(), l))));
            return to_mat(d);
        }
        case QGroup::q0z: {
            // 8a + (2(2n) - 4n^2)
            long long a = rng.range(-coeff_bound, coeff_bound);
            long long n = rng.range(-coeff_bound, coeff_bound);
            Mat m(1, 1);
            m.at(0, 0) = IntPoly::constant(8 * a + 4 * n - 4 * n * n);
            return m;
        }
        default: {
            // 2q + (l - l^2)
            long long q = rng.range(-coeff_bound, coeff_bound);
            long long l = rng.range(-coeff_bound, coeff_bound);
            Mat m(1, 1);
            m.at(0, 0) = IntPoly::constant(2 * q + l - l * l);
            return m;
        }
    }
}

Mat sample_numerator(QGroup g, Rng& rng, int deg_bound, long long coeff_bound) {
    switch (g) {
        case QGroup::q0zx: {
            // a = a0 + 2(...), b, c even: always satisfies M - MXM in Quad
            OMat m = rand_sym2(rng, deg_bound, coeff_bound, false);
            m[0][1] = oscale(2, m[0][1]);
            m[1][0] = m[0][1];
            m[1][1] = oscale(2, m[1][1]);
            long long a0 = m[0][0].empty() ? 0 : m[0][0][0];
            m[0][0] = oscale(2, m[0][0]);
            m[0][0][0] = a0; // free constant term, rest even
            return to_mat(m);
        }
        case QGroup::q3zx:
            return to_mat(rand_sym2(rng, deg_bound, coeff_bound, false));
        default: {
            Mat m(1, 1);
            m.at(0, 0) = IntPoly::constant(rng.range(-coeff_bound, coeff_bound));
            return m;
        }
    }
}

std::string Report::summary() const {
    std::ostringstream os;
    os << "suite=" << suite << " seed=" << seed << " trials=" << trials << " failures=" << failures
       << (failures == 0 ? " PASS" : " FAIL");
    return os.str();
}

namespace {

struct AnyClass {
    // uniform wrapper over the class types so the driver stays generic
    Q0ClassZx q0;
    Q3ClassZx q3;
    QnClassZ qn;
    QGroup g;

    bool operator==(const AnyClass& o) const {
        switch (g) {
            case QGroup::q0zx: return q0 == o.q0;
            case QGroup::q3zx: return q3 == o.q3;
            default: return qn == o.qn;
        }
    }
    bool is_zero() const {
        switch (g) {
            case QGroup::q0zx: return q0.is_zero();
            case QGroup::q3zx: return q3.is_zero();
            default: return qn.value == 0;
        }
    }
    std::string str() const {
        switch (g) {
            case QGroup::q0zx: return q0.str();
            case QGroup::q3zx: return q3.str();
            default: {
                std::ostringstream os;
                os << qn.value << " mod " << (qn.n == 0 ? 8 : 2);
                return os.str();
            }
        }
    }
};

AnyClass do_reduce(QGroup g, const Mat& m) {
    AnyClass c;
    c.g = g;
    switch (g) {
        case QGroup::q0zx: c.q0 = reduce_q0_Zx(m); break;
        case QGroup::q3zx: c.q3 = reduce_q3_Zx(m); break;
        case QGroup::q0z: c.qn = reduce_qn_Z(0, m.at(0, 0).coeff(0)); break;
        default: c.qn = reduce_qn_Z(3, m.at(0, 0).coeff(0)); break;
    }
    return c;
}

AnyClass class_add(const AnyClass& a, const AnyClass& b) {
    AnyClass c;
    c.g = a.g;
    switch (a.g) {
        case QGroup::q0zx: c.q0 = q_add(a.q0, b.q0); break;
        case QGroup::q3zx: c.q3 = q_add(a.q3, b.q3); break;
        default: c.qn = q_add(a.qn, b.qn); break;
    }
    return c;
}

} // namespace

Report verify_reduction(QGroup g, long long trials, uint64_t seed) {
    Report rep;
    rep.suite = qgroup_name(g);
    rep.seed = seed;
    Rng rng(seed);
    const int deg = 3;
    const long long bound = 4;
    for (long long t = 0; t < trials; ++t) {
        rep.trials++;
        Mat m = sample_numerator(g, rng, deg, bound);
        Mat m2 = sample_numerator(g, rng, deg, bound);
        Mat d = sample_denominator(g, rng, deg, bound);
        std::string what;
        try {
            AnyClass cm = do_reduce(g, m);
            if (!do_reduce(g, d).is_zero()) what = "denominator element has nonzero class: " + d.str();
            if (what.empty() && !(do_reduce(g, mat_add(m, d)) == cm))
                what = "class changed under denominator shift: M=" + m.str() + " D=" + d.str();
            if (what.empty() &&
                !(do_reduce(g, mat_add(m, m2)) == class_add(cm, do_reduce(g, m2))))
                what = "reduction not additive: M=" + m.str() + " M'=" + m2.str();
        } catch (const std::exception& e) {
            what = std::string("exception: ") + e.what();
        }
        if (!what.empty()) {
            rep.failures++;
            if (rep.counterexample.empty()) {
                std::ostringstream os;
                os << "trial " << t << ": " << what;
                rep.counterexample = os.str();
            }
        }
    }
    return rep;
}

Report exhaustive_q3_truncated(int deg_bound, long long lo, long long hi, int target_deg,
                               long long budget) {
    Report rep;
    rep.suite = "q3zx-exhaustive";
    long long window = hi - lo + 1;
    int ncoeff = 3 * (deg_bound + 1); // three independent entries of a symmetric 2x2
    long long instances = 1;
    for (int i = 0; i < ncoeff; ++i) {
        instances *= window;
        if (instances > budget) throw std::invalid_argument("exhaustive_q3_truncated: budget exceeded");
    }

    Mat x = xmatrix(RingTag::Zx);
    std::vector<long long> digits(ncoeff, 0);
    Mat prev;
    bool have_prev = false;
    Q3ClassZx prev_cls;
    for (long long it = 0; it < instances; ++it) {
        long long v = it;
        std::vector<IntPoly> entry(3);
        for (int e = 0; e < 3; ++e) {
            IntPoly p;
            p.c.resize(deg_bound + 1);
            for (int dgi = 0; dgi <= deg_bound; ++dgi) {
                p.c[dgi] = lo + (v % window);
                v /= window;
            }
            p.normalize();
            entry[e] = p;
        }
        Mat l(2, 2);
        l.at(0, 0) = entry[0];
        l.at(0, 1) = entry[1];
        l.at(1, 0) = entry[1];
        l.at(1, 1) = entry[2];
        rep.trials++;
        Mat den = mat_sub(l, mat_mul(l, mat_mul(x, l)));
        Q3ClassZx cls = reduce_q3_Zx(den);
        if (!cls.is_zero()) {
            rep.failures++;
            if (rep.counterexample.empty())
                rep.counterexample = "L - LXL not annihilated: L=" + l.str();
        }
        // additivity against the previous window element
        if (have_prev) {
            Q3ClassZx lhs = reduce_q3_Zx(mat_add(l, prev));
            Q3ClassZx rhs = q_add(reduce_q3_Zx(l), prev_cls);
            if (!(lhs == rhs)) {
                rep.failures++;
                if (rep.counterexample.empty())
                    rep.counterexample = "additivity failed: A=" + l.str() + " B=" + prev.str();
            }
        }
        prev = l;
        prev_cls = reduce_q3_Zx(l);
        have_prev = true;
    }

    // surjectivity: every mod-2 target of degree <= target_deg is attained
    long long ntargets = 1LL << (target_deg + 1);
    for (long long mask = 0; mask < ntargets; ++mask) {
        Q3ClassZx target;
        target.value.modulus = 2;
        for (int i = 0; i <= target_deg; ++i)
            if ((mask >> i) & 1) {
                target.value.c.resize(i + 1, 0);
                target.value.c[i] = 1;
            }
        target.value.normalize();
        rep.trials++;
        if (!(reduce_q3_Zx(preimage_q3zx(target)) == target)) {
            rep.failures++;
            if (rep.counterexample.empty())
                rep.counterexample = "preimage round-trip failed for target " + target.str();
        }
    }
    return rep;
}

} // namespace arfcalc::oracle
