#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arfcalc/oracle.hpp"
#include "arfcalc/qnormal.hpp"
#include "arfcalc/rng.hpp"

using namespace arfcalc;

namespace {

Mat sym2(IntPoly a, IntPoly b, IntPoly c) {
    Mat m(2, 2);
    m.at(0, 0) = std::move(a);
    m.at(0, 1) = b;
    m.at(1, 0) = std::move(b);
    m.at(1, 1) = std::move(c);
    return m;
}

ResPoly r2(std::vector<int> c) { return ResPoly(2, std::move(c)); }
ResPoly r4(std::vector<int> c) { return ResPoly(4, std::move(c)); }

} // namespace

TEST_CASE("check_numerator_q0") {
    CHECK(check_numerator_q0(Mat::zero(2, 2), xmatrix(RingTag::Zx)));
    CHECK(check_numerator_q0(Mat::from_ints({{1}}), xmatrix(RingTag::Z)));
    // M = (0 1; 1 0): M - MXM has odd diagonal
    CHECK_FALSE(check_numerator_q0(Mat::from_ints({{0, 1}, {1, 0}}), xmatrix(RingTag::Zx)));
}

TEST_CASE("reduce_q0_Zx on spec instances") {
    Q0ClassZx zero = reduce_q0_Zx(Mat::zero(2, 2));
    CHECK(zero.is_zero());

    // M = diag(2x, 0) -> (0, 1, 1, 0, 0)
    Q0ClassZx c = reduce_q0_Zx(sym2(IntPoly{0, 2}, IntPoly{}, IntPoly{}));
    CHECK(c.s == 0);
    CHECK(c.t == r4({1}));
    CHECK(c.u1 == r2({1}));
    CHECK(c.u2 == r2({}));
    CHECK(c.u3 == r2({}));

    // diag(a0 + 2 b x^{2i+1} + 2 c x^{2i+2}, 0): s = a0 and the A_2 part is c
    // a = 3 + 2x + 2x^2: f01 parts: a4 = (2+2)/2 = 2, a2 = 1
    Q0ClassZx d = reduce_q0_Zx(sym2(IntPoly{3, 2, 2}, IntPoly{}, IntPoly{}));
    CHECK(d.s == 3);
    CHECK(d.u2 == r2({1}));
    CHECK(d.t == r4({2}));

    CHECK_THROWS_AS(reduce_q0_Zx(Mat::from_ints({{0, 1}, {1, 0}})), std::domain_error);
}

TEST_CASE("reduce_q3_Zx on spec instances") {
    CHECK(reduce_q3_Zx(Mat::from_ints({{0, 1}, {1, 0}})).is_zero());
    CHECK(reduce_q3_Zx(Mat::zero(2, 2)).is_zero());
    // a + cx = c0 + sum c_{i+1} x^{2i+1} reduces to sum c_i x^i
    Q3ClassZx c = reduce_q3_Zx(sym2(IntPoly{1, 1, 0, 1}, IntPoly{}, IntPoly{}));
    CHECK(c.value == r2({1, 1, 1}));
}

TEST_CASE("reduce_q1_Zx") {
    CHECK(reduce_q1_Zx(Mat::zero(2, 2)) == 0);
    // identity violates the Quad condition (I - X has odd diagonal)
    CHECK_THROWS_AS(reduce_q1_Zx(Mat::identity(2)), std::domain_error);
    CHECK(reduce_q1_Zx(Mat::from_ints({{1, 0}, {0, 0}})) == 1);
}

TEST_CASE("reduce_qn_Z") {
    CHECK(reduce_qn_Z(0, 9).value == 1);
    CHECK(reduce_qn_Z(1, 3).value == 1);
    CHECK(reduce_qn_Z(2, 12345).value == 0);
    CHECK(reduce_qn_Z(3, -1).value == 1);
}

TEST_CASE("q_add and q_equal") {
    Q3ClassZx x{r2({0, 1})};
    CHECK(q_add(x, x).is_zero());

    Q0ClassZx a;
    a.s = 4;
    CHECK(q_add(a, a).s == 0);

    QnClassZ z0 = reduce_qn_Z(0, 5);
    CHECK(q_add(z0, z0).value == 2);
    CHECK_THROWS_AS(q_add(z0, reduce_qn_Z(1, 0)), std::invalid_argument);
}

TEST_CASE("reduction is invariant under denominator shifts") {
    Rng rng(77);
    using namespace arfcalc::oracle;
    for (int t = 0; t < 250; ++t) {
        Mat m = sample_numerator(QGroup::q0zx, rng, 3, 4);
        Mat d = sample_denominator(QGroup::q0zx, rng, 3, 4);
        CHECK(reduce_q0_Zx(d).is_zero());
        CHECK(q_equal(reduce_q0_Zx(mat_add(m, d)), reduce_q0_Zx(m)));
    }
    for (int t = 0; t < 250; ++t) {
        Mat m = sample_numerator(QGroup::q3zx, rng, 3, 4);
        Mat d = sample_denominator(QGroup::q3zx, rng, 3, 4);
        CHECK(reduce_q3_Zx(d).is_zero());
        CHECK(q_equal(reduce_q3_Zx(mat_add(m, d)), reduce_q3_Zx(m)));
    }
}

TEST_CASE("reductions are additive") {
    Rng rng(78);
    using namespace arfcalc::oracle;
    for (int t = 0; t < 250; ++t) {
        Mat m = sample_numerator(QGroup::q0zx, rng, 3, 4);
        Mat m2 = sample_numerator(QGroup::q0zx, rng, 3, 4);
        CHECK(reduce_q0_Zx(mat_add(m, m2)) == q_add(reduce_q0_Zx(m), reduce_q0_Zx(m2)));
        Mat s = sample_numerator(QGroup::q3zx, rng, 3, 4);
        Mat s2 = sample_numerator(QGroup::q3zx, rng, 3, 4);
        CHECK(reduce_q3_Zx(mat_add(s, s2)) == q_add(reduce_q3_Zx(s), reduce_q3_Zx(s2)));
    }
}

TEST_CASE("surjectivity round-trips for small tuples") {
    // every q3 target of degree <= 3
    for (int mask = 0; mask < 16; ++mask) {
        Q3ClassZx target;
        target.value.modulus = 2;
        for (int i = 0; i < 4; ++i)
            if ((mask >> i) & 1) {
                target.value.c.resize(i + 1, 0);
                target.value.c[i] = 1;
            }
        target.value.normalize();
        CHECK(reduce_q3_Zx(preimage_q3zx(target)) == target);
    }
    // sampled q0 tuples of degree <= 3
    Rng rng(79);
    for (int t = 0; t < 400; ++t) {
        Q0ClassZx target;
        target.s = static_cast<int>(rng.below(8));
        for (int i = 0; i < 4; ++i) {
            int tv = static_cast<int>(rng.below(4));
            if (tv) {
                target.t.c.resize(i + 1, 0);
                target.t.c[i] = tv;
            }
            for (ResPoly* u : {&target.u1, &target.u2, &target.u3})
                if (rng.flip()) {
                    u->c.resize(i + 1, 0);
                    u->c[i] = 1;
                }
        }
        target.t.normalize();
        target.u1.normalize();
        target.u2.normalize();
        target.u3.normalize();
        Mat m = preimage_q0zx(target);
        REQUIRE(check_numerator_q0(m, xmatrix(RingTag::Zx)));
        CHECK(reduce_q0_Zx(m) == target);
    }
}

TEST_CASE("reduce_q3_Zx kills L - LXL exhaustively at small truncation") {
    Mat x = xmatrix(RingTag::Zx);
    // all symmetric L with entries of degree <= 2, coefficients in {-1,0,1}
    for (long long it = 0; it < 19683; ++it) {
        long long v = it;
        IntPoly entry[3];
        for (int e = 0; e < 3; ++e) {
            IntPoly p;
            p.c.resize(3);
            for (int d = 0; d < 3; ++d) {
                p.c[d] = (v % 3) - 1;
                v /= 3;
            }
            p.normalize();
            entry[e] = p;
        }
        Mat l = sym2(entry[0], entry[1], entry[2]);
        Mat den = mat_sub(l, mat_mul(l, mat_mul(x, l)));
        CHECK(reduce_q3_Zx(den).is_zero());
    }
}

TEST_CASE("lgroups tables") {
    auto z = lgroups_table(RingTag::Z);
    CHECK(z[0] == "Z_8");
    CHECK(z[1] == "Z_2");
    CHECK(z[2] == "0");
    CHECK(z[3] == "Z_2");
    auto zx = lgroups_table(RingTag::Zx);
    CHECK(zx[0] == "Z_8 (+) Z_4[x] (+) Z_2[x]^3");
    CHECK(zx[1] == "Z_2");
    CHECK(zx[2] == "0");
    CHECK(zx[3] == "Z_2[x]");
    auto u = unil_table();
    CHECK(u[0] == "0");
    CHECK(u[1] == "0");
    CHECK(u[2] == "x.Z_2[x]");
    CHECK(u[3] == "Z_4[x] (+) Z_2[x]^3");
}
