#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arfcalc/oracle.hpp"
#include "arfcalc/qnormal.hpp"

using namespace arfcalc;
using namespace arfcalc::oracle;

TEST_CASE("arf_democratic") {
    GF2Form hyp = GF2Form::from_bits({{0, 1}, {0, 0}});
    CHECK(arf_democratic(hyp) == 0); // 3 of 4 vectors vanish
    GF2Form odd = GF2Form::from_bits({{1, 1}, {0, 1}});
    CHECK(arf_democratic(odd) == 1); // 1 of 4 vanishes
    GF2Form empty(0);
    CHECK(arf_democratic(empty) == 0);
    GF2Form big(17);
    CHECK_THROWS_AS(arf_democratic(big), std::invalid_argument);
}

TEST_CASE("sample_denominator hand checks") {
    // q3zx with Q = 0, L = diag(1, 0): L - LXL = 0
    Mat x = xmatrix(RingTag::Zx);
    Mat l = Mat::from_ints({{1, 0}, {0, 0}});
    Mat d = mat_sub(l, mat_mul(l, mat_mul(x, l)));
    CHECK(is_zero(d));

    // q0zx with Q = 0, N = (0 1; 0 0): 2(N+N^t) - 4N^tXN = (0 2; 2 -4)
    Mat n = Mat::from_ints({{0, 1}, {0, 0}});
    Mat e = mat_sub(mat_scale(2, mat_add(n, transpose(n))),
                    mat_scale(4, mat_mul(transpose(n), mat_mul(x, n))));
    CHECK(e == Mat::from_ints({{0, 2}, {2, -4}}));
    CHECK(reduce_q0_Zx(e).is_zero());
}

TEST_CASE("q0 denominators lie in the numerator set") {
    Rng rng(900);
    Mat x = xmatrix(RingTag::Zx);
    for (int t = 0; t < 300; ++t) {
        Mat d = sample_denominator(QGroup::q0zx, rng, 3, 4);
        CHECK(check_numerator_q0(d, x));
    }
    for (int t = 0; t < 300; ++t) {
        Mat d = sample_denominator(QGroup::q0z, rng, 3, 4);
        CHECK(check_numerator_q0(d, xmatrix(RingTag::Z)));
    }
}

TEST_CASE("verify_reduction passes for every group") {
    CHECK(verify_reduction(QGroup::q3zx, 1000, 7).passed());
    CHECK(verify_reduction(QGroup::q0zx, 1000, 7).passed());
    CHECK(verify_reduction(QGroup::q0z, 1000, 7).passed());
    CHECK(verify_reduction(QGroup::q3z, 1000, 7).passed());
}

TEST_CASE("exhaustive q3 truncations") {
    // degree 1, coefficients {0,1}: all targets attained, denominators killed
    Report r1 = exhaustive_q3_truncated(1, 0, 1, 1);
    CHECK(r1.passed());
    // degree 0 window including negatives
    Report r0 = exhaustive_q3_truncated(0, -4, 4, 0);
    CHECK(r0.passed());
    // empty-ish window: single value 0, vacuous pass
    Report rz = exhaustive_q3_truncated(0, 0, 0, 2);
    CHECK(rz.passed());
    // budget guard: degree 2 over [-4,4] is 9^9 instances
    CHECK_THROWS_AS(exhaustive_q3_truncated(2, -4, 4, 2), std::invalid_argument);
}

TEST_CASE("exhaustive q3 over the full coefficient window at degree 1") {
    // 9^6 symmetric matrices, within the instance budget
    Report r = exhaustive_q3_truncated(1, -4, 4, 3);
    CHECK(r.passed());
    CHECK(r.trials >= 531441);
}

TEST_CASE("report formats mention the seed") {
    Report r = verify_reduction(QGroup::q3z, 10, 123);
    CHECK(r.summary().find("seed=123") != std::string::npos);
    CHECK(r.summary().find("PASS") != std::string::npos);
}
