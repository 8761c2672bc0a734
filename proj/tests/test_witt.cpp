#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arfcalc/arfinv.hpp"
#include "arfcalc/rng.hpp"
#include "arfcalc/witt.hpp"

using namespace arfcalc;

namespace {

std::vector<Int> rand_unimodular_int(Rng& rng, int n, int ops) {
    std::vector<Int> e(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 1;
    for (int k = 0; k < ops; ++k) {
        int i = static_cast<int>(rng.below(n)), j = static_cast<int>(rng.below(n));
        if (i == j) continue;
        long long c = rng.range(-2, 2);
        for (int col = 0; col < n; ++col)
            e[static_cast<std::size_t>(i) * n + col] += c * e[static_cast<std::size_t>(j) * n + col];
    }
    return e;
}

IntSymForm rand_block_form(Rng& rng, int max_dim, bool allow_e8) {
    IntSymForm f(0);
    int dim = 0;
    while (dim == 0 || (dim < max_dim && rng.flip())) {
        if (allow_e8 && dim + 8 <= max_dim && rng.below(4) == 0) {
            f = direct_sum(f, e8_form());
            dim += 8;
        } else {
            IntSymForm b(1);
            b.at(0, 0) = rng.flip() ? 1 : -1;
            f = direct_sum(f, b);
            dim += 1;
        }
    }
    return f;
}

} // namespace

TEST_CASE("signature basics") {
    CHECK(signature(IntSymForm::from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK(signature(IntSymForm::from_ints({{1, 0}, {0, -1}})) == 0);
    CHECK(signature(e8_form()) == 8);
    CHECK_THROWS_AS(signature(IntSymForm::from_ints({{0}})), std::domain_error);
    // zero diagonal goes through the hyperbolic branch
    CHECK(signature(IntSymForm::from_ints({{0, 3}, {3, 0}})) == 0);
    CHECK(signature(IntSymForm::from_ints({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}})) == -1);
}

TEST_CASE("e8 is positive definite by leading minors") {
    IntSymForm e8 = e8_form();
    for (int k = 1; k <= 8; ++k) {
        IntSymForm minor(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor.at(i, j) = e8.at(i, j);
        CHECK(int_det(minor) > 0);
    }
    CHECK(int_det(e8) == 1);
}

TEST_CASE("characteristic_element") {
    IntSymForm id3 = IntSymForm::from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(characteristic_element(id3) == std::vector<Int>{1, 1, 1});
    CHECK(characteristic_element(e8_form()) == std::vector<Int>(8, 0));
    CHECK(characteristic_element(IntSymForm::from_ints({{1, 0}, {0, -1}})) == std::vector<Int>{1, 1});
}

TEST_CASE("signature_mod8") {
    CHECK(signature_mod8(IntSymForm::from_ints({{1}})) == 1);
    CHECK(signature_mod8(e8_form()) == 0);
    CHECK(signature_mod8(IntSymForm::from_ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 3);
    CHECK_THROWS_AS(signature_mod8(IntSymForm::from_ints({{2}})), std::domain_error);
}

TEST_CASE("signature is congruence-invariant") {
    Rng rng(101);
    for (int t = 0; t < 200; ++t) {
        IntSymForm f = rand_block_form(rng, 6, false);
        int base = signature(f);
        IntSymForm g = congruence(f, rand_unimodular_int(rng, f.n, 3 * f.n));
        CHECK(signature(g) == base);
    }
}

TEST_CASE("hirzebruch congruence on random unimodular forms") {
    Rng rng(202);
    for (int t = 0; t < 200; ++t) {
        IntSymForm f = rand_block_form(rng, 10, true);
        IntSymForm g = congruence(f, rand_unimodular_int(rng, f.n, 3 * f.n));
        int sig = signature(g);
        CHECK(((sig % 8) + 8) % 8 == signature_mod8(g));
    }
}

TEST_CASE("signature is additive on direct sums") {
    Rng rng(303);
    for (int t = 0; t < 100; ++t) {
        IntSymForm f = rand_block_form(rng, 5, false);
        IntSymForm g = rand_block_form(rng, 5, false);
        CHECK(signature(direct_sum(f, g)) == signature(f) + signature(g));
    }
}

TEST_CASE("arf_L2") {
    CHECK(arf_L2(hyperbolic(1, -1), standard_witness(1)) == 0);
    EpsForm f{-1, Mat::from_ints({{1, 1}, {0, 1}})};
    CHECK(arf_L2(f, standard_witness(1)) == 1);
    // cross-module consistency with the boundary map
    EpsForm b1 = boundary_q3_to_L2_Z(1);
    CHECK(arf_L2(b1, standard_witness(1)) == 1);
    EpsForm b0 = boundary_q3_to_L2_Z(0);
    CHECK(arf_L2(b0, standard_witness(1)) == 0);
}

TEST_CASE("arf_L2 independent of the witness") {
    Rng rng(404);
    for (int t = 0; t < 100; ++t) {
        int l = 1 + static_cast<int>(rng.below(2));
        // random split integral (-1)-quadratic form
        Mat mu(l, l), nu(l, l);
        for (int i = 0; i < l; ++i)
            for (int j = i; j < l; ++j) {
                mu.at(i, j) = IntPoly::constant(rng.range(-3, 3));
                mu.at(j, i) = mu.at(i, j);
                nu.at(i, j) = IntPoly::constant(rng.range(-3, 3));
                nu.at(j, i) = nu.at(i, j);
            }
        EpsForm f = assemble_split({-1, mu, nu});
        LagrangianWitness w = standard_witness(l);
        int base = arf_L2(f, w);
        // re-witness: inclusion * P, complement adjusted by inclusion * R
        std::vector<Int> pmat = rand_unimodular_int(rng, l, 2 * l);
        Mat p(l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) p.at(i, j) = IntPoly::constant(pmat[static_cast<std::size_t>(i) * l + j]);
        Mat r(l, l);
        for (auto& e : r.e) e = IntPoly::constant(rng.range(-2, 2));
        LagrangianWitness w2{mat_mul(w.inclusion, p), mat_add(w.complement, mat_mul(w.inclusion, r))};
        REQUIRE(verify_lagrangian(f, w2));
        CHECK(arf_L2(f, w2) == base);
    }
}
