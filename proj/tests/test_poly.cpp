#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arfcalc/poly.hpp"
#include "arfcalc/rng.hpp"

using namespace arfcalc;

namespace {

IntPoly rand_poly(Rng& rng, int deg, long long bound) {
    IntPoly p;
    p.c.resize(rng.below(deg + 1) + 1);
    for (auto& v : p.c) v = rng.range(-bound, bound);
    p.normalize();
    return p;
}

ResPoly mod2(std::vector<int> c) { return ResPoly(2, std::move(c)); }

} // namespace

TEST_CASE("poly_add") {
    CHECK(poly_add(IntPoly{1, 2}, IntPoly{0, 0, 3}) == IntPoly{1, 2, 3});
    CHECK(poly_add(IntPoly{1}, IntPoly{-1}) == IntPoly{});
    CHECK(poly_add(IntPoly{0, 1}, IntPoly{0, 1}) == IntPoly{0, 2});
}

TEST_CASE("poly_mul") {
    CHECK(poly_mul(IntPoly{0, 1}, IntPoly{0, 1}) == IntPoly{0, 0, 1});
    CHECK(poly_mul(IntPoly{}, IntPoly{5, 7}) == IntPoly{});
    CHECK(poly_mul(IntPoly{1, 1}, IntPoly{1, 1}) == IntPoly{1, 2, 1});
}

TEST_CASE("reduce_mod") {
    CHECK(reduce_mod(IntPoly{9, -1}, 8) == ResPoly(8, {1, 7}));
    CHECK(reduce_mod(IntPoly{4, 2}, 2) == ResPoly(2, {}));
    CHECK(reduce_mod(IntPoly{6}, 4) == ResPoly(4, {2}));
    CHECK_THROWS_AS(reduce_mod(IntPoly{1}, 3), std::invalid_argument);
}

TEST_CASE("is_even_poly and half") {
    CHECK(is_even_poly(IntPoly{2, 4}));
    CHECK(half(IntPoly{2, 4}) == IntPoly{1, 2});
    CHECK_FALSE(is_even_poly(IntPoly{2, 1}));
    CHECK_THROWS_AS(half(IntPoly{2, 1}), std::domain_error);
}

TEST_CASE("tate_decompose") {
    auto [p, q] = tate_decompose(mod2({1, 1, 1}));
    CHECK(p == mod2({1, 1}));
    CHECK(q == mod2({1}));
    CHECK(tate_compose(p, q) == mod2({1, 1, 1}));

    auto [pz, qz] = tate_decompose(mod2({}));
    CHECK(pz == mod2({}));
    CHECK(qz == mod2({}));

    auto [p3, q3] = tate_decompose(mod2({0, 0, 0, 1}));
    CHECK(p3 == mod2({}));
    CHECK(q3 == mod2({0, 1}));
    CHECK(tate_compose(p3, q3) == mod2({0, 0, 0, 1}));
}

TEST_CASE("tate_compose") {
    CHECK(tate_compose(mod2({1}), mod2({})) == mod2({1}));
    CHECK(tate_compose(mod2({}), mod2({1})) == mod2({0, 1}));
    // (1+x)^2 + x = 1 + x + x^2 mod 2
    CHECK(tate_compose(mod2({1, 1}), mod2({1})) == mod2({1, 1, 1}));
}

TEST_CASE("tate round-trips") {
    Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        ResPoly a(2);
        a.c.resize(rng.below(9));
        for (auto& v : a.c) v = static_cast<int>(rng.below(2));
        a.normalize();
        auto [p, q] = tate_decompose(a);
        CHECK(tate_compose(p, q) == a);
        ResPoly pp(2), qq(2);
        pp.c.resize(rng.below(5));
        qq.c.resize(rng.below(5));
        for (auto& v : pp.c) v = static_cast<int>(rng.below(2));
        for (auto& v : qq.c) v = static_cast<int>(rng.below(2));
        pp.normalize();
        qq.normalize();
        auto [p2, q2] = tate_decompose(tate_compose(pp, qq));
        CHECK(p2 == pp);
        CHECK(q2 == qq);
    }
}

TEST_CASE("frobenius additivity mod 2 makes tate_decompose additive") {
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        IntPoly a = rand_poly(rng, 8, 9), b = rand_poly(rng, 8, 9);
        ResPoly ra = reduce_mod(a, 2), rb = reduce_mod(b, 2);
        ResPoly rsum = reduce_mod(poly_add(a, b), 2);
        auto [pa, qa] = tate_decompose(ra);
        auto [pb, qb] = tate_decompose(rb);
        auto [ps, qs] = tate_decompose(rsum);
        CHECK(ps == res_add(pa, pb));
        CHECK(qs == res_add(qa, qb));
    }
}

TEST_CASE("half inverts doubling") {
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        IntPoly a = rand_poly(rng, 7, 50);
        CHECK(half(poly_scale(2, a)) == a);
    }
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(42);
    for (int t = 0; t < 150; ++t) {
        IntPoly a = rand_poly(rng, 5, 20), b = rand_poly(rng, 5, 20), c = rand_poly(rng, 5, 20);
        CHECK(poly_add(a, b) == poly_add(b, a));
        CHECK(poly_mul(a, b) == poly_mul(b, a));
        CHECK(poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c)));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
        CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
    }
}

TEST_CASE("poly_divexact") {
    Rng rng(99);
    for (int t = 0; t < 150; ++t) {
        IntPoly a = rand_poly(rng, 4, 10);
        IntPoly b = rand_poly(rng, 4, 10);
        if (b.is_zero()) continue;
        CHECK(poly_divexact(poly_mul(a, b), b) == a);
    }
    CHECK_THROWS_AS(poly_divexact(IntPoly{1, 1}, IntPoly{2}), std::domain_error);
}
