#include "doctest.h"

#include <random>

#include "acp/form.hpp"
#include "acp/oracle.hpp"
#include "fixtures.hpp"
#include "util.hpp"

using namespace acp;
using namespace testutil;

TEST_CASE("pairing evaluation") {
    FieldTower t = fixtures::f4();
    FormSpec f = FormSpec::identity(t, 1);
    Elem w = t.alpha();
    std::vector<Elem> a{w}, b{w};
    CHECK(eval_Btilde(t, f, a, b) == w * w);
    CHECK(eval_B(t, f, a, b).is_one());  // Tr(w^2) = 1

    std::vector<Elem> zero{t.top()->zero()};
    CHECK(eval_B(t, f, a, zero).is_zero());
    CHECK(eval_Btilde(t, f, zero, b).is_zero());
}

TEST_CASE("pairing additivity and the trace identity") {
    std::mt19937_64 rng(101);
    for (auto tw : {fixtures::f4(), fixtures::f9()}) {
        const std::size_t n = 3;
        for (int i = 0; i < 50; ++i) {
            FormSpec f = rand_form(tw, n, rng);
            auto a = rand_vector(tw, n, rng), a2 = rand_vector(tw, n, rng), b = rand_vector(tw, n, rng);
            std::vector<Elem> sum(n, tw.top()->zero());
            for (std::size_t j = 0; j < n; ++j) sum[j] = a[j] + a2[j];
            CHECK(eval_B(tw, f, sum, b) == eval_B(tw, f, a, b) + eval_B(tw, f, a2, b));
            CHECK(tw.trace_to_mid(eval_Btilde(tw, f, a, b)) == eval_B(tw, f, a, b));
        }
    }
}

TEST_CASE("duals of the extreme codes") {
    FieldTower t = fixtures::f4();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        FormSpec f = rand_form(t, 3, rng);
        AdditiveCode zero = AdditiveCode::zero(t, 3);
        AdditiveCode full = AdditiveCode::full(t, 3);
        CHECK(left_dual(f, zero) == full);
        CHECK(left_dual(f, full) == zero);  // non-degeneracy
        CHECK(right_dual(f, zero) == full);
        CHECK(right_dual(f, full) == zero);
    }
}

TEST_CASE("dual dimension identities and double duals") {
    std::mt19937_64 rng(55);
    struct TowerParams { u64 p; std::size_t k, m; };
    for (auto [p, k, m] : std::vector<TowerParams>{{2, 1, 2}, {3, 1, 2}, {2, 1, 3}}) {
        FieldTower t = FieldTower::build(p, k, m);
        for (int i = 0; i < 25; ++i) {
            std::size_t n = 1 + (rng() % 3);
            FormSpec f = rand_form(t, n, rng);
            AdditiveCode c = rand_additive(t, n, rng() % (n * m + 1), rng);
            AdditiveCode dl = left_dual(f, c);
            AdditiveCode dr = right_dual(f, c);
            CHECK(c.dim_fq() + dl.dim_fq() == n * m);
            CHECK(c.dim_fq() + dr.dim_fq() == n * m);
            CHECK(right_dual(f, dl) == c);
            CHECK(left_dual(f, dr) == c);
        }
    }
}

TEST_CASE("sum and intersection dual identities") {
    std::mt19937_64 rng(77);
    FieldTower t = fixtures::f4();
    for (int i = 0; i < 30; ++i) {
        std::size_t n = 2 + (rng() % 2);
        FormSpec f = rand_form(t, n, rng);
        AdditiveCode c = rand_additive(t, n, 2, rng);
        AdditiveCode d = rand_additive(t, n, 2, rng);
        CHECK(left_dual(f, join(c, d)) == meet(left_dual(f, c), left_dual(f, d)));
        CHECK(right_dual(f, join(c, d)) == meet(right_dual(f, c), right_dual(f, d)));
        CHECK(join(left_dual(f, c), left_dual(f, d)) == left_dual(f, meet(c, d)));
        CHECK(join(right_dual(f, c), right_dual(f, d)) == right_dual(f, meet(c, d)));
    }
}

TEST_CASE("parity check matrices") {
    FieldTower t = fixtures::f4();
    std::mt19937_64 rng(91);
    // full space: no checks
    FormSpec id3 = FormSpec::identity(t, 3);
    CHECK(parity_check(id3, AdditiveCode::full(t, 3)).rows() == 0);
    // row count = nm - dim
    for (int i = 0; i < 20; ++i) {
        FormSpec f = rand_form(t, 3, rng);
        AdditiveCode c = rand_additive(t, 3, 2, rng);
        CHECK(parity_check(f, c).rows() == 6 - c.dim_fq());
    }
    // the published parity matrices of the exact-criterion example are
    // genuine checks: B(h, c) = 0 for every row h and basis word c
    AdditiveCode c = AdditiveCode::span_fq(t, fixtures::g1_iff(t));
    AdditiveCode d = AdditiveCode::span_fq(t, fixtures::g2_iff(t));
    Mat h1 = fixtures::h1_iff(t), h2 = fixtures::h2_iff(t);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(eval_B(t, id3, h1.row(i), c.basis().row(j)).is_zero());
            CHECK(eval_B(t, id3, h2.row(i), d.basis().row(j)).is_zero());
        }
    // and they generate the full left duals
    CHECK(AdditiveCode::span_fq(t, h1) == left_dual(id3, c));
    CHECK(AdditiveCode::span_fq(t, h2) == left_dual(id3, d));
}

TEST_CASE("duals agree with the exhaustive filter") {
    std::mt19937_64 rng(111);
    FieldTower t = fixtures::f4();
    for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
        for (int i = 0; i < 25; ++i) {
            FormSpec f = rand_form(t, n, rng);
            AdditiveCode c = rand_additive(t, n, rng() % (2 * n + 1), rng);
            CHECK(brute_dual(f, c, DualSide::left) == left_dual(f, c));
            CHECK(brute_dual(f, c, DualSide::right) == right_dual(f, c));
        }
    }
}

TEST_CASE("subspace enumeration counts") {
    EnumBudget budget;
    std::size_t count2 = 0, count3 = 0, count0 = 0;
    enumerate_subspaces(prime_field(2), 2, budget, [&](const Mat&) { ++count2; });
    CHECK(count2 == 5);
    enumerate_subspaces(prime_field(3), 2, budget, [&](const Mat&) { ++count3; });
    CHECK(count3 == 6);
    enumerate_subspaces(prime_field(2), 0, budget, [&](const Mat& m) {
        ++count0;
        CHECK(m.rows() == 0);
    });
    CHECK(count0 == 1);
    CHECK(subspace_count(2, 2) == 5);
    CHECK(subspace_count(3, 2) == 6);
}
