#include "doctest.h"

#include <random>

#include "acp/oracle.hpp"
#include "acp/verdict.hpp"
#include "fixtures.hpp"
#include "util.hpp"

using namespace acp;
using namespace testutil;

TEST_CASE("length-6 pair is complementary and passes the rank condition") {
    FieldTower t = fixtures::f4();
    AdditiveCode c = AdditiveCode::span_fq(t, fixtures::g1_len6(t));
    AdditiveCode d = AdditiveCode::span_fq(t, fixtures::g2_len6(t));
    PairVerdict v = is_acp(c, d);
    CHECK(v.complementary);
    CHECK(v.dim_c == 8);
    CHECK(v.dim_d == 4);
    CHECK(v.ambient == 12);
    CHECK_FALSE(v.witness.has_value());

    // pi(x) = x^2, reversal sigma, arbitrary nonzero diagonal
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<Elem> mu;
        for (int i = 0; i < 6; ++i) mu.push_back(rand_nonzero(t.top(), rng));
        FormSpec f = FormSpec::make(t, mu, antidiagonal_sigma(6), 1);
        auto [ok, r] = rank_necessary(f, c, d);
        CHECK(ok);
        CHECK(r == 6);
    }
}

TEST_CASE("length-3 pair with common word: necessity is not sufficient") {
    FieldTower t = fixtures::f4();
    AdditiveCode c = AdditiveCode::span_fq(t, fixtures::g1_counter(t));
    AdditiveCode d = AdditiveCode::span_fq(t, fixtures::g2_counter(t));
    PairVerdict v = is_acp(c, d);
    CHECK_FALSE(v.complementary);
    REQUIRE(v.witness.has_value());
    // the witness is a nonzero common member
    bool nonzero = false;
    for (const Elem& e : *v.witness) nonzero |= !e.is_zero();
    CHECK(nonzero);
    CHECK(c.member(*v.witness));
    CHECK(d.member(*v.witness));
    // (w, w, 0) is a common member
    Elem w = t.alpha();
    std::vector<Elem> ww0{w, w, t.top()->zero()};
    CHECK(c.member(ww0));
    CHECK(d.member(ww0));

    FormSpec id = FormSpec::identity(t, 3);
    auto [ok, r] = rank_necessary(id, c, d);
    CHECK(ok);  // rank 3 = n even though the pair is not complementary
    CHECK(r == 3);
}

TEST_CASE("exact criterion on the published example") {
    FieldTower t = fixtures::f4();
    AdditiveCode c = AdditiveCode::span_fq(t, fixtures::g1_iff(t));
    AdditiveCode d = AdditiveCode::span_fq(t, fixtures::g2_iff(t));
    FormSpec id = FormSpec::identity(t, 3);

    // the traced products of the published parity checks match bit for bit
    Mat t1 = trace_entrywise(t, fixtures::h1_iff(t) * fixtures::g2_iff(t).transpose());
    Mat t2 = trace_entrywise(t, fixtures::h2_iff(t) * fixtures::g1_iff(t).transpose());
    CHECK(t1 == fixtures::tr_h1_g2t_expected(t));
    CHECK(t2 == fixtures::tr_h2_g1t_expected(t));
    CHECK(rank(t1) == 3);
    CHECK(rank(t2) == 3);

    CHECK(rank_iff(id, c, d));
    CHECK(is_acp(c, d).complementary);
}

TEST_CASE("exact criterion edge cases") {
    FieldTower t = fixtures::f4();
    FormSpec id = FormSpec::identity(t, 2);
    AdditiveCode full = AdditiveCode::full(t, 2);
    AdditiveCode zero = AdditiveCode::zero(t, 2);
    CHECK(rank_iff(id, full, zero));
    CHECK(rank_iff(id, zero, full));
    CHECK(is_acp(full, zero).complementary);

    // dimension hypothesis violations are rejected, not reported false
    CHECK_THROWS_AS(rank_iff(id, zero, zero), PreconditionError);

    // both codes zero: rank 0 < n
    FormSpec id3 = FormSpec::identity(t, 3);
    AdditiveCode z3 = AdditiveCode::zero(t, 3);
    auto [ok, r] = rank_necessary(id3, z3, z3);
    CHECK_FALSE(ok);
    CHECK(r == 0);
}

TEST_CASE("exact criterion equals the definitional check on random pairs") {
    std::mt19937_64 rng(2024);
    for (auto tw : {fixtures::f4(), fixtures::f9()}) {
        for (int i = 0; i < 40; ++i) {
            std::size_t n = 2 + (rng() % 2);
            std::size_t k = rng() % (n * tw.m() + 1);
            // half exact complements, half random pairs with matching dims
            AdditiveCode c = AdditiveCode::zero(tw, n), d = c;
            if (i % 2 == 0) {
                auto pr = rand_acp_split(tw, n, k, rng);
                c = pr.first;
                d = pr.second;
            } else {
                c = rand_additive_dim(tw, n, k, rng);
                d = rand_additive_dim(tw, n, n * tw.m() - k, rng);
            }
            FormSpec f = rand_form(tw, n, rng);
            CHECK(rank_iff(f, c, d) == is_acp(c, d).complementary);
        }
    }
}

TEST_CASE("dual pairs preserve complementarity") {
    std::mt19937_64 rng(501);
    FieldTower t = fixtures::f4();
    for (int i = 0; i < 30; ++i) {
        std::size_t n = 2 + (rng() % 2);
        FormSpec f = rand_form(t, n, rng);
        auto [c, d] = rand_acp_split(t, n, rng() % (n * t.m() + 1), rng);
        auto [dc, dd] = dual_pair(f, c, d);
        CHECK(is_acp(dc, dd).complementary);
    }
    // duals of (full, zero) stay complementary
    FormSpec id = FormSpec::identity(t, 2);
    auto [dc, dd] = dual_pair(id, AdditiveCode::full(t, 2), AdditiveCode::zero(t, 2));
    CHECK(is_acp(dc, dd).complementary);
    // the length-3 common-word pair dualizes to a non-complementary pair
    AdditiveCode c = AdditiveCode::span_fq(t, fixtures::g1_counter(t));
    AdditiveCode d = AdditiveCode::span_fq(t, fixtures::g2_counter(t));
    auto [dc2, dd2] = dual_pair(FormSpec::identity(t, 3), c, d);
    CHECK_FALSE(is_acp(dc2, dd2).complementary);
}

TEST_CASE("linear complementary pairs") {
    FieldTower t = fixtures::f25();
    // (C, C) with positive dimension is never complementary
    std::mt19937_64 rng(61);
    LinearCode c = rand_linear_dim(t, t.top(), 4, 2, rng);
    PairVerdict v = is_lcp(c, c);
    CHECK_FALSE(v.complementary);
    REQUIRE(v.witness.has_value());
    CHECK(c.member(*v.witness));
    // complementary pair via identity + complement construction
    Mat top = fixtures::mat_int(t, t.top(), "1 0 0 0; 0 1 0 0");
    Mat bot = fixtures::mat_int(t, t.top(), "0 0 1 0; 0 0 0 1");
    PairVerdict ok = is_lcp(LinearCode::from_generator(t, t.top(), top),
                            LinearCode::from_generator(t, t.top(), bot));
    CHECK(ok.complementary);
}

TEST_CASE("brute-force complementarity agrees") {
    std::mt19937_64 rng(71);
    FieldTower t = fixtures::f4();
    for (int i = 0; i < 50; ++i) {
        AdditiveCode c = rand_additive(t, 3, 3, rng);
        AdditiveCode d = rand_additive(t, 3, 3, rng);
        PairVerdict fast = is_acp(c, d);
        PairVerdict slow = brute_acp(c, d);
        CHECK(fast.complementary == slow.complementary);
        CHECK(fast.witness.has_value() == slow.witness.has_value());
    }
}
