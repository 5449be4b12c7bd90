#include "doctest.h"

#include <algorithm>
#include <random>

#include "acp/code.hpp"
#include "fixtures.hpp"
#include "util.hpp"

using namespace acp;
using namespace testutil;

TEST_CASE("span canonicalization") {
    FieldTower t = fixtures::f4();
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        Mat rows = rand_mat(t.top(), 4, 3, rng);
        AdditiveCode a = AdditiveCode::span_fq(t, rows);
        // shuffle rows; the stored value must not change
        std::vector<std::size_t> idx{0, 1, 2, 3};
        std::shuffle(idx.begin(), idx.end(), rng);
        AdditiveCode b = AdditiveCode::span_fq(t, take_rows(rows, idx));
        CHECK(a == b);
    }
    // duplicates collapse
    Mat v = rand_mat(t.top(), 1, 3, rng);
    AdditiveCode dup = AdditiveCode::span_fq(t, vstack(v, v));
    CHECK(dup.dim_fq() == AdditiveCode::span_fq(t, v).dim_fq());
    // empty input is the zero code
    CHECK(AdditiveCode::zero(t, 4).dim_fq() == 0);
    CHECK(AdditiveCode::full(t, 4).dim_fq() == 8);
}

TEST_CASE("fixture dimensions") {
    FieldTower t = fixtures::f4();
    CHECK(AdditiveCode::span_fq(t, fixtures::g1_len6(t)).dim_fq() == 8);
    CHECK(AdditiveCode::span_fq(t, fixtures::g2_len6(t)).dim_fq() == 4);
    CHECK(AdditiveCode::span_fq(t, fixtures::g1_counter(t)).dim_fq() == 3);
    CHECK(AdditiveCode::span_fq(t, fixtures::g2_counter(t)).dim_fq() == 3);
}

TEST_CASE("membership") {
    FieldTower t = fixtures::f4();
    AdditiveCode c = AdditiveCode::span_fq(t, fixtures::g1_counter(t));
    AdditiveCode d = AdditiveCode::span_fq(t, fixtures::g2_counter(t));
    Elem w = t.alpha();
    std::vector<Elem> ww0{w, w, t.top()->zero()};
    CHECK(c.member(ww0));
    CHECK(d.member(ww0));
    std::vector<Elem> zero(3, t.top()->zero());
    CHECK(c.member(zero));
    std::vector<Elem> outside{t.top()->one(), t.top()->zero(), t.top()->zero()};
    CHECK_FALSE(c.member(outside));
    CHECK_THROWS_AS(c.member(std::vector<Elem>(2, t.top()->zero())), std::invalid_argument);
}

TEST_CASE("meet and join dimension formula") {
    FieldTower t = fixtures::f4();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        AdditiveCode c = rand_additive(t, 3, 3, rng);
        AdditiveCode d = rand_additive(t, 3, 3, rng);
        AdditiveCode mt = meet(c, d);
        AdditiveCode jn = join(c, d);
        CHECK(jn.dim_fq() == c.dim_fq() + d.dim_fq() - mt.dim_fq());
        CHECK(c.contains(mt));
        CHECK(d.contains(mt));
        CHECK(jn.contains(c));
        CHECK(jn.contains(d));
        CHECK(meet(c, c) == c);
    }
}

TEST_CASE("lift multiplies dimension by m and preserves the set") {
    std::mt19937_64 rng(13);
    for (auto tw : {fixtures::f4(), fixtures::f9()}) {
        for (int i = 0; i < 20; ++i) {
            LinearCode ct = rand_linear_dim(tw, tw.top(), 4, 2, rng);
            AdditiveCode lifted = lift(ct);
            CHECK(lifted.dim_fq() == tw.m() * ct.dim());
            for (int s = 0; s < 25; ++s) {
                std::vector<Elem> v = rand_vector(tw, 4, rng);
                CHECK(ct.member(v) == lifted.member(v));
            }
        }
    }
    // lift of the full space is the full space
    FieldTower t = fixtures::f4();
    CHECK(lift(LinearCode::full(t, t.top(), 3)) == AdditiveCode::full(t, 3));
}

TEST_CASE("trace codes reproduce the tabulated parameters") {
    FieldTower t = fixtures::f4();
    auto table = fixtures::trace_table();
    // row 1: [5,2,3], row 5: [9,2,6]
    for (std::size_t idx : {std::size_t{0}, std::size_t{4}}) {
        const auto& row = table[idx];
        AdditiveCode c = AdditiveCode::span_fq(t, fixtures::mat_f4(t, row.gen));
        LinearCode tc = trace_code(c);
        CHECK(tc.length() == row.n);
        CHECK(tc.dim() == row.k);
        CHECK(min_distance(tc) == row.d);
        CHECK(is_lcd(tc) == row.lcd);
    }
    // trace of the zero code is the zero code
    CHECK(trace_code(AdditiveCode::zero(t, 5)).dim() == 0);
}

TEST_CASE("minimum distance basics") {
    FieldTower t = fixtures::f4();
    CHECK(min_distance(LinearCode::full(t, t.mid(), 6)) == 1);
    // binary repetition code
    Mat rep = fixtures::mat_int(t, t.mid(), "1 1 1 1 1");
    CHECK(min_distance(LinearCode::from_generator(t, t.mid(), rep)) == 5);
    // trace code of table row 7 has distance 4
    AdditiveCode c7 = AdditiveCode::span_fq(t, fixtures::mat_f4(t, fixtures::trace_table()[6].gen));
    CHECK(min_distance(trace_code(c7)) == 4);
    CHECK_THROWS_AS(min_distance(LinearCode::zero(t, t.mid(), 4)), PreconditionError);
}

TEST_CASE("scaling is a group action") {
    FieldTower t = fixtures::f25();
    std::mt19937_64 rng(29);
    for (int i = 0; i < 20; ++i) {
        AdditiveCode c = rand_additive(t, 4, 3, rng);
        std::vector<Elem> ones(4, t.top()->one());
        CHECK(scale(ones, c) == c);
        std::vector<Elem> a, ainv;
        for (int j = 0; j < 4; ++j) {
            Elem x = rand_nonzero(t.top(), rng);
            a.push_back(x);
            ainv.push_back(x.inverse());
        }
        CHECK(scale(ainv, scale(a, c)) == c);
        CHECK(scale(a, c).dim_fq() == c.dim_fq());
    }
    std::vector<Elem> bad(4, t.top()->zero());
    AdditiveCode c = rand_additive(t, 4, 2, rng);
    CHECK_THROWS_AS(scale(bad, c), std::invalid_argument);
}

TEST_CASE("lcd verdicts") {
    FieldTower t = fixtures::f4();
    CHECK(is_lcd(LinearCode::zero(t, t.mid(), 3)));
    CHECK(is_lcd(LinearCode::full(t, t.mid(), 3)));
}

TEST_CASE("parity annihilates the generator") {
    std::mt19937_64 rng(37);
    FieldTower t = fixtures::f9();
    for (int i = 0; i < 20; ++i) {
        LinearCode c = rand_linear_dim(t, t.top(), 5, 3, rng);
        Mat h = c.parity();
        CHECK(h.rows() == 2);
        Mat prod = h * c.generator().transpose();
        CHECK(prod.is_zero());
        CHECK(c.dual().dim() == 2);
    }
}

TEST_CASE("tracing a lifted code equals spanning the traced generators") {
    std::mt19937_64 rng(53);
    for (auto tw : {fixtures::f4(), fixtures::f9()}) {
        for (int i = 0; i < 20; ++i) {
            LinearCode ct = rand_linear_dim(tw, tw.top(), 4, 1 + rng() % 3, rng);
            LinearCode lhs = trace_code(lift(ct));
            LinearCode rhs = LinearCode::from_generator(tw, tw.mid(), [&] {
                // traces of alpha^j g for all generator rows g
                Mat rows(tw.top(), ct.dim() * tw.m(), 4);
                Elem a = tw.alpha();
                for (std::size_t r = 0; r < ct.dim(); ++r) {
                    Elem cur = tw.top()->one();
                    for (std::size_t l = 0; l < tw.m(); ++l) {
                        for (std::size_t j = 0; j < 4; ++j)
                            rows.at(r * tw.m() + l, j) = cur * ct.generator().at(r, j);
                        cur = cur * a;
                    }
                }
                return trace_entrywise(tw, rows);
            }());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("weight recount oracle confirms the tabulated distances") {
    // independent path: enumerate all mid-level vectors, keep members, take
    // the minimum nonzero weight
    FieldTower t = fixtures::f4();
    for (const auto& row : fixtures::trace_table()) {
        AdditiveCode c = AdditiveCode::span_fq(t, fixtures::mat_f4(t, row.gen));
        LinearCode tc = trace_code(c);
        std::size_t best = row.n + 1;
        u64 total = 1;
        for (std::size_t i = 0; i < row.n; ++i) total *= 2;
        for (u64 word = 1; word < total; ++word) {
            std::vector<Elem> v(row.n, t.mid()->zero());
            std::size_t weight = 0;
            for (std::size_t i = 0; i < row.n; ++i)
                if ((word >> i) & 1) {
                    v[i] = t.mid()->one();
                    ++weight;
                }
            if (tc.member(v)) best = std::min(best, weight);
        }
        CHECK(best == row.d);
        CHECK(best == min_distance(tc));
    }
}

TEST_CASE("distance enumeration cap") {
    FieldTower t = fixtures::f4();
    AdditiveCode big = AdditiveCode::full(t, 13);  // 2^26 words
    CHECK_THROWS_AS(min_distance(big), PreconditionError);
}
