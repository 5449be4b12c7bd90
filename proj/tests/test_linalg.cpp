#include "doctest.h"

#include <random>

#include "acp/linalg.hpp"
#include "fixtures.hpp"
#include "util.hpp"

using namespace acp;
using namespace testutil;

TEST_CASE("rref basics") {
    const Field* f2 = prime_field(2);
    CHECK(rank(Mat::identity(f2, 5)) == 5);
    CHECK(rank(Mat(f2, 3, 4)) == 0);
    CHECK(rank(Mat(f2, 0, 4)) == 0);
    CHECK(rank(Mat(f2, 4, 0)) == 0);
}

TEST_CASE("rref idempotence and transpose rank on random matrices") {
    std::mt19937_64 rng(5);
    for (u64 p : {2ull, 3ull, 5ull}) {
        const Field* f = prime_field(p);
        for (int i = 0; i < 50; ++i) {
            Mat a = rand_mat(f, 4, 6, rng);
            RrefResult r1 = rref(a);
            RrefResult r2 = rref(r1.r);
            CHECK(r1.r == r2.r);
            CHECK(rank(a) == rank(a.transpose()));
        }
    }
}

TEST_CASE("kernel dimensions") {
    const Field* f3 = prime_field(3);
    CHECK(kernel(Mat::identity(f3, 4)).rows() == 0);
    CHECK(kernel(Mat(f3, 2, 3)).rows() == 3);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        Mat a = rand_mat(f3, 4, 6, rng);
        Mat k = kernel(a);
        CHECK(k.rows() == 6 - rank(a));
        // every kernel row annihilates a
        for (std::size_t r = 0; r < k.rows(); ++r)
            for (std::size_t i2 = 0; i2 < a.rows(); ++i2) {
                Elem acc = f3->zero();
                for (std::size_t j = 0; j < a.cols(); ++j) acc = acc + a.at(i2, j) * k.at(r, j);
                CHECK(acc.is_zero());
            }
    }
}

TEST_CASE("coordinate expansion") {
    FieldTower t = fixtures::f4();
    Elem w = t.alpha();
    Mat one(t.top(), 1, 1);
    one.at(0, 0) = w;
    Mat e = expand_coords(t, one);
    CHECK(e.at(0, 0).is_zero());
    CHECK(e.at(0, 1).is_one());

    one.at(0, 0) = t.top()->one();
    e = expand_coords(t, one);
    CHECK(e.at(0, 0).is_one());
    CHECK(e.at(0, 1).is_zero());

    // the length-6 example generator expands to an 8x12 binary matrix of rank 8
    Mat g1 = fixtures::g1_len6(t);
    Mat ex = expand_coords(t, g1);
    CHECK(ex.rows() == 8);
    CHECK(ex.cols() == 12);
    CHECK(rank(ex) == 8);

    CHECK(contract_coords(t, ex) == g1);
}

TEST_CASE("expansion preserves row-space dimension") {
    std::mt19937_64 rng(23);
    FieldTower t = fixtures::f4();
    for (int i = 0; i < 60; ++i) {
        Mat a = rand_mat(t.top(), 4, 3, rng);
        CHECK(rank(expand_coords(t, a)) ==
              AdditiveCode::span_fq(t, a).dim_fq());
    }
}

TEST_CASE("entrywise trace") {
    FieldTower t = fixtures::f4();
    CHECK(trace_entrywise(t, Mat(t.top(), 2, 3)).is_zero());

    // first trace-table generator maps to the stated binary matrix
    Mat g = fixtures::mat_f4(t, "w w2 0 w 0; 0 w w2 0 w");
    Mat tr = trace_entrywise(t, g);
    CHECK(tr == fixtures::mat_int(t, t.mid(), "1 1 0 1 0; 0 1 1 0 1"));

    // trace commutes with mid-field row combinations
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        Mat a = rand_mat(t.top(), 2, 4, rng);
        Elem c0 = rand_elem(t.mid(), rng), c1 = rand_elem(t.mid(), rng);
        std::vector<Elem> comb(4, t.top()->zero());
        for (std::size_t j = 0; j < 4; ++j)
            comb[j] = t.embed_to_top(c0) * a.at(0, j) + t.embed_to_top(c1) * a.at(1, j);
        Mat comb_m(t.top(), 1, 4);
        comb_m.set_row(0, comb);
        Mat lhs = trace_entrywise(t, comb_m);
        Mat tr_a = trace_entrywise(t, a);
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(lhs.at(0, j) == c0 * tr_a.at(0, j) + c1 * tr_a.at(1, j));
    }
}

TEST_CASE("solve_left finds representations") {
    std::mt19937_64 rng(47);
    const Field* f5 = prime_field(5);
    for (int i = 0; i < 40; ++i) {
        Mat a = rand_mat(f5, 3, 5, rng);
        std::vector<Elem> x{rand_elem(f5, rng), rand_elem(f5, rng), rand_elem(f5, rng)};
        std::vector<Elem> v(5, f5->zero());
        for (std::size_t j = 0; j < 5; ++j)
            for (std::size_t r = 0; r < 3; ++r) v[j] = v[j] + x[r] * a.at(r, j);
        auto sol = solve_left(a, v);
        REQUIRE(sol.has_value());
        // the returned solution reproduces v
        for (std::size_t j = 0; j < 5; ++j) {
            Elem acc = f5->zero();
            for (std::size_t r = 0; r < 3; ++r) acc = acc + (*sol)[r] * a.at(r, j);
            CHECK(acc == v[j]);
        }
    }
}

TEST_CASE("independence over the mid field") {
    FieldTower t = fixtures::f4();
    Elem w = t.alpha();
    std::vector<Elem> good{t.top()->one(), w};
    CHECK(independent_over_mid(t, good));
    std::vector<Elem> dup{t.top()->one(), t.top()->one()};
    CHECK_FALSE(independent_over_mid(t, dup));
    std::vector<Elem> zero{t.top()->zero()};
    CHECK_FALSE(independent_over_mid(t, zero));
    CHECK(independent_over_mid(t, std::vector<Elem>{}));
}
