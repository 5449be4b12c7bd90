#pragma once

// Randomized generators shared by the property suites.

#include <random>

#include "acp/form.hpp"

namespace testutil {

using namespace acp;

inline Elem rand_elem(const Field* f, std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> d(0, f->size_u64() - 1);
    return f->from_value(d(rng));
}

inline Elem rand_nonzero(const Field* f, std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> d(1, f->size_u64() - 1);
    return f->from_value(d(rng));
}

inline std::vector<Elem> rand_vector(const FieldTower& t, std::size_t n, std::mt19937_64& rng) {
    std::vector<Elem> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(rand_elem(t.top(), rng));
    return v;
}

inline FormSpec rand_form(const FieldTower& t, std::size_t n, std::mt19937_64& rng) {
    std::vector<Elem> mu;
    for (std::size_t i = 0; i < n; ++i) mu.push_back(rand_nonzero(t.top(), rng));
    std::vector<std::size_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::uniform_int_distribution<unsigned> dj(0, static_cast<unsigned>(t.k() * t.m() - 1));
    return FormSpec::make(t, std::move(mu), std::move(sigma), dj(rng));
}

inline Mat rand_mat(const Field* f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rand_elem(f, rng);
    return m;
}

/// Random additive code spanned by `gens` random vectors (dimension varies).
inline AdditiveCode rand_additive(const FieldTower& t, std::size_t n, std::size_t gens,
                                  std::mt19937_64& rng) {
    return AdditiveCode::span_fq(t, rand_mat(t.top(), gens, n, rng));
}

/// Random additive code of exactly the requested dimension.
inline AdditiveCode rand_additive_dim(const FieldTower& t, std::size_t n, std::size_t dim,
                                      std::mt19937_64& rng) {
    for (;;) {
        AdditiveCode c = rand_additive(t, n, dim, rng);
        if (c.dim_fq() == dim) return c;
    }
}

/// Random linear code of exactly the requested dimension over `level`.
inline LinearCode rand_linear_dim(const FieldTower& t, const Field* level, std::size_t n,
                                  std::size_t dim, std::mt19937_64& rng) {
    for (;;) {
        LinearCode c = LinearCode::from_generator(t, level, rand_mat(level, dim, n, rng));
        if (c.dim() == dim) return c;
    }
}

/// Splits F_{q^m}^n along a random basis: an exact complementary pair with
/// dim C = k.
inline std::pair<AdditiveCode, AdditiveCode> rand_acp_split(const FieldTower& t, std::size_t n,
                                                            std::size_t k, std::mt19937_64& rng) {
    const std::size_t nm = n * t.m();
    for (;;) {
        Mat m = rand_mat(t.mid(), nm, nm, rng);
        if (rank(m) != nm) continue;
        std::vector<std::size_t> top_idx, bot_idx;
        for (std::size_t i = 0; i < k; ++i) top_idx.push_back(i);
        for (std::size_t i = k; i < nm; ++i) bot_idx.push_back(i);
        Mat c_rows = contract_coords(t, take_rows(m, top_idx));
        Mat d_rows = contract_coords(t, take_rows(m, bot_idx));
        return {AdditiveCode::span_fq(t, c_rows), AdditiveCode::span_fq(t, d_rows)};
    }
}

}  // namespace testutil
