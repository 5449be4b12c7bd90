#pragma once

#include "acp/verdict.hpp"

namespace acp {

/// Lift of a linear pair to an additive pair; complementary exactly when the
/// linear pair is.
struct LiftedPair {
    AdditiveCode c, d;
    PairVerdict linear;    // verdict on the inputs
    PairVerdict additive;  // recomputed verdict on the lifts
};
LiftedPair lift_pair(const LinearCode& ct, const LinearCode& dt);

/// Trace codes of an additive pair with their linear verdict over F_q.
struct TracedPair {
    LinearCode c, d;
    PairVerdict linear;
};
TracedPair trace_pair(const AdditiveCode& c, const AdditiveCode& d);

/// Search for a in (F_{q^m}^*)^n with (aC, D) linearly complementary. Tries
/// the all-ones vector plus `budget` further candidates in ascending
/// exponent order, then `budget` seeded random draws; first hit wins.
struct ScalingSearch {
    std::optional<std::vector<Elem>> a;
    std::optional<PairVerdict> scaled_lcp;     // verdict of (aC, D)
    std::optional<PairVerdict> lifted_acp;     // verdict of the lifted pair
    u64 candidates_tried = 0;
};
ScalingSearch find_scaling(const LinearCode& ct, const LinearCode& dt, u64 budget, u64 seed);

/// Reed-Solomon code on distinct evaluation points (rows points^0 ..
/// points^{k-1}) together with its Euclidean dual; both MDS.
struct RsPair {
    LinearCode code, dual;
};
RsPair rs_code(const FieldTower& t, std::span<const Elem> points, std::size_t k);

/// Length n+1 expansion: C_ex has generator ((lambda, P); (0, G1)) with
/// lambda the first nonzero element in power order making the stacked
/// (n+1) x (n+1) matrix nonsingular; D_ex has generator (P'^T | G2) with P'
/// the first n-k entries of P. Requires the input pair to be linearly
/// complementary.
struct ExpandedPair {
    LinearCode c, d;
    Elem lambda;
    PairVerdict linear;    // verdict of the expanded linear pair
    PairVerdict additive;  // verdict of its lift
};
ExpandedPair expand_pair(const LinearCode& ct, const LinearCode& dt, std::span<const Elem> p_row);

/// C = sum alpha_i C_i, D = sum alpha_i D_i for m mid-level linearly
/// complementary pairs and mid-independent alphas; the result is an additive
/// complementary pair of the same length.
struct CombinedPair {
    AdditiveCode c, d;
    PairVerdict additive;
};
CombinedPair combine_lcps(const FieldTower& t, std::span<const Elem> alphas,
                          std::span<const std::pair<LinearCode, LinearCode>> pairs);

/// Length n+1 parity-style expansion: C_ex generated by ((1, d); (0, G)),
/// D_ex cut out by the parity matrix ((1, c); (0, H)) with H a parity check
/// of D. Requires (C, D) linearly complementary and d . c^T = 0.
struct ParityExpandedPair {
    AdditiveCode c, d;
    LinearCode c_linear, d_linear;
    PairVerdict additive;
};
ParityExpandedPair parity_expansion(const LinearCode& ct, const LinearCode& dt,
                                    std::span<const Elem> c_row, std::span<const Elem> d_row);

}  // namespace acp
