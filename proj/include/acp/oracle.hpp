#pragma once

#include <functional>

#include "acp/verdict.hpp"

namespace acp {

/// Enumeration limits; every oracle checks its budget before running.
struct EnumBudget {
    u64 max_vectors = u64{1} << 14;
    u64 max_subspaces = 10'000'000;
};

enum class DualSide { left, right };

/// Definitional dual by filtering all q^{nm} vectors. Test-only referee for
/// form::left_dual / right_dual; production code never calls this.
AdditiveCode brute_dual(const FormSpec& f, const AdditiveCode& c, DualSide side,
                        const EnumBudget& budget = {});

/// Visits every subspace of F^dim exactly once as a canonical rref matrix
/// (ranks ascending, pivot sets and entries in deterministic order).
void enumerate_subspaces(const Field* field, std::size_t dim, const EnumBudget& budget,
                         const std::function<void(const Mat&)>& visit);

/// Total subspace count sum_v [dim v]_Q without enumeration (exact).
u64 subspace_count(u64 q, std::size_t dim);

/// Definitional complementarity check by listing the intersection.
PairVerdict brute_acp(const AdditiveCode& c, const AdditiveCode& d, const EnumBudget& budget = {});

/// All vectors of F_{q^m}^n in value order (budget-checked helper).
void enumerate_vectors(const FieldTower& t, std::size_t n, const EnumBudget& budget,
                       const std::function<void(std::span<const Elem>)>& visit);

}  // namespace acp
