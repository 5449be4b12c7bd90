#pragma once

#include "acp/form.hpp"

namespace acp {

/// Outcome of a complementarity check. A witness (a nonzero common codeword)
/// is attached whenever the intersection is nontrivial.
struct PairVerdict {
    bool complementary = false;
    std::optional<std::vector<Elem>> witness;
    std::size_t dim_c = 0, dim_d = 0, ambient = 0;
};

/// (C, D) complementary as F_q-spaces: trivial intersection and
/// dim C + dim D = n m. Form-free.
PairVerdict is_acp(const AdditiveCode& c, const AdditiveCode& d);

/// Linear complementarity over the codes' own field: trivial intersection
/// and dimensions summing to n.
PairVerdict is_lcp(const LinearCode& ct, const LinearCode& dt);

/// Necessary condition: the n x (k1+k2) mid-field matrix
/// [ Tr(M (pi(G1) P)^T) | Tr(M (pi(G2) P)^T) ] must have rank n whenever
/// (C, D) is complementary. Returns (rank == n, rank).
std::pair<bool, std::size_t> rank_necessary(const FormSpec& f, const AdditiveCode& c, const AdditiveCode& d);

/// Exact criterion under the hypothesis dim C + dim D = n m:
/// rank Tr(H2 M (pi(G1) P)^T) = dim C and rank Tr(H1 M (pi(G2) P)^T) = dim D
/// where H_i generates the left dual of the respective code. Equals
/// is_acp(c, d). Throws PreconditionError when the dimension hypothesis
/// fails.
bool rank_iff(const FormSpec& f, const AdditiveCode& c, const AdditiveCode& d);

/// (C^perpL, D^perpL); complementary exactly when (C, D) is.
std::pair<AdditiveCode, AdditiveCode> dual_pair(const FormSpec& f, const AdditiveCode& c,
                                                const AdditiveCode& d);

}  // namespace acp
