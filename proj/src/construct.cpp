#include "acp/construct.hpp"

#include <random>

#include "acp/errors.hpp"

namespace acp {

LiftedPair lift_pair(const LinearCode& ct, const LinearCode& dt) {
    if (ct.tower() != dt.tower() || ct.length() != dt.length())
        throw std::invalid_argument("codes live in different spaces");
    AdditiveCode c = lift(ct);
    AdditiveCode d = lift(dt);
    PairVerdict additive = is_acp(c, d);
    return {std::move(c), std::move(d), is_lcp(ct, dt), std::move(additive)};
}

TracedPair trace_pair(const AdditiveCode& c, const AdditiveCode& d) {
    if (c.tower() != d.tower() || c.length() != d.length())
        throw std::invalid_argument("codes live in different spaces");
    LinearCode tc = trace_code(c);
    LinearCode td = trace_code(d);
    PairVerdict linear = is_lcp(tc, td);
    return {std::move(tc), std::move(td), std::move(linear)};
}

namespace {

std::vector<Elem> exponents_to_vector(const FieldTower& t, std::span<const u64> exps) {
    const Elem& g = t.top()->primitive_element();
    std::vector<Elem> a;
    a.reserve(exps.size());
    for (u64 e : exps) a.push_back(g.pow(e));
    return a;
}

}  // namespace

ScalingSearch find_scaling(const LinearCode& ct, const LinearCode& dt, u64 budget, u64 seed) {
    if (ct.tower() != dt.tower() || ct.field() != dt.field() || ct.length() != dt.length())
        throw std::invalid_argument("codes live in different spaces");
    const FieldTower& t = ct.tower();
    if (ct.field() != t.top()) throw std::invalid_argument("scaling search expects top-level codes");
    const std::size_t n = ct.length();
    if (ct.dim() + dt.dim() != n) throw PreconditionError("dimensions must sum to the length");

    ScalingSearch res;
    auto try_candidate = [&](const std::vector<Elem>& a) -> bool {
        ++res.candidates_tried;
        LinearCode scaled = scale(a, ct);
        PairVerdict v = is_lcp(scaled, dt);
        if (!v.complementary) return false;
        res.a = a;
        res.scaled_lcp = v;
        LiftedPair lifted = lift_pair(scaled, dt);
        res.lifted_acp = lifted.additive;
        return true;
    };

    // ascending exponent vectors, all-ones first
    const u64 group = t.qm() - 1;
    std::vector<u64> exps(n, 0);
    for (u64 tried = 0; tried <= budget; ++tried) {
        if (try_candidate(exponents_to_vector(t, exps))) return res;
        // next exponent tuple (rightmost fastest); stop when wrapped around
        std::size_t i = n;
        while (i-- > 0) {
            if (++exps[i] < group) break;
            exps[i] = 0;
            if (i == 0) tried = budget;  // full space exhausted
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> de(0, group - 1);
    for (u64 draw = 0; draw < budget; ++draw) {
        std::vector<u64> r(n);
        for (auto& e : r) e = de(rng);
        if (try_candidate(exponents_to_vector(t, r))) return res;
    }
    return res;
}

RsPair rs_code(const FieldTower& t, std::span<const Elem> points, std::size_t k) {
    const std::size_t n = points.size();
    if (k < 1 || k > n) throw std::invalid_argument("dimension out of range");
    for (std::size_t i = 0; i < n; ++i) {
        t.require_top(points[i]);
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j]) throw std::invalid_argument("evaluation points must be distinct");
    }
    Mat g(t.top(), k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Elem cur = t.top()->one();
        for (std::size_t i = 0; i < k; ++i) {
            g.at(i, j) = cur;
            cur = cur * points[j];
        }
    }
    LinearCode code = LinearCode::from_generator(t, t.top(), g);
    LinearCode dual = code.dual();
    return {std::move(code), std::move(dual)};
}

ExpandedPair expand_pair(const LinearCode& ct, const LinearCode& dt, std::span<const Elem> p_row) {
    const FieldTower& t = ct.tower();
    if (ct.field() != t.top() || dt.field() != t.top()) throw std::invalid_argument("expected top-level codes");
    const std::size_t n = ct.length();
    if (p_row.size() != n) throw std::invalid_argument("expansion row length mismatch");
    bool p_nonzero = false;
    for (const Elem& e : p_row) p_nonzero |= !e.is_zero();
    if (!p_nonzero) throw std::invalid_argument("expansion row must be nonzero");
    if (!is_lcp(ct, dt).complementary) throw PreconditionError("input pair is not linearly complementary");

    const std::size_t k = ct.dim();
    // D side: first n-k entries of P as a leading column
    Mat gex2(t.top(), dt.dim(), n + 1);
    for (std::size_t i = 0; i < dt.dim(); ++i) {
        gex2.at(i, 0) = p_row[i];
        for (std::size_t j = 0; j < n; ++j) gex2.at(i, j + 1) = dt.generator().at(i, j);
    }

    const Elem& g = t.top()->primitive_element();
    for (u64 e = 0; e < t.qm() - 1; ++e) {
        Elem lambda = g.pow(e);
        Mat gex1(t.top(), k + 1, n + 1);
        gex1.at(0, 0) = lambda;
        for (std::size_t j = 0; j < n; ++j) gex1.at(0, j + 1) = p_row[j];
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) gex1.at(i + 1, j + 1) = ct.generator().at(i, j);
        if (rank(vstack(gex1, gex2)) != n + 1) continue;
        LinearCode cex = LinearCode::from_generator(t, t.top(), gex1);
        LinearCode dex = LinearCode::from_generator(t, t.top(), gex2);
        PairVerdict linear = is_lcp(cex, dex);
        LiftedPair lifted = lift_pair(cex, dex);
        return {std::move(cex), std::move(dex), lambda, std::move(linear), lifted.additive};
    }
    throw std::logic_error("no expansion scalar produced a nonsingular stack");
}

CombinedPair combine_lcps(const FieldTower& t, std::span<const Elem> alphas,
                          std::span<const std::pair<LinearCode, LinearCode>> pairs) {
    if (alphas.size() != t.m()) throw std::invalid_argument("need exactly m combining scalars");
    if (pairs.size() != t.m()) throw std::invalid_argument("need exactly m pairs");
    if (!independent_over_mid(t, alphas)) throw PreconditionError("combining scalars are mid-dependent");
    const std::size_t n = pairs.empty() ? 0 : pairs[0].first.length();
    std::vector<std::vector<Elem>> c_rows, d_rows;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [ci, di] = pairs[i];
        if (ci.field() != t.mid() || di.field() != t.mid())
            throw std::invalid_argument("input pairs must be mid-level codes");
        if (ci.length() != n || di.length() != n) throw std::invalid_argument("pair lengths differ");
        if (!is_lcp(ci, di).complementary)
            throw PreconditionError("input pair is not linearly complementary");
        auto push_scaled = [&](const Mat& gen, std::vector<std::vector<Elem>>& out) {
            for (std::size_t r = 0; r < gen.rows(); ++r) {
                std::vector<Elem> row(n, t.top()->zero());
                for (std::size_t j = 0; j < n; ++j) row[j] = alphas[i] * t.embed_to_top(gen.at(r, j));
                out.push_back(std::move(row));
            }
        };
        push_scaled(ci.generator(), c_rows);
        push_scaled(di.generator(), d_rows);
    }
    AdditiveCode c = AdditiveCode::span_fq(t, Mat::from_rows(t.top(), c_rows));
    AdditiveCode d = AdditiveCode::span_fq(t, Mat::from_rows(t.top(), d_rows));
    PairVerdict v = is_acp(c, d);
    return {std::move(c), std::move(d), std::move(v)};
}

ParityExpandedPair parity_expansion(const LinearCode& ct, const LinearCode& dt,
                                    std::span<const Elem> c_row, std::span<const Elem> d_row) {
    const FieldTower& t = ct.tower();
    if (ct.field() != t.top() || dt.field() != t.top()) throw std::invalid_argument("expected top-level codes");
    const std::size_t n = ct.length();
    const std::size_t k = ct.dim();
    if (dt.length() != n) throw std::invalid_argument("pair lengths differ");
    if (c_row.size() != n || d_row.size() != n) throw std::invalid_argument("expansion row length mismatch");
    if (!is_lcp(ct, dt).complementary) throw PreconditionError("input pair is not linearly complementary");
    Elem ip = t.top()->zero();
    for (std::size_t j = 0; j < n; ++j) ip = ip + d_row[j] * c_row[j];
    if (!ip.is_zero()) throw PreconditionError("expansion rows must satisfy d c^T = 0");
    // the block argument needs d annihilated by D's parity rows and c by G
    if (!dt.member(d_row)) throw PreconditionError("expansion row d must lie in the second code");
    for (std::size_t i = 0; i < k; ++i) {
        Elem acc = t.top()->zero();
        for (std::size_t j = 0; j < n; ++j) acc = acc + ct.generator().at(i, j) * c_row[j];
        if (!acc.is_zero()) throw PreconditionError("expansion row c must lie in the dual of the first code");
    }

    Mat gex(t.top(), k + 1, n + 1);
    gex.at(0, 0) = t.top()->one();
    for (std::size_t j = 0; j < n; ++j) gex.at(0, j + 1) = d_row[j];
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) gex.at(i + 1, j + 1) = ct.generator().at(i, j);

    Mat h = dt.parity();  // k x n
    Mat hex(t.top(), k + 1, n + 1);
    hex.at(0, 0) = t.top()->one();
    for (std::size_t j = 0; j < n; ++j) hex.at(0, j + 1) = c_row[j];
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) hex.at(i + 1, j + 1) = h.at(i, j);

    LinearCode cex = LinearCode::from_generator(t, t.top(), gex);
    LinearCode dex = LinearCode::from_parity(t, t.top(), hex);
    AdditiveCode ca = lift(cex);
    AdditiveCode da = lift(dex);
    PairVerdict v = is_acp(ca, da);
    return {std::move(ca), std::move(da), std::move(cex), std::move(dex), std::move(v)};
}

}  // namespace acp
