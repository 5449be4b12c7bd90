#include "acp/verdict.hpp"

#include "acp/errors.hpp"

namespace acp {

PairVerdict is_acp(const AdditiveCode& c, const AdditiveCode& d) {
    if (c.tower() != d.tower() || c.length() != d.length())
        throw std::invalid_argument("codes live in different spaces");
    PairVerdict v;
    v.dim_c = c.dim_fq();
    v.dim_d = d.dim_fq();
    v.ambient = c.length() * c.tower().m();
    v.witness = intersection_witness(c, d);
    v.complementary = !v.witness.has_value() && v.dim_c + v.dim_d == v.ambient;
    return v;
}

PairVerdict is_lcp(const LinearCode& ct, const LinearCode& dt) {
    if (ct.tower() != dt.tower() || ct.field() != dt.field() || ct.length() != dt.length())
        throw std::invalid_argument("codes live in different spaces");
    PairVerdict v;
    v.dim_c = ct.dim();
    v.dim_d = dt.dim();
    v.ambient = ct.length();
    if (v.dim_c > 0 && v.dim_d > 0) {
        Mat stack = vstack(ct.generator(), dt.generator());
        Mat lk = left_kernel(stack);
        if (lk.rows() > 0) {
            // (x | y) with x G1 = -(y G2) != 0 is a common codeword
            std::vector<Elem> w(ct.length(), ct.field()->zero());
            for (std::size_t j = 0; j < ct.length(); ++j) {
                Elem acc = ct.field()->zero();
                for (std::size_t i = 0; i < v.dim_c; ++i) acc = acc + lk.at(0, i) * ct.generator().at(i, j);
                w[j] = acc;
            }
            v.witness = std::move(w);
        }
    }
    v.complementary = !v.witness.has_value() && v.dim_c + v.dim_d == v.ambient;
    return v;
}

namespace {

Mat traced_block(const FieldTower& t, const FormSpec& f, const AdditiveCode& code) {
    return trace_entrywise(t, form_product_matrix(t, f, code.basis()));
}

}  // namespace

std::pair<bool, std::size_t> rank_necessary(const FormSpec& f, const AdditiveCode& c,
                                            const AdditiveCode& d) {
    if (c.tower() != d.tower() || c.length() != d.length())
        throw std::invalid_argument("codes live in different spaces");
    if (f.length() != c.length()) throw std::invalid_argument("form length mismatch");
    const FieldTower& t = c.tower();
    Mat block = hstack(traced_block(t, f, c), traced_block(t, f, d));
    std::size_t r = rank(block);
    return {r == c.length(), r};
}

bool rank_iff(const FormSpec& f, const AdditiveCode& c, const AdditiveCode& d) {
    if (c.tower() != d.tower() || c.length() != d.length())
        throw std::invalid_argument("codes live in different spaces");
    if (f.length() != c.length()) throw std::invalid_argument("form length mismatch");
    const FieldTower& t = c.tower();
    const std::size_t nm = c.length() * t.m();
    if (c.dim_fq() + d.dim_fq() != nm)
        throw PreconditionError("dimension hypothesis dim C + dim D = n m fails");
    Mat h1 = parity_check(f, c);
    Mat h2 = parity_check(f, d);
    Mat t1 = trace_entrywise(t, h2 * form_product_matrix(t, f, c.basis()));
    Mat t2 = trace_entrywise(t, h1 * form_product_matrix(t, f, d.basis()));
    return rank(t1) == c.dim_fq() && rank(t2) == d.dim_fq();
}

std::pair<AdditiveCode, AdditiveCode> dual_pair(const FormSpec& f, const AdditiveCode& c,
                                                const AdditiveCode& d) {
    return {left_dual(f, c), left_dual(f, d)};
}

}  // namespace acp
