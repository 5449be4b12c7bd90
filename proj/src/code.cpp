#include "acp/code.hpp"

#include <algorithm>

#include "acp/errors.hpp"

namespace acp {

namespace {

void check_compatible(const AdditiveCode& c, const AdditiveCode& d) {
    if (c.tower() != d.tower() || c.length() != d.length())
        throw std::invalid_argument("codes live in different spaces");
}

}  // namespace

AdditiveCode AdditiveCode::span_fq(const FieldTower& t, const Mat& rows) {
    if (rows.field() != t.top()) throw std::invalid_argument("generators must be top-level");
    std::size_t n = rows.cols();
    RrefResult rr = rref(expand_coords(t, rows));
    std::vector<std::size_t> keep(rr.rank);
    for (std::size_t i = 0; i < rr.rank; ++i) keep[i] = i;
    Mat expanded = take_rows(rr.r, keep);
    Mat basis = contract_coords(t, expanded);
    return AdditiveCode(t, n, std::move(basis), std::move(expanded));
}

AdditiveCode AdditiveCode::zero(const FieldTower& t, std::size_t n) {
    return span_fq(t, Mat(t.top(), 0, n));
}

AdditiveCode AdditiveCode::full(const FieldTower& t, std::size_t n) {
    // mid-basis of the whole space: alpha^l at every position
    Mat rows(t.top(), n * t.m(), n);
    Elem a = t.alpha();
    for (std::size_t i = 0; i < n; ++i) {
        Elem cur = t.top()->one();
        for (std::size_t l = 0; l < t.m(); ++l) {
            rows.at(i * t.m() + l, i) = cur;
            cur = cur * a;
        }
    }
    return span_fq(t, rows);
}

bool AdditiveCode::member(std::span<const Elem> v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
    std::vector<Elem> ev = expand_vector(tower_, v);
    return in_row_space(expanded_, ev);
}

bool AdditiveCode::contains(const AdditiveCode& other) const {
    check_compatible(*this, other);
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!member(other.basis_.row(i))) return false;
    return true;
}

bool AdditiveCode::operator==(const AdditiveCode& o) const {
    return tower_ == o.tower_ && n_ == o.n_ && expanded_ == o.expanded_;
}

AdditiveCode meet(const AdditiveCode& c, const AdditiveCode& d) {
    check_compatible(c, d);
    const FieldTower& t = c.tower();
    if (c.dim_fq() == 0 || d.dim_fq() == 0) return AdditiveCode::zero(t, c.length());
    Mat stack = vstack(c.expanded(), d.expanded());
    Mat lk = left_kernel(stack);
    // each kernel row (x | y) yields the intersection vector x * basis(C)
    Mat inter(t.mid(), lk.rows(), c.expanded().cols());
    for (std::size_t r = 0; r < lk.rows(); ++r)
        for (std::size_t j = 0; j < c.expanded().cols(); ++j) {
            Elem acc = t.mid()->zero();
            for (std::size_t i = 0; i < c.dim_fq(); ++i) acc = acc + lk.at(r, i) * c.expanded().at(i, j);
            inter.at(r, j) = acc;
        }
    return AdditiveCode::span_fq(t, contract_coords(t, inter));
}

AdditiveCode join(const AdditiveCode& c, const AdditiveCode& d) {
    check_compatible(c, d);
    return AdditiveCode::span_fq(c.tower(), vstack(c.basis(), d.basis()));
}

std::optional<std::vector<Elem>> intersection_witness(const AdditiveCode& c, const AdditiveCode& d) {
    AdditiveCode m = meet(c, d);
    if (m.dim_fq() == 0) return std::nullopt;
    return m.basis().row(0);
}

LinearCode LinearCode::from_generator(const FieldTower& t, const Field* level, const Mat& gen) {
    if (level != t.mid() && level != t.top()) throw std::invalid_argument("level must be mid or top");
    if (gen.field() != level) throw std::invalid_argument("generator level mismatch");
    RrefResult rr = rref(gen);
    std::vector<std::size_t> keep(rr.rank);
    for (std::size_t i = 0; i < rr.rank; ++i) keep[i] = i;
    return LinearCode(t, level, gen.cols(), take_rows(rr.r, keep));
}

LinearCode LinearCode::from_parity(const FieldTower& t, const Field* level, const Mat& parity) {
    Mat gen = kernel(parity);
    return from_generator(t, level, gen);
}

LinearCode LinearCode::zero(const FieldTower& t, const Field* level, std::size_t n) {
    return from_generator(t, level, Mat(level, 0, n));
}

LinearCode LinearCode::full(const FieldTower& t, const Field* level, std::size_t n) {
    return from_generator(t, level, Mat::identity(level, n));
}

Mat LinearCode::parity() const { return rref(kernel(gen_)).r; }

LinearCode LinearCode::dual() const { return from_generator(tower_, field_, kernel(gen_)); }

bool LinearCode::member(std::span<const Elem> v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
    return in_row_space(gen_, v);
}

bool LinearCode::operator==(const LinearCode& o) const {
    return tower_ == o.tower_ && field_ == o.field_ && n_ == o.n_ && gen_ == o.gen_;
}

AdditiveCode lift(const LinearCode& ct) {
    const FieldTower& t = ct.tower();
    if (ct.field() != t.top()) throw std::invalid_argument("lift needs a top-level linear code");
    Mat rows(t.top(), ct.dim() * t.m(), ct.length());
    Elem a = t.alpha();
    for (std::size_t r = 0; r < ct.dim(); ++r) {
        Elem cur = t.top()->one();
        for (std::size_t l = 0; l < t.m(); ++l) {
            for (std::size_t j = 0; j < ct.length(); ++j) rows.at(r * t.m() + l, j) = cur * ct.generator().at(r, j);
            cur = cur * a;
        }
    }
    return AdditiveCode::span_fq(t, rows);
}

LinearCode trace_code(const AdditiveCode& c) {
    const FieldTower& t = c.tower();
    return LinearCode::from_generator(t, t.mid(), trace_entrywise(t, c.basis()));
}

namespace {

template <typename CodeT>
Mat scaled_generator(std::span<const Elem> a, const CodeT& c, const Mat& gen) {
    if (a.size() != c.length()) throw std::invalid_argument("scaling vector length mismatch");
    Mat out = gen;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].field() != gen.field()) throw std::invalid_argument("scaling vector level mismatch");
        if (a[j].is_zero()) throw std::invalid_argument("scaling vector must have nonzero coordinates");
        for (std::size_t i = 0; i < out.rows(); ++i) out.at(i, j) = out.at(i, j) * a[j];
    }
    return out;
}

}  // namespace

AdditiveCode scale(std::span<const Elem> a, const AdditiveCode& c) {
    return AdditiveCode::span_fq(c.tower(), scaled_generator(a, c, c.basis()));
}

LinearCode scale(std::span<const Elem> a, const LinearCode& c) {
    return LinearCode::from_generator(c.tower(), c.field(), scaled_generator(a, c, c.generator()));
}

namespace {

// Minimum Hamming weight over the F_p-span of the given rows (excluding 0),
// enumerated with a base-p odometer; adding a row once per digit step keeps
// the running codeword current because p * row = 0.
std::size_t min_weight_fp_span(const Mat& rows) {
    const Field* f = rows.field();
    const u64 p = f->characteristic();
    const std::size_t r = rows.rows();
    if (r == 0) throw PreconditionError("the zero code has no minimum distance");
    double words = 1;
    for (std::size_t i = 0; i < r; ++i) words *= static_cast<double>(p);
    if (words > static_cast<double>(1 << 24)) throw PreconditionError("minimum-distance enumeration cap exceeded");

    std::vector<Elem> cur(rows.cols(), f->zero());
    std::vector<u64> digit(r, 0);
    std::size_t best = rows.cols() + 1;
    u64 total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= p;
    auto add_row = [&](std::size_t i) {
        for (std::size_t j = 0; j < rows.cols(); ++j) cur[j] = cur[j] + rows.at(i, j);
    };
    for (u64 step = 1; step < total; ++step) {
        std::size_t i = 0;
        while (digit[i] == p - 1) {
            digit[i] = 0;
            add_row(i);  // wrap: -(p-1) * row == +row
            ++i;
        }
        ++digit[i];
        add_row(i);
        std::size_t w = 0;
        for (const Elem& e : cur)
            if (!e.is_zero()) ++w;
        best = std::min(best, w);
    }
    return best;
}

// Rows whose F_p-span equals the scalar-field span of the input rows: one
// copy of each row per F_p-coordinate unit of the scalar field. The units
// are the elements with coordinate vector e_l, i.e. from_value(p^l).
Mat fp_scalar_rows(const Mat& gen, const Field* scalar_field) {
    const std::size_t sd = scalar_field->prime_dim();
    Mat rows(gen.field(), gen.rows() * sd, gen.cols());
    u128 unit_value = 1;
    for (std::size_t l = 0; l < sd; ++l) {
        Elem b = embed_into(scalar_field->from_value(unit_value), gen.field());
        for (std::size_t r = 0; r < gen.rows(); ++r)
            for (std::size_t j = 0; j < gen.cols(); ++j) rows.at(r * sd + l, j) = b * gen.at(r, j);
        unit_value *= scalar_field->characteristic();
    }
    return rows;
}

}  // namespace

std::size_t min_distance(const AdditiveCode& c) {
    if (c.dim_fq() == 0) throw PreconditionError("the zero code has no minimum distance");
    return min_weight_fp_span(fp_scalar_rows(c.basis(), c.tower().mid()));
}

std::size_t min_distance(const LinearCode& c) {
    if (c.dim() == 0) throw PreconditionError("the zero code has no minimum distance");
    return min_weight_fp_span(fp_scalar_rows(c.generator(), c.field()));
}

bool is_lcd(const LinearCode& c) {
    if (c.dim() == 0) return true;
    Mat gram = c.generator() * c.generator().transpose();
    return rank(gram) == c.dim();
}

}  // namespace acp
