#include "acp/linalg.hpp"

#include <algorithm>

namespace acp {

Mat::Mat(const Field* f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols) {
    a_.assign(rows * cols, f->zero());
}

Mat::Mat(const Field* f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : f_(f), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
    for (const Elem& e : a_)
        if (e.field() != f_) throw std::invalid_argument("matrix entries must share one field");
}

Mat Mat::identity(const Field* f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
}

Mat Mat::from_rows(const Field* f, const std::vector<std::vector<Elem>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::vector<Elem> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Mat(f, rows.size(), cols, std::move(entries));
}

std::vector<Elem> Mat::row(std::size_t i) const {
    return std::vector<Elem>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void Mat::set_row(std::size_t i, std::span<const Elem> v) {
    if (v.size() != cols_) throw std::invalid_argument("row width mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + i * cols_);
}

Mat Mat::operator*(const Mat& o) const {
    if (f_ != o.f_) throw std::invalid_argument("field mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("inner dimensions differ");
    Mat out(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) = out.at(i, j) + aik * o.at(k, j);
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (f_ != o.f_ || rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    Mat out(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Mat Mat::transpose() const {
    Mat out(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat Mat::scaled_rows(std::span<const Elem> factors) const {
    if (factors.size() != rows_) throw std::invalid_argument("need one factor per row");
    Mat out(f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = factors[i] * at(i, j);
    return out;
}

Mat Mat::map(const std::function<Elem(const Elem&)>& fn) const {
    std::vector<Elem> entries;
    entries.reserve(a_.size());
    for (const Elem& e : a_) entries.push_back(fn(e));
    const Field* nf = entries.empty() ? f_ : entries[0].field();
    return Mat(nf, rows_, cols_, std::move(entries));
}

bool Mat::operator==(const Mat& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Elem& e) { return e.is_zero(); });
}

RrefResult rref(const Mat& a) {
    RrefResult res;
    res.r = a;
    Mat& m = res.r;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
        Elem inv = m.at(pivot_row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) = m.at(pivot_row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row) continue;
            Elem factor = m.at(i, col);
            if (factor.is_zero()) continue;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(pivot_row, j);
        }
        res.pivots.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

std::size_t rank(const Mat& a) { return rref(a).rank; }

Mat kernel(const Mat& a) {
    RrefResult rr = rref(a);
    const Field* f = a.field();
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Elem> v(a.cols(), f->zero());
        v[free_col] = f->one();
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.r.at(i, free_col);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Mat(f, 0, a.cols());
    return Mat::from_rows(f, basis);
}

Mat left_kernel(const Mat& a) { return kernel(a.transpose()); }

Mat vstack(const Mat& a, const Mat& b) {
    if (a.field() != b.field() || a.cols() != b.cols()) throw std::invalid_argument("vstack shape mismatch");
    std::vector<Elem> entries;
    entries.reserve((a.rows() + b.rows()) * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) entries.push_back(a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) entries.push_back(b.at(i, j));
    return Mat(a.field(), a.rows() + b.rows(), a.cols(), std::move(entries));
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.field() != b.field() || a.rows() != b.rows()) throw std::invalid_argument("hstack shape mismatch");
    Mat out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

Mat take_rows(const Mat& a, std::span<const std::size_t> idx) {
    Mat out(a.field(), idx.size(), a.cols());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(idx[i], j);
    return out;
}

std::optional<std::vector<Elem>> solve_left(const Mat& a, std::span<const Elem> v) {
    if (v.size() != a.cols()) throw std::invalid_argument("vector width mismatch");
    const Field* f = a.field();
    // x * A = v  <=>  A^T x^T = v^T; row reduce the augmented system.
    Mat att = a.transpose();
    Mat aug(f, att.rows(), att.cols() + 1);
    for (std::size_t i = 0; i < att.rows(); ++i) {
        for (std::size_t j = 0; j < att.cols(); ++j) aug.at(i, j) = att.at(i, j);
        aug.at(i, att.cols()) = v[i];
    }
    RrefResult rr = rref(aug);
    std::vector<Elem> x(a.rows(), f->zero());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == att.cols()) return std::nullopt;  // inconsistent
        x[rr.pivots[i]] = rr.r.at(i, att.cols());
    }
    return x;
}

bool in_row_space(const Mat& a, std::span<const Elem> v) { return solve_left(a, v).has_value(); }

Mat expand_coords(const FieldTower& t, const Mat& top) {
    if (top.field() != t.top()) throw std::invalid_argument("expected a top-level matrix");
    Mat out(t.mid(), top.rows(), top.cols() * t.m());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) {
            std::vector<Elem> coords = t.top_coords(top.at(i, j));
            for (std::size_t l = 0; l < t.m(); ++l) out.at(i, j * t.m() + l) = coords[l];
        }
    return out;
}

Mat contract_coords(const FieldTower& t, const Mat& mid) {
    if (mid.field() != t.mid()) throw std::invalid_argument("expected a mid-level matrix");
    if (mid.cols() % t.m() != 0) throw std::invalid_argument("width is not a multiple of m");
    Mat out(t.top(), mid.rows(), mid.cols() / t.m());
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) {
            std::vector<Elem> coords;
            coords.reserve(t.m());
            for (std::size_t l = 0; l < t.m(); ++l) coords.push_back(mid.at(i, j * t.m() + l));
            out.at(i, j) = t.from_top_coords(coords);
        }
    return out;
}

std::vector<Elem> expand_vector(const FieldTower& t, std::span<const Elem> v) {
    std::vector<Elem> out;
    out.reserve(v.size() * t.m());
    for (const Elem& e : v) {
        std::vector<Elem> coords = t.top_coords(e);
        out.insert(out.end(), coords.begin(), coords.end());
    }
    return out;
}

std::vector<Elem> contract_vector(const FieldTower& t, std::span<const Elem> v) {
    if (v.size() % t.m() != 0) throw std::invalid_argument("width is not a multiple of m");
    std::vector<Elem> out;
    out.reserve(v.size() / t.m());
    for (std::size_t j = 0; j < v.size(); j += t.m())
        out.push_back(t.from_top_coords(v.subspan(j, t.m())));
    return out;
}

Mat trace_entrywise(const FieldTower& t, const Mat& top) {
    if (top.field() != t.top()) throw std::invalid_argument("expected a top-level matrix");
    Mat out(t.mid(), top.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) out.at(i, j) = t.trace_to_mid(top.at(i, j));
    return out;
}

Mat frobenius_entrywise(const FieldTower& t, unsigned j, const Mat& top) {
    if (top.field() != t.top()) throw std::invalid_argument("expected a top-level matrix");
    return top.map([&](const Elem& e) { return t.frobenius(j, e); });
}

Mat apply_sigma_columns(const Mat& a, std::span<const std::size_t> sigma) {
    if (sigma.size() != a.cols()) throw std::invalid_argument("permutation length mismatch");
    Mat out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, sigma[j]);
    return out;
}

bool independent_over_mid(const FieldTower& t, std::span<const Elem> xs) {
    if (xs.empty()) return true;
    Mat m(t.top(), xs.size(), 1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        t.require_top(xs[i]);
        m.at(i, 0) = xs[i];
    }
    return rank(expand_coords(t, m)) == xs.size();
}

}  // namespace acp
