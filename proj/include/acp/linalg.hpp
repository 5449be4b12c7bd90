#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "acp/gf.hpp"

namespace acp {

/// Dense row-major matrix over one field. Empty shapes (0 x n, n x 0) are
/// valid; the rank of an empty matrix is 0.
class Mat {
public:
    Mat() = default;
    Mat(const Field* f, std::size_t rows, std::size_t cols);
    Mat(const Field* f, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Mat identity(const Field* f, std::size_t n);
    static Mat from_rows(const Field* f, const std::vector<std::vector<Elem>>& rows);

    const Field* field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    std::vector<Elem> row(std::size_t i) const;
    void set_row(std::size_t i, std::span<const Elem> v);

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat transpose() const;
    Mat scaled_rows(std::span<const Elem> factors) const;  // diag(factors) * this

    /// Applies fn to every entry (e.g. an automorphism).
    Mat map(const std::function<Elem(const Elem&)>& fn) const;

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const;

private:
    const Field* f_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

struct RrefResult {
    Mat r;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with deterministic leftmost-pivot, first-nonzero
/// row elimination order.
RrefResult rref(const Mat& a);

std::size_t rank(const Mat& a);

/// Canonical basis of the right null space {x : A x^T = 0}, one basis vector
/// per row, ordered by ascending free column.
Mat kernel(const Mat& a);

/// Basis of the left null space {x : x A = 0}.
Mat left_kernel(const Mat& a);

Mat vstack(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);

/// Rows of `a` selected by index list.
Mat take_rows(const Mat& a, std::span<const std::size_t> idx);

/// Solves x * A = v; returns a particular solution (free variables zero)
/// or nullopt when v is outside the row space.
std::optional<std::vector<Elem>> solve_left(const Mat& a, std::span<const Elem> v);

/// True when v lies in the row space of A.
bool in_row_space(const Mat& a, std::span<const Elem> v);

// --- tower-aware conversions -----------------------------------------------

/// Replaces each top-level entry by its m mid-level coordinates in the basis
/// {1, alpha, ..., alpha^{m-1}}; output is rows x (cols*m) over the mid field.
Mat expand_coords(const FieldTower& t, const Mat& top);

/// Inverse of expand_coords on well-formed widths.
Mat contract_coords(const FieldTower& t, const Mat& mid);

std::vector<Elem> expand_vector(const FieldTower& t, std::span<const Elem> v);
std::vector<Elem> contract_vector(const FieldTower& t, std::span<const Elem> v);

/// Entrywise trace to the mid field.
Mat trace_entrywise(const FieldTower& t, const Mat& top);

/// Entrywise Frobenius x -> x^{p^j} on a top-level matrix.
Mat frobenius_entrywise(const FieldTower& t, unsigned j, const Mat& top);

/// Column permutation by sigma: out(i, j) = in(i, sigma(j)), realizing G P
/// for the permutation matrix P with P_{ij} = 1 iff i = sigma(j).
Mat apply_sigma_columns(const Mat& a, std::span<const std::size_t> sigma);

/// True iff no nontrivial mid-field combination of the given top elements
/// vanishes. Empty input is vacuously independent.
bool independent_over_mid(const FieldTower& t, std::span<const Elem> xs);

}  // namespace acp
