#pragma once

#include "acp/linalg.hpp"

namespace acp {

/// An F_q-linear subspace of F_{q^m}^n, stored canonically: the basis matrix
/// is the contraction of the reduced row echelon form of its coordinate
/// expansion, so equal codes compare equal regardless of input generators.
class AdditiveCode {
public:
    /// The F_q-span of the given top-level rows (any number, any rank).
    static AdditiveCode span_fq(const FieldTower& t, const Mat& rows);
    static AdditiveCode zero(const FieldTower& t, std::size_t n);
    static AdditiveCode full(const FieldTower& t, std::size_t n);

    const FieldTower& tower() const { return tower_; }
    std::size_t length() const { return n_; }
    std::size_t dim_fq() const { return basis_.rows(); }
    /// Canonical F_q-basis, one codeword per row (top level).
    const Mat& basis() const { return basis_; }
    /// Cached rref of expand_coords(basis), used for membership tests.
    const Mat& expanded() const { return expanded_; }

    bool member(std::span<const Elem> v) const;
    bool contains(const AdditiveCode& other) const;

    bool operator==(const AdditiveCode& o) const;
    bool operator!=(const AdditiveCode& o) const { return !(*this == o); }

private:
    AdditiveCode(FieldTower t, std::size_t n, Mat basis, Mat expanded)
        : tower_(t), n_(n), basis_(std::move(basis)), expanded_(std::move(expanded)) {}
    FieldTower tower_;
    std::size_t n_ = 0;
    Mat basis_;
    Mat expanded_;
};

AdditiveCode meet(const AdditiveCode& c, const AdditiveCode& d);
AdditiveCode join(const AdditiveCode& c, const AdditiveCode& d);

/// A nonzero vector in the intersection, when one exists.
std::optional<std::vector<Elem>> intersection_witness(const AdditiveCode& c, const AdditiveCode& d);

/// A linear code over one level of the tower (the top field F_{q^m} or, for
/// trace codes, the mid field F_q). Generator kept in reduced row echelon
/// form.
class LinearCode {
public:
    static LinearCode from_generator(const FieldTower& t, const Field* level, const Mat& gen);
    static LinearCode from_parity(const FieldTower& t, const Field* level, const Mat& parity);
    static LinearCode zero(const FieldTower& t, const Field* level, std::size_t n);
    static LinearCode full(const FieldTower& t, const Field* level, std::size_t n);

    const FieldTower& tower() const { return tower_; }
    const Field* field() const { return field_; }
    std::size_t length() const { return n_; }
    std::size_t dim() const { return gen_.rows(); }
    const Mat& generator() const { return gen_; }

    /// Euclidean parity check: canonical basis of {h : G h^T = 0}.
    Mat parity() const;
    /// Euclidean dual code.
    LinearCode dual() const;

    bool member(std::span<const Elem> v) const;

    bool operator==(const LinearCode& o) const;
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

private:
    LinearCode(FieldTower t, const Field* f, std::size_t n, Mat gen)
        : tower_(t), field_(f), n_(n), gen_(std::move(gen)) {}
    FieldTower tower_;
    const Field* field_ = nullptr;
    std::size_t n_ = 0;
    Mat gen_;
};

/// The additive code generated by {alpha^j row : 0 <= j < m, row of gen},
/// equal to the top-level linear code as a set, with dim_fq = m * dim.
AdditiveCode lift(const LinearCode& ct);

/// Tr(C) = {Tr(c) : c in C}, a linear code over the mid field.
LinearCode trace_code(const AdditiveCode& c);

/// Entrywise scaling by a vector of nonzero elements of the code's field.
AdditiveCode scale(std::span<const Elem> a, const AdditiveCode& c);
LinearCode scale(std::span<const Elem> a, const LinearCode& c);

/// Exhaustive minimum Hamming weight over all nonzero codewords. Throws
/// PreconditionError on the zero code or when the enumeration exceeds 2^24
/// words.
std::size_t min_distance(const AdditiveCode& c);
std::size_t min_distance(const LinearCode& c);

/// Massey criterion: C intersects its Euclidean dual trivially iff
/// G G^T is nonsingular.
bool is_lcd(const LinearCode& c);

}  // namespace acp
