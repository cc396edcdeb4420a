#pragma once

// Exact rational linear algebra kernel. Everything downstream (root systems,
// branching, stabilizer solves) runs through these routines; there is no
// floating point anywhere in the library.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lrcone/rational.hpp"

namespace lrcone::exactq {

class QMat {
  public:
    QMat() = default;
    QMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    QMat(size_t rows, size_t cols, std::vector<Rat> entries);

    static QMat identity(size_t n);
    static QMat from_int_rows(const std::vector<std::vector<int64_t>>& rows);
    static QMat from_rows(const std::vector<QVec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    QVec row(size_t i) const;
    void set_row(size_t i, const QVec& r);

    QMat transpose() const;
    QMat operator*(const QMat& other) const;
    QMat operator+(const QMat& other) const;
    QMat operator-(const QMat& other) const;
    QMat scaled(const Rat& c) const;
    bool operator==(const QMat& other) const;
    bool is_zero() const;

    QVec apply(const QVec& v) const;                 // matrix * column vector
    std::vector<int64_t> apply_int(const std::vector<int64_t>& v) const;

    // flatten row-major; used to treat matrices as vectors of an ambient space
    QVec vectorize() const { return a_; }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

QMat bracket(const QMat& x, const QMat& y);  // xy - yx
bool is_nilpotent(const QMat& x);
Rat trace_of_product(const QMat& x, const QMat& y);

// Rank over Q via fraction-free (Bareiss) elimination on a denominator-cleared
// integer copy. Deterministic: pivots are chosen as the first nonzero entry.
size_t rank(const QMat& m);

// Reduced row echelon form over Q; returns pivot column indices.
QMat rref(const QMat& m, std::vector<size_t>* pivot_cols = nullptr);

// Scale v to a primitive integer vector whose leading nonzero entry is positive.
QVec primitive_normalize(const QVec& v);

// A linear subspace of Q^ambient_dim held by a canonical basis: RREF rows,
// each scaled to a primitive integer vector with positive leading entry.
// Canonical form makes equality of subspaces a plain comparison.
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(size_t ambient_dim) : ambient_(ambient_dim) {}
    Subspace(size_t ambient_dim, const std::vector<QVec>& spanning);

    static Subspace full(size_t ambient_dim);

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<QVec>& basis() const { return basis_; }

    bool contains(const QVec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const;

  private:
    size_t ambient_ = 0;
    std::vector<QVec> basis_;  // canonical
};

// Basis of {x : m x = 0}; dim = cols - rank.
Subspace kernel_basis(const QMat& m);

Subspace span_sum(const Subspace& a, const Subspace& b);
Subspace span_intersection(const Subspace& a, const Subspace& b);

// Span of the rows of m (as a subspace of Q^cols).
Subspace row_space(const QMat& m);

// One solution x of m x = rhs, if any.
std::optional<QVec> solve(const QMat& m, const QVec& rhs);

// Kernel of the linear map x -> sum_i x_i columns[i] constrained to lie in
// `target` (i.e. {x : sum x_i columns[i] in span(target)}), returned as
// coefficient vectors x.  Used for stabilizer solves where columns are
// vectorized matrices.
std::vector<QVec> coefficient_kernel_into(const std::vector<QVec>& columns,
                                          const std::vector<QVec>& target);

}  // namespace lrcone::exactq
