#include "lrcone/exactq.hpp"

#include <algorithm>
#include <cassert>

namespace lrcone::exactq {

QMat::QMat(size_t rows, size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw std::invalid_argument("QMat: entry count mismatch");
}

QMat QMat::identity(size_t n) {
    QMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::from_int_rows(const std::vector<std::vector<int64_t>>& rows) {
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    QMat m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("QMat: ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = Rat(rows[i][j]);
    }
    return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    QMat m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("QMat: ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QVec QMat::row(size_t i) const {
    return QVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

void QMat::set_row(size_t i, const QVec& r) {
    if (r.size() != cols_) throw std::invalid_argument("QMat: row size mismatch");
    std::copy(r.begin(), r.end(), a_.begin() + i * cols_);
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMat QMat::operator*(const QMat& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("QMat: dimension mismatch in product");
    QMat out(rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < other.cols_; ++j) out.at(i, j) += x * other.at(k, j);
        }
    return out;
}

QMat QMat::operator+(const QMat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("QMat: dimension mismatch in sum");
    QMat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + other.a_[i];
    return out;
}

QMat QMat::operator-(const QMat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("QMat: dimension mismatch in difference");
    QMat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - other.a_[i];
    return out;
}

QMat QMat::scaled(const Rat& c) const {
    QMat out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
}

bool QMat::operator==(const QMat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

bool QMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

QVec QMat::apply(const QVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("QMat: apply size mismatch");
    QVec out(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        Rat s = 0;
        for (size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

std::vector<int64_t> QMat::apply_int(const std::vector<int64_t>& v) const {
    QVec q = apply(qvec_from_int(v));
    std::vector<int64_t> out(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (rat_den(q[i]) != 1) throw std::runtime_error("QMat: non-integer result in apply_int");
        out[i] = static_cast<int64_t>(rat_num(q[i]));
    }
    return out;
}

QMat bracket(const QMat& x, const QMat& y) { return x * y - y * x; }

bool is_nilpotent(const QMat& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("is_nilpotent: square matrix required");
    QMat p = x;
    size_t n = x.rows();
    // squaring reaches exponent >= n quickly
    size_t e = 1;
    while (e < n) {
        if (p.is_zero()) return true;
        p = p * p;
        e *= 2;
    }
    return p.is_zero();
}

Rat trace_of_product(const QMat& x, const QMat& y) {
    if (x.cols() != y.rows() || x.rows() != y.cols())
        throw std::invalid_argument("trace_of_product: dimension mismatch");
    Rat t = 0;
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t k = 0; k < x.cols(); ++k) t += x.at(i, k) * y.at(k, i);
    return t;
}

namespace {

// Clear denominators row by row, giving an integer matrix with the same row
// space and rank.
std::vector<std::vector<Int>> cleared_int_rows(const QMat& m) {
    std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (size_t j = 0; j < m.cols(); ++j) l = lcm(l, rat_den(m.at(i, j)));
        for (size_t j = 0; j < m.cols(); ++j) {
            const Rat& q = m.at(i, j);
            rows[i][j] = rat_num(q) * (l / rat_den(q));
        }
    }
    return rows;
}

}  // namespace

size_t rank(const QMat& m) {
    auto a = cleared_int_rows(m);
    const size_t nrows = m.rows(), ncols = m.cols();
    size_t r = 0;
    Int prev = 1;
    for (size_t col = 0; col < ncols && r < nrows; ++col) {
        size_t piv = r;
        while (piv < nrows && a[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(a[r], a[piv]);
        // Bareiss step: exact integer division by the previous pivot
        for (size_t i = r + 1; i < nrows; ++i) {
            for (size_t j = col + 1; j < ncols; ++j)
                a[i][j] = (a[i][j] * a[r][col] - a[i][col] * a[r][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

QMat rref(const QMat& m, std::vector<size_t>* pivot_cols) {
    QMat a = m;
    const size_t nrows = a.rows(), ncols = a.cols();
    if (pivot_cols) pivot_cols->clear();
    size_t r = 0;
    for (size_t col = 0; col < ncols && r < nrows; ++col) {
        size_t piv = r;
        while (piv < nrows && a.at(piv, col) == 0) ++piv;
        if (piv == nrows) continue;
        if (piv != r)
            for (size_t j = 0; j < ncols; ++j) std::swap(a.at(r, j), a.at(piv, j));
        Rat inv = Rat(1) / a.at(r, col);
        for (size_t j = col; j < ncols; ++j) a.at(r, j) *= inv;
        for (size_t i = 0; i < nrows; ++i) {
            if (i == r) continue;
            Rat f = a.at(i, col);
            if (f == 0) continue;
            for (size_t j = col; j < ncols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++r;
    }
    return a;
}

QVec primitive_normalize(const QVec& v) {
    Int l = 1;
    for (const auto& q : v) l = lcm(l, rat_den(q));
    std::vector<Int> w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = rat_num(v[i]) * (l / rat_den(v[i]));
        g = gcd(g, w[i]);
    }
    if (g == 0) return QVec(v.size(), Rat(0));
    Int lead = 0;
    for (const auto& x : w)
        if (x != 0) { lead = x; break; }
    if (lead < 0) g = -g;
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(w[i] / g);
    return out;
}

Subspace::Subspace(size_t ambient_dim, const std::vector<QVec>& spanning) : ambient_(ambient_dim) {
    for (const auto& v : spanning)
        if (v.size() != ambient_dim) throw std::invalid_argument("Subspace: vector size mismatch");
    if (spanning.empty()) return;
    QMat m = QMat::from_rows(spanning);
    std::vector<size_t> pivots;
    QMat e = rref(m, &pivots);
    for (size_t i = 0; i < pivots.size(); ++i) basis_.push_back(primitive_normalize(e.row(i)));
}

Subspace Subspace::full(size_t ambient_dim) {
    std::vector<QVec> rows;
    for (size_t i = 0; i < ambient_dim; ++i) {
        QVec v(ambient_dim, Rat(0));
        v[i] = 1;
        rows.push_back(v);
    }
    return Subspace(ambient_dim, rows);
}

bool Subspace::contains(const QVec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
    std::vector<QVec> rows = basis_;
    rows.push_back(v);
    return Subspace(ambient_, rows).dim() == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace kernel_basis(const QMat& m) {
    std::vector<size_t> pivots;
    QMat e = rref(m, &pivots);
    const size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<QVec> vecs;
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        QVec v(n, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e.at(r, free);
        vecs.push_back(std::move(v));
    }
    return Subspace(n, vecs);
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("span_sum: ambient dimension mismatch");
    std::vector<QVec> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace(a.ambient_dim(), rows);
}

Subspace span_intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("span_intersection: ambient dimension mismatch");
    const size_t n = a.ambient_dim();
    const size_t da = a.dim(), db = b.dim();
    if (da == 0 || db == 0) return Subspace(n);
    // x in a cap b  <=>  x = A^T s = B^T t; solve [A^T | -B^T] (s,t)^T = 0.
    QMat sys(n, da + db);
    for (size_t j = 0; j < da; ++j)
        for (size_t i = 0; i < n; ++i) sys.at(i, j) = a.basis()[j][i];
    for (size_t j = 0; j < db; ++j)
        for (size_t i = 0; i < n; ++i) sys.at(i, da + j) = -b.basis()[j][i];
    Subspace ker = kernel_basis(sys);
    std::vector<QVec> vecs;
    for (const auto& k : ker.basis()) {
        QVec x(n, Rat(0));
        for (size_t j = 0; j < da; ++j)
            for (size_t i = 0; i < n; ++i) x[i] += k[j] * a.basis()[j][i];
        vecs.push_back(std::move(x));
    }
    return Subspace(n, vecs);
}

Subspace row_space(const QMat& m) {
    std::vector<QVec> rows;
    for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return Subspace(m.cols(), rows);
}

std::optional<QVec> solve(const QMat& m, const QVec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
    QMat aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    std::vector<size_t> pivots;
    QMat e = rref(aug, &pivots);
    for (size_t c : pivots)
        if (c == m.cols()) return std::nullopt;  // inconsistent
    QVec x(m.cols(), Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = e.at(r, m.cols());
    return x;
}

std::vector<QVec> coefficient_kernel_into(const std::vector<QVec>& columns,
                                          const std::vector<QVec>& target) {
    const size_t m = columns.size();
    if (m == 0) return {};
    const size_t n = columns[0].size();
    for (const auto& c : columns)
        if (c.size() != n) throw std::invalid_argument("coefficient_kernel_into: ragged columns");
    const size_t t = target.size();
    QMat sys(n, m + t);
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < n; ++i) sys.at(i, j) = columns[j][i];
    for (size_t j = 0; j < t; ++j) {
        if (target[j].size() != n) throw std::invalid_argument("coefficient_kernel_into: target size");
        for (size_t i = 0; i < n; ++i) sys.at(i, m + j) = -target[j][i];
    }
    Subspace ker = kernel_basis(sys);
    // project kernel vectors onto the coefficient coordinates, then re-span
    std::vector<QVec> proj;
    for (const auto& k : ker.basis()) proj.emplace_back(k.begin(), k.begin() + m);
    Subspace s(m, proj);
    return s.basis();
}

}  // namespace lrcone::exactq
