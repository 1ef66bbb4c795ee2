#include "spalg/matrix.hpp"

#include <utility>

namespace spalg {

namespace {
Kernel g_default_kernel = Kernel::parallel;
}

Kernel default_kernel() { return g_default_kernel; }
void set_default_kernel(Kernel k) { g_default_kernel = k; }

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), a_(rows * cols, f.zero()) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
    if (entries.empty()) fail("cannot build a diagonal matrix from no entries");
    Matrix m(entries.size(), entries.size(), entries[0].field());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) fail("matrix dimension mismatch in product");
    Matrix out(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t t = 0; t < cols_; ++t) {
            const Scalar& lhs = at(i, t);
            if (lhs.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) += lhs * o.at(t, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail("matrix dimension mismatch in sum");
    Matrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail("matrix dimension mismatch in difference");
    Matrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix out = *this;
    for (auto& x : out.a_) x *= s;
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!(a_[i] == o.a_[i])) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::pow(std::uint64_t e) const {
    if (rows_ != cols_) fail("matrix power requires a square matrix");
    Matrix acc = identity(rows_, field_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_diagonal() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

std::vector<std::size_t> Matrix::rref(Kernel k) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const bool par = (k == Kernel::parallel);
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && at(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t j = c; j < cols_; ++j) std::swap(at(r, j), at(p, j));
        Scalar inv = at(r, c).inverse();
        for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
        const long long nrows = static_cast<long long>(rows_);
#pragma omp parallel for if (par) schedule(static)
        for (long long ii = 0; ii < nrows; ++ii) {
            auto i = static_cast<std::size_t>(ii);
            if (i == r) continue;
            const Scalar factor = at(i, c);
            if (factor.is_zero()) continue;
            for (std::size_t j = c; j < cols_; ++j) at(i, j) -= factor * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t Matrix::rank(Kernel k) const {
    Matrix m = *this;
    return m.rref(k).size();
}

Scalar Matrix::det() const {
    if (rows_ != cols_) fail("determinant requires a square matrix");
    Matrix m = *this;
    Scalar d = field_.one();
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t p = c;
        while (p < rows_ && m.at(p, c).is_zero()) ++p;
        if (p == rows_) return field_.zero();
        if (p != c) {
            for (std::size_t j = c; j < cols_; ++j) std::swap(m.at(c, j), m.at(p, j));
            d = -d;
        }
        d *= m.at(c, c);
        Scalar inv = m.at(c, c).inverse();
        for (std::size_t i = c + 1; i < rows_; ++i) {
            Scalar factor = m.at(i, c) * inv;
            if (factor.is_zero()) continue;
            for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= factor * m.at(c, j);
        }
    }
    return d;
}

bool Matrix::is_invertible() const {
    return rows_ == cols_ && !det().is_zero();
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) fail("matrix not invertible");
    Matrix aug(rows_, 2 * cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = field_.one();
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() >= cols_) fail("matrix not invertible");
    Matrix out(rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
    return out;
}

std::optional<Matrix> Matrix::solve(const Matrix& rhs, Kernel k) const {
    if (rhs.rows_ != rows_) fail("matrix dimension mismatch in solve");
    Matrix aug(rows_, cols_ + rhs.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) aug.at(i, cols_ + j) = rhs.at(i, j);
    }
    auto pivots = aug.rref(k);
    for (auto c : pivots)
        if (c >= cols_) return std::nullopt;
    Matrix x(cols_, rhs.cols_, field_);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < rhs.cols_; ++j) x.at(pivots[r], j) = aug.at(r, cols_ + j);
    return x;
}

Matrix Matrix::nullspace(Kernel k) const {
    Matrix m = *this;
    auto pivots = m.rref(k);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix out(cols_, free_cols.size(), field_);
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t fc = free_cols[t];
        out.at(fc, t) = field_.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) out.at(pivots[r], t) = -m.at(r, fc);
    }
    return out;
}

}  // namespace spalg
