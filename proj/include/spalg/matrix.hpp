#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spalg/scalar.hpp"

namespace spalg {

/// Row-elimination kernel selection.  `serial` is the reference
/// implementation; `parallel` distributes independent row updates over OpenMP
/// threads and must produce bit-identical results.
enum class Kernel { serial, parallel };

Kernel default_kernel();
void set_default_kernel(Kernel k);

/// Dense exact matrix, row-major.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const Field& f);
    static Matrix identity(std::size_t n, const Field& f);
    static Matrix diagonal(const std::vector<Scalar>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Scalar& s) const;
    bool operator==(const Matrix& o) const;

    Matrix transpose() const;
    Matrix pow(std::uint64_t e) const;
    bool is_identity() const;
    bool is_zero() const;
    bool is_diagonal() const;

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref(Kernel k = default_kernel());
    std::size_t rank(Kernel k = default_kernel()) const;
    Scalar det() const;
    bool is_invertible() const;
    Matrix inverse() const;  // error "matrix not invertible"

    /// Particular solution X of (*this)·X = rhs with free variables set to
    /// zero; nullopt when inconsistent.
    std::optional<Matrix> solve(const Matrix& rhs, Kernel k = default_kernel()) const;
    /// Canonical kernel basis, one column per free variable.
    Matrix nullspace(Kernel k = default_kernel()) const;

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> a_;
};

}  // namespace spalg
