#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spalg/tensor.hpp"

namespace spalg {

/// Sparse coordinate row: (column, value) pairs sorted by column, values
/// nonzero.
using SparseRow = std::vector<std::pair<std::uint64_t, Scalar>>;

SparseRow sparse_from_tensor(const Tensor& t);
Scalar sparse_entry(const SparseRow& r, std::uint64_t col, const Field& f);
/// a − c·b, merged.
SparseRow sub_scaled(const SparseRow& a, const Scalar& c, const SparseRow& b);

/// Reduced row echelon form of a sparse row list.  The serial and parallel
/// kernels produce identical output.
std::vector<SparseRow> rref_sparse(std::vector<SparseRow> rows, Kernel k = default_kernel());

/// Subspace of V^{⊗p}, held as the unique reduced-row-echelon basis of its
/// coordinate row space.  All constructions canonicalize, so subspaces
/// compare by value.
class TensorSubspace {
public:
    TensorSubspace(std::size_t dim, std::size_t power, const Field& f);
    static TensorSubspace span(std::size_t dim, std::size_t power, const Field& f,
                               const std::vector<Tensor>& gens);
    static TensorSubspace span(const std::vector<Tensor>& gens);
    static TensorSubspace from_rows(std::size_t dim, std::size_t power, const Field& f,
                                    std::vector<SparseRow> rows);
    static TensorSubspace full(std::size_t dim, std::size_t power, const Field& f);

    std::size_t dim() const { return dim_; }
    std::size_t power() const { return power_; }
    const Field& field() const { return field_; }
    std::uint64_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }

    const std::vector<SparseRow>& rows() const { return rows_; }
    const std::vector<std::uint64_t>& pivot_cols() const { return pivots_; }
    std::vector<std::uint64_t> non_pivot_cols() const;
    Tensor basis_tensor(std::size_t r) const;

    /// Normal form of t modulo this subspace (zero iff contained).
    Tensor reduce(const Tensor& t) const;
    bool contains(const Tensor& t) const;
    bool contains(const TensorSubspace& o) const;
    /// Coordinates of t in the echelon basis; nullopt when t lies outside.
    std::optional<std::vector<Scalar>> coordinates(const Tensor& t) const;

    TensorSubspace sum(const TensorSubspace& o) const;
    TensorSubspace intersect(const TensorSubspace& o) const;
    /// { f ∈ (V^{⊗p})^* : f|_this = 0 }, in dual coordinates with the same
    /// flat indexing.
    TensorSubspace annihilator() const;
    /// Image under m^{⊗p}.
    TensorSubspace apply_factorwise(const Matrix& m) const;

    bool operator==(const TensorSubspace& o) const;

private:
    std::size_t dim_, power_;
    Field field_;
    std::uint64_t ambient_;
    std::vector<SparseRow> rows_;
    std::vector<std::uint64_t> pivots_;

    void set_rows(std::vector<SparseRow> canonical);
};

/// V^{⊗left} ⊗ mid ⊗ V^{⊗right} inside V^{⊗(left+p+right)}.
TensorSubspace sandwich(std::size_t left, const TensorSubspace& mid, std::size_t right);

}  // namespace spalg
