#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spalg/matrix.hpp"
#include "spalg/scalar.hpp"

namespace spalg {

/// Dense element of V^{⊗p} for an n-dimensional V with a fixed ordered basis.
/// Coordinates are indexed by words over {0,…,n−1}; the word (i_1,…,i_p) maps
/// to the flat index Σ i_k · n^{p−k}.
class Tensor {
public:
    Tensor(std::size_t dim, std::size_t power, const Field& f);
    static Tensor basis(std::size_t dim, const std::vector<std::size_t>& word, const Field& f);

    std::size_t dim() const { return dim_; }
    std::size_t power() const { return power_; }
    const Field& field() const { return field_; }
    std::uint64_t size() const { return static_cast<std::uint64_t>(c_.size()); }

    Scalar& coeff(std::uint64_t flat) { return c_[flat]; }
    const Scalar& coeff(std::uint64_t flat) const { return c_[flat]; }
    Scalar& coeff(const std::vector<std::size_t>& word) { return c_[flatten(word)]; }
    const Scalar& coeff(const std::vector<std::size_t>& word) const { return c_[flatten(word)]; }

    std::uint64_t flatten(const std::vector<std::size_t>& word) const;
    std::vector<std::size_t> unflatten(std::uint64_t flat) const;

    bool is_zero() const;
    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator*(const Scalar& s) const;
    Tensor operator-() const;
    bool operator==(const Tensor& o) const;

private:
    std::size_t dim_, power_;
    Field field_;
    std::vector<Scalar> c_;
};

/// t ⊗ u.
Tensor tensor_product(const Tensor& t, const Tensor& u);

/// φ(v_1⊗…⊗v_p) = v_p⊗v_1⊗…⊗v_{p−1}.  Power 0 is rejected.
Tensor cyclic_shift(const Tensor& t);
Tensor cyclic_power(const Tensor& t, std::size_t k);

/// Apply m to tensor factor `slot` (0-based).  m acts on coordinates in the
/// column convention: (m·v)_i = Σ_j m[i][j] v_j.
Tensor mode_product(const Tensor& t, const Matrix& m, std::size_t slot);

/// Apply one matrix per factor, position k getting ms[k].
Tensor apply_per_factor(const Tensor& t, const std::vector<const Matrix*>& ms);

/// m^{⊗power} applied to t.
Tensor apply_factorwise(const Matrix& m, const Tensor& t);

/// Reorder factors: output position k carries input factor perm[k].
Tensor permute_factors(const Tensor& t, const std::vector<std::size_t>& perm);

/// Contract the dual basis vector (v_i)^* against the first factor.
Tensor contract_first(const Tensor& t, std::size_t i);

/// Full pairing of a dual vector (coordinates in the dual basis, same flat
/// indexing) against t.
Scalar pair(const Tensor& dual, const Tensor& t);

/// λ with a = λ·b, if one exists and b ≠ 0.
std::optional<Scalar> proportionality(const Tensor& a, const Tensor& b);

/// dim^power with an overall size guard.
std::uint64_t tensor_space_dim(std::size_t dim, std::size_t power);

}  // namespace spalg
