#pragma once

#include <optional>

#include "spalg/graded.hpp"

namespace spalg {

/// Homogeneous element of E^i = Ext^i(k,k), stored as a coordinate vector
/// against the dual of the canonical basis of W_{ρ(i)}.
struct ExtClass {
    std::size_t i = 0;
    std::vector<Scalar> coords;
};

/// The bigraded Yoneda algebra of an m-Koszul AS-regular presentation, with
/// its sign-twisted product, Frobenius pairing, and Nakayama map μ.
class ExtFrobenius {
public:
    ExtFrobenius(const GradedAlgebra& algebra, const Potential& w, std::size_t d);

    std::size_t d() const { return d_; }
    std::size_t ell() const { return w_.ell(); }
    std::size_t ext_dim(std::size_t i) const;
    const TensorSubspace& w_rho(std::size_t i) const;

    ExtClass unit() const;
    /// Top class normalized so that ⟨unit, top⟩ = 1.
    ExtClass top() const;
    ExtClass dual_basis_class(std::size_t i, std::size_t r) const;

    /// Sign-twisted product: (−1)^{ij}f·g when m = 2; f·g when m > 2 and at
    /// least one degree is even; zero otherwise.
    ExtClass product(const ExtClass& f, const ExtClass& g) const;

    /// ⟨ξ,η⟩ = (−1)^{i(d−i)}·(ξη)(w) on complementary degrees.
    Scalar pairing(const ExtClass& f, const ExtClass& g) const;

    /// Gram matrix of the pairing E^i × E^{d−i} → k.
    const Matrix& gram(std::size_t i) const;

    /// μ|_{E^i}, solved from ⟨ξ,η⟩ = ⟨η,μ(ξ)⟩.
    Matrix mu(std::size_t i) const;

    /// σ^! on E^i: transpose of σ^{⊗ρ(i)} restricted to W_{ρ(i)}.
    Matrix shriek(const Matrix& sigma, std::size_t i) const;

    /// μ = ((−1)^{d+1}ν)^! in every homological degree.
    bool verify_nakayama_identity(const Matrix& nu) const;

    /// Sh_iᵗ·G_i·Sh_{d−i} = hdet(σ)·G_i in every degree.
    bool check_hdet_pairing(const Matrix& sigma, const Scalar& hdet_sigma) const;

    bool mu_fixes_unit_and_top() const;

private:
    GradedAlgebra algebra_;
    Potential w_;
    std::size_t d_;
    mutable std::vector<std::optional<Matrix>> grams_;

    /// Plain A^!-product functional (f·g) evaluated against an ambient
    /// tensor's coefficient table via canonical pivot lifts.
    Scalar lifted_eval(const ExtClass& f, const ExtClass& g, const Tensor& t) const;
};

}  // namespace spalg
