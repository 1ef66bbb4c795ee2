#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spalg/potential.hpp"

namespace spalg {

/// Homological-to-internal degree map of the generalized Koszul complex:
/// ρ(2j) = jm, ρ(2j+1) = jm+1.
std::size_t rho(std::size_t i, std::size_t m);

/// Global dimension forced by (m, ℓ): d = ℓ when m = 2, otherwise the odd
/// integer 2(ℓ−1)/m + 1.
std::size_t gorenstein_dimension(std::size_t m, std::size_t ell);

/// One internal degree t of the complex … → A⊗W_{ρ(i)} → … → A⊗W_1 → A → 0.
/// maps[i] is right multiplication by e (gap 1) or e^{m−1} (gap m−1) from
/// term i+1 to term i.
struct KoszulComplexSlice {
    std::size_t internal_degree = 0;
    std::vector<std::size_t> term_dims;
    std::vector<Matrix> maps;
};

struct KoszulVerdict {
    bool verified = false;
    std::size_t up_to = 0;
    std::size_t fail_degree = 0;
    std::size_t fail_position = 0;
};

struct ResolutionShape {
    std::size_t top_dim = 0;             ///< dim W_ℓ
    std::size_t sub_top_dim = 0;         ///< dim W_{ℓ−1}
    std::size_t relation_level_dim = 0;  ///< dim W_{ℓ−m}
    bool top_is_line = false;
    bool sub_top_matches_v = false;
    bool relation_level_matches_r = false;
    bool vanishing_above = false;  ///< W_i = 0 for ℓ < i ≤ ℓ+m
    bool all() const {
        return top_is_line && sub_top_matches_v && relation_level_matches_r && vanishing_above;
    }
};

/// Graded components of TV/(R) with append-only caches: per degree, the
/// ideal component, a complement monomial basis, and the subspace W_t whose
/// dual realizes A^!_t.
class GradedAlgebra {
public:
    explicit GradedAlgebra(Presentation pres);

    const Presentation& presentation() const { return pres_; }
    std::size_t dim_v() const { return pres_.dim_v; }
    std::size_t m() const { return pres_.m; }
    const Field& field() const { return pres_.R.field(); }

    /// Degree-t part of the two-sided ideal (R).
    const TensorSubspace& ideal_component(std::size_t t) const;
    /// Monomials (flat indices into V^{⊗t}) spanning the quotient in degree t.
    const std::vector<std::uint64_t>& component_basis(std::size_t t) const;
    std::size_t component_dim(std::size_t t) const;
    std::vector<std::size_t> hilbert_function(std::size_t N) const;

    /// W_t; its dual is the degree-t part of the m-homogeneous dual algebra.
    const TensorSubspace& dual_component(std::size_t t) const;

    /// Expansion of the degree-t monomial `col` over the complement basis,
    /// as (basis position, coefficient) pairs.
    std::vector<std::pair<std::size_t, Scalar>> monomial_normal_form(std::size_t t,
                                                                     std::uint64_t col) const;

    KoszulComplexSlice koszul_complex_slice(std::size_t t) const;
    KoszulVerdict check_m_koszul(std::size_t N) const;
    ResolutionShape resolution_shape(std::size_t ell) const;

private:
    Presentation pres_;
    mutable std::vector<TensorSubspace> ideal_;
    mutable std::vector<std::vector<std::uint64_t>> basis_;
    mutable std::vector<TensorSubspace> dual_ideal_;
    mutable std::vector<TensorSubspace> w_;

    void ensure_degree(std::size_t t) const;
    void ensure_dual_degree(std::size_t t) const;
    Matrix differential(std::size_t t, std::size_t i) const;
};

}  // namespace spalg
