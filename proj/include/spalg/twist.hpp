#pragma once

#include "spalg/symmetry.hpp"

namespace spalg {

/// (σ^{p−1}⊗…⊗σ⊗id)(t) for t of order p.
Tensor twist_tensor(const Tensor& t, const Matrix& sigma);

struct TwistedPotential {
    Tensor raw;           ///< identity checks run on this
    Potential normalized;
};
TwistedPotential twist_potential(const Potential& w, const Matrix& sigma);

/// Image subspace under the order-p twist, canonicalized.
TensorSubspace twist_subspace(const TensorSubspace& w, const Matrix& sigma);

/// ∂ⁱ(W^σ) = (∂ⁱW)^σ, both sides computed independently.
bool twist_commutes_with_partial(const TensorSubspace& w, const Matrix& sigma, std::size_t i);

struct TwistReport {
    Tensor w_twisted_raw;
    Potential w_twisted;
    TensorSubspace r_twisted;
    bool hdet_preserved = false;
    Matrix nakayama_twisted;
    bool cy_status = false;
};

/// Assembles the twisted presentation data and its Nakayama map
/// hdet(σ)⁻¹·σ^ℓ·ν, rechecking the identities that the twist theory pins
/// down.
TwistReport twist_report(const Potential& w, const Presentation& P, std::size_t d,
                         const Matrix& nu, const Matrix& sigma);

/// S^σ is Calabi-Yau iff σ^ℓ = hdet(σ)·id, valid when the source is
/// Calabi-Yau (ν = id).
bool cy_twist_criterion(const Matrix& sigma, const Potential& w, const Matrix& nu);

/// Verdict for twists of the polynomial ring on three generators.
struct Poly3Verdict {
    bool cy = false;
    std::optional<Scalar> xi;  ///< skew parameter, reported for diagonal σ
    std::optional<TensorSubspace> target_relations;
};

/// The 3-variable polynomial-ring potential (alternating 6-term sum).
Potential poly3_potential(const Field& f);

Poly3Verdict poly3_cy_twist_classifier(const Matrix& sigma);

}  // namespace spalg
