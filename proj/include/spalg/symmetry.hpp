#pragma once

#include "spalg/potential.hpp"

namespace spalg {

/// Verdict of the two equivalent membership tests for Aut(TV/(R)).
struct AutomorphismCheck {
    bool verdict = false;
    bool preserves_relations = false;  ///< σ^{⊗m}(R) = R
    bool preserves_potential = false;  ///< σ^{⊗ℓ}(k·w) = k·w
};

/// Evaluates both criteria and insists they agree.
AutomorphismCheck is_automorphism(const Matrix& sigma, const Presentation& P, const Potential& w);

/// λ with σ^{⊗ℓ}(w) = λ·w.
Scalar hdet(const Matrix& sigma, const Potential& w);

/// The unique ν with (ν⊗id^{⊗ℓ−1})φ(w) = (−1)^{d+1}·w.
Matrix nakayama_via_phi(const Potential& w, std::size_t d);

/// Nakayama data from the coefficient-matrix route: w = xᵗMx, then
/// (xᵗM)ᵗ = QMx, then ν = (−1)^{d+1}·Q^{−t}.
struct NakayamaQ {
    std::vector<std::vector<Tensor>> m_entries;  ///< M_ij ∈ V^{⊗ℓ−2}
    Matrix q;
    Matrix nu;
};
NakayamaQ nakayama_via_q(const Potential& w, std::size_t d);

/// φ(w) = (−1)^{d+1}·w.
bool is_calabi_yau(const Potential& w, std::size_t d);

/// hdet of the Nakayama map, which the theory pins to 1.
Scalar check_hdet_nakayama(const Potential& w, std::size_t d);

/// ν commutes with every σ in the list.
bool check_centrality(const Matrix& nu, const std::vector<Matrix>& sigmas);

/// (−1)^{d+1}·ν, the degree-1 block of ε^{d+1}∘ν.
Matrix epsilon_nakayama(const Matrix& nu, std::size_t d);

}  // namespace spalg
