#pragma once

#include "spalg/symmetry.hpp"

namespace spalg {

/// 𝔖₃-average (1/6)Σ_θ θ(w) on order-3 tensors over a 3-dimensional space.
/// Requires char ∤ 6.
Tensor sym3_project(const Tensor& w);
/// Signed 𝔖₃-average (1/6)Σ_θ sgn(θ)·θ(w).
Tensor alt3_project(const Tensor& w);

/// The fixed basis w₀ = Σ_θ sgn(θ)·θ(x⊗y⊗z) of Alt³V.
Tensor alt3_basis(const Field& f);

/// The unique μ with c(w) − s(w) = μ·w₀.
Scalar mu_coefficient(const Tensor& w);

/// c(w) split into its symmetric part and the alternating coefficient.
struct CubicDecomposition {
    Tensor s_part;
    Scalar mu_coeff;
    Tensor w0;
};
CubicDecomposition cubic_decomposition(const Tensor& w);

enum class ObstructionVerdict { possible, impossible, undetermined };

/// Outcome of the "hdet(σ) ≠ det(σ) for some σ" tests in three variables.
struct HdetObstruction {
    ObstructionVerdict verdict = ObstructionVerdict::undetermined;
    bool c_in_sym3 = false;
    bool r_in_sym2 = false;
    std::optional<Matrix> witness;
    std::optional<Scalar> witness_hdet;
    std::optional<Scalar> witness_det;
};

/// Membership tests c(w) ∈ Sym³V and R ⊆ Sym²V; when the source is
/// Calabi-Yau and both hold, produces a verified witness with hdet = 1 and
/// det = −1 from the two coordinate transpositions.  Without the Calabi-Yau
/// certificate only the one-way implication is reported: a failed membership
/// settles "impossible", a passing one stays undetermined.
HdetObstruction hdet_obstruction(const Presentation& P, const Potential& w, bool calabi_yau);

}  // namespace spalg
