#pragma once

#include <optional>

#include "spalg/subspace.hpp"

namespace spalg {

/// Nonzero w ∈ V^{⊗ℓ}, scaled so the lex-first nonzero coordinate equals 1.
class Potential {
public:
    explicit Potential(const Tensor& w);
    const Tensor& tensor() const { return w_; }
    std::size_t ell() const { return w_.power(); }
    std::size_t dim_v() const { return w_.dim(); }
    const Field& field() const { return w_.field(); }

private:
    Tensor w_;
};

/// Homogeneous presentation data for TV/(R), R ⊆ V^{⊗m}.
struct Presentation {
    std::size_t dim_v;
    std::size_t m;
    TensorSubspace R;
    Presentation(std::size_t n, std::size_t m_, TensorSubspace R_);
};

/// Span of all first-factor contractions of W.
TensorSubspace partial_space(const TensorSubspace& W);
/// i-fold application of partial_space.
TensorSubspace partial_power(const TensorSubspace& W, std::size_t i);

/// D(w,i) = TV/(∂ⁱ(k·w)), presented in degree ℓ−i.
Presentation derivation_quotient(const Potential& w, std::size_t i);

/// W_i: all of V^{⊗i} below degree m, afterwards ∩_{s+m+t=i} V^{⊗s}⊗R⊗V^{⊗t}.
TensorSubspace w_space(const Presentation& P, std::size_t i);

/// Normalized basis vector of W_ℓ when that space is a line.
Potential extract_superpotential(const Presentation& P, std::size_t ell);

/// φ(w) = w.
bool is_superpotential(const Potential& w);

/// Solutions σ of (σ⊗id^{⊗ℓ−1})φ(w) = w.
struct TwistingResult {
    std::optional<Matrix> sigma;   ///< invertible representative, when one exists
    std::size_t solution_dim = 0;  ///< dimension of the affine solution space
    bool consistent = false;       ///< whether the linear system has any solution
};
TwistingResult twisting_map(const Potential& w);

/// c(w) = (1/ℓ) Σ φⁱ(w).   Requires char ∤ ℓ.
Tensor symmetrize_c(const Tensor& w);
/// c̃(w) = (1/ℓ) Σ (−1)ⁱ φⁱ(w).   Requires char ∤ ℓ.
Tensor symmetrize_c_tilde(const Tensor& w);

/// J(w,i) = D(c(w),i), or D(c̃(w),i) when alternating is set.
Presentation jacobian_algebra(const Potential& w, std::size_t i, bool alternating = false);

}  // namespace spalg
