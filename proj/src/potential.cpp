#include "spalg/potential.hpp"

#include <string>

namespace spalg {

Potential::Potential(const Tensor& w) : w_(w) {
    if (w.power() == 0) fail("potential must have positive tensor order");
    for (std::uint64_t i = 0; i < w_.size(); ++i) {
        if (w_.coeff(i).is_zero()) continue;
        if (!w_.coeff(i).is_one()) {
            Scalar inv = w_.coeff(i).inverse();
            w_ = w_ * inv;
        }
        return;
    }
    fail("potential must be nonzero");
}

Presentation::Presentation(std::size_t n, std::size_t m_, TensorSubspace R_)
    : dim_v(n), m(m_), R(std::move(R_)) {
    if (R.dim() != dim_v || R.power() != m) fail("relation space has the wrong shape");
}

TensorSubspace partial_space(const TensorSubspace& W) {
    if (W.power() == 0) fail("cannot contract a scalar");
    std::vector<Tensor> gens;
    gens.reserve(W.rank() * W.dim());
    for (std::size_t r = 0; r < W.rank(); ++r) {
        Tensor b = W.basis_tensor(r);
        for (std::size_t i = 0; i < W.dim(); ++i) gens.push_back(contract_first(b, i));
    }
    return TensorSubspace::span(W.dim(), W.power() - 1, W.field(), gens);
}

TensorSubspace partial_power(const TensorSubspace& W, std::size_t i) {
    TensorSubspace out = W;
    for (std::size_t k = 0; k < i; ++k) out = partial_space(out);
    return out;
}

Presentation derivation_quotient(const Potential& w, std::size_t i) {
    if (i >= w.ell()) fail("derivative order exceeds the potential degree");
    TensorSubspace kw = TensorSubspace::span({w.tensor()});
    return Presentation(w.dim_v(), w.ell() - i, partial_power(kw, i));
}

TensorSubspace w_space(const Presentation& P, std::size_t i) {
    const Field& f = P.R.field();
    if (i < P.m) return TensorSubspace::full(P.dim_v, i, f);
    // ∩_s V^{⊗s}⊗R⊗V^{⊗t} = ann(Σ_s V^{⊗s}⊗R^⊥⊗V^{⊗t}).
    TensorSubspace rperp = P.R.annihilator();
    TensorSubspace j = sandwich(0, rperp, i - P.m);
    for (std::size_t s = 1; s + P.m <= i; ++s) j = j.sum(sandwich(s, rperp, i - P.m - s));
    return j.annihilator();
}

Potential extract_superpotential(const Presentation& P, std::size_t ell) {
    TensorSubspace w = w_space(P, ell);
    if (w.rank() != 1)
        fail("superpotential space has dimension " + std::to_string(w.rank()));
    return Potential(w.basis_tensor(0));
}

bool is_superpotential(const Potential& w) { return cyclic_shift(w.tensor()) == w.tensor(); }

namespace {

/// Deterministic trial values for the free coordinates of the solution space.
std::uint64_t lcg_next(std::uint64_t& state) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
}

}  // namespace

TwistingResult twisting_map(const Potential& w) {
    const std::size_t n = w.dim_v();
    const Field& f = w.field();
    const std::uint64_t slice = w.tensor().size() / n;
    Tensor phi = cyclic_shift(w.tensor());

    // For each first letter i: Σ_j σ[i][j]·φ(w)[j,K] = w[i,K].  Stacking over
    // i gives Lᵗ·σᵗ = Wᵗ with L[j][K] = φ(w)[j,K] and W[i][K] = w[i,K].
    Matrix lt(slice, n, f), wt(slice, n, f);
    for (std::size_t j = 0; j < n; ++j)
        for (std::uint64_t K = 0; K < slice; ++K) {
            lt.at(K, j) = phi.coeff(j * slice + K);
            wt.at(K, j) = w.tensor().coeff(j * slice + K);
        }

    TwistingResult out;
    auto xt = lt.solve(wt);
    if (!xt) return out;
    out.consistent = true;
    Matrix null = lt.nullspace();
    const std::size_t q = null.cols();
    out.solution_dim = q * n;

    auto candidate = [&](const Matrix& coeffs) {
        Matrix sigma_t = *xt;
        if (q > 0) sigma_t = sigma_t + null * coeffs;
        return sigma_t.transpose();
    };

    Matrix zero(q, n, f);
    Matrix first = candidate(zero);
    if (first.is_invertible()) {
        out.sigma = first;
        return out;
    }
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (int v : {1, -1}) {
                Matrix c(q, n, f);
                c.at(a, b) = f.of(v, 1);
                Matrix cand = candidate(c);
                if (cand.is_invertible()) {
                    out.sigma = cand;
                    return out;
                }
            }
    std::uint64_t state = 0x5eed5eed5eed5eedULL;
    for (int trial = 0; trial < 48 && q > 0; ++trial) {
        Matrix c(q, n, f);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = 0; b < n; ++b)
                c.at(a, b) = f.of(static_cast<long long>(lcg_next(state) % 7) - 3, 1);
        Matrix cand = candidate(c);
        if (cand.is_invertible()) {
            out.sigma = cand;
            return out;
        }
    }
    return out;
}

namespace {

Scalar inverse_length(const Field& f, std::size_t ell) {
    if (f.characteristic() != 0 && ell % f.characteristic() == 0)
        fail("symmetrizer undefined in this characteristic");
    return f.of(1, static_cast<long long>(ell));
}

}  // namespace

Tensor symmetrize_c(const Tensor& w) {
    Scalar inv = inverse_length(w.field(), w.power());
    Tensor acc = w;
    Tensor cur = w;
    for (std::size_t i = 1; i < w.power(); ++i) {
        cur = cyclic_shift(cur);
        acc = acc + cur;
    }
    return acc * inv;
}

Tensor symmetrize_c_tilde(const Tensor& w) {
    Scalar inv = inverse_length(w.field(), w.power());
    Tensor acc = w;
    Tensor cur = w;
    for (std::size_t i = 1; i < w.power(); ++i) {
        cur = cyclic_shift(cur);
        acc = (i % 2 == 1) ? acc - cur : acc + cur;
    }
    return acc * inv;
}

Presentation jacobian_algebra(const Potential& w, std::size_t i, bool alternating) {
    Tensor c = alternating ? symmetrize_c_tilde(w.tensor()) : symmetrize_c(w.tensor());
    if (c.is_zero()) fail("symmetrized potential vanishes");
    return derivation_quotient(Potential(c), i);
}

}  // namespace spalg
