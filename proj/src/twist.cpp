#include "spalg/twist.hpp"

namespace spalg {

Tensor twist_tensor(const Tensor& t, const Matrix& sigma) {
    if (sigma.rows() != t.dim() || sigma.cols() != t.dim())
        fail("matrix does not act on this space");
    Tensor out = t;
    Matrix power = sigma;  // applied to position p−1−k with exponent k
    for (std::size_t k = 1; k < t.power(); ++k) {
        out = mode_product(out, power, t.power() - 1 - k);
        if (k + 1 < t.power()) power = power * sigma;
    }
    return out;
}

TwistedPotential twist_potential(const Potential& w, const Matrix& sigma) {
    Tensor raw = twist_tensor(w.tensor(), sigma);
    return TwistedPotential{raw, Potential(raw)};
}

TensorSubspace twist_subspace(const TensorSubspace& w, const Matrix& sigma) {
    std::vector<Tensor> imgs;
    imgs.reserve(w.rank());
    for (std::size_t r = 0; r < w.rank(); ++r)
        imgs.push_back(twist_tensor(w.basis_tensor(r), sigma));
    return TensorSubspace::span(w.dim(), w.power(), w.field(), imgs);
}

bool twist_commutes_with_partial(const TensorSubspace& w, const Matrix& sigma, std::size_t i) {
    if (i > w.power()) fail("derivative order exceeds the tensor order");
    return partial_power(twist_subspace(w, sigma), i) ==
           twist_subspace(partial_power(w, i), sigma);
}

TwistReport twist_report(const Potential& w, const Presentation& P, std::size_t d,
                         const Matrix& nu, const Matrix& sigma) {
    const Field& f = w.field();
    Scalar h = hdet(sigma, w);
    TwistedPotential tw = twist_potential(w, sigma);

    Matrix nu_twisted = sigma.pow(w.ell()) * nu * h.inverse();

    // w^σ must be a (−1)^{d+1}·hdet(σ)⁻¹σ^ℓν-twisted superpotential.
    Tensor lhs = mode_product(cyclic_shift(tw.raw), nu_twisted * f.sign(d + 1), 0);
    if (!(lhs == tw.raw)) fail("twisted potential fails its Nakayama identity");

    TwistReport rep{tw.raw,
                    tw.normalized,
                    twist_subspace(P.R, sigma),
                    hdet(sigma, tw.normalized) == h,
                    nu_twisted,
                    is_calabi_yau(tw.normalized, d)};
    return rep;
}

bool cy_twist_criterion(const Matrix& sigma, const Potential& w, const Matrix& nu) {
    if (!nu.is_identity()) fail("criterion requires Calabi-Yau source");
    Scalar h = hdet(sigma, w);
    return sigma.pow(w.ell()) == Matrix::identity(sigma.rows(), sigma.field()) * h;
}

Potential poly3_potential(const Field& f) {
    Tensor w(3, 3, f);
    w.coeff({0, 1, 2}) = f.one();
    w.coeff({1, 2, 0}) = f.one();
    w.coeff({2, 0, 1}) = f.one();
    w.coeff({0, 2, 1}) = -f.one();
    w.coeff({1, 0, 2}) = -f.one();
    w.coeff({2, 1, 0}) = -f.one();
    return Potential(w);
}

Poly3Verdict poly3_cy_twist_classifier(const Matrix& sigma) {
    if (sigma.rows() != 3 || sigma.cols() != 3) fail("classifier expects a 3×3 matrix");
    if (!sigma.is_invertible()) fail("automorphism candidate is not invertible");
    const Field& f = sigma.field();
    Potential w = poly3_potential(f);
    Scalar h = hdet(sigma, w);

    Poly3Verdict v;
    v.cy = sigma.pow(3) == Matrix::identity(3, f) * h;
    if (v.cy && sigma.is_diagonal()) {
        Scalar xi = sigma.at(1, 1) / sigma.at(0, 0);
        v.xi = xi;
        Tensor r1(3, 2, f), r2(3, 2, f), r3(3, 2, f);
        r1.coeff({1, 2}) = f.one();
        r1.coeff({2, 1}) = -xi;
        r2.coeff({2, 0}) = f.one();
        r2.coeff({0, 2}) = -xi;
        r3.coeff({0, 1}) = f.one();
        r3.coeff({1, 0}) = -xi;
        v.target_relations = TensorSubspace::span({r1, r2, r3});
    }
    return v;
}

}  // namespace spalg
