#include "spalg/ext.hpp"

#include <algorithm>

namespace spalg {

namespace {

/// Position of col among the (sorted) pivot columns, or npos.
std::size_t pivot_index(const std::vector<std::uint64_t>& pivots, std::uint64_t col) {
    auto it = std::lower_bound(pivots.begin(), pivots.end(), col);
    if (it == pivots.end() || *it != col) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - pivots.begin());
}

}  // namespace

ExtFrobenius::ExtFrobenius(const GradedAlgebra& algebra, const Potential& w, std::size_t d)
    : algebra_(algebra), w_(w), d_(d), grams_(d + 1) {
    for (std::size_t i = 0; i <= d_; ++i)
        if (rho(i, algebra_.m()) + rho(d_ - i, algebra_.m()) != w_.ell())
            fail("homological degree profile is inconsistent");
}

std::size_t ExtFrobenius::ext_dim(std::size_t i) const { return w_rho(i).rank(); }

const TensorSubspace& ExtFrobenius::w_rho(std::size_t i) const {
    return algebra_.dual_component(rho(i, algebra_.m()));
}

ExtClass ExtFrobenius::unit() const { return dual_basis_class(0, 0); }

ExtClass ExtFrobenius::top() const { return dual_basis_class(d_, 0); }

ExtClass ExtFrobenius::dual_basis_class(std::size_t i, std::size_t r) const {
    if (i > d_) fail("homological degree out of range");
    if (r >= ext_dim(i)) fail("basis index out of range");
    ExtClass out{i, std::vector<Scalar>(ext_dim(i), w_.field().zero())};
    out.coords[r] = w_.field().one();
    return out;
}

Scalar ExtFrobenius::lifted_eval(const ExtClass& f, const ExtClass& g, const Tensor& t) const {
    const std::size_t n = w_.dim_v();
    const auto& fpiv = w_rho(f.i).pivot_cols();
    const auto& gpiv = w_rho(g.i).pivot_cols();
    const std::uint64_t gsize = tensor_space_dim(n, rho(g.i, algebra_.m()));
    Scalar acc = w_.field().zero();
    for (std::uint64_t col = 0; col < t.size(); ++col) {
        const Scalar& v = t.coeff(col);
        if (v.is_zero()) continue;
        std::size_t a = pivot_index(fpiv, col / gsize);
        if (a == static_cast<std::size_t>(-1) || f.coords[a].is_zero()) continue;
        std::size_t b = pivot_index(gpiv, col % gsize);
        if (b == static_cast<std::size_t>(-1) || g.coords[b].is_zero()) continue;
        acc += f.coords[a] * g.coords[b] * v;
    }
    return acc;
}

ExtClass ExtFrobenius::product(const ExtClass& f, const ExtClass& g) const {
    if (f.i + g.i > d_) fail("product degree exceeds the global dimension");
    const std::size_t m = algebra_.m();
    ExtClass out{f.i + g.i, std::vector<Scalar>(ext_dim(f.i + g.i), w_.field().zero())};
    if (m > 2 && f.i % 2 == 1 && g.i % 2 == 1) return out;
    Scalar sign = (m == 2) ? w_.field().sign(f.i * g.i) : w_.field().one();

    const TensorSubspace& target = w_rho(f.i + g.i);
    for (std::size_t s = 0; s < target.rank(); ++s) {
        Tensor row = target.basis_tensor(s);
        out.coords[s] = lifted_eval(f, g, row) * sign;
    }
    return out;
}

Scalar ExtFrobenius::pairing(const ExtClass& f, const ExtClass& g) const {
    if (f.i + g.i != d_) fail("Frobenius pairing requires complementary degrees");
    return lifted_eval(f, g, w_.tensor()) * w_.field().sign(f.i * g.i);
}

const Matrix& ExtFrobenius::gram(std::size_t i) const {
    if (i > d_) fail("homological degree out of range");
    if (!grams_[i]) {
        const std::size_t n = w_.dim_v();
        const auto& fpiv = w_rho(i).pivot_cols();
        const auto& gpiv = w_rho(d_ - i).pivot_cols();
        const std::uint64_t gsize = tensor_space_dim(n, rho(d_ - i, algebra_.m()));
        Scalar sign = w_.field().sign(i * (d_ - i));
        Matrix g(fpiv.size(), gpiv.size(), w_.field());
        for (std::size_t r = 0; r < fpiv.size(); ++r)
            for (std::size_t s = 0; s < gpiv.size(); ++s)
                g.at(r, s) = w_.tensor().coeff(fpiv[r] * gsize + gpiv[s]) * sign;
        grams_[i] = std::move(g);
    }
    return *grams_[i];
}

Matrix ExtFrobenius::mu(std::size_t i) const {
    const Matrix& gi = gram(i);
    const Matrix& gco = gram(d_ - i);
    if (gi.rows() != gi.cols() || !gi.is_invertible() || !gco.is_invertible())
        fail("not Frobenius");
    return gco.inverse() * gi.transpose();
}

Matrix ExtFrobenius::shriek(const Matrix& sigma, std::size_t i) const {
    const TensorSubspace& w = w_rho(i);
    Matrix res(w.rank(), w.rank(), w_.field());
    for (std::size_t r = 0; r < w.rank(); ++r) {
        Tensor img = apply_factorwise(sigma, w.basis_tensor(r));
        auto coords = w.coordinates(img);
        if (!coords) fail("automorphism does not preserve the dual filtration");
        for (std::size_t s = 0; s < w.rank(); ++s) res.at(s, r) = (*coords)[s];
    }
    return res.transpose();
}

bool ExtFrobenius::verify_nakayama_identity(const Matrix& nu) const {
    Matrix eps_nu = nu * w_.field().sign(d_ + 1);
    for (std::size_t i = 0; i <= d_; ++i)
        if (!(mu(i) == shriek(eps_nu, i))) return false;
    return true;
}

bool ExtFrobenius::check_hdet_pairing(const Matrix& sigma, const Scalar& hdet_sigma) const {
    for (std::size_t i = 0; i <= d_; ++i) {
        const Matrix& g = gram(i);
        if (!(shriek(sigma, i).transpose() * g * shriek(sigma, d_ - i) == g * hdet_sigma))
            return false;
    }
    return true;
}

bool ExtFrobenius::mu_fixes_unit_and_top() const {
    return ext_dim(0) == 1 && ext_dim(d_) == 1 && mu(0).is_identity() && mu(d_).is_identity();
}

}  // namespace spalg
