#include "spalg/symmetry.hpp"

namespace spalg {

namespace {

/// n × n^{p−1} matrix whose row i is the first-letter slice (v_i)^*⌟t.
Matrix first_slices(const Tensor& t) {
    const std::size_t n = t.dim();
    const std::uint64_t slice = t.size() / n;
    Matrix out(n, slice, t.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::uint64_t k = 0; k < slice; ++k) out.at(i, k) = t.coeff(i * slice + k);
    return out;
}

}  // namespace

AutomorphismCheck is_automorphism(const Matrix& sigma, const Presentation& P,
                                  const Potential& w) {
    if (!sigma.is_invertible()) fail("automorphism candidate is not invertible");
    AutomorphismCheck out;
    out.preserves_relations = P.R.apply_factorwise(sigma) == P.R;
    Tensor moved = apply_factorwise(sigma, w.tensor());
    out.preserves_potential = proportionality(moved, w.tensor()).has_value();
    if (out.preserves_relations != out.preserves_potential)
        fail("automorphism criteria disagree; presentation and potential are inconsistent");
    out.verdict = out.preserves_relations;
    return out;
}

Scalar hdet(const Matrix& sigma, const Potential& w) {
    Tensor moved = apply_factorwise(sigma, w.tensor());
    auto lambda = proportionality(moved, w.tensor());
    if (!lambda) fail("not an automorphism of this potential");
    return *lambda;
}

Matrix nakayama_via_phi(const Potential& w, std::size_t d) {
    const std::size_t n = w.dim_v();
    const Field& f = w.field();
    Matrix lt = first_slices(cyclic_shift(w.tensor())).transpose();
    Matrix rhs = first_slices(w.tensor()).transpose() * f.sign(d + 1);
    auto x = lt.solve(rhs);
    if (!x) fail("Nakayama system degenerate");
    if (lt.nullspace().cols() != 0) fail("Nakayama system degenerate");
    Matrix nu = x->transpose();
    if (nu.rows() != n || !nu.is_invertible()) fail("Nakayama system degenerate");
    return nu;
}

NakayamaQ nakayama_via_q(const Potential& w, std::size_t d) {
    const std::size_t n = w.dim_v();
    const Field& f = w.field();
    if (w.ell() < 2) fail("Nakayama system degenerate");

    std::vector<std::vector<Tensor>> m(n, std::vector<Tensor>(n, Tensor(n, w.ell() - 2, f)));
    const std::uint64_t inner = tensor_space_dim(n, w.ell() - 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::uint64_t k = 0; k < inner; ++k)
                m[i][j].coeff(k) = w.tensor().coeff((i * inner + k) * n + j);

    // Row t of L_w is (Mx)_t flattened; row j of L_{φw} is ((xᵗM)ᵗ)_j.
    Matrix lw_t = first_slices(w.tensor()).transpose();
    Matrix lphi_t = first_slices(cyclic_shift(w.tensor())).transpose();
    auto qt = lw_t.solve(lphi_t);
    if (!qt) fail("Nakayama system degenerate");
    if (lw_t.nullspace().cols() != 0) fail("Nakayama system degenerate");
    Matrix q = qt->transpose();
    if (!q.is_invertible()) fail("Nakayama system degenerate");

    NakayamaQ out{std::move(m), q, q.inverse().transpose() * f.sign(d + 1)};
    return out;
}

bool is_calabi_yau(const Potential& w, std::size_t d) {
    return cyclic_shift(w.tensor()) == w.tensor() * w.field().sign(d + 1);
}

Scalar check_hdet_nakayama(const Potential& w, std::size_t d) {
    Scalar h = hdet(nakayama_via_phi(w, d), w);
    if (!h.is_one()) fail("Nakayama homological determinant differs from 1");
    return h;
}

bool check_centrality(const Matrix& nu, const std::vector<Matrix>& sigmas) {
    for (const auto& s : sigmas)
        if (!(nu * s == s * nu)) return false;
    return true;
}

Matrix epsilon_nakayama(const Matrix& nu, std::size_t d) {
    return nu * nu.field().sign(d + 1);
}

}  // namespace spalg
