#include "spalg/dim3.hpp"

#include <array>

namespace spalg {

namespace {

constexpr std::array<std::array<std::size_t, 3>, 6> k_perms = {{
    {0, 1, 2},
    {1, 2, 0},
    {2, 0, 1},
    {0, 2, 1},
    {1, 0, 2},
    {2, 1, 0},
}};
constexpr std::array<int, 6> k_signs = {1, 1, 1, -1, -1, -1};

void require_cubic(const Tensor& w) {
    if (w.dim() != 3 || w.power() != 3)
        fail("three tensor factors over a three-dimensional space are required");
}

Scalar one_sixth(const Field& f) {
    std::uint64_t p = f.characteristic();
    if (p == 2 || p == 3) fail("symmetrizer undefined in this characteristic");
    return f.of(1, 6);
}

Tensor s3_average(const Tensor& w, bool signed_sum) {
    require_cubic(w);
    Scalar inv6 = one_sixth(w.field());
    Tensor acc(3, 3, w.field());
    for (std::size_t t = 0; t < 6; ++t) {
        Tensor moved = permute_factors(w, {k_perms[t][0], k_perms[t][1], k_perms[t][2]});
        acc = (signed_sum && k_signs[t] < 0) ? acc - moved : acc + moved;
    }
    return acc * inv6;
}

}  // namespace

Tensor sym3_project(const Tensor& w) { return s3_average(w, false); }

Tensor alt3_project(const Tensor& w) { return s3_average(w, true); }

Tensor alt3_basis(const Field& f) {
    Tensor w0(3, 3, f);
    for (std::size_t t = 0; t < 6; ++t)
        w0.coeff({k_perms[t][0], k_perms[t][1], k_perms[t][2]}) =
            k_signs[t] > 0 ? f.one() : -f.one();
    return w0;
}

Scalar mu_coefficient(const Tensor& w) {
    require_cubic(w);
    Tensor defect = symmetrize_c(w) - sym3_project(w);
    auto mu = proportionality(defect, alt3_basis(w.field()));
    if (!mu) fail("cyclic defect is not alternating");
    return *mu;
}

CubicDecomposition cubic_decomposition(const Tensor& w) {
    CubicDecomposition out{sym3_project(w), mu_coefficient(w), alt3_basis(w.field())};
    if (!(symmetrize_c(w) == out.s_part + out.w0 * out.mu_coeff))
        fail("cubic decomposition identity violated");
    return out;
}

HdetObstruction hdet_obstruction(const Presentation& P, const Potential& w, bool calabi_yau) {
    require_cubic(w.tensor());
    if (P.m != 2 || P.dim_v != 3) fail("obstruction test expects a quadratic three-variable presentation");
    const Field& f = w.field();

    HdetObstruction out;
    Tensor c = symmetrize_c(w.tensor());
    out.c_in_sym3 = sym3_project(c) == c;
    out.r_in_sym2 = true;
    for (std::size_t r = 0; r < P.R.rank(); ++r) {
        Tensor b = P.R.basis_tensor(r);
        if (!(permute_factors(b, {1, 0}) == b)) out.r_in_sym2 = false;
    }

    if (!out.c_in_sym3) {
        out.verdict = ObstructionVerdict::impossible;
        return out;
    }
    if (!calabi_yau || !out.r_in_sym2) return out;

    for (const auto& rows : {std::array<std::size_t, 3>{0, 2, 1}, std::array<std::size_t, 3>{1, 0, 2}}) {
        Matrix cand(3, 3, f);
        for (std::size_t j = 0; j < 3; ++j) cand.at(rows[j], j) = f.one();
        if (!is_automorphism(cand, P, w).verdict) continue;
        Scalar h = hdet(cand, w);
        Scalar dt = cand.det();
        if (h.is_one() && dt == -f.one()) {
            out.verdict = ObstructionVerdict::possible;
            out.witness = cand;
            out.witness_hdet = h;
            out.witness_det = dt;
            return out;
        }
    }
    fail("witness construction failed on a passing input");
}

}  // namespace spalg
