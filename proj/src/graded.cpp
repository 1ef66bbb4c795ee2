#include "spalg/graded.hpp"

#include <algorithm>

namespace spalg {

std::size_t rho(std::size_t i, std::size_t m) { return (i / 2) * m + (i % 2); }

std::size_t gorenstein_dimension(std::size_t m, std::size_t ell) {
    if (m < 2) fail("relation degree must be at least 2");
    if (ell < m) fail("potential degree must be at least the relation degree");
    if (m == 2) return ell;
    if ((2 * (ell - 1)) % m != 0) fail("no consistent global dimension");
    std::size_t d = 2 * (ell - 1) / m + 1;
    if (d % 2 == 0) fail("no consistent global dimension");
    return d;
}

GradedAlgebra::GradedAlgebra(Presentation pres) : pres_(std::move(pres)) {
    if (pres_.m < 2) fail("relation degree must be at least 2");
}

void GradedAlgebra::ensure_degree(std::size_t t) const {
    while (ideal_.size() <= t) {
        std::size_t d = ideal_.size();
        TensorSubspace next(pres_.dim_v, d, field());
        if (d == pres_.m)
            next = pres_.R;
        else if (d > pres_.m)
            next = sandwich(1, ideal_[d - 1], 0).sum(sandwich(0, pres_.R, d - pres_.m));
        ideal_.push_back(std::move(next));
        basis_.push_back(ideal_.back().non_pivot_cols());
    }
}

void GradedAlgebra::ensure_dual_degree(std::size_t t) const {
    while (dual_ideal_.size() <= t) {
        std::size_t d = dual_ideal_.size();
        TensorSubspace j(pres_.dim_v, d, field());
        if (d == pres_.m)
            j = pres_.R.annihilator();
        else if (d > pres_.m)
            j = sandwich(1, dual_ideal_[d - 1], 0)
                    .sum(sandwich(0, dual_ideal_[pres_.m], d - pres_.m));
        dual_ideal_.push_back(std::move(j));
        w_.push_back(dual_ideal_.back().annihilator());
    }
}

const TensorSubspace& GradedAlgebra::ideal_component(std::size_t t) const {
    ensure_degree(t);
    return ideal_[t];
}

const std::vector<std::uint64_t>& GradedAlgebra::component_basis(std::size_t t) const {
    ensure_degree(t);
    return basis_[t];
}

std::size_t GradedAlgebra::component_dim(std::size_t t) const { return component_basis(t).size(); }

std::vector<std::size_t> GradedAlgebra::hilbert_function(std::size_t N) const {
    std::vector<std::size_t> dims;
    dims.reserve(N + 1);
    for (std::size_t t = 0; t <= N; ++t) dims.push_back(component_dim(t));
    return dims;
}

const TensorSubspace& GradedAlgebra::dual_component(std::size_t t) const {
    ensure_dual_degree(t);
    return w_[t];
}

std::vector<std::pair<std::size_t, Scalar>> GradedAlgebra::monomial_normal_form(
    std::size_t t, std::uint64_t col) const {
    ensure_degree(t);
    const TensorSubspace& ideal = ideal_[t];
    const auto& cols = basis_[t];
    auto pos_of = [&](std::uint64_t c) {
        return static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), c) -
                                        cols.begin());
    };
    const auto& piv = ideal.pivot_cols();
    auto it = std::lower_bound(piv.begin(), piv.end(), col);
    std::vector<std::pair<std::size_t, Scalar>> out;
    if (it == piv.end() || *it != col) {
        out.emplace_back(pos_of(col), field().one());
        return out;
    }
    const SparseRow& row = ideal.rows()[static_cast<std::size_t>(it - piv.begin())];
    for (std::size_t e = 1; e < row.size(); ++e) out.emplace_back(pos_of(row[e].first), -row[e].second);
    return out;
}

Matrix GradedAlgebra::differential(std::size_t t, std::size_t i) const {
    const std::size_t n = pres_.dim_v;
    const std::size_t rhi = rho(i, pres_.m);
    const std::size_t rlo = rho(i - 1, pres_.m);
    const std::size_t g = rhi - rlo;
    const TensorSubspace& whi = dual_component(rhi);
    const TensorSubspace& wlo = dual_component(rlo);
    const auto& dom_basis = component_basis(t - rhi);
    const auto& cod_basis = component_basis(t - rlo);
    Matrix d(cod_basis.size() * wlo.rank(), dom_basis.size() * whi.rank(), field());
    const std::uint64_t ng = tensor_space_dim(n, g);
    const std::uint64_t rest_size = tensor_space_dim(n, rlo);

    for (std::size_t r = 0; r < whi.rank(); ++r) {
        // Split row r of W_{ρ(i)} along its first g letters.
        std::vector<Tensor> parts(ng, Tensor(n, rlo, field()));
        std::vector<bool> hit(ng, false);
        for (const auto& e : whi.rows()[r]) {
            std::uint64_t k = e.first / rest_size;
            parts[k].coeff(e.first % rest_size) = e.second;
            hit[k] = true;
        }
        std::vector<std::optional<std::vector<Scalar>>> part_coords(ng);
        for (std::uint64_t k = 0; k < ng; ++k) {
            if (!hit[k]) continue;
            auto c = wlo.coordinates(parts[k]);
            if (!c) fail("complex differential leaves the dual filtration");
            part_coords[k] = std::move(c);
        }
        for (std::size_t u = 0; u < dom_basis.size(); ++u) {
            std::size_t dom_col = u * whi.rank() + r;
            for (std::uint64_t k = 0; k < ng; ++k) {
                if (!part_coords[k]) continue;
                auto nf = monomial_normal_form(t - rlo, dom_basis[u] * ng + k);
                for (const auto& [zpos, cz] : nf)
                    for (std::size_t rp = 0; rp < wlo.rank(); ++rp) {
                        const Scalar& cc = (*part_coords[k])[rp];
                        if (cc.is_zero()) continue;
                        d.at(zpos * wlo.rank() + rp, dom_col) += cz * cc;
                    }
            }
        }
    }
    return d;
}

KoszulComplexSlice GradedAlgebra::koszul_complex_slice(std::size_t t) const {
    KoszulComplexSlice s;
    s.internal_degree = t;
    std::vector<std::size_t> rhos;
    for (std::size_t i = 0;; ++i) {
        std::size_t r = rho(i, pres_.m);
        if (r > t) break;
        rhos.push_back(r);
    }
    ensure_degree(t);
    ensure_dual_degree(t);
    for (std::size_t r : rhos) s.term_dims.push_back(component_dim(t - r) * dual_component(r).rank());
    for (std::size_t i = 1; i < rhos.size(); ++i) s.maps.push_back(differential(t, i));
    for (std::size_t i = 1; i < s.maps.size(); ++i)
        if (!(s.maps[i - 1] * s.maps[i]).is_zero())
            fail("complex differentials do not compose to zero");
    return s;
}

KoszulVerdict GradedAlgebra::check_m_koszul(std::size_t N) const {
    KoszulVerdict v;
    for (std::size_t t = 1; t <= N; ++t) {
        KoszulComplexSlice s = koszul_complex_slice(t);
        std::vector<std::size_t> ranks(s.term_dims.size() + 1, 0);
        for (std::size_t j = 0; j < s.maps.size(); ++j) ranks[j + 1] = s.maps[j].rank();
        for (std::size_t i = 0; i < s.term_dims.size(); ++i) {
            std::size_t out_rank = (i == 0) ? 0 : ranks[i];
            std::size_t in_rank = (i + 1 < ranks.size()) ? ranks[i + 1] : 0;
            if (out_rank + in_rank != s.term_dims[i]) {
                v.fail_degree = t;
                v.fail_position = i;
                return v;
            }
        }
    }
    v.verified = true;
    v.up_to = N;
    return v;
}

ResolutionShape GradedAlgebra::resolution_shape(std::size_t ell) const {
    ResolutionShape out;
    out.top_dim = dual_component(ell).rank();
    out.sub_top_dim = ell >= 1 ? dual_component(ell - 1).rank() : 1;
    out.relation_level_dim = ell >= pres_.m ? dual_component(ell - pres_.m).rank() : 0;
    out.top_is_line = out.top_dim == 1;
    out.sub_top_matches_v = out.sub_top_dim == pres_.dim_v;
    out.relation_level_matches_r = out.relation_level_dim == pres_.R.rank();
    out.vanishing_above = true;
    for (std::size_t i = ell + 1; i <= ell + pres_.m; ++i)
        if (dual_component(i).rank() != 0) out.vanishing_above = false;
    return out;
}

}  // namespace spalg
