#pragma once

#include <utility>
#include <vector>

#include "spalg/potential.hpp"

namespace fixtures {

using namespace spalg;

inline Tensor from_terms(std::size_t dim, std::size_t power, const Field& f,
                         const std::vector<std::pair<std::vector<std::size_t>, long long>>& terms) {
    Tensor t(dim, power, f);
    for (const auto& [word, c] : terms) t.coeff(word) += f.of(c);
    return t;
}

/// xy - yx
inline Tensor comm_plane(const Field& f = {}) {
    return from_terms(2, 2, f, {{{0, 1}, 1}, {{1, 0}, -1}});
}

/// xy - q*yx
inline Tensor quantum_plane(const Scalar& q) {
    Tensor t(2, 2, q.field());
    t.coeff({0, 1}) = q.field().one();
    t.coeff({1, 0}) = -q;
    return t;
}

/// x²y² + yx²y + y²x² + xy²x
inline Tensor cubic_w(const Field& f = {}) {
    return from_terms(2, 4, f,
                      {{{0, 0, 1, 1}, 1}, {{1, 0, 0, 1}, 1}, {{1, 1, 0, 0}, 1}, {{0, 1, 1, 0}, 1}});
}

/// xyz + yzx + zxy + xzy + yxz + zyx
inline Tensor symmetric3(const Field& f = {}) {
    return from_terms(3, 3, f,
                      {{{0, 1, 2}, 1},
                       {{1, 2, 0}, 1},
                       {{2, 0, 1}, 1},
                       {{0, 2, 1}, 1},
                       {{1, 0, 2}, 1},
                       {{2, 1, 0}, 1}});
}

/// σ(e_j) = e_{img[j]}
inline Matrix perm_matrix(const std::vector<std::size_t>& img, const Field& f = {}) {
    Matrix m(img.size(), img.size(), f);
    for (std::size_t j = 0; j < img.size(); ++j) m.at(img[j], j) = f.one();
    return m;
}

inline Matrix diag(const std::vector<Scalar>& entries) {
    return Matrix::diagonal(entries);
}

/// Presentation with R = ∂^{ℓ-m}(k·w).
inline Presentation pres_of(const Tensor& w, std::size_t m) {
    Potential p(w);
    return derivation_quotient(p, w.power() - m);
}

inline std::uint64_t lcg(std::uint64_t& s) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 33;
}

inline Tensor random_tensor(std::size_t dim, std::size_t power, const Field& f,
                            std::uint64_t& s) {
    Tensor t(dim, power, f);
    for (std::uint64_t i = 0; i < t.size(); ++i)
        t.coeff(i) = f.of(static_cast<long long>(lcg(s) % 7) - 3);
    return t;
}

inline Matrix random_invertible(std::size_t n, const Field& f, std::uint64_t& s) {
    for (;;) {
        Matrix m(n, n, f);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = f.of(static_cast<long long>(lcg(s) % 7) - 3);
        if (m.is_invertible()) return m;
    }
}

}  // namespace fixtures
