#include "spalg/subspace.hpp"

#include <algorithm>

namespace spalg {

SparseRow sparse_from_tensor(const Tensor& t) {
    SparseRow r;
    for (std::uint64_t i = 0; i < t.size(); ++i)
        if (!t.coeff(i).is_zero()) r.emplace_back(i, t.coeff(i));
    return r;
}

Scalar sparse_entry(const SparseRow& r, std::uint64_t col, const Field& f) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, std::uint64_t c) { return e.first < c; });
    if (it != r.end() && it->first == col) return it->second;
    return f.zero();
}

SparseRow sub_scaled(const SparseRow& a, const Scalar& c, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(c * b[j].second));
            ++j;
        } else {
            Scalar v = a[i].second - c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<SparseRow> rref_sparse(std::vector<SparseRow> rows, Kernel k) {
    const bool par = (k == Kernel::parallel);
    std::vector<SparseRow> work;
    work.reserve(rows.size());
    for (auto& r : rows)
        if (!r.empty()) work.push_back(std::move(r));

    std::vector<SparseRow> fwd;
    while (!work.empty()) {
        std::size_t bi = work.size();
        std::uint64_t best = 0;
        for (std::size_t i = 0; i < work.size(); ++i) {
            std::uint64_t lead = work[i].front().first;
            if (bi == work.size() || lead < best) {
                bi = i;
                best = lead;
            }
        }
        SparseRow piv = std::move(work[bi]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(bi));
        if (!piv.front().second.is_one()) {
            Scalar inv = piv.front().second.inverse();
            for (auto& e : piv) e.second *= inv;
        }
        const long long nw = static_cast<long long>(work.size());
#pragma omp parallel for if (par) schedule(static)
        for (long long ii = 0; ii < nw; ++ii) {
            auto& r = work[static_cast<std::size_t>(ii)];
            if (r.front().first == best) r = sub_scaled(r, r.front().second, piv);
        }
        std::vector<SparseRow> keep;
        keep.reserve(work.size());
        for (auto& r : work)
            if (!r.empty()) keep.push_back(std::move(r));
        work = std::move(keep);
        fwd.push_back(std::move(piv));
    }

    // Rows now carry strictly increasing leading columns; clear every later
    // pivot column from every earlier row.  Each output row depends only on
    // the fixed forward rows, so the loop parallelizes without ordering
    // effects.
    std::vector<std::uint64_t> pcols(fwd.size());
    for (std::size_t i = 0; i < fwd.size(); ++i) pcols[i] = fwd[i].front().first;
    std::vector<SparseRow> out(fwd.size());
    const long long nf = static_cast<long long>(fwd.size());
#pragma omp parallel for if (par) schedule(static)
    for (long long ii = 0; ii < nf; ++ii) {
        auto i = static_cast<std::size_t>(ii);
        SparseRow r = fwd[i];
        for (std::size_t j = i + 1; j < fwd.size(); ++j) {
            auto it = std::lower_bound(r.begin(), r.end(), pcols[j],
                                       [](const auto& e, std::uint64_t c) { return e.first < c; });
            if (it != r.end() && it->first == pcols[j]) r = sub_scaled(r, it->second, fwd[j]);
        }
        out[i] = std::move(r);
    }
    return out;
}

TensorSubspace::TensorSubspace(std::size_t dim, std::size_t power, const Field& f)
    : dim_(dim), power_(power), field_(f), ambient_(tensor_space_dim(dim, power)) {}

void TensorSubspace::set_rows(std::vector<SparseRow> canonical) {
    rows_ = std::move(canonical);
    pivots_.clear();
    pivots_.reserve(rows_.size());
    for (const auto& r : rows_) {
        if (r.front().first >= ambient_) fail("sparse row column out of range");
        pivots_.push_back(r.front().first);
    }
}

TensorSubspace TensorSubspace::from_rows(std::size_t dim, std::size_t power, const Field& f,
                                         std::vector<SparseRow> rows) {
    TensorSubspace s(dim, power, f);
    s.set_rows(rref_sparse(std::move(rows)));
    return s;
}

TensorSubspace TensorSubspace::span(std::size_t dim, std::size_t power, const Field& f,
                                    const std::vector<Tensor>& gens) {
    std::vector<SparseRow> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.dim() != dim || g.power() != power) fail("tensor shape mismatch in span");
        if (!(g.field() == f)) fail("field mismatch in span");
        rows.push_back(sparse_from_tensor(g));
    }
    return from_rows(dim, power, f, std::move(rows));
}

TensorSubspace TensorSubspace::span(const std::vector<Tensor>& gens) {
    if (gens.empty()) fail("span of no tensors needs an explicit ambient shape");
    return span(gens[0].dim(), gens[0].power(), gens[0].field(), gens);
}

TensorSubspace TensorSubspace::full(std::size_t dim, std::size_t power, const Field& f) {
    TensorSubspace s(dim, power, f);
    std::vector<SparseRow> rows(s.ambient_);
    for (std::uint64_t i = 0; i < s.ambient_; ++i) rows[i] = {{i, f.one()}};
    s.set_rows(std::move(rows));
    return s;
}

std::vector<std::uint64_t> TensorSubspace::non_pivot_cols() const {
    std::vector<std::uint64_t> out;
    out.reserve(ambient_ - pivots_.size());
    std::size_t r = 0;
    for (std::uint64_t c = 0; c < ambient_; ++c) {
        if (r < pivots_.size() && pivots_[r] == c)
            ++r;
        else
            out.push_back(c);
    }
    return out;
}

Tensor TensorSubspace::basis_tensor(std::size_t r) const {
    if (r >= rows_.size()) fail("basis index out of range");
    Tensor t(dim_, power_, field_);
    for (const auto& e : rows_[r]) t.coeff(e.first) = e.second;
    return t;
}

Tensor TensorSubspace::reduce(const Tensor& t) const {
    if (t.dim() != dim_ || t.power() != power_) fail("tensor shape mismatch in reduction");
    Tensor out = t;
    for (const auto& row : rows_) {
        Scalar c = out.coeff(row.front().first);
        if (c.is_zero()) continue;
        for (const auto& e : row) out.coeff(e.first) -= c * e.second;
    }
    return out;
}

bool TensorSubspace::contains(const Tensor& t) const { return reduce(t).is_zero(); }

bool TensorSubspace::contains(const TensorSubspace& o) const {
    if (o.dim_ != dim_ || o.power_ != power_) return false;
    for (std::size_t r = 0; r < o.rank(); ++r)
        if (!contains(o.basis_tensor(r))) return false;
    return true;
}

std::optional<std::vector<Scalar>> TensorSubspace::coordinates(const Tensor& t) const {
    if (t.dim() != dim_ || t.power() != power_) fail("tensor shape mismatch in coordinates");
    Tensor rem = t;
    std::vector<Scalar> coords;
    coords.reserve(rows_.size());
    for (const auto& row : rows_) {
        Scalar c = rem.coeff(row.front().first);
        coords.push_back(c);
        if (c.is_zero()) continue;
        for (const auto& e : row) rem.coeff(e.first) -= c * e.second;
    }
    if (!rem.is_zero()) return std::nullopt;
    return coords;
}

TensorSubspace TensorSubspace::sum(const TensorSubspace& o) const {
    if (o.dim_ != dim_ || o.power_ != power_) fail("tensor shape mismatch in subspace sum");
    if (!(o.field_ == field_)) fail("field mismatch in subspace sum");
    std::vector<SparseRow> rows = rows_;
    rows.insert(rows.end(), o.rows_.begin(), o.rows_.end());
    return from_rows(dim_, power_, field_, std::move(rows));
}

TensorSubspace TensorSubspace::annihilator() const {
    std::vector<std::uint64_t> free_cols = non_pivot_cols();
    std::vector<SparseRow> rows;
    rows.reserve(free_cols.size());
    for (std::uint64_t j : free_cols) {
        SparseRow xi;
        xi.emplace_back(j, field_.one());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Scalar v = sparse_entry(rows_[r], j, field_);
            if (!v.is_zero()) xi.emplace_back(pivots_[r], -v);
        }
        std::sort(xi.begin(), xi.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(xi));
    }
    return from_rows(dim_, power_, field_, std::move(rows));
}

TensorSubspace TensorSubspace::intersect(const TensorSubspace& o) const {
    if (o.dim_ != dim_ || o.power_ != power_) fail("tensor shape mismatch in intersection");
    return annihilator().sum(o.annihilator()).annihilator();
}

TensorSubspace TensorSubspace::apply_factorwise(const Matrix& m) const {
    std::vector<Tensor> imgs;
    imgs.reserve(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        imgs.push_back(spalg::apply_factorwise(m, basis_tensor(r)));
    TensorSubspace s(dim_, power_, field_);
    std::vector<SparseRow> rows;
    rows.reserve(imgs.size());
    for (const auto& t : imgs) rows.push_back(sparse_from_tensor(t));
    s.set_rows(rref_sparse(std::move(rows)));
    return s;
}

bool TensorSubspace::operator==(const TensorSubspace& o) const {
    if (dim_ != o.dim_ || power_ != o.power_ || !(field_ == o.field_)) return false;
    if (rows_.size() != o.rows_.size()) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != o.rows_[r].size()) return false;
        for (std::size_t e = 0; e < rows_[r].size(); ++e) {
            if (rows_[r][e].first != o.rows_[r][e].first) return false;
            if (!(rows_[r][e].second == o.rows_[r][e].second)) return false;
        }
    }
    return true;
}

TensorSubspace sandwich(std::size_t left, const TensorSubspace& mid, std::size_t right) {
    std::size_t n = mid.dim();
    std::uint64_t nl = tensor_space_dim(n, left);
    std::uint64_t nr = tensor_space_dim(n, right);
    std::uint64_t block = tensor_space_dim(n, mid.power() + right);
    // Leading columns come out strictly increasing and each pivot column is
    // untouched by every other row, so the list is already canonical.
    std::vector<SparseRow> out(nl * mid.rank() * nr);
    std::size_t idx = 0;
    for (std::uint64_t K = 0; K < nl; ++K)
        for (std::size_t r = 0; r < mid.rank(); ++r)
            for (std::uint64_t L = 0; L < nr; ++L) {
                SparseRow row;
                row.reserve(mid.rows()[r].size());
                for (const auto& e : mid.rows()[r])
                    row.emplace_back(K * block + e.first * nr + L, e.second);
                out[idx++] = std::move(row);
            }
    return TensorSubspace::from_rows(n, left + mid.power() + right, mid.field(), std::move(out));
}

}  // namespace spalg
