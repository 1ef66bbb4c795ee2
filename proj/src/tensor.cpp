#include "spalg/tensor.hpp"

namespace spalg {

namespace {

std::uint64_t checked_size(std::size_t dim, std::size_t power) {
    std::uint64_t s = 1;
    for (std::size_t k = 0; k < power; ++k) {
        s *= dim;
        if (s > 10'000'000) fail("tensor too large");
    }
    return s;
}

}  // namespace

std::uint64_t tensor_space_dim(std::size_t dim, std::size_t power) {
    return checked_size(dim, power);
}

Tensor::Tensor(std::size_t dim, std::size_t power, const Field& f)
    : dim_(dim), power_(power), field_(f), c_(checked_size(dim, power), f.zero()) {
    if (dim == 0) fail("tensor requires a positive-dimensional space");
}

Tensor Tensor::basis(std::size_t dim, const std::vector<std::size_t>& word, const Field& f) {
    Tensor t(dim, word.size(), f);
    t.coeff(word) = f.one();
    return t;
}

std::uint64_t Tensor::flatten(const std::vector<std::size_t>& word) const {
    if (word.size() != power_) fail("tensor index of wrong length");
    std::uint64_t flat = 0;
    for (std::size_t x : word) {
        if (x >= dim_) fail("tensor index out of range");
        flat = flat * dim_ + x;
    }
    return flat;
}

std::vector<std::size_t> Tensor::unflatten(std::uint64_t flat) const {
    std::vector<std::size_t> word(power_);
    for (std::size_t k = power_; k-- > 0;) {
        word[k] = static_cast<std::size_t>(flat % dim_);
        flat /= dim_;
    }
    return word;
}

bool Tensor::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Tensor Tensor::operator+(const Tensor& o) const {
    if (dim_ != o.dim_ || power_ != o.power_) fail("tensor shape mismatch in sum");
    Tensor out = *this;
    for (std::uint64_t i = 0; i < size(); ++i) out.c_[i] += o.c_[i];
    return out;
}

Tensor Tensor::operator-(const Tensor& o) const {
    if (dim_ != o.dim_ || power_ != o.power_) fail("tensor shape mismatch in difference");
    Tensor out = *this;
    for (std::uint64_t i = 0; i < size(); ++i) out.c_[i] -= o.c_[i];
    return out;
}

Tensor Tensor::operator*(const Scalar& s) const {
    Tensor out = *this;
    for (auto& x : out.c_) x *= s;
    return out;
}

Tensor Tensor::operator-() const {
    Tensor out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

bool Tensor::operator==(const Tensor& o) const {
    if (dim_ != o.dim_ || power_ != o.power_) return false;
    for (std::uint64_t i = 0; i < size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

Tensor tensor_product(const Tensor& t, const Tensor& u) {
    if (t.dim() != u.dim()) fail("tensor shape mismatch in product");
    Tensor out(t.dim(), t.power() + u.power(), t.field());
    for (std::uint64_t i = 0; i < t.size(); ++i) {
        if (t.coeff(i).is_zero()) continue;
        for (std::uint64_t j = 0; j < u.size(); ++j) {
            if (u.coeff(j).is_zero()) continue;
            out.coeff(i * u.size() + j) = t.coeff(i) * u.coeff(j);
        }
    }
    return out;
}

Tensor cyclic_shift(const Tensor& t) {
    if (t.power() == 0) fail("cannot cyclically shift a scalar");
    std::vector<std::size_t> perm(t.power());
    perm[0] = t.power() - 1;
    for (std::size_t k = 1; k < t.power(); ++k) perm[k] = k - 1;
    return permute_factors(t, perm);
}

Tensor cyclic_power(const Tensor& t, std::size_t k) {
    Tensor out = t;
    for (std::size_t i = 0; i < k; ++i) out = cyclic_shift(out);
    return out;
}

Tensor mode_product(const Tensor& t, const Matrix& m, std::size_t slot) {
    if (m.rows() != t.dim() || m.cols() != t.dim()) fail("matrix does not act on this space");
    if (slot >= t.power()) fail("tensor factor index out of range");
    Tensor out(t.dim(), t.power(), t.field());
    std::uint64_t stride = 1;
    for (std::size_t k = slot + 1; k < t.power(); ++k) stride *= t.dim();
    for (std::uint64_t flat = 0; flat < t.size(); ++flat) {
        const Scalar& v = t.coeff(flat);
        if (v.is_zero()) continue;
        std::size_t j = static_cast<std::size_t>((flat / stride) % t.dim());
        std::uint64_t base = flat - j * stride;
        for (std::size_t i = 0; i < t.dim(); ++i) {
            const Scalar& mij = m.at(i, j);
            if (mij.is_zero()) continue;
            out.coeff(base + i * stride) += mij * v;
        }
    }
    return out;
}

Tensor apply_per_factor(const Tensor& t, const std::vector<const Matrix*>& ms) {
    if (ms.size() != t.power()) fail("one matrix per tensor factor is required");
    Tensor out = t;
    for (std::size_t k = 0; k < ms.size(); ++k)
        if (ms[k] != nullptr) out = mode_product(out, *ms[k], k);
    return out;
}

Tensor apply_factorwise(const Matrix& m, const Tensor& t) {
    Tensor out = t;
    for (std::size_t k = 0; k < t.power(); ++k) out = mode_product(out, m, k);
    return out;
}

Tensor permute_factors(const Tensor& t, const std::vector<std::size_t>& perm) {
    if (perm.size() != t.power()) fail("permutation length does not match tensor power");
    Tensor out(t.dim(), t.power(), t.field());
    std::vector<std::size_t> word(t.power()), moved(t.power());
    for (std::uint64_t flat = 0; flat < t.size(); ++flat) {
        if (t.coeff(flat).is_zero()) continue;
        word = t.unflatten(flat);
        for (std::size_t k = 0; k < perm.size(); ++k) {
            if (perm[k] >= t.power()) fail("permutation entry out of range");
            moved[k] = word[perm[k]];
        }
        out.coeff(moved) += t.coeff(flat);
    }
    return out;
}

Tensor contract_first(const Tensor& t, std::size_t i) {
    if (t.power() == 0) fail("cannot contract a scalar");
    if (i >= t.dim()) fail("tensor index out of range");
    Tensor out(t.dim(), t.power() - 1, t.field());
    for (std::uint64_t rest = 0; rest < out.size(); ++rest)
        out.coeff(rest) = t.coeff(i * out.size() + rest);
    return out;
}

Scalar pair(const Tensor& dual, const Tensor& t) {
    if (dual.dim() != t.dim() || dual.power() != t.power()) fail("tensor shape mismatch in pairing");
    Scalar acc = t.field().zero();
    for (std::uint64_t i = 0; i < t.size(); ++i) {
        if (dual.coeff(i).is_zero() || t.coeff(i).is_zero()) continue;
        acc += dual.coeff(i) * t.coeff(i);
    }
    return acc;
}

std::optional<Scalar> proportionality(const Tensor& a, const Tensor& b) {
    if (a.dim() != b.dim() || a.power() != b.power()) return std::nullopt;
    if (b.is_zero()) return std::nullopt;
    std::optional<Scalar> lambda;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        const Scalar& x = a.coeff(i);
        const Scalar& y = b.coeff(i);
        if (y.is_zero()) {
            if (!x.is_zero()) return std::nullopt;
            continue;
        }
        Scalar q = x / y;
        if (!lambda)
            lambda = q;
        else if (!(*lambda == q))
            return std::nullopt;
    }
    return lambda;
}

}  // namespace spalg
