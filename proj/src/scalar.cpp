#include "spalg/scalar.hpp"

namespace spalg {

void fail(const std::string& message) { throw Error(message); }

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Inverse of a mod p by the extended Euclidean algorithm.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a == 0) fail("division by zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) fail("element not invertible mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) fail("field modulus " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 32)) fail("prime field modulus too large");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::name() const {
    return p_ == 0 ? "QQ" : "F_" + std::to_string(p_);
}

Scalar Field::zero() const { return of(0); }

Scalar Field::one() const { return of(1); }

Scalar Field::of(long long num, long long den) const {
    if (den == 0) fail("zero denominator");
    if (p_ == 0) {
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return Scalar::rational(q);
    }
    auto reduce = [this](long long x) {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r);
    };
    std::uint64_t n = reduce(num);
    std::uint64_t d = reduce(den);
    if (d == 0) fail("denominator vanishes in " + name());
    return Scalar::residue(p_, (n * mod_inverse(d, p_)) % p_);
}

Scalar Field::sign(std::uint64_t k) const { return of(k % 2 == 0 ? 1 : -1); }

Scalar Scalar::rational(const mpq_class& q) {
    Scalar s;
    s.q_ = q;
    return s;
}

Scalar Scalar::residue(std::uint64_t p, std::uint64_t v) {
    Scalar s;
    s.p_ = p;
    s.v_ = v % p;
    return s;
}

Field Scalar::field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : v_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : v_ == 1; }

void Scalar::require_same_field(const Scalar& o) const {
    if (p_ != o.p_)
        fail("field mismatch: " + field().name() + " vs " + o.field().name());
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (p_ == 0)
        r.q_ = -q_;
    else
        r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(o);
    if (p_ == 0)
        q_ += o.q_;
    else
        v_ = (v_ + o.v_) % p_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_field(o);
    if (p_ == 0)
        q_ -= o.q_;
    else
        v_ = (v_ + p_ - o.v_) % p_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(o);
    if (p_ == 0)
        q_ *= o.q_;
    else
        v_ = (v_ * o.v_) % p_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? q_ == o.q_ : v_ == o.v_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail("division by zero");
    Scalar r = *this;
    if (p_ == 0)
        r.q_ = 1 / q_;
    else
        r.v_ = mod_inverse(v_, p_);
    return r;
}

Scalar Scalar::pow(long long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    Scalar acc = field().one();
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    return p_ == 0 ? q_.get_str() : std::to_string(v_);
}

const mpq_class& Scalar::rat() const {
    if (p_ != 0) fail("not a rational scalar");
    return q_;
}

std::uint64_t Scalar::residue_value() const {
    if (p_ == 0) fail("not a prime-field scalar");
    return v_;
}

}  // namespace spalg
