#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace spalg {

/// Thrown for every contract violation: malformed input, degenerate linear
/// systems, field mismatches.  Messages are stable and tested.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

[[noreturn]] void fail(const std::string& message);

class Scalar;

/// Coefficient field descriptor: the rationals (default) or a prime field F_p.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field{}; }
    static Field prime(std::uint64_t p);

    bool is_rationals() const { return p_ == 0; }
    /// 0 for the rationals, p for F_p.
    std::uint64_t characteristic() const { return p_; }
    std::string name() const;

    bool operator==(const Field&) const = default;

    Scalar zero() const;
    Scalar one() const;
    /// Image of num/den in this field.
    Scalar of(long long num, long long den = 1) const;
    Scalar operator()(long long num, long long den = 1) const;
    /// (-1)^k in this field.
    Scalar sign(std::uint64_t k) const;

private:
    std::uint64_t p_ = 0;  // 0 encodes the rationals
};

/// An exact element of a Field.  All arithmetic is exact; mixing elements of
/// different fields throws.
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;
    static Scalar rational(const mpq_class& q);
    static Scalar residue(std::uint64_t p, std::uint64_t v);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    bool operator==(const Scalar& o) const;

    Scalar inverse() const;
    Scalar pow(long long e) const;

    /// Exact rendering: "p/q" or "p" over the rationals, the canonical
    /// representative 0..p-1 over F_p.
    std::string str() const;

    const mpq_class& rat() const;
    std::uint64_t residue_value() const;

private:
    mpq_class q_;
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;  // 0: rational stored in q_; else residue v_ mod p_

    void require_same_field(const Scalar& o) const;
    friend class Field;
};

inline Scalar Field::operator()(long long num, long long den) const { return of(num, den); }

}  // namespace spalg
