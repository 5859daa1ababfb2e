#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "hopfdr/errors.hpp"

namespace hopfdr {

class Scalar;

// Q when characteristic is 0, otherwise the prime field F_p with p < 2^61.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field(0); }
    static Field prime(std::uint64_t p);

    std::uint64_t characteristic() const noexcept { return p_; }
    bool is_rational() const noexcept { return p_ == 0; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t v) const;
    Scalar from_ratio(const mpz_class& num, const mpz_class& den) const;
    Scalar from_string(const std::string& num, const std::string& den = "1") const;

    std::string name() const;

    friend bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }

private:
    friend class Scalar;
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);

class Scalar {
public:
    // rational zero; use Field::zero() when the field matters
    Scalar() : p_(0), v_(mpq_class(0)) {}

    Field field() const;
    std::uint64_t characteristic() const noexcept { return p_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    // a <- a + c*b, the elimination kernel
    void add_mul(const Scalar& c, const Scalar& b);

    // lowest-terms numerator/denominator; for F_p the representative in [0,p) over 1
    std::string numerator() const;
    std::string denominator() const;
    std::string to_string() const;

    std::uint64_t mod_value() const { return std::get<std::uint64_t>(v_); }
    const mpq_class& rational_value() const { return std::get<mpq_class>(v_); }

private:
    friend class Field;
    Scalar(std::uint64_t p, std::uint64_t v) : p_(p), v_(v) {}
    explicit Scalar(mpq_class q) : p_(0), v_(std::move(q)) {}

    void require_same(const Scalar& o) const;

    std::uint64_t p_;
    std::variant<std::uint64_t, mpq_class> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

}  // namespace hopfdr
