#include "hopfdr/scalar.hpp"

#include <ostream>

namespace hopfdr {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // these witnesses are deterministic for all 64-bit n
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (1ull << 61)) throw Error("field characteristic must be below 2^61");
    if (!is_prime_u64(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    return Field(p);
}

Scalar Field::zero() const {
    if (p_ == 0) return Scalar(mpq_class(0));
    return Scalar(p_, 0);
}

Scalar Field::one() const {
    if (p_ == 0) return Scalar(mpq_class(1));
    return Scalar(p_, 1);
}

Scalar Field::from_int(std::int64_t v) const {
    if (p_ == 0) return Scalar(mpq_class(static_cast<long>(v)));
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return Scalar(p_, static_cast<std::uint64_t>(r));
}

Scalar Field::from_ratio(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw Error("zero denominator");
    if (p_ == 0) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(std::move(q));
    }
    mpz_class m(std::to_string(p_));
    mpz_class n = num % m;
    if (n < 0) n += m;
    mpz_class d = den % m;
    if (d < 0) d += m;
    if (d == 0) throw Error("denominator vanishes in " + name());
    Scalar a(p_, n.get_ui());
    Scalar b(p_, d.get_ui());
    return a / b;
}

Scalar Field::from_string(const std::string& num, const std::string& den) const {
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) throw Error("bad integer '" + num + "'");
    if (d.set_str(den, 10) != 0) throw Error("bad integer '" + den + "'");
    return from_ratio(n, d);
}

std::string Field::name() const {
    if (p_ == 0) return "Q";
    return "F" + std::to_string(p_);
}

Field Scalar::field() const {
    return Field(p_);
}

void Scalar::require_same(const Scalar& o) const {
    if (p_ != o.p_) {
        throw FieldMismatch("scalar field mismatch: characteristic " + std::to_string(p_) + " vs " +
                            std::to_string(o.p_));
    }
}

bool Scalar::is_zero() const {
    if (p_) return std::get<std::uint64_t>(v_) == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
    if (p_) return std::get<std::uint64_t>(v_) == 1;
    return std::get<mpq_class>(v_) == 1;
}

Scalar Scalar::operator-() const {
    if (p_) {
        std::uint64_t v = std::get<std::uint64_t>(v_);
        return Scalar(p_, v == 0 ? 0 : p_ - v);
    }
    return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same(o);
    if (p_) {
        std::uint64_t a = std::get<std::uint64_t>(v_), b = std::get<std::uint64_t>(o.v_);
        std::uint64_t s = a + b;
        if (s >= p_) s -= p_;
        v_ = s;
    } else {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same(o);
    if (p_) {
        std::uint64_t a = std::get<std::uint64_t>(v_), b = std::get<std::uint64_t>(o.v_);
        v_ = a >= b ? a - b : a + p_ - b;
    } else {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same(o);
    if (p_) {
        v_ = mul_mod(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), p_);
    } else {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (p_) return Scalar(p_, pow_mod(std::get<std::uint64_t>(v_), p_ - 2, p_));
    return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same(o);
    return *this *= o.inverse();
}

void Scalar::add_mul(const Scalar& c, const Scalar& b) {
    require_same(c);
    require_same(b);
    if (p_) {
        std::uint64_t t = mul_mod(std::get<std::uint64_t>(c.v_), std::get<std::uint64_t>(b.v_), p_);
        std::uint64_t s = std::get<std::uint64_t>(v_) + t;
        if (s >= p_) s -= p_;
        v_ = s;
    } else {
        std::get<mpq_class>(v_) += std::get<mpq_class>(c.v_) * std::get<mpq_class>(b.v_);
    }
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.require_same(b);
    return a.v_ == b.v_;
}

std::string Scalar::numerator() const {
    if (p_) return std::to_string(std::get<std::uint64_t>(v_));
    return std::get<mpq_class>(v_).get_num().get_str();
}

std::string Scalar::denominator() const {
    if (p_) return "1";
    return std::get<mpq_class>(v_).get_den().get_str();
}

std::string Scalar::to_string() const {
    if (p_) return std::to_string(std::get<std::uint64_t>(v_));
    return std::get<mpq_class>(v_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hopfdr
