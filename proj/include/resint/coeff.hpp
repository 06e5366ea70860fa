#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "resint/errors.hpp"

namespace resint {

/// Exact rational number backed by GMP. Always kept canonical
/// (reduced fraction, positive denominator).
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {} // NOLINT: implicit by design, mirrors integer literals
    Rat(long num, long den) : q_(num, den) {
        if (den == 0) throw input_error("rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rat(const mpz_class& z) : q_(z) {}

    /// Parses "p" or "p/q" with arbitrary-precision parts.
    static Rat parse(const std::string& text);

    static Rat zero() { return Rat(); }
    static Rat one() { return Rat(1); }

    Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw input_error("rational division by zero");
        return Rat(mpq_class(q_ / o.q_));
    }
    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rat& o) const { return q_ == o.q_; }
    bool operator!=(const Rat& o) const { return q_ != o.q_; }
    bool operator<(const Rat& o) const { return q_ < o.q_; }
    bool operator<=(const Rat& o) const { return q_ <= o.q_; }
    bool operator>(const Rat& o) const { return q_ > o.q_; }
    bool operator>=(const Rat& o) const { return q_ >= o.q_; }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat inverse() const {
        if (is_zero()) throw input_error("inverse of zero");
        return Rat(mpq_class(1 / q_));
    }
    Rat abs() const { return q_ < 0 ? -*this : *this; }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    /// "p" when integral, otherwise "p/q".
    std::string str() const {
        return is_integer() ? q_.get_num().get_str() : q_.get_str();
    }
    /// Always "p/q", the report serialization of the spec'd CLI.
    std::string fraction_str() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

/// Element of the prime field F_p, p an odd prime fitting in 62 bits is more
/// than enough; we keep p < 2^31 so products fit in int64 without tricks.
///
/// A default-constructed Fp is the neutral zero (modulus 0): it acts as the
/// additive identity against any modulus, which lets generic container code
/// value-initialize coefficients safely. Nonzero values always carry p.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t v, std::int64_t p) : p_(p) {
        if (p < 3) throw input_error("prime field modulus must be an odd prime >= 3");
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    static Fp zero() { return Fp(); }
    static Fp one(std::int64_t p) { return Fp(1, p); }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator+(const Fp& o) const {
        const std::int64_t p = join(o);
        if (p == 0) return Fp();
        std::int64_t s = v_ + o.v_;
        if (s >= p) s -= p;
        return make(s, p);
    }
    Fp operator-(const Fp& o) const {
        const std::int64_t p = join(o);
        if (p == 0) return Fp();
        std::int64_t s = v_ - o.v_;
        if (s < 0) s += p;
        return make(s, p);
    }
    Fp operator*(const Fp& o) const {
        const std::int64_t p = join(o);
        if (p == 0 || v_ == 0 || o.v_ == 0) return Fp();
        return make((v_ * o.v_) % p, p);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp operator-() const { return v_ == 0 ? Fp() : make(p_ - v_, p_); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool operator==(const Fp& o) const {
        join(o); // modulus consistency check
        return v_ == o.v_;
    }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp inverse() const {
        if (v_ == 0) throw input_error("inverse of zero in F_p");
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            const std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return make(x0 < 0 ? x0 + p_ : x0, p_);
    }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp make(std::int64_t v, std::int64_t p) {
        Fp f;
        f.v_ = v;
        f.p_ = p;
        return f;
    }
    std::int64_t join(const Fp& o) const {
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
            throw input_error("mixed prime field moduli");
        return p_ != 0 ? p_ : o.p_;
    }

    std::int64_t v_;
    std::int64_t p_;
};

inline Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(mpz_class(text));
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw input_error("rational with zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Rat(q);
    } catch (const std::invalid_argument&) {
        throw input_error("malformed rational '" + text + "'");
    }
}

} // namespace resint
