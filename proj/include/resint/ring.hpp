#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "resint/coeff.hpp"
#include "resint/errors.hpp"

namespace resint {

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::int64_t p = 0; // modulus when PrimeField

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec prime_field(std::int64_t p) { return {FieldKind::PrimeField, p}; }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
};

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

/// Named polynomial ring k[x_1,...,x_n] with k = Q or F_p. Immutable and
/// shared; polynomials keep a RingPtr to their context.
class RingContext {
public:
    static RingPtr make(std::vector<std::string> vars, FieldSpec field = FieldSpec::rationals());

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(std::size_t i) const { return vars_[i]; }
    const FieldSpec& field() const { return field_; }

    /// Index of a variable name, or -1.
    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    /// New ring with extra variables appended (same field).
    RingPtr extended(const std::vector<std::string>& extra) const;
    /// New ring over the given field with the same variables.
    RingPtr with_field(FieldSpec f) const { return make(vars_, f); }

private:
    RingContext(std::vector<std::string> vars, FieldSpec field)
        : vars_(std::move(vars)), field_(field) {}

    std::vector<std::string> vars_;
    FieldSpec field_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->vars() == b->vars() && a->field() == b->field();
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline RingPtr RingContext::make(std::vector<std::string> vars, FieldSpec field) {
    if (vars.empty()) throw input_error("ring needs at least one variable");
    if (vars.size() > 64) throw input_error("rings are limited to 64 variables");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw input_error("empty variable name");
        if (!seen.insert(v).second) throw input_error("duplicate variable name '" + v + "'");
    }
    if (field.kind == FieldKind::PrimeField && (field.p == 2 || !is_prime(field.p)))
        throw input_error("prime field characteristic must be an odd prime");
    return RingPtr(new RingContext(std::move(vars), field));
}

inline RingPtr RingContext::extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> vars = vars_;
    vars.insert(vars.end(), extra.begin(), extra.end());
    return make(std::move(vars), field_);
}

/// A variable name not present in the ring, derived from `base`.
inline std::string fresh_name(const RingContext& ctx, const std::string& base) {
    if (ctx.var_index(base) < 0) return base;
    for (int i = 0;; ++i) {
        std::string cand = base + std::to_string(i);
        if (ctx.var_index(cand) < 0) return cand;
    }
}

/// Exponent vector. Comparison operators give the storage order
/// (plain lexicographic on exponents); mathematical term orders live in
/// MonomialOrder.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> e) : e_(std::move(e)) {}

    static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1) {
        Monomial m(nvars);
        m.e_[i] = power;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    unsigned degree() const { return std::accumulate(e_.begin(), e_.end(), 0u); }
    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    /// Quotient o/this; requires divisibility.
    Monomial divide_into(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
        return r;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }
    /// Bitmask of variables with positive exponent (nvars <= 64 enforced
    /// by RingContext).
    std::uint64_t support() const {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0) s |= (std::uint64_t{1} << i);
        return s;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    bool operator<(const Monomial& o) const { return e_ < o.e_; } // storage order

private:
    std::vector<unsigned> e_;
};

/// Total multiplicative well-orders on monomials: lex, graded reverse lex,
/// and the two-block elimination order (dominant block grevlex, then the
/// rest grevlex) used by elimination and implicitization.
class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
    /// Eliminates the variables set in `dominant` (bitmask).
    static MonomialOrder elimination(std::uint64_t dominant) {
        return MonomialOrder(Kind::Block, dominant);
    }

    Kind kind() const { return kind_; }
    std::uint64_t dominant_mask() const { return mask_; }

    /// <0, 0, >0 as a < b, a == b, a > b.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case Kind::Lex: return cmp_lex(a, b, ~std::uint64_t{0});
        case Kind::GrevLex: return cmp_grevlex(a, b, ~std::uint64_t{0});
        case Kind::Block: {
            if (int c = cmp_grevlex(a, b, mask_)) return c;
            return cmp_grevlex(a, b, ~mask_);
        }
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    /// Key for per-order caches.
    std::pair<int, std::uint64_t> key() const { return {static_cast<int>(kind_), mask_}; }
    bool operator==(const MonomialOrder& o) const { return key() == o.key(); }

private:
    MonomialOrder(Kind k, std::uint64_t mask) : kind_(k), mask_(mask) {}

    static int cmp_lex(const Monomial& a, const Monomial& b, std::uint64_t mask) {
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            if (!(mask & (std::uint64_t{1} << i))) continue;
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }
    static int cmp_grevlex(const Monomial& a, const Monomial& b, std::uint64_t mask) {
        long da = 0, db = 0;
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            if (!(mask & (std::uint64_t{1} << i))) continue;
            da += a[i];
            db += b[i];
        }
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = a.nvars(); i-- > 0;) {
            if (!(mask & (std::uint64_t{1} << i))) continue;
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1; // reverse, smaller wins
        }
        return 0;
    }

    Kind kind_;
    std::uint64_t mask_;
};

// Bridges from the runtime field description to the coefficient types.

template <class K>
K coeff_one(const RingContext& ctx);

template <>
inline Rat coeff_one<Rat>(const RingContext& ctx) {
    if (ctx.field().kind != FieldKind::Rationals)
        throw input_error("ring context is not over Q");
    return Rat::one();
}
template <>
inline Fp coeff_one<Fp>(const RingContext& ctx) {
    if (ctx.field().kind != FieldKind::PrimeField)
        throw input_error("ring context is not over a prime field");
    return Fp::one(ctx.field().p);
}

/// Maps an exact rational into the coefficient field of `ctx`.
template <class K>
K coeff_from_rat(const RingContext& ctx, const Rat& r);

template <>
inline Rat coeff_from_rat<Rat>(const RingContext&, const Rat& r) { return r; }

template <>
inline Fp coeff_from_rat<Fp>(const RingContext& ctx, const Rat& r) {
    const std::int64_t p = ctx.field().p;
    const mpz_class pz(static_cast<long>(p));
    mpz_class num = r.num() % pz;
    mpz_class den = r.den() % pz;
    const std::int64_t n = num.get_si();
    const std::int64_t d = den.get_si();
    if (d % p == 0) throw input_error("denominator divisible by field characteristic");
    return Fp(n, p) / Fp(d, p);
}

} // namespace resint
