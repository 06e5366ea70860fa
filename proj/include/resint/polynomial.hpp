#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "resint/ring.hpp"

namespace resint {

/// Sparse multivariate polynomial with exact coefficients. Terms are kept in
/// a map under the storage order; mathematical term orders are applied on
/// demand (the same value participates in lex, grevlex and block
/// computations without copying). Immutable in spirit: all operations
/// return new values, so sharing across threads is safe.
template <class K>
class Poly {
public:
    using TermMap = std::map<Monomial, K>;

    Poly() = default;
    explicit Poly(RingPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(RingPtr ctx, TermMap terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {
        prune();
    }

    static Poly zero(RingPtr ctx) { return Poly(std::move(ctx)); }
    static Poly constant(RingPtr ctx, const K& c) {
        Poly p(ctx);
        if (!c.is_zero()) p.terms_.emplace(Monomial(ctx->nvars()), c);
        return p;
    }
    static Poly term(RingPtr ctx, const Monomial& m, const K& c) {
        Poly p(ctx);
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }
    static Poly variable(RingPtr ctx, std::size_t i) {
        return term(ctx, Monomial::variable(ctx->nvars(), i), coeff_one<K>(*ctx));
    }

    const RingPtr& ring() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    /// Single-term polynomial (what the invariants module calls a monomial
    /// generator).
    bool is_term() const { return terms_.size() == 1; }

    int total_degree() const { // -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
        return d;
    }

    bool operator==(const Poly& o) const {
        return same_ring(ctx_, o.ctx_) && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        check_ring(o);
        Poly r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        check_ring(o);
        Poly r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    Poly operator*(const Poly& o) const {
        check_ring(o);
        Poly r(ctx_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Poly scaled(const K& c) const {
        Poly r(ctx_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }
    Poly times_monomial(const Monomial& m) const {
        Poly r(ctx_);
        for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
        return r;
    }

    /// Formal partial derivative with respect to variable `var`.
    Poly differentiate(std::size_t var) const {
        if (var >= ctx_->nvars()) throw input_error("derivative variable out of range");
        Poly r(ctx_);
        for (const auto& [m, c] : terms_) {
            const unsigned e = m[var];
            if (e == 0) continue;
            Monomial dm = m;
            dm[var] = e - 1;
            r.add_term(dm, c * coeff_from_rat<K>(*ctx_, Rat(static_cast<long>(e))));
        }
        return r;
    }

    /// Decomposition into homogeneous parts, degrees strictly increasing.
    /// The parts re-sum to the input exactly.
    std::vector<std::pair<unsigned, Poly>> homogeneous_parts() const {
        std::map<unsigned, Poly> parts;
        for (const auto& [m, c] : terms_) {
            auto [it, fresh] = parts.try_emplace(m.degree(), ctx_);
            it->second.terms_.emplace(m, c);
        }
        std::vector<std::pair<unsigned, Poly>> out;
        out.reserve(parts.size());
        for (auto& [d, p] : parts) out.emplace_back(d, std::move(p));
        return out;
    }

    bool is_homogeneous() const {
        int d = -2;
        for (const auto& [m, c] : terms_) {
            if (d == -2) d = static_cast<int>(m.degree());
            else if (d != static_cast<int>(m.degree())) return false;
        }
        return true;
    }

    /// Leading term under a mathematical order.
    std::pair<Monomial, K> leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw input_error("leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.less(best->first, it->first)) best = it;
        return *best;
    }

    /// Divides every coefficient so the leading coefficient becomes 1.
    Poly monic(const MonomialOrder& ord) const {
        if (terms_.empty()) return *this;
        const K lc = leading_term(ord).second;
        if (lc.is_one()) return *this;
        Poly r(ctx_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / lc);
        return r;
    }

    K evaluate(const std::vector<K>& point) const {
        if (point.size() != ctx_->nvars()) throw input_error("evaluation point arity mismatch");
        K acc = coeff_one<K>(*ctx_);
        acc = acc - acc; // zero of the right field
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (unsigned e = 0; e < m[i]; ++e) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    /// Image under a variable reindexing into `target`: exponent of variable
    /// i moves to var_map[i] (var_map[i] == -1 demands a zero exponent).
    Poly map_variables(const RingPtr& target, const std::vector<int>& var_map) const {
        Poly r(target);
        for (const auto& [m, c] : terms_) {
            Monomial nm(target->nvars());
            for (std::size_t i = 0; i < ctx_->nvars(); ++i) {
                if (m[i] == 0) continue;
                if (var_map[i] < 0)
                    throw input_error("polynomial uses a variable absent from the target ring");
                nm[static_cast<std::size_t>(var_map[i])] = m[i];
            }
            r.terms_.emplace(nm, coeff_from_rat<K>(*target, to_rat(c)));
        }
        return r;
    }

    void add_term(const Monomial& m, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

private:
    static Rat to_rat(const Rat& r) { return r; }
    static Rat to_rat(const Fp& f) { return Rat(static_cast<long>(f.value())); }

    void check_ring(const Poly& o) const {
        if (!same_ring(ctx_, o.ctx_))
            throw input_error("polynomials from different ring contexts");
    }
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }

    RingPtr ctx_;
    TermMap terms_;
};

/// Lifts a polynomial into an extension of its ring whose first variables
/// coincide (the usual move before adding auxiliary variables).
template <class K>
Poly<K> lift(const Poly<K>& f, const RingPtr& ext) {
    std::vector<int> var_map(f.ring()->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
        const int j = ext->var_index(f.ring()->var(i));
        if (j < 0) throw input_error("target ring does not extend the source ring");
        var_map[i] = j;
    }
    return f.map_variables(ext, var_map);
}

} // namespace resint
