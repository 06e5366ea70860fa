#pragma once

#include <utility>
#include <vector>

#include "resint/groebner.hpp"
#include "resint/newton.hpp"

namespace resint {

/// Exponent vectors of a monomial ideal's generators. Rejects non-monomial
/// generators (typed error), the zero ideal and the unit ideal.
template <class K>
std::vector<Monomial> monomial_exponents(const Ideal<K>& a) {
    std::vector<Monomial> pts;
    for (const auto& g : a.gens()) {
        if (g.is_zero()) continue;
        if (!g.is_term())
            throw input_error("monomial-ideal operation applied to a non-monomial ideal");
        pts.push_back(g.terms().begin()->first);
    }
    if (pts.empty()) throw input_error("monomial-ideal operation on the zero ideal");
    for (const auto& p : pts)
        if (p.is_one()) throw input_error("monomial-ideal operation on the unit ideal");
    return pts;
}

template <class K>
NewtonPolyhedron newton_polyhedron(const Ideal<K>& a, Budget& budget) {
    return newton_polyhedron_core(monomial_exponents(a),
                                  static_cast<int>(a.ring()->nvars()), budget);
}

/// Log canonical threshold of a monomial ideal, exact via the Newton
/// polyhedron.
template <class K>
Rat lct_monomial(const Ideal<K>& a, Budget& budget) {
    return lct_from_polyhedron(newton_polyhedron(a, budget));
}

/// Generalized lct of (A, aX; lambda aZ) over toric valuations, by bounded
/// box search. lambda = 0 collapses to the lct and aZ is then allowed to be
/// trivial.
template <class K>
Rat glct_monomial(const Ideal<K>& aX, const Ideal<K>& aZ, const Rat& lambda, Budget& budget,
                  long box = 0) {
    if (lambda.sign() < 0) throw input_error("glct weight must be nonnegative");
    auto ptsX = minimalize_exponents(monomial_exponents(aX));
    if (lambda.is_zero()) return lct_monomial(aX, budget);
    auto ptsZ = minimalize_exponents(monomial_exponents(aZ));
    const int n = static_cast<int>(aX.ring()->nvars());
    if (box <= 0) box = default_weight_box({ptsX, ptsZ}, n);
    return glct_box_search(ptsX, ptsZ, lambda, n, box, budget);
}

/// Formal product a_1^{m_1} ... a_k^{m_k} of monomial ideals with exact
/// nonnegative rational exponents.
template <class K>
struct FormalProduct {
    RingPtr ctx;
    std::vector<std::pair<Ideal<K>, Rat>> factors;

    static FormalProduct make(RingPtr ctx, std::vector<std::pair<Ideal<K>, Rat>> factors) {
        FormalProduct p;
        p.ctx = std::move(ctx);
        for (auto& [ideal, m] : factors) {
            if (!same_ring(ideal.ring(), p.ctx))
                throw input_error("formal product factors must share one ring");
            if (m.sign() < 0) throw input_error("formal product exponents must be nonnegative");
            monomial_exponents(ideal); // validates monomial, nonzero, proper
        }
        p.factors = std::move(factors);
        return p;
    }
};

/// Minimal log discrepancy at the origin of the formal product, over toric
/// valuations.
template <class K>
MldResult mld_monomial_origin(const FormalProduct<K>& p, Budget& budget, long box = 0) {
    const int n = static_cast<int>(p.ctx->nvars());
    if (n < 1) throw input_error("mld needs a ring with at least one variable");
    std::vector<std::pair<std::vector<Monomial>, Rat>> factors;
    std::vector<std::vector<Monomial>> ptsets;
    for (const auto& [ideal, m] : p.factors) {
        auto pts = minimalize_exponents(monomial_exponents(ideal));
        ptsets.push_back(pts);
        factors.emplace_back(std::move(pts), m);
    }
    if (box <= 0) box = default_weight_box(ptsets, n);
    return mld_origin_core(factors, n, box, budget);
}

/// Howald's multiplier ideal J(a^c): monomials x^m with m + 1 interior to
/// c P(a).
template <class K>
Ideal<K> multiplier_ideal_monomial(const Ideal<K>& a, const Rat& c, Budget& budget) {
    if (c.sign() < 0) throw input_error("multiplier ideal exponent must be nonnegative");
    NewtonPolyhedron P = newton_polyhedron(a, budget);
    std::vector<Monomial> gens = multiplier_exponents(P, c, budget);
    std::vector<Poly<K>> polys;
    for (const auto& m : gens)
        polys.push_back(Poly<K>::term(a.ring(), m, coeff_one<K>(*a.ring())));
    return Ideal<K>(a.ring(), std::move(polys));
}

/// Minimal MJ-log discrepancy at the origin via inversion of adjunction:
/// mld_MJ(0; X, p) = mld(0; A, I_X^c * p) with c = codim X.
template <class K>
MldResult mldmj_origin_monomial(const Ideal<K>& I_X, const FormalProduct<K>& p, Budget& budget,
                                long box = 0) {
    monomial_exponents(I_X); // monomial, proper, nonzero; hence 0 in V(I_X)
    const KrullDim d = I_X.dimension(budget);
    if (d.empty) throw input_error("I_X is the unit ideal");
    std::vector<std::pair<Ideal<K>, Rat>> factors;
    factors.emplace_back(I_X, Rat(static_cast<long>(d.codim)));
    for (const auto& f : p.factors) factors.push_back(f);
    return mld_monomial_origin(FormalProduct<K>::make(I_X.ring(), std::move(factors)),
                               budget, box);
}

} // namespace resint
