#pragma once

#include <optional>
#include <vector>

#include "resint/budget.hpp"
#include "resint/coeff.hpp"
#include "resint/ring.hpp"

namespace resint {

/// Newton polyhedron P(a) = conv(exponents) + R^n_{>=0} of a monomial
/// ideal, described by its generating exponent points and the facet
/// inequalities <w, u> >= 1 with w rational nonnegative. The coordinate
/// facets u_i >= 0 are implicit; they never carry threshold data.
struct NewtonPolyhedron {
    int n = 0;
    std::vector<Monomial> points;          // minimal generating exponents
    std::vector<std::vector<Rat>> facets;  // normals w, normalized to <w,u> >= 1
};

/// Drops exponent points divisible by another point (they generate nothing).
std::vector<Monomial> minimalize_exponents(std::vector<Monomial> points);

/// Exact facet enumeration from (n-1)-subsets of generating points plus
/// coordinate directions, each candidate validated by nonnegativity,
/// feasibility and tightness at n affinely independent elements.
/// Supports n <= 6.
NewtonPolyhedron newton_polyhedron_core(std::vector<Monomial> points, int n, Budget& budget);

/// lct = max{c : the all-ones vector lies in c P(a)} = min over facets of
/// sum_j w_j.
Rat lct_from_polyhedron(const NewtonPolyhedron& P);

/// Exponents m with m + 1 in the interior of c P(a): the Howald generators
/// of the multiplier ideal. Minimal generators only, found in an exact
/// per-coordinate search box.
std::vector<Monomial> multiplier_exponents(const NewtonPolyhedron& P, const Rat& c,
                                           Budget& budget);

/// min_u <v, u> over the exponents of a monomial ideal: the toric valuation
/// of the ideal at weight v.
Rat toric_valuation(const std::vector<Monomial>& points, const std::vector<long>& v);

/// Generalized lct over toric valuations: min over v in [1,B]^n of
/// (sum v + lambda * v(aZ)) / v(aX). The objective is invariant under
/// v -> kv, so small boxes see every optimum direction the corpus needs.
Rat glct_box_search(const std::vector<Monomial>& ptsX, const std::vector<Monomial>& ptsZ,
                    const Rat& lambda, int n, long box, Budget& budget);

struct MldResult {
    bool minus_infinity = false;
    Rat value;            // meaningful when not minus infinity
    long box_bound = 0;   // search box actually used
    bool certified = false; // true when the reported value is provably global
    Rat lower_bound;      // exact real relaxation minimum (when computed)
};

/// mld at the origin of the formal product prod a_i^{m_i}: the infimum over
/// toric weights v >= 1 of g(v) = sum v - sum m_i v(a_i). g is convex and
/// 1-homogeneous, so any negative value certifies minus infinity. The
/// integer minimum is searched in [1,B]^n; an exact Fourier-Motzkin
/// relaxation bound certifies global minima when it matches.
MldResult mld_origin_core(const std::vector<std::pair<std::vector<Monomial>, Rat>>& factors,
                          int n, long box, Budget& budget);

/// Default search box 4(n + max generator degree), per the documented
/// heuristic for piecewise-linear 1-homogeneous objectives.
long default_weight_box(const std::vector<std::vector<Monomial>>& point_sets, int n);

} // namespace resint
