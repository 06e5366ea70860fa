#pragma once

#include <string>
#include <vector>

#include "resint/groebner.hpp"

namespace resint {

/// Exact quotient f/g, or nullopt when g does not divide f. Multivariate
/// division by the single divisor g under grevlex.
template <class K>
std::optional<Poly<K>> divide_exact(const Poly<K>& f, const Poly<K>& g) {
    if (g.is_zero()) throw input_error("division by the zero polynomial");
    if (f.is_zero()) return Poly<K>::zero(f.ring());
    const MonomialOrder ord = MonomialOrder::grevlex();
    const auto [glm, glc] = g.leading_term(ord);
    auto work = detail::to_work(f, ord);
    Poly<K> quot(f.ring());
    while (!work.empty()) {
        const auto& [m, c] = *work.begin();
        if (!glm.divides(m)) return std::nullopt;
        const Monomial qm = glm.divide_into(m);
        const K qc = c / glc;
        for (const auto& [gm, gc] : g.terms()) detail::work_add_term(work, gm * qm, -(gc * qc));
        quot.add_term(qm, qc);
    }
    return quot;
}

/// Generators of I ∩ k[kept variables] via a block order with the
/// eliminated variables dominant.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, std::uint64_t keep_mask, Budget& budget) {
    const RingPtr& ctx = I.ring();
    const std::uint64_t all =
        ctx->nvars() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << ctx->nvars()) - 1);
    if (keep_mask & ~all) throw input_error("kept variables outside the ring");
    const std::uint64_t dominated = all & ~keep_mask;
    auto gb = I.groebner(MonomialOrder::elimination(dominated), budget);
    std::vector<Poly<K>> kept;
    for (const auto& g : gb->gens) {
        if (g.leading_term(gb->order).first.support() & dominated) continue;
        for (const auto& [m, c] : g.terms())
            if (m.support() & dominated)
                throw error("elimination order violated the block property");
        kept.push_back(g);
    }
    return Ideal<K>(ctx, std::move(kept));
}

/// I ∩ J through the auxiliary-variable construction t·I + (1-t)·J.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J, Budget& budget) {
    const RingPtr& ctx = I.ring();
    if (!same_ring(ctx, J.ring())) throw input_error("intersection across rings");
    RingPtr ext = ctx->extended({fresh_name(*ctx, "taux")});
    const std::size_t ti = ext->nvars() - 1;
    const Poly<K> t = Poly<K>::variable(ext, ti);
    const Poly<K> one_minus_t = Poly<K>::constant(ext, coeff_one<K>(*ext)) - t;

    std::vector<Poly<K>> gens;
    for (const auto& g : I.gens()) gens.push_back(t * lift(g, ext));
    for (const auto& g : J.gens()) gens.push_back(one_minus_t * lift(g, ext));
    Ideal<K> H(ext, std::move(gens));

    const std::uint64_t keep = (ext->nvars() == 64 ? ~std::uint64_t{0}
                                                   : ((std::uint64_t{1} << ext->nvars()) - 1)) &
                               ~(std::uint64_t{1} << ti);
    Ideal<K> E = eliminate(H, keep, budget);

    std::vector<int> var_map(ext->nvars(), -1);
    for (std::size_t i = 0; i < ctx->nvars(); ++i) var_map[i] = static_cast<int>(i);
    std::vector<Poly<K>> down;
    for (const auto& g : E.gens()) down.push_back(g.map_variables(ctx, var_map));
    return Ideal<K>(ctx, std::move(down));
}

/// Ideal quotient (I : J) = ∩_g (I : g) over the generators of J, each
/// single quotient read off from I ∩ <g> by exact division.
template <class K>
Ideal<K> colon(const Ideal<K>& I, const Ideal<K>& J, Budget& budget) {
    const RingPtr& ctx = I.ring();
    if (!same_ring(ctx, J.ring())) throw input_error("colon across rings");
    if (J.is_zero_generated()) throw input_error("colon by the zero ideal");

    bool first = true;
    Ideal<K> acc;
    for (const auto& g : J.gens()) {
        if (g.is_zero()) continue;
        Ideal<K> meet = intersect(I, Ideal<K>(ctx, {g}), budget);
        std::vector<Poly<K>> quots;
        for (const auto& h : meet.gens()) {
            auto q = divide_exact(h, g);
            if (!q) throw error("member of I ∩ <g> not divisible by g");
            if (!q->is_zero()) quots.push_back(*q);
        }
        Ideal<K> part(ctx, std::move(quots));
        acc = first ? part : intersect(acc, part, budget);
        first = false;
    }
    return acc;
}

struct SaturationOptions {
    bool crosscheck = true; // verify against the auxiliary-variable method
    int max_exponent = 50;
};

/// (I : g^inf) by the Rabinowitsch construction: adjoin z, saturate with
/// 1 - z g, eliminate z.
template <class K>
Ideal<K> saturate_single_aux(const Ideal<K>& I, const Poly<K>& g, Budget& budget) {
    const RingPtr& ctx = I.ring();
    RingPtr ext = ctx->extended({fresh_name(*ctx, "zsat")});
    const std::size_t zi = ext->nvars() - 1;
    std::vector<Poly<K>> gens;
    for (const auto& h : I.gens()) gens.push_back(lift(h, ext));
    gens.push_back(Poly<K>::constant(ext, coeff_one<K>(*ext)) -
                   Poly<K>::variable(ext, zi) * lift(g, ext));
    Ideal<K> H(ext, std::move(gens));
    const std::uint64_t keep = (ext->nvars() == 64 ? ~std::uint64_t{0}
                                                   : ((std::uint64_t{1} << ext->nvars()) - 1)) &
                               ~(std::uint64_t{1} << zi);
    Ideal<K> E = eliminate(H, keep, budget);
    std::vector<int> var_map(ext->nvars(), -1);
    for (std::size_t i = 0; i < ctx->nvars(); ++i) var_map[i] = static_cast<int>(i);
    std::vector<Poly<K>> down;
    for (const auto& h : E.gens()) down.push_back(h.map_variables(ctx, var_map));
    return Ideal<K>(ctx, std::move(down));
}

/// (I : J^inf) via the auxiliary-variable method: the intersection of the
/// single-generator saturations.
template <class K>
Ideal<K> saturate_aux_method(const Ideal<K>& I, const Ideal<K>& J, Budget& budget) {
    bool first = true;
    Ideal<K> acc;
    for (const auto& g : J.gens()) {
        if (g.is_zero()) continue;
        Ideal<K> part = saturate_single_aux(I, g, budget);
        acc = first ? part : intersect(acc, part, budget);
        first = false;
    }
    if (first) throw input_error("saturation by the zero ideal");
    return acc;
}

template <class K>
struct Saturation {
    Ideal<K> ideal;
    int exponent = 0; // first s with (I : J^s) = (I : J^{s+1})
};

/// Saturation (I : J^inf) by iterated colon, with the stabilization
/// exponent. Cross-checked against the auxiliary-variable route unless
/// disabled.
template <class K>
Saturation<K> saturate(const Ideal<K>& I, const Ideal<K>& J, Budget& budget,
                       const SaturationOptions& opts = {}) {
    if (J.is_zero_generated()) throw input_error("saturation by the zero ideal");
    Ideal<K> cur = I;
    int s = 0;
    for (;;) {
        if (s >= opts.max_exponent)
            throw budget_error("saturation did not stabilize within " +
                               std::to_string(opts.max_exponent) + " steps");
        Ideal<K> next = colon(cur, J, budget);
        // cur ⊆ next always; stability needs only next ⊆ cur.
        bool stable = true;
        auto gb = cur.groebner(MonomialOrder::grevlex(), budget);
        for (const auto& g : next.gens())
            if (!normal_form(g, *gb, budget).is_zero()) {
                stable = false;
                break;
            }
        if (stable) break;
        cur = next;
        ++s;
    }
    if (opts.crosscheck) {
        Ideal<K> other = saturate_aux_method(I, J, budget);
        if (!ideal_equal(cur, other, budget))
            throw error("saturation cross-check failed: iterated colon and "
                        "auxiliary-variable methods disagree");
    }
    return Saturation<K>{cur, s};
}

/// I^k, generated by all k-fold products of generators.
template <class K>
Ideal<K> ideal_power(const Ideal<K>& I, int k, Budget& budget) {
    if (k < 1) throw input_error("ideal power needs a positive exponent");
    const auto& gens = I.gens();
    std::vector<Poly<K>> out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    if (gens.empty()) return Ideal<K>::zero(I.ring());
    for (;;) {
        budget.charge(1, "ideal power products");
        Poly<K> prod = gens[pick[0]];
        for (int i = 1; i < k; ++i) prod = prod * gens[pick[static_cast<std::size_t>(i)]];
        out.push_back(prod);
        // next multiset (non-decreasing index tuples)
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] + 1 == gens.size()) --i;
        if (i < 0) break;
        const std::size_t v = pick[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < k; ++j) pick[static_cast<std::size_t>(j)] = v;
    }
    return Ideal<K>(I.ring(), std::move(out));
}

namespace detail {

template <class K>
Poly<K> poly_det(const std::vector<std::vector<Poly<K>>>& m, std::vector<std::size_t> rows,
                 std::vector<std::size_t> cols, const RingPtr& ctx) {
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    Poly<K> acc = Poly<K>::zero(ctx);
    std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (m[rows[0]][cols[j]].is_zero()) continue;
        std::vector<std::size_t> subcols;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != j) subcols.push_back(cols[t]);
        Poly<K> minor = poly_det(m, subrows, subcols, ctx);
        Poly<K> contrib = m[rows[0]][cols[j]] * minor;
        acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

inline void next_combination_done(std::vector<std::size_t>& comb, std::size_t n, bool& done) {
    const std::size_t k = comb.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (comb[i] + (k - i) < n + 0) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return;
        }
    }
    done = true;
}

} // namespace detail

/// Ideal of all size×size minors of the Jacobian matrix (∂g_i/∂x_j) of the
/// generators.
template <class K>
Ideal<K> jacobian_minors(const Ideal<K>& I, int size, Budget& budget) {
    const RingPtr& ctx = I.ring();
    const std::size_t rows = I.gens().size();
    const std::size_t cols = ctx->nvars();
    if (size < 1 || static_cast<std::size_t>(size) > std::min(rows, cols))
        throw input_error("minor size out of range");

    std::vector<std::vector<Poly<K>>> jac(rows, std::vector<Poly<K>>(cols, Poly<K>::zero(ctx)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) jac[i][j] = I.gens()[i].differentiate(j);

    const std::size_t k = static_cast<std::size_t>(size);
    std::vector<Poly<K>> minors;
    std::vector<std::size_t> rsel(k), csel(k);
    for (std::size_t i = 0; i < k; ++i) rsel[i] = i;
    bool rdone = false;
    while (!rdone) {
        for (std::size_t i = 0; i < k; ++i) csel[i] = i;
        bool cdone = false;
        while (!cdone) {
            budget.charge(1, "jacobian minors");
            minors.push_back(detail::poly_det(jac, rsel, csel, ctx));
            detail::next_combination_done(csel, cols, cdone);
        }
        detail::next_combination_done(rsel, rows, rdone);
    }
    return Ideal<K>(ctx, std::move(minors));
}

/// Defining ideal of the closure of the image of the map given by `fs`,
/// with its dimension and cone test: the computational face of
/// V = Spec k[f_1,...,f_r].
template <class K>
struct ImplicitizationResult {
    RingPtr image_ring;   // fresh u_1..u_r over the same field
    Ideal<K> image_ideal; // elimination ideal, living in image_ring
    KrullDim dim;         // Krull dimension of k[u]/ker = dim of the closure
    bool cone = false;    // ideal homogeneous <=> V is a cone
};

template <class K>
ImplicitizationResult<K> implicitize(const RingPtr& ctx, const std::vector<Poly<K>>& fs,
                                     Budget& budget) {
    if (fs.empty()) throw input_error("implicitization needs at least one polynomial");
    for (const auto& f : fs)
        if (!same_ring(f.ring(), ctx)) throw input_error("map components from different rings");

    const std::size_t n = ctx->nvars(), r = fs.size();
    if (n + r > 64) throw input_error("implicitization exceeds the 64 variable limit");
    std::vector<std::string> unames;
    std::vector<std::string> allvars = ctx->vars();
    for (std::size_t j = 0; j < r; ++j) {
        std::string base = "u" + std::to_string(j + 1);
        while (std::find(allvars.begin(), allvars.end(), base) != allvars.end()) base += "_";
        unames.push_back(base);
        allvars.push_back(base);
    }
    RingPtr big = RingContext::make(allvars, ctx->field());
    RingPtr image = RingContext::make(unames, ctx->field());

    std::vector<Poly<K>> gens;
    for (std::size_t j = 0; j < r; ++j)
        gens.push_back(Poly<K>::variable(big, n + j) - lift(fs[j], big));
    Ideal<K> graph(big, std::move(gens));

    std::uint64_t keep = 0;
    for (std::size_t j = 0; j < r; ++j) keep |= (std::uint64_t{1} << (n + j));
    Ideal<K> elim = eliminate(graph, keep, budget);

    std::vector<int> var_map(big->nvars(), -1);
    for (std::size_t j = 0; j < r; ++j) var_map[n + j] = static_cast<int>(j);
    std::vector<Poly<K>> down;
    for (const auto& g : elim.gens()) down.push_back(g.map_variables(image, var_map));
    Ideal<K> image_ideal(image, std::move(down));

    ImplicitizationResult<K> res;
    res.image_ring = image;
    res.dim = image_ideal.dimension(budget);
    res.cone = is_homogeneous_ideal(image_ideal, budget);
    res.image_ideal = std::move(image_ideal);
    return res;
}

} // namespace resint
