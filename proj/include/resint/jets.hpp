#pragma once

#include <future>
#include <vector>

#include "resint/groebner.hpp"

namespace resint {

/// Ring of level-m jet coordinates x_i^{(0..m)}. The base variable named
/// `x` contributes variables x_0,...,x_m; variable i, level j sits at index
/// i*(m+1)+j.
inline RingPtr jet_ring(const RingContext& base, int level) {
    std::vector<std::string> vars;
    for (const auto& name : base.vars())
        for (int j = 0; j <= level; ++j) vars.push_back(name + "_" + std::to_string(j));
    try {
        return RingContext::make(std::move(vars), base.field());
    } catch (const input_error&) {
        throw input_error("jet variable names collide with ring variables; "
                          "avoid base names of the form x_0, x_1, ...");
    }
}

constexpr int kDefaultJetVariableCap = 40;

/// Equations of the level-m jet scheme of V(I): substitute the truncated
/// arcs x_i(eps) = sum_j x_i^{(j)} eps^j into each generator and collect
/// the coefficients of eps^0..eps^m.
template <class K>
Ideal<K> jet_ideal(const Ideal<K>& I, int level, Budget& budget,
                   int variable_cap = kDefaultJetVariableCap) {
    if (level < 0) throw input_error("jet level must be nonnegative");
    const RingContext& base = *I.ring();
    const std::size_t jet_vars = base.nvars() * static_cast<std::size_t>(level + 1);
    if (jet_vars > static_cast<std::size_t>(variable_cap))
        throw budget_error("jet ring needs " + std::to_string(jet_vars) +
                           " variables, above the cap of " + std::to_string(variable_cap));
    RingPtr ring = jet_ring(base, level);

    using Series = std::vector<Poly<K>>; // coefficients of eps^0..eps^level
    auto zero_series = [&]() { return Series(static_cast<std::size_t>(level + 1), Poly<K>::zero(ring)); };
    auto var_series = [&](std::size_t i) {
        Series s = zero_series();
        for (int j = 0; j <= level; ++j)
            s[static_cast<std::size_t>(j)] =
                Poly<K>::variable(ring, i * static_cast<std::size_t>(level + 1) +
                                            static_cast<std::size_t>(j));
        return s;
    };
    auto mul = [&](const Series& a, const Series& b) {
        Series c = zero_series();
        for (int i = 0; i <= level; ++i) {
            if (a[static_cast<std::size_t>(i)].is_zero()) continue;
            for (int j = 0; i + j <= level; ++j) {
                if (b[static_cast<std::size_t>(j)].is_zero()) continue;
                budget.charge(1, "jet series products");
                c[static_cast<std::size_t>(i + j)] =
                    c[static_cast<std::size_t>(i + j)] +
                    a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            }
        }
        return c;
    };

    std::vector<Poly<K>> equations;
    for (const auto& f : I.gens()) {
        if (f.is_zero()) continue;
        Series total = zero_series();
        for (const auto& [mono, coef] : f.terms()) {
            Series term = zero_series();
            term[0] = Poly<K>::constant(ring, coef);
            for (std::size_t i = 0; i < base.nvars(); ++i)
                for (unsigned e = 0; e < mono[i]; ++e) term = mul(term, var_series(i));
            for (int j = 0; j <= level; ++j)
                total[static_cast<std::size_t>(j)] =
                    total[static_cast<std::size_t>(j)] + term[static_cast<std::size_t>(j)];
        }
        for (int j = 0; j <= level; ++j)
            equations.push_back(std::move(total[static_cast<std::size_t>(j)]));
    }
    return Ideal<K>(ring, std::move(equations));
}

struct JetLevelReport {
    int level = 0;
    int jet_vars = 0;
    KrullDim dim;           // of the level-m jet scheme
    Rat normalized_codim;   // c_m = codim / (m+1)
    bool computed = false;
};

struct JetEstimate {
    Rat estimate;           // min over completed levels of c_m (upper bound on lct)
    int min_level = 0;      // first level attaining the minimum
    std::vector<JetLevelReport> levels;
    bool complete = true;   // false when some level hit a budget and was skipped
};

/// Jet-level lct estimator: min over 0 <= m <= Mmax of
/// codim(Jet_m(V(I)))/(m+1). The result is an upper bound on lct(A, V(I))
/// and is exact once the true minimizing level is within reach. Levels run
/// as independent tasks, each with its own budget of `level_budget_limit`
/// steps so partial results are deterministic.
template <class K>
JetEstimate lct_jet_estimate(const Ideal<K>& I, int max_level, Budget& budget,
                             int variable_cap = kDefaultJetVariableCap) {
    if (max_level < 0) throw input_error("jet estimate needs Mmax >= 0");
    if (I.is_zero_generated()) throw input_error("jet estimate of the zero ideal");
    if (is_unit_ideal(I, budget)) throw input_error("jet estimate of the unit ideal");

    const std::uint64_t per_level = budget.limit();
    auto level_task = [&I, variable_cap, per_level](int m) {
        JetLevelReport rep;
        rep.level = m;
        rep.jet_vars = static_cast<int>(I.ring()->nvars()) * (m + 1);
        Budget local(per_level);
        Ideal<K> jm = jet_ideal(I, m, local, variable_cap);
        rep.dim = jm.dimension(local);
        if (rep.dim.empty) throw error("jet scheme of a proper ideal is never empty");
        rep.normalized_codim = Rat(rep.dim.codim, m + 1);
        rep.computed = true;
        return rep;
    };

    std::vector<std::future<JetLevelReport>> futures;
    for (int m = 0; m <= max_level; ++m)
        futures.push_back(std::async(std::launch::async, level_task, m));

    JetEstimate out;
    bool any = false;
    for (auto& fut : futures) {
        JetLevelReport rep;
        try {
            rep = fut.get();
        } catch (const budget_error&) {
            out.complete = false;
            continue;
        }
        if (!any || rep.normalized_codim < out.estimate) {
            out.estimate = rep.normalized_codim;
            out.min_level = rep.level;
            any = true;
        }
        out.levels.push_back(rep);
    }
    if (!any) throw budget_error("every jet level exceeded its budget or variable cap");
    return out;
}

/// The same ideal over F_p (the default ground field for jet computations).
inline Ideal<Fp> to_prime_field(const Ideal<Rat>& I, std::int64_t p) {
    RingPtr ring = I.ring()->with_field(FieldSpec::prime_field(p));
    std::vector<int> id_map(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) id_map[i] = static_cast<int>(i);
    std::vector<Poly<Fp>> gens;
    for (const auto& g : I.gens()) {
        Poly<Fp> h(ring);
        for (const auto& [m, c] : g.terms()) h.add_term(m, coeff_from_rat<Fp>(*ring, c));
        gens.push_back(std::move(h));
    }
    return Ideal<Fp>(ring, std::move(gens));
}

constexpr std::int64_t kDefaultJetPrime = 32003;

} // namespace resint
