#pragma once

#include <future>
#include <string>
#include <vector>

#include "resint/ideal_ops.hpp"
#include "resint/rng.hpp"

namespace resint {

/// A fixed generating set f_1..f_r of the ideal I_X of the variety X,
/// with its cached ideal handle and codimension.
template <class K>
struct GeneratorSystem {
    RingPtr ctx;
    std::vector<Poly<K>> gens; // f_1..f_r, order matters
    Ideal<K> ideal_x;
    int codim = 0; // c = codim V(I_X) >= 1

    static GeneratorSystem make(RingPtr ctx, std::vector<Poly<K>> gens, Budget& budget) {
        if (gens.empty()) throw input_error("generator system needs at least one polynomial");
        GeneratorSystem fs;
        fs.ctx = std::move(ctx);
        fs.ideal_x = Ideal<K>(fs.ctx, gens);
        fs.gens = std::move(gens);
        if (fs.ideal_x.is_zero_generated())
            throw input_error("the zero ideal admits no residual intersection");
        const KrullDim d = fs.ideal_x.dimension(budget);
        if (d.empty) throw input_error("I_X is the unit ideal; X is empty");
        if (d.codim < 1) throw input_error("X must have codimension at least 1");
        fs.codim = d.codim;
        return fs;
    }
};

/// The sampled t×r scalar matrix (c_ij) of a run. Entries are drawn
/// deterministically from the seed by SplitMix64 in row-major order:
/// over Q uniform integers in [-B, B], over F_p uniform field elements.
/// An explicitly forced matrix (test hook for degenerate choices) records
/// forced = true.
template <class K>
struct CoefficientMatrix {
    int t = 0, r = 0;
    std::uint64_t seed = 0;
    std::int64_t bound = 100;
    bool forced = false;
    std::vector<K> entries; // row-major, t*r

    const K& at(int i, int j) const { return entries[static_cast<std::size_t>(i * r + j)]; }

    static CoefficientMatrix sample(const RingContext& ctx, int t, int r, std::uint64_t seed,
                                    std::int64_t bound) {
        CoefficientMatrix m;
        m.t = t;
        m.r = r;
        m.seed = seed;
        m.bound = bound;
        SplitMix64 gen(seed);
        m.entries.reserve(static_cast<std::size_t>(t) * static_cast<std::size_t>(r));
        for (int i = 0; i < t * r; ++i) {
            if (ctx.field().kind == FieldKind::Rationals)
                m.entries.push_back(coeff_from_rat<K>(
                    ctx, Rat(static_cast<long>(gen.range(-bound, bound)))));
            else
                m.entries.push_back(coeff_from_rat<K>(
                    ctx, Rat(static_cast<long>(gen.below(
                             static_cast<std::uint64_t>(ctx.field().p))))));
        }
        return m;
    }

    static CoefficientMatrix force(int t, int r, std::vector<K> entries) {
        if (entries.size() != static_cast<std::size_t>(t) * static_cast<std::size_t>(r))
            throw input_error("forced matrix has the wrong shape");
        CoefficientMatrix m;
        m.t = t;
        m.r = r;
        m.forced = true;
        m.entries = std::move(entries);
        return m;
    }
};

template <class K>
struct Sections {
    CoefficientMatrix<K> matrix;
    std::vector<Poly<K>> sections; // a_i = sum_j c_ij f_j
    Ideal<K> ideal_m;              // (a_1,...,a_t)
    Ideal<K> ideal_h;              // (a_1 a_2 ... a_t)
};

/// The t general sections a_i = c_i1 f_1 + ... + c_ir f_r together with
/// I_M and the hypersurface ideal I_H = (a_1 ... a_t).
template <class K>
Sections<K> build_general_sections(const GeneratorSystem<K>& fs, int t,
                                   const CoefficientMatrix<K>& matrix) {
    if (t < fs.codim)
        throw input_error("t = " + std::to_string(t) + " is below codim X = " +
                          std::to_string(fs.codim) +
                          "; the construction requires t >= codim X");
    if (t > static_cast<int>(fs.ctx->nvars()))
        throw input_error("t exceeds the ambient dimension; codim Y = t is impossible");
    const int r = static_cast<int>(fs.gens.size());
    if (matrix.t != t || matrix.r != r) throw input_error("coefficient matrix shape mismatch");

    Sections<K> out;
    out.matrix = matrix;
    Poly<K> prod = Poly<K>::constant(fs.ctx, coeff_one<K>(*fs.ctx));
    for (int i = 0; i < t; ++i) {
        Poly<K> a = Poly<K>::zero(fs.ctx);
        for (int j = 0; j < r; ++j)
            a = a + fs.gens[static_cast<std::size_t>(j)].scaled(matrix.at(i, j));
        prod = prod * a;
        out.sections.push_back(std::move(a));
    }
    out.ideal_m = Ideal<K>(fs.ctx, out.sections);
    out.ideal_h = Ideal<K>(fs.ctx, {prod});
    return out;
}

template <class K>
Sections<K> build_general_sections(const GeneratorSystem<K>& fs, int t, std::uint64_t seed,
                                   std::int64_t bound = 100) {
    return build_general_sections(
        fs, t, CoefficientMatrix<K>::sample(*fs.ctx, t, static_cast<int>(fs.gens.size()),
                                            seed, bound));
}

/// I_Y = (I_M : I_X^inf), the ideal of the closure of M \ X. The
/// containment I_M ⊆ I_X is verified; a failure signals a caller bug.
template <class K>
Saturation<K> residual_closure(const Ideal<K>& I_M, const Ideal<K>& I_X, Budget& budget) {
    auto gbx = I_X.groebner(MonomialOrder::grevlex(), budget);
    for (const auto& a : I_M.gens())
        if (!normal_form(a, *gbx, budget).is_zero())
            throw input_error("I_M is not contained in I_X");
    return saturate(I_M, I_X, budget);
}

struct Prediction {
    bool nonempty = false;
    int dimV = 0; // dim k[f_1,...,f_r]
    bool cone = false;
};

/// Emptiness predictor: Y nonempty iff dim k[f] >= t (V not a cone) or
/// dim k[f] > t (V a cone).
template <class K>
Prediction predict_nonempty(const GeneratorSystem<K>& fs, int t, Budget& budget) {
    if (t < 1) throw input_error("t must be at least 1");
    auto imp = implicitize(fs.ctx, fs.gens, budget);
    if (imp.dim.empty) throw error("implicitization produced the unit ideal");
    Prediction p;
    p.dimV = imp.dim.dim;
    p.cone = imp.cone;
    p.nonempty = imp.cone ? (p.dimV > t) : (p.dimV >= t);
    return p;
}

/// Extends f_1..f_r by x_1 f_1, ..., x_N f_1. The generated ideal is
/// unchanged (asserted by mutual containment).
template <class K>
GeneratorSystem<K> augment_generators(const GeneratorSystem<K>& fs, Budget& budget) {
    std::vector<Poly<K>> gens = fs.gens;
    for (std::size_t i = 0; i < fs.ctx->nvars(); ++i)
        gens.push_back(Poly<K>::variable(fs.ctx, i) * fs.gens.front());
    GeneratorSystem<K> out = GeneratorSystem<K>::make(fs.ctx, std::move(gens), budget);
    if (!ideal_equal(fs.ideal_x, out.ideal_x, budget))
        throw error("augmentation changed the generated ideal");
    return out;
}

template <class K>
struct HuComparison {
    Ideal<K> colon_ideal; // J = (I_M : I_X), the Huneke-Ulrich residual
    bool ht_ok = false;   // codim J >= t >= codim I_X
    bool agrees = false;  // sqrt(J) = sqrt(I_Y), by mutual radical membership
};

template <class K>
HuComparison<K> hu_compare(const Ideal<K>& I_M, const Ideal<K>& I_X, const Ideal<K>& I_Y,
                           int t, Budget& budget) {
    HuComparison<K> out;
    out.colon_ideal = colon(I_M, I_X, budget);
    const KrullDim dj = out.colon_ideal.dimension(budget);
    const KrullDim dx = I_X.dimension(budget);
    const bool ht_j = dj.empty || dj.codim >= t; // unit ideal: height +inf
    out.ht_ok = ht_j && !dx.empty && t >= dx.codim;

    bool agrees = true;
    for (const auto& g : out.colon_ideal.gens())
        if (!radical_membership(g, I_Y, budget)) {
            agrees = false;
            break;
        }
    if (agrees)
        for (const auto& g : I_Y.gens())
            if (!radical_membership(g, out.colon_ideal, budget)) {
                agrees = false;
                break;
            }
    out.agrees = agrees;
    return out;
}

/// (J, ht_ok, agreement with the saturation closure); computes I_Y
/// internally.
template <class K>
HuComparison<K> hu_colon_residual(const Ideal<K>& I_M, const Ideal<K>& I_X, int t,
                                  Budget& budget) {
    Saturation<K> sat = residual_closure(I_M, I_X, budget);
    return hu_compare(I_M, I_X, sat.ideal, t, budget);
}

struct TrialOutcome {
    std::uint64_t seed = 0;
    bool empty = false;
    KrullDim dimY;

    bool matches(const TrialOutcome& o) const {
        return empty == o.empty && dimY == o.dimY;
    }
};

/// One full run of Construction 2.4-style sampling: sections, closure,
/// validity per the definition (codim Y = t >= codim X), the
/// Huneke-Ulrich comparison, and a stability report over derived seeds.
template <class K>
struct ResidualRun {
    GeneratorSystem<K> system;
    int t = 0;
    CoefficientMatrix<K> matrix;
    Ideal<K> ideal_m, ideal_h, ideal_y;
    int saturation_exponent = 0;
    KrullDim dimY;
    bool empty = false;
    bool valid = false; // empty, or codim Y == t
    HuComparison<K> hu;
    std::vector<TrialOutcome> trials; // derived seeds 1..trials
    bool stable = true;
};

template <class K>
TrialOutcome run_trial(const GeneratorSystem<K>& fs, int t, std::uint64_t seed,
                       std::int64_t bound, Budget& budget) {
    Sections<K> sec = build_general_sections(fs, t, seed, bound);
    Saturation<K> sat = residual_closure(sec.ideal_m, fs.ideal_x, budget);
    TrialOutcome out;
    out.seed = seed;
    out.empty = is_unit_ideal(sat.ideal, budget);
    out.dimY = sat.ideal.dimension(budget);
    return out;
}

template <class K>
ResidualRun<K> general_residual(const GeneratorSystem<K>& fs, int t, std::uint64_t seed,
                                int trials, Budget& budget, std::int64_t bound = 100) {
    if (trials < 1) throw input_error("at least one stability trial is required");

    ResidualRun<K> run;
    run.system = fs;
    run.t = t;

    Sections<K> sec = build_general_sections(fs, t, seed, bound);
    run.matrix = sec.matrix;
    run.ideal_m = sec.ideal_m;
    run.ideal_h = sec.ideal_h;

    Saturation<K> sat = residual_closure(sec.ideal_m, fs.ideal_x, budget);
    run.ideal_y = sat.ideal;
    run.saturation_exponent = sat.exponent;
    run.empty = is_unit_ideal(run.ideal_y, budget);
    run.dimY = run.ideal_y.dimension(budget);
    run.valid = run.empty || run.dimY.codim == t;

    run.hu = hu_compare(sec.ideal_m, fs.ideal_x, run.ideal_y, t, budget);

    // Stability: recompute (empty, dim, codim) for `trials` derived seeds.
    std::vector<std::future<TrialOutcome>> futures;
    futures.reserve(static_cast<std::size_t>(trials));
    for (int k = 1; k <= trials; ++k) {
        const std::uint64_t tseed = derive_seed(seed, static_cast<std::uint64_t>(k));
        futures.push_back(std::async(std::launch::async, [&fs, t, tseed, bound, &budget] {
            return run_trial(fs, t, tseed, bound, budget);
        }));
    }
    TrialOutcome primary{seed, run.empty, run.dimY};
    for (auto& f : futures) {
        TrialOutcome o = f.get();
        if (!o.matches(primary)) run.stable = false;
        run.trials.push_back(std::move(o));
    }
    return run;
}

struct SingularLocusReport {
    KrullDim sing_dim;           // dimension of V(I_Y + minors); empty marker possible
    int threshold = 0;           // t - c + 4
    bool bound_ok = false;       // codim_Y Sing(Y) >= threshold (empty locus: +inf)
    bool equidim_assumed = true; // Jacobian criterion assumes Y equidimensional
};

/// Prop-style singular locus bound check on a nonempty valid run: Sing(Y)
/// is cut out by I_Y plus the (codim Y)-minors of the Jacobian of the
/// reduced basis generators of I_Y. Equidimensionality of Y is assumed,
/// not verified.
template <class K>
SingularLocusReport singular_locus_check(const ResidualRun<K>& run, Budget& budget) {
    if (run.empty || !run.valid)
        throw input_error("singular locus check needs a nonempty valid run");
    auto gb = run.ideal_y.groebner(MonomialOrder::grevlex(), budget);
    Ideal<K> from_gb(run.ideal_y.ring(), gb->gens);
    Ideal<K> minors = jacobian_minors(from_gb, run.dimY.codim, budget);

    std::vector<Poly<K>> gens = gb->gens;
    gens.insert(gens.end(), minors.gens().begin(), minors.gens().end());
    Ideal<K> sing(run.ideal_y.ring(), std::move(gens));

    SingularLocusReport rep;
    rep.sing_dim = sing.dimension(budget);
    rep.threshold = run.t - run.system.codim + 4;
    rep.bound_ok = rep.sing_dim.empty ||
                   (run.dimY.dim - rep.sing_dim.dim) >= rep.threshold;
    return rep;
}

} // namespace resint
