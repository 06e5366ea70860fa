#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <tuple>
#include <cstdio>
#include <cstdlib>
#include <utility>
#include <vector>

#include "resint/budget.hpp"
#include "resint/polynomial.hpp"

namespace resint {

/// Reduced Groebner basis of an ideal for a fixed monomial order. Elements
/// are monic, mutually irreducible and sorted by leading monomial, so the
/// representation is unique for (ideal, order).
template <class K>
struct GroebnerBasis {
    RingPtr ctx;
    MonomialOrder order;
    std::vector<Poly<K>> gens; // reduced; empty for the zero ideal
    bool reduced = true;

    bool is_unit() const {
        return gens.size() == 1 && gens.front().is_constant() && !gens.front().is_zero();
    }
    bool is_zero_ideal() const { return gens.empty(); }
};

namespace detail {

template <class K>
using Term = std::pair<Monomial, K>;

/// Terms sorted descending under the active order; the representation used
/// inside division loops.
template <class K>
std::vector<Term<K>> sorted_terms(const Poly<K>& f, const MonomialOrder& ord) {
    std::vector<Term<K>> t(f.terms().begin(), f.terms().end());
    std::sort(t.begin(), t.end(), [&](const Term<K>& a, const Term<K>& b) {
        return ord.cmp(a.first, b.first) > 0;
    });
    return t;
}

struct OrderDesc {
    MonomialOrder ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord.cmp(a, b) > 0; }
};

template <class K>
using WorkPoly = std::map<Monomial, K, OrderDesc>;

template <class K>
WorkPoly<K> to_work(const Poly<K>& f, const MonomialOrder& ord) {
    WorkPoly<K> w{OrderDesc{ord}};
    for (const auto& t : f.terms()) w.insert(t);
    return w;
}

template <class K>
void work_add_term(WorkPoly<K>& w, const Monomial& m, const K& c) {
    if (c.is_zero()) return;
    auto it = w.find(m);
    if (it == w.end()) {
        w.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) w.erase(it);
}

/// Basis element with cached leading data and its sugar degree (the
/// virtual homogenized degree driving pair selection). Over Q elements are
/// kept primitive (integer coefficients, content 1, positive leading
/// coefficient); over F_p they are monic.
template <class K>
struct BasisElem {
    std::vector<Term<K>> terms; // descending, terms[0] is the leading term
    long sugar = 0;
    const Monomial& lm() const { return terms.front().first; }
    const K& lc() const { return terms.front().second; }
};

template <class K>
BasisElem<K> make_elem(const Poly<K>& f, const MonomialOrder& ord, long sugar = -1) {
    return BasisElem<K>{sorted_terms(f, ord), sugar >= 0 ? sugar : f.total_degree()};
}

/// Content-free integer form with positive leading coefficient; the
/// scale-normalization that keeps reduction over Q in machine-friendly
/// integers.
inline Poly<Rat> primitive_part(const Poly<Rat>& f, const MonomialOrder& ord) {
    if (f.is_zero()) return f;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : f.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& [m, c] : f.terms()) {
        mpz_class scaled = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    mpq_class factor(den_lcm, num_gcd);
    factor.canonicalize();
    Poly<Rat> out = f.scaled(Rat(factor));
    if (out.leading_term(ord).second.sign() < 0) out = -out;
    return out;
}

template <class K>
Poly<K> scale_normalize(const Poly<K>& f, const MonomialOrder& ord) {
    if constexpr (std::is_same_v<K, Rat>) return primitive_part(f, ord);
    else return f.monic(ord);
}

/// work -= coef * mono * g. One reduction step; the caller charges budget.
template <class K>
void subtract_multiple(WorkPoly<K>& w, const K& coef, const Monomial& mono,
                       const BasisElem<K>& g) {
    for (const auto& [m, c] : g.terms) work_add_term(w, m * mono, -(c * coef));
}

/// Division of f by a reducer list. Over Q the work polynomial is kept as a
/// primitive integer polynomial: each step scales by lc(g)/gcd instead of
/// dividing, and contents are stripped as they appear; the accumulated
/// scalar is tracked so the exact remainder of the original input can be
/// recovered. Reducers are tried in list order, which together with the
/// ordered work map makes the result deterministic.
template <class K>
class Division {
public:
    Division(WorkPoly<K> w, std::vector<const BasisElem<K>*> basis, Budget& budget,
             long sugar = 0)
        : w_(std::move(w)), rem_(w_.key_comp()), basis_(std::move(basis)), budget_(budget),
          sugar_(sugar) {
        if constexpr (std::is_same_v<K, Rat>) normalize_input();
    }

    /// Runs the division; remainder is valid up to the tracked scalar.
    void run() {
        while (!w_.empty()) {
            const Monomial m = w_.begin()->first;
            // Among admissible reducers prefer the one with fewest terms
            // (a classic guard against intermediate coefficient swell),
            // then earliest position for determinism.
            const BasisElem<K>* reducer = nullptr;
            for (const auto* g : basis_)
                if (g->lm().divides(m) &&
                    (!reducer || g->terms.size() < reducer->terms.size()))
                    reducer = g;
            if (!reducer) {
                rem_.insert(*w_.begin());
                w_.erase(w_.begin());
                continue;
            }
            budget_.charge();
            sugar_ = std::max(sugar_,
                              reducer->sugar +
                                  static_cast<long>(reducer->lm().divide_into(m).degree()));
            step(*reducer, m);
        }
    }

    long sugar() const { return sugar_; }

    /// Remainder scaled back to the exact division remainder of the input.
    Poly<K> exact_remainder(const RingPtr& ctx) {
        run();
        typename Poly<K>::TermMap t(rem_.begin(), rem_.end());
        Poly<K> r(ctx, std::move(t));
        if constexpr (std::is_same_v<K, Rat>) {
            if (!scale_.is_one()) r = r.scaled(scale_.inverse());
        }
        return r;
    }

    /// Remainder up to a nonzero scalar (what Buchberger needs internally).
    WorkPoly<K> scaled_remainder() {
        run();
        return std::move(rem_);
    }

private:
    void step(const BasisElem<K>& g, const Monomial& m) {
        if constexpr (std::is_same_v<K, Rat>) {
            // alpha w - beta (m/lm g) g with alpha = lc(g)/d, beta = c/d,
            // d = gcd(c, lc(g)); everything stays integer.
            const mpz_class c = w_.begin()->second.num();
            const mpz_class lcg = g.lc().num();
            mpz_class d;
            mpz_gcd(d.get_mpz_t(), c.get_mpz_t(), lcg.get_mpz_t());
            mpz_class alpha_z = lcg / d;
            if (alpha_z < 0) alpha_z = -alpha_z; // keep orientation stable
            const Rat alpha = Rat(alpha_z);
            const Rat beta = Rat(mpz_class(c / d)) * (lcg < 0 ? Rat(-1) : Rat(1));
            if (!alpha.is_one()) {
                for (auto& [mm, vv] : w_) vv *= alpha;
                for (auto& [mm, vv] : rem_) vv *= alpha;
                scale_ *= alpha;
            }
            subtract_multiple(w_, beta, g.lm().divide_into(m), g);
            ++steps_;
            strip_content();
        } else {
            subtract_multiple(w_, w_.begin()->second / g.lc(), g.lm().divide_into(m), g);
        }
    }

    void normalize_input() {
        if (w_.empty()) return;
        mpz_class den_lcm = 1, num_gcd = 0;
        for (const auto& [m, c] : w_)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        for (const auto& [m, c] : w_) {
            mpz_class scaled = c.num() * (den_lcm / c.den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
        if (num_gcd == 0) return;
        mpq_class factor(den_lcm, num_gcd);
        factor.canonicalize();
        if (factor == 1) return;
        apply_factor(Rat(factor));
    }

    void strip_content() {
        mpz_class num_gcd = 0;
        auto scan = [&](const WorkPoly<K>& p) {
            for (const auto& [m, c] : p)
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        };
        scan(w_);
        scan(rem_);
        if (num_gcd == 0 || num_gcd == 1) return;
        mpq_class factor(1, num_gcd);
        factor.canonicalize();
        apply_factor(Rat(factor));
    }

    void apply_factor(const Rat& f) {
        if constexpr (std::is_same_v<K, Rat>) {
            for (auto& [m, c] : w_) c *= f;
            for (auto& [m, c] : rem_) c *= f;
            scale_ *= f;
        }
    }

    WorkPoly<K> w_;
    WorkPoly<K> rem_;
    std::vector<const BasisElem<K>*> basis_;
    Budget& budget_;
    Rat scale_ = Rat(1);
    long sugar_ = 0;
    unsigned steps_ = 0;
};

template <class K>
std::vector<const BasisElem<K>*> basis_view(const std::vector<BasisElem<K>>& basis) {
    std::vector<const BasisElem<K>*> view;
    view.reserve(basis.size());
    for (const auto& g : basis) view.push_back(&g);
    return view;
}

template <class K>
WorkPoly<K> normal_form_work(WorkPoly<K> w, const std::vector<BasisElem<K>>& basis,
                             Budget& budget) {
    Division<K> div(std::move(w), basis_view(basis), budget);
    return div.scaled_remainder();
}

template <class K>
Poly<K> from_work(const RingPtr& ctx, const WorkPoly<K>& w) {
    typename Poly<K>::TermMap t(w.begin(), w.end());
    return Poly<K>(ctx, std::move(t));
}

} // namespace detail

/// Remainder of f on division by the basis; zero exactly when f lies in the
/// ideal the basis generates.
template <class K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& gb, Budget& budget) {
    if (!same_ring(f.ring(), gb.ctx)) throw input_error("normal form in a different ring");
    std::vector<detail::BasisElem<K>> basis;
    basis.reserve(gb.gens.size());
    for (const auto& g : gb.gens)
        basis.push_back(detail::make_elem(detail::scale_normalize(g, gb.order), gb.order));
    detail::Division<K> div(detail::to_work(f, gb.order), detail::basis_view(basis), budget);
    return div.exact_remainder(f.ring());
}

/// Buchberger with the product and chain pair-elimination criteria, the
/// sugar selection strategy and a degree-ordered pair queue. Deterministic:
/// ties break on the pair's lcm under the order, then on indices.
template <class K>
GroebnerBasis<K> buchberger(const RingPtr& ctx, const std::vector<Poly<K>>& gens,
                            const MonomialOrder& ord, Budget& budget) {
    using detail::BasisElem;

    std::vector<BasisElem<K>> basis;
    std::vector<Poly<K>> polys;
    std::vector<char> redundant;
    auto push = [&](const Poly<K>& f, long sugar) {
        Poly<K> m = detail::scale_normalize(f, ord);
        const Monomial lm = m.leading_term(ord).first;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!redundant[i] && lm.divides(basis[i].lm())) redundant[i] = 1;
        polys.push_back(m);
        basis.push_back(detail::make_elem(m, ord, sugar));
        redundant.push_back(0);
    };
    for (const auto& g : gens)
        if (!g.is_zero()) push(g, g.total_degree());

    auto reducer_view = [&]() {
        std::vector<const BasisElem<K>*> view;
        view.reserve(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!redundant[i]) view.push_back(&basis[i]);
        return view;
    };

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        unsigned deg;
        long sugar;
    };
    std::vector<Pair> pending;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = basis[i].lm().lcm(basis[j].lm());
            const long sugar =
                std::max(basis[i].sugar +
                             static_cast<long>(basis[i].lm().divide_into(l).degree()),
                         basis[j].sugar +
                             static_cast<long>(basis[j].lm().divide_into(l).degree()));
            pending.push_back(Pair{i, j, l, l.degree(), sugar});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

    std::set<std::pair<std::size_t, std::size_t>> in_queue;
    for (const auto& p : pending) in_queue.insert({p.i, p.j});

    auto pop_best = [&]() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[best];
            int c = 0;
            if (a.sugar != b.sugar) c = a.sugar < b.sugar ? -1 : 1;
            else if (a.deg != b.deg) c = a.deg < b.deg ? -1 : 1;
            else c = ord.cmp(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
        }
        Pair p = pending[best];
        pending.erase(pending.begin() + static_cast<long>(best));
        in_queue.erase({p.i, p.j});
        return p;
    };

    auto chain_criterion = [&](const Pair& p) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].lm().divides(p.lcm)) continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(p.j, k);
            if (!in_queue.count({key1.first, key1.second}) &&
                !in_queue.count({key2.first, key2.second}))
                return true;
        }
        return false;
    };

    [[maybe_unused]] std::size_t pops = 0;
    const bool trace = std::getenv("RESINT_GB_TRACE") != nullptr;
    while (!pending.empty()) {
        budget.charge();
        const Pair p = pop_best();
        if (trace && ++pops % 50 == 0)
            std::fprintf(stderr, "[gb] pops=%zu basis=%zu pending=%zu used=%llu\n", pops,
                         basis.size(), pending.size(),
                         static_cast<unsigned long long>(budget.used()));
        if (basis[p.i].lm().coprime(basis[p.j].lm())) continue; // product criterion
        if (chain_criterion(p)) continue;

        // Fraction-free S-polynomial: lc(g_j) (lcm/lm_i) g_i - lc(g_i) (lcm/lm_j) g_j.
        detail::WorkPoly<K> s{detail::OrderDesc{ord}};
        detail::subtract_multiple(s, -basis[p.j].lc(),
                                  basis[p.i].lm().divide_into(p.lcm), basis[p.i]);
        detail::subtract_multiple(s, basis[p.i].lc(),
                                  basis[p.j].lm().divide_into(p.lcm), basis[p.j]);

        detail::Division<K> div(std::move(s), reducer_view(), budget, p.sugar);
        auto rem = div.scaled_remainder();
        if (rem.empty()) continue;
        push(detail::from_work(ctx, rem), div.sugar());
        add_pairs_for(basis.size() - 1);
        for (std::size_t i = 0; i + 1 < basis.size(); ++i)
            in_queue.insert({i, basis.size() - 1});
    }

    // Interreduce to the unique reduced basis.
    std::vector<bool> keep(polys.size(), true);
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = 0; j < polys.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (basis[j].lm().divides(basis[i].lm()) &&
                !(basis[i].lm() == basis[j].lm() && j > i))
                keep[i] = false;
        }

    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < polys.size(); ++i)
        if (keep[i]) idx.push_back(i);

    std::vector<Poly<K>> reduced;
    for (std::size_t s_i = 0; s_i < idx.size(); ++s_i) {
        std::vector<const BasisElem<K>*> others;
        for (std::size_t t = 0; t < idx.size(); ++t)
            if (t != s_i) others.push_back(&basis[idx[t]]);
        detail::Division<K> div(detail::to_work(polys[idx[s_i]], ord), std::move(others),
                                budget);
        auto rem = div.scaled_remainder();
        if (!rem.empty()) reduced.push_back(detail::from_work(ctx, rem).monic(ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly<K>& a, const Poly<K>& b) {
        return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
    });
    return GroebnerBasis<K>{ctx, ord, std::move(reduced), true};
}

/// Verifies the Buchberger criterion on a finished basis: every
/// S-polynomial reduces to zero. Used as a self-check in test mode.
template <class K>
bool buchberger_certificate(const GroebnerBasis<K>& gb, Budget& budget) {
    std::vector<detail::BasisElem<K>> basis;
    for (const auto& g : gb.gens) basis.push_back(detail::make_elem(g, gb.order));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const Monomial l = basis[i].lm().lcm(basis[j].lm());
            detail::WorkPoly<K> s{detail::OrderDesc{gb.order}};
            detail::subtract_multiple(s, -coeff_one<K>(*gb.ctx), basis[i].lm().divide_into(l),
                                      basis[i]);
            detail::subtract_multiple(s, coeff_one<K>(*gb.ctx), basis[j].lm().divide_into(l),
                                      basis[j]);
            if (!detail::normal_form_work(std::move(s), basis, budget).empty()) return false;
        }
    return true;
}

/// Krull dimension of R/I. The unit ideal carries a distinguished "empty"
/// marker instead of a numeric sentinel.
struct KrullDim {
    bool empty = false;
    int dim = 0;
    int codim = 0;

    static KrullDim empty_marker(int nvars) { return {true, 0, nvars}; }
    static KrullDim of(int dim, int nvars) { return {false, dim, nvars - dim}; }

    bool operator==(const KrullDim& o) const {
        return empty == o.empty && (empty || (dim == o.dim && codim == o.codim));
    }
};

namespace detail {

/// Minimum hitting set over the supports of the leading monomials; the
/// complement of a maximum independent set of variables. Branch and bound,
/// exact.
inline int min_hitting_set(std::vector<std::uint64_t> supports, int nvars, Budget& budget) {
    // Keep only minimal supports: a superset constraint is implied.
    std::sort(supports.begin(), supports.end(), [](std::uint64_t a, std::uint64_t b) {
        return __builtin_popcountll(a) < __builtin_popcountll(b);
    });
    std::vector<std::uint64_t> minimal;
    for (auto s : supports) {
        bool dominated = false;
        for (auto m : minimal)
            if ((m & s) == m) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(s);
    }

    int best = nvars + 1;
    auto lower_bound = [&](const std::vector<std::uint64_t>& rem) {
        // Greedy count of pairwise-disjoint supports.
        std::uint64_t used = 0;
        int lb = 0;
        for (auto s : rem)
            if ((s & used) == 0) {
                ++lb;
                used |= s;
            }
        return lb;
    };
    std::function<void(const std::vector<std::uint64_t>&, int)> go =
        [&](const std::vector<std::uint64_t>& rem, int size) {
            budget.charge(1, "dimension search nodes");
            if (rem.empty()) {
                best = std::min(best, size);
                return;
            }
            if (size + lower_bound(rem) >= best) return;
            // Branch on a smallest support.
            std::uint64_t pick = rem.front();
            for (auto s : rem)
                if (__builtin_popcountll(s) < __builtin_popcountll(pick)) pick = s;
            for (int v = 0; v < nvars; ++v) {
                if (!(pick & (std::uint64_t{1} << v))) continue;
                std::vector<std::uint64_t> next;
                next.reserve(rem.size());
                for (auto s : rem)
                    if (!(s & (std::uint64_t{1} << v))) next.push_back(s);
                go(next, size + 1);
            }
        };
    go(minimal, 0);
    return best;
}

} // namespace detail

/// Dimension of R/ideal(gb) from the leading-term ideal via maximal
/// independent variable sets.
template <class K>
KrullDim leading_term_dimension(const GroebnerBasis<K>& gb, Budget& budget) {
    const int n = static_cast<int>(gb.ctx->nvars());
    if (gb.is_unit()) return KrullDim::empty_marker(n);
    std::vector<std::uint64_t> supports;
    supports.reserve(gb.gens.size());
    for (const auto& g : gb.gens) supports.push_back(g.leading_term(gb.order).first.support());
    const int cover = detail::min_hitting_set(std::move(supports), n, budget);
    return KrullDim::of(n - cover, n);
}

/// Shared handle on an ideal: the generator list plus caches of reduced
/// bases per order and of the dimension. Caches are guarded for concurrent
/// use; published values are immutable.
template <class K>
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ctx, std::vector<Poly<K>> gens) : st_(std::make_shared<State>()) {
        st_->ctx = std::move(ctx);
        for (const auto& g : gens)
            if (!same_ring(g.ring(), st_->ctx))
                throw input_error("ideal generator from a different ring");
        st_->gens = std::move(gens);
    }
    static Ideal zero(RingPtr ctx) { return Ideal(std::move(ctx), {}); }
    static Ideal from(RingPtr ctx, std::initializer_list<Poly<K>> gens) {
        return Ideal(std::move(ctx), std::vector<Poly<K>>(gens));
    }

    const RingPtr& ring() const { return st_->ctx; }
    const std::vector<Poly<K>>& gens() const { return st_->gens; }
    bool is_zero_generated() const {
        for (const auto& g : st_->gens)
            if (!g.is_zero()) return false;
        return true;
    }

    std::shared_ptr<const GroebnerBasis<K>> groebner(const MonomialOrder& ord,
                                                     Budget& budget) const {
        {
            std::lock_guard<std::mutex> lock(st_->mu);
            auto it = st_->gb_cache.find(ord.key());
            if (it != st_->gb_cache.end()) return it->second;
        }
        auto gb = std::make_shared<const GroebnerBasis<K>>(
            buchberger(st_->ctx, st_->gens, ord, budget));
        std::lock_guard<std::mutex> lock(st_->mu);
        auto [it, fresh] = st_->gb_cache.emplace(ord.key(), gb);
        return it->second;
    }

    KrullDim dimension(Budget& budget) const {
        {
            std::lock_guard<std::mutex> lock(st_->mu);
            if (st_->dim) return *st_->dim;
        }
        auto gb = groebner(MonomialOrder::grevlex(), budget);
        KrullDim d = leading_term_dimension(*gb, budget);
        std::lock_guard<std::mutex> lock(st_->mu);
        st_->dim = d;
        return d;
    }

private:
    struct State {
        RingPtr ctx;
        std::vector<Poly<K>> gens;
        mutable std::mutex mu;
        mutable std::map<std::pair<int, std::uint64_t>,
                         std::shared_ptr<const GroebnerBasis<K>>>
            gb_cache;
        mutable std::optional<KrullDim> dim;
    };
    std::shared_ptr<State> st_;
};

template <class K>
bool contains(const Ideal<K>& I, const Poly<K>& f, Budget& budget) {
    if (f.is_zero()) return true;
    return normal_form(f, *I.groebner(MonomialOrder::grevlex(), budget), budget).is_zero();
}

template <class K>
bool is_unit_ideal(const Ideal<K>& I, Budget& budget) {
    return I.groebner(MonomialOrder::grevlex(), budget)->is_unit();
}

/// Ideal equality through the uniqueness of reduced bases.
template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J, Budget& budget) {
    auto a = I.groebner(MonomialOrder::grevlex(), budget);
    auto b = J.groebner(MonomialOrder::grevlex(), budget);
    return a->gens == b->gens;
}

/// True iff every homogeneous part of every generator lies in the ideal,
/// i.e. the ideal is standard-graded homogeneous (V is a cone).
template <class K>
bool is_homogeneous_ideal(const Ideal<K>& I, Budget& budget) {
    auto gb = I.groebner(MonomialOrder::grevlex(), budget);
    for (const auto& g : I.gens())
        for (const auto& [deg, part] : g.homogeneous_parts())
            if (!normal_form(part, *gb, budget).is_zero()) return false;
    return true;
}

/// Rabinowitsch trick: f in sqrt(I) iff 1 in I + <1 - z f> in R[z].
template <class K>
bool radical_membership(const Poly<K>& f, const Ideal<K>& I, Budget& budget) {
    if (f.is_zero()) return true;
    const RingPtr& ctx = I.ring();
    RingPtr ext = ctx->extended({fresh_name(*ctx, "zrad")});
    std::vector<Poly<K>> gens;
    for (const auto& g : I.gens()) gens.push_back(lift(g, ext));
    const std::size_t zi = ext->nvars() - 1;
    Poly<K> one = Poly<K>::constant(ext, coeff_one<K>(*ext));
    gens.push_back(one - Poly<K>::variable(ext, zi) * lift(f, ext));
    return buchberger(ext, gens, MonomialOrder::grevlex(), budget).is_unit();
}

} // namespace resint
