#pragma once

// Shared harness for the test binaries: always-on checks that print
// [FAIL] with location and exit nonzero, plus seeded generators and the
// criterion-free Buchberger oracle used for engine equivalence checks.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "resint/groebner.hpp"
#include "resint/io.hpp"
#include "resint/rng.hpp"

#define CHECK(cond)                                                              \
    do {                                                                         \
        ++resint_test::checks;                                                   \
        if (!(cond)) {                                                           \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << "  " #cond  \
                      << "\n";                                                   \
            std::exit(1);                                                        \
        }                                                                        \
    } while (0)

#define CHECK_EQ(a, b)                                                           \
    do {                                                                         \
        ++resint_test::checks;                                                   \
        if (!((a) == (b))) {                                                     \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << "  " #a     \
                      << " == " #b << "\n   left: " << resint_test::show(a)      \
                      << "\n  right: " << resint_test::show(b) << "\n";          \
            std::exit(1);                                                        \
        }                                                                        \
    } while (0)

#define CHECK_THROWS(expr, extype)                                               \
    do {                                                                         \
        ++resint_test::checks;                                                   \
        bool caught = false;                                                     \
        try {                                                                    \
            (void)(expr);                                                        \
        } catch (const extype&) {                                                \
            caught = true;                                                       \
        }                                                                        \
        if (!caught) {                                                           \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << "  " #expr  \
                      << " did not raise " #extype "\n";                         \
            std::exit(1);                                                        \
        }                                                                        \
    } while (0)

#define TEST_DONE()                                                              \
    do {                                                                         \
        std::cout << "ok (" << resint_test::checks << " checks)\n";              \
        return 0;                                                                \
    } while (0)

namespace resint_test {

inline int checks = 0;

template <class T>
std::string show(const T& v) {
    if constexpr (std::is_convertible_v<T, std::string>) return std::string(v);
    else if constexpr (std::is_arithmetic_v<T>) return std::to_string(v);
    else if constexpr (std::is_same_v<T, resint::Rat>) return v.str();
    else return "<value>";
}

using namespace resint;

inline RingPtr ring(std::initializer_list<const char*> names,
                    FieldSpec field = FieldSpec::rationals()) {
    std::vector<std::string> v;
    for (auto* n : names) v.emplace_back(n);
    return RingContext::make(v, field);
}

template <class K = Rat>
Poly<K> pp(const RingPtr& r, const std::string& text) {
    return materialize<K>(parse_poly_text(text, *r), r);
}

template <class K = Rat>
Ideal<K> ii(const RingPtr& r, std::initializer_list<const char*> polys) {
    std::vector<Poly<K>> gens;
    for (auto* t : polys) gens.push_back(pp<K>(r, t));
    return Ideal<K>(r, std::move(gens));
}

/// Random sparse polynomial: up to `max_terms` terms of degree <= max_deg,
/// coefficients in [-5, 5].
template <class K>
Poly<K> random_poly(const RingPtr& r, SplitMix64& gen, int max_terms = 4, int max_deg = 3) {
    Poly<K> f(r);
    const int terms = 1 + static_cast<int>(gen.below(static_cast<std::uint64_t>(max_terms)));
    for (int t = 0; t < terms; ++t) {
        Monomial m(r->nvars());
        int deg = static_cast<int>(gen.below(static_cast<std::uint64_t>(max_deg) + 1));
        for (int d = 0; d < deg; ++d)
            m[gen.below(r->nvars())] += 1;
        const long c = gen.range(-5, 5);
        if (c != 0) f.add_term(m, coeff_from_rat<K>(*r, Rat(c)));
    }
    return f;
}

/// Criterion-free Buchberger oracle, written independently of the engine:
/// FIFO pair queue, no pair elimination, naive full reduction, then a
/// from-scratch interreduction. Slow but transparent.
template <class K>
std::vector<Poly<K>> naive_reduced_basis(const RingPtr& r, std::vector<Poly<K>> gens,
                                         const MonomialOrder& ord, int pair_cap = 200000) {
    std::vector<Poly<K>> g;
    for (auto& f : gens)
        if (!f.is_zero()) g.push_back(f.monic(ord));

    auto reduce_full = [&](Poly<K> f, const std::vector<Poly<K>>& basis) {
        Poly<K> rem(r);
        while (!f.is_zero()) {
            auto [lm, lc] = f.leading_term(ord);
            bool step = false;
            for (const auto& b : basis) {
                if (b.is_zero()) continue;
                auto [blm, blc] = b.leading_term(ord);
                if (!blm.divides(lm)) continue;
                f = f - b.times_monomial(blm.divide_into(lm)).scaled(lc / blc);
                step = true;
                break;
            }
            if (!step) {
                rem.add_term(lm, lc);
                f.add_term(lm, -lc);
            }
        }
        return rem;
    };

    std::vector<std::pair<std::size_t, std::size_t>> queue;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) queue.emplace_back(i, j);

    int steps = 0;
    while (!queue.empty()) {
        if (++steps > pair_cap) throw std::runtime_error("naive oracle exhausted its pair cap");
        auto [i, j] = queue.front();
        queue.erase(queue.begin());
        const auto [li, ci] = g[i].leading_term(ord);
        const auto [lj, cj] = g[j].leading_term(ord);
        const Monomial l = li.lcm(lj);
        Poly<K> s = g[i].times_monomial(li.divide_into(l)).scaled(ci.inverse()) -
                    g[j].times_monomial(lj.divide_into(l)).scaled(cj.inverse());
        Poly<K> h = reduce_full(s, g);
        if (h.is_zero()) continue;
        g.push_back(h.monic(ord));
        for (std::size_t k = 0; k + 1 < g.size(); ++k) queue.emplace_back(k, g.size() - 1);
    }

    // Minimalize then tail-reduce.
    std::vector<Poly<K>> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Monomial lm = g[i].leading_term(ord).first;
        bool redundant = false;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            const Monomial lj = g[j].leading_term(ord).first;
            if (lj.divides(lm) && (!(lj == lm) || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::vector<Poly<K>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly<K> h = reduce_full(minimal[i], others);
        if (!h.is_zero()) reduced.push_back(h.monic(ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly<K>& a, const Poly<K>& b) {
        return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
    });
    return reduced;
}

} // namespace resint_test
