#include "resint/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace resint {

namespace {

using RatRow = std::vector<Rat>;

/// Row echelon rank, in place.
int rat_rank(std::vector<RatRow> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const Rat inv = m[rank][col].inverse();
        for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

/// Solves the square system A x = b exactly; nullopt when singular.
std::optional<RatRow> rat_solve(std::vector<RatRow> a, RatRow b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        const Rat inv = a[col][col].inverse();
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            const Rat f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    return b;
}

Rat dot(const RatRow& w, const Monomial& p) {
    Rat acc;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (p[i] != 0) acc += w[i] * Rat(static_cast<long>(p[i]));
    return acc;
}

/// All k-subsets of [0,n), invoked with each in turn.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

} // namespace

std::vector<Monomial> minimalize_exponents(std::vector<Monomial> points) {
    std::sort(points.begin(), points.end(),
              [](const Monomial& a, const Monomial& b) {
                  return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
              });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<Monomial> minimal;
    for (const auto& p : points) {
        bool dominated = false;
        for (const auto& q : minimal)
            if (q.divides(p)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(p);
    }
    return minimal;
}

NewtonPolyhedron newton_polyhedron_core(std::vector<Monomial> points, int n, Budget& budget) {
    if (n > 6) throw input_error("newton polyhedron facet enumeration supports at most 6 variables");
    if (points.empty()) throw input_error("newton polyhedron of the zero ideal");
    for (const auto& p : points)
        if (p.is_one()) throw input_error("newton polyhedron of the unit ideal");

    NewtonPolyhedron P;
    P.n = n;
    P.points = minimalize_exponents(std::move(points));

    const std::size_t npts = P.points.size();
    std::set<std::vector<std::string>> seen; // canonical facet keys

    // Candidate normals: w_d = 0 on a coordinate subset D, <w,p> = 1 on a
    // point subset S with |S| = n - |D|.
    for (std::size_t dsize = 0; dsize + 1 <= static_cast<std::size_t>(n); ++dsize) {
        for_each_subset(static_cast<std::size_t>(n), dsize, [&](const std::vector<std::size_t>& D) {
            const std::size_t ssize = static_cast<std::size_t>(n) - dsize;
            std::vector<std::size_t> active;
            std::vector<bool> in_d(static_cast<std::size_t>(n), false);
            for (auto d : D) in_d[d] = true;
            for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
                if (!in_d[i]) active.push_back(i);

            for_each_subset(npts, ssize, [&](const std::vector<std::size_t>& S) {
                budget.charge(1, "facet candidates");
                std::vector<RatRow> a;
                RatRow b;
                for (auto si : S) {
                    RatRow row;
                    for (auto col : active)
                        row.push_back(Rat(static_cast<long>(P.points[si][col])));
                    a.push_back(std::move(row));
                    b.push_back(Rat(1));
                }
                auto sol = rat_solve(std::move(a), std::move(b));
                if (!sol) return;

                RatRow w(static_cast<std::size_t>(n), Rat());
                for (std::size_t k = 0; k < active.size(); ++k) w[active[k]] = (*sol)[k];

                for (const auto& wi : w)
                    if (wi.sign() < 0) return;
                std::vector<std::size_t> tight;
                for (std::size_t i = 0; i < npts; ++i) {
                    const Rat v = dot(w, P.points[i]);
                    if (v < Rat(1)) return; // not supporting
                    if (v == Rat(1)) tight.push_back(i);
                }
                // Tightness rank: differences of tight points plus the
                // recession rays e_d with w_d = 0 must span dimension n-1.
                std::vector<RatRow> span;
                for (std::size_t k = 1; k < tight.size(); ++k) {
                    RatRow row;
                    for (int i = 0; i < n; ++i)
                        row.push_back(Rat(static_cast<long>(P.points[tight[k]][static_cast<std::size_t>(i)])) -
                                      Rat(static_cast<long>(P.points[tight[0]][static_cast<std::size_t>(i)])));
                    span.push_back(std::move(row));
                }
                for (int d = 0; d < n; ++d)
                    if (w[static_cast<std::size_t>(d)].is_zero()) {
                        RatRow row(static_cast<std::size_t>(n), Rat());
                        row[static_cast<std::size_t>(d)] = Rat(1);
                        span.push_back(std::move(row));
                    }
                if (tight.empty() || rat_rank(span) != n - 1) return;

                std::vector<std::string> key;
                for (const auto& wi : w) key.push_back(wi.fraction_str());
                if (seen.insert(key).second) P.facets.push_back(w);
            });
        });
    }

    if (P.facets.empty()) throw error("newton polyhedron produced no facets");
    // Check every generating point against every facet (defensive validity
    // is already guaranteed; this asserts the type invariant).
    for (const auto& w : P.facets)
        for (const auto& p : P.points)
            if (dot(w, p) < Rat(1)) throw error("facet fails a generating point");
    return P;
}

Rat lct_from_polyhedron(const NewtonPolyhedron& P) {
    bool first = true;
    Rat best;
    for (const auto& w : P.facets) {
        Rat s;
        for (const auto& wi : w) s += wi;
        if (first || s < best) {
            best = s;
            first = false;
        }
    }
    return best;
}

std::vector<Monomial> multiplier_exponents(const NewtonPolyhedron& P, const Rat& c,
                                           Budget& budget) {
    const int n = P.n;
    // Per-coordinate bound for minimal generators: m_i <= c / min positive w_i.
    std::vector<long> bound(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::optional<Rat> wmin;
        for (const auto& w : P.facets) {
            const Rat& wi = w[static_cast<std::size_t>(i)];
            if (wi.sign() > 0 && (!wmin || wi < *wmin)) wmin = wi;
        }
        if (!wmin) continue; // coordinate never constrained: minimal gens have m_i = 0
        const Rat q = c / *wmin;
        const mpz_class fl = q.num() / q.den();
        bound[static_cast<std::size_t>(i)] = std::max<long>(0, fl.get_si());
    }

    std::vector<Monomial> found;
    Monomial m(static_cast<std::size_t>(n));
    std::function<void(int)> walk = [&](int coord) {
        if (coord == n) {
            budget.charge(1, "multiplier ideal lattice points");
            Rat one(1);
            for (const auto& w : P.facets) {
                Rat v;
                for (int i = 0; i < n; ++i)
                    v += w[static_cast<std::size_t>(i)] * Rat(static_cast<long>(m[static_cast<std::size_t>(i)]) + 1);
                if (!(v > c)) return; // interiority is strict
            }
            found.push_back(m);
            return;
        }
        for (long e = 0; e <= bound[static_cast<std::size_t>(coord)]; ++e) {
            m[static_cast<std::size_t>(coord)] = static_cast<unsigned>(e);
            walk(coord + 1);
        }
        m[static_cast<std::size_t>(coord)] = 0;
    };
    walk(0);
    return minimalize_exponents(std::move(found));
}

Rat toric_valuation(const std::vector<Monomial>& points, const std::vector<long>& v) {
    bool first = true;
    Rat best;
    for (const auto& p : points) {
        Rat s;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (p[i] != 0) s += Rat(v[i]) * Rat(static_cast<long>(p[i]));
        if (first || s < best) {
            best = s;
            first = false;
        }
    }
    return best;
}

namespace {

long gcd_of(const std::vector<long>& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x);
    return g;
}

/// Enumerates v in [1, box]^n, skipping non-primitive vectors (the
/// objectives are scale-invariant or 1-homogeneous).
template <class F>
void for_each_weight(int n, long box, Budget& budget, F&& f) {
    std::vector<long> v(static_cast<std::size_t>(n), 1);
    for (;;) {
        budget.charge(1, "weight box points");
        if (gcd_of(v) == 1) f(v);
        int i = n - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == box) --i;
        if (i < 0) return;
        ++v[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) v[static_cast<std::size_t>(j)] = 1;
    }
}

} // namespace

long default_weight_box(const std::vector<std::vector<Monomial>>& point_sets, int n) {
    long maxdeg = 1;
    for (const auto& pts : point_sets)
        for (const auto& p : pts) maxdeg = std::max(maxdeg, static_cast<long>(p.degree()));
    return 4 * (n + maxdeg);
}

Rat glct_box_search(const std::vector<Monomial>& ptsX, const std::vector<Monomial>& ptsZ,
                    const Rat& lambda, int n, long box, Budget& budget) {
    bool first = true;
    Rat best;
    for_each_weight(n, box, budget, [&](const std::vector<long>& v) {
        Rat sum;
        for (long vi : v) sum += Rat(vi);
        Rat num = sum;
        if (lambda.sign() > 0) num += lambda * toric_valuation(ptsZ, v);
        const Rat val = num / toric_valuation(ptsX, v);
        if (first || val < best) {
            best = val;
            first = false;
        }
    });
    return best;
}

namespace {

/// One linear inequality sum_i a_i x_i + a_z z + c >= 0 over (v_1..v_n, z).
struct FmRow {
    std::vector<Rat> a; // length n
    Rat az;
    Rat c;
};

std::vector<std::string> fm_key(const FmRow& r) {
    // Normalize by the first nonzero coefficient's absolute value.
    Rat scale;
    bool found = false;
    for (const auto& x : r.a)
        if (!x.is_zero()) {
            scale = x.abs();
            found = true;
            break;
        }
    if (!found && !r.az.is_zero()) {
        scale = r.az.abs();
        found = true;
    }
    if (!found) scale = r.c.is_zero() ? Rat(1) : r.c.abs();
    std::vector<std::string> key;
    for (const auto& x : r.a) key.push_back((x / scale).fraction_str());
    key.push_back((r.az / scale).fraction_str());
    key.push_back((r.c / scale).fraction_str());
    return key;
}

/// Exact minimum of z subject to the rows; nullopt means unbounded below.
std::optional<Rat> fm_minimize_z(std::vector<FmRow> rows, int n, Budget& budget) {
    for (int var = 0; var < n; ++var) {
        std::vector<FmRow> pos, neg, rest;
        for (auto& r : rows) {
            const Rat& coef = r.a[static_cast<std::size_t>(var)];
            if (coef.sign() > 0) pos.push_back(std::move(r));
            else if (coef.sign() < 0) neg.push_back(std::move(r));
            else rest.push_back(std::move(r));
        }
        std::set<std::vector<std::string>> seen;
        for (auto& r : rest) seen.insert(fm_key(r));
        for (const auto& p : pos)
            for (const auto& q : neg) {
                budget.charge(1, "fourier-motzkin rows");
                const Rat pc = p.a[static_cast<std::size_t>(var)];
                const Rat qc = -q.a[static_cast<std::size_t>(var)];
                FmRow combo;
                combo.a.resize(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i)
                    combo.a[static_cast<std::size_t>(i)] =
                        p.a[static_cast<std::size_t>(i)] * qc + q.a[static_cast<std::size_t>(i)] * pc;
                combo.az = p.az * qc + q.az * pc;
                combo.c = p.c * qc + q.c * pc;
                if (seen.insert(fm_key(combo)).second) rest.push_back(std::move(combo));
            }
        rows = std::move(rest);
    }
    std::optional<Rat> lower;
    for (const auto& r : rows) {
        if (r.az.sign() > 0) {
            const Rat b = -r.c / r.az;
            if (!lower || b > *lower) lower = b;
        } else if (r.az.is_zero() && r.c.sign() < 0) {
            throw error("fourier-motzkin reached an infeasible system");
        }
    }
    return lower;
}

} // namespace

MldResult mld_origin_core(const std::vector<std::pair<std::vector<Monomial>, Rat>>& factors,
                          int n, long box, Budget& budget) {
    MldResult out;
    out.box_bound = box;

    // Box minimum of g(v) = sum v - sum m_i v(a_i) over primitive integer
    // weights; any negative value scales to minus infinity.
    bool have_box_min = false;
    Rat box_min;
    bool negative = false;
    for_each_weight(n, box, budget, [&](const std::vector<long>& v) {
        if (negative) return;
        Rat g;
        for (long vi : v) g += Rat(vi);
        for (const auto& [pts, m] : factors)
            if (m.sign() > 0) g -= m * toric_valuation(pts, v);
        if (g.sign() < 0) {
            negative = true;
            return;
        }
        if (!have_box_min || g < box_min) {
            box_min = g;
            have_box_min = true;
        }
    });
    if (negative) {
        out.minus_infinity = true;
        out.certified = true;
        return out;
    }

    // Exact real relaxation via Fourier-Motzkin on the selection tuples:
    // g(v) = max over tuples of <1 - sum m_i u_i, v>.
    std::size_t tuples = 1;
    bool fm_feasible_size = true;
    for (const auto& [pts, m] : factors) {
        if (m.is_zero()) continue;
        tuples *= pts.size();
        if (tuples > 4096) {
            fm_feasible_size = false;
            break;
        }
    }

    if (fm_feasible_size) {
        std::vector<FmRow> rows;
        std::vector<std::vector<Rat>> cs;
        cs.push_back(std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)));
        for (const auto& [pts, m] : factors) {
            if (m.is_zero()) continue;
            std::vector<std::vector<Rat>> next;
            for (const auto& base : cs)
                for (const auto& u : pts) {
                    auto c = base;
                    for (int i = 0; i < n; ++i)
                        c[static_cast<std::size_t>(i)] -= m * Rat(static_cast<long>(u[static_cast<std::size_t>(i)]));
                    next.push_back(std::move(c));
                }
            cs = std::move(next);
        }
        for (const auto& c : cs) {
            FmRow r;
            r.a.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) r.a[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i)];
            r.az = Rat(1);
            r.c = Rat(0);
            rows.push_back(std::move(r)); // z >= <c, v>
        }
        for (int i = 0; i < n; ++i) {
            FmRow r;
            r.a.resize(static_cast<std::size_t>(n));
            r.a[static_cast<std::size_t>(i)] = Rat(1);
            r.az = Rat(0);
            r.c = Rat(-1);
            rows.push_back(std::move(r)); // v_i >= 1
        }
        auto lower = fm_minimize_z(std::move(rows), n, budget);
        if (!lower) {
            out.minus_infinity = true;
            out.certified = true;
            return out;
        }
        out.lower_bound = *lower;
        out.value = box_min;
        out.certified = (box_min == *lower);
        return out;
    }

    out.value = box_min;
    out.certified = false; // box-limited result, global minimum unverified
    return out;
}

} // namespace resint
