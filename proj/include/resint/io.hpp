#pragma once

#include <string>
#include <utility>
#include <vector>

#include "resint/polynomial.hpp"

namespace resint {

/// Parse failure with a source position; maps to CLI exit code 2.
class parse_error : public input_error {
public:
    parse_error(int line, int col, const std::string& msg)
        : input_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                      msg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

std::string monomial_text(const Monomial& m, const RingContext& ctx);

inline std::string coeff_text(const Rat& c) { return c.str(); }
inline std::string coeff_text(const Fp& c) { return c.str(); }

/// Canonical text of a polynomial: terms descending under grevlex, the
/// grammar `3*x^2*y - z` of the CLI format.
template <class K>
std::string poly_text(const Poly<K>& f) {
    if (f.is_zero()) return "0";
    const RingContext& ctx = *f.ring();
    const MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<std::pair<Monomial, K>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        return ord.cmp(a.first, b.first) > 0;
    });

    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        std::string coef = coeff_text(c);
        bool negative = false;
        if (!coef.empty() && coef[0] == '-') {
            negative = true;
            coef.erase(coef.begin());
        }
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string mono = monomial_text(m, ctx);
        if (mono.empty()) out += coef;
        else if (coef == "1") out += mono;
        else out += coef + "*" + mono;
    }
    return out;
}

/// Field-agnostic parsed polynomial: exact rational coefficients attached
/// to exponent vectors, materialized into Q or F_p on demand.
struct PolyAst {
    std::vector<std::pair<Rat, Monomial>> terms;
};

/// Parses the polynomial grammar against a ring (for variable names).
/// `line` and `col0` locate the text within a larger source for
/// diagnostics.
PolyAst parse_poly_text(const std::string& text, const RingContext& ctx, int line = 1,
                        int col0 = 1);

template <class K>
Poly<K> materialize(const PolyAst& ast, const RingPtr& ring) {
    Poly<K> f(ring);
    for (const auto& [c, m] : ast.terms) f.add_term(m, coeff_from_rat<K>(*ring, c));
    return f;
}

/// Parsed .ri problem file: one ring declaration, then named ideals and
/// generator systems.
struct ProblemSource {
    enum class DeclKind { Ideal, System };
    struct Decl {
        DeclKind kind;
        std::vector<PolyAst> polys;
    };

    RingPtr ring;
    std::vector<std::pair<std::string, Decl>> decls; // declaration order

    const Decl* find(const std::string& name) const {
        for (const auto& [n, d] : decls)
            if (n == name) return &d;
        return nullptr;
    }
    const Decl& get(const std::string& name) const {
        const Decl* d = find(name);
        if (!d) throw input_error("no ideal or system named '" + name + "' in the input");
        return *d;
    }
};

/// Grammar:
///   ring x y z w [over Q | over Fp 32003]
///   ideal X = x*z, x*w, y*z, y*w
///   system f = x*z, x*w
///   # comment
ProblemSource parse_source(const std::string& text);

/// FNV-1a 64-bit digest, hex; the deterministic inputs fingerprint of
/// reports.
std::string fnv1a_hex(const std::string& data);

/// Report order for generator lists: (total degree, lex) of the grevlex
/// leading monomial.
template <class K>
std::vector<std::string> generator_texts(const std::vector<Poly<K>>& gens) {
    const MonomialOrder grev = MonomialOrder::grevlex();
    const MonomialOrder lex = MonomialOrder::lex();
    std::vector<const Poly<K>*> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(&g);
    std::sort(nonzero.begin(), nonzero.end(), [&](const Poly<K>* a, const Poly<K>* b) {
        const Monomial la = a->leading_term(grev).first;
        const Monomial lb = b->leading_term(grev).first;
        if (la.degree() != lb.degree()) return la.degree() < lb.degree();
        if (int c = lex.cmp(la, lb)) return c < 0;
        return poly_text(*a) < poly_text(*b);
    });
    std::vector<std::string> out;
    for (const auto* g : nonzero) out.push_back(poly_text(*g));
    if (out.empty()) out.push_back("0");
    return out;
}

} // namespace resint
