#include "resint/io.hpp"

#include <cctype>
#include <sstream>

namespace resint {

std::string monomial_text(const Monomial& m, const RingContext& ctx) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx.var(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

namespace {

struct Token {
    enum Kind { Number, Name, Plus, Minus, Star, Caret, Slash, End } kind;
    std::string text;
    int col;
};

class Lexer {
public:
    Lexer(const std::string& text, int line, int col0) : text_(text), line_(line), col0_(col0) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const int col = col0_ + static_cast<int>(pos_);
        if (pos_ >= text_.size()) return {Token::End, "", col};
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return {Token::Number, text_.substr(start, pos_ - start), col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return {Token::Name, text_.substr(start, pos_ - start), col};
        }
        ++pos_;
        switch (c) {
        case '+': return {Token::Plus, "+", col};
        case '-': return {Token::Minus, "-", col};
        case '*': return {Token::Star, "*", col};
        case '^': return {Token::Caret, "^", col};
        case '/': return {Token::Slash, "/", col};
        default:
            throw parse_error(line_, col, std::string("unexpected character '") + c + "'");
        }
    }

    int line() const { return line_; }

private:
    const std::string& text_;
    int line_;
    int col0_;
    std::size_t pos_ = 0;
};

} // namespace

PolyAst parse_poly_text(const std::string& text, const RingContext& ctx, int line, int col0) {
    Lexer lex(text, line, col0);
    Token tok = lex.next();
    if (tok.kind == Token::End) throw parse_error(line, tok.col, "empty polynomial");

    PolyAst ast;
    bool first_term = true;
    for (;;) {
        int sign = 1;
        if (tok.kind == Token::Plus || tok.kind == Token::Minus) {
            if (first_term && tok.kind == Token::Plus)
                throw parse_error(line, tok.col, "polynomial may not start with '+'");
            sign = tok.kind == Token::Minus ? -1 : 1;
            tok = lex.next();
        } else if (!first_term) {
            throw parse_error(line, tok.col, "expected '+' or '-' between terms");
        }
        first_term = false;

        // term := factor ('*' factor)*
        Rat coef(sign);
        Monomial mono(ctx.nvars());
        bool any_factor = false;
        for (;;) {
            if (tok.kind == Token::Number) {
                Rat value = Rat::parse(tok.text);
                tok = lex.next();
                if (tok.kind == Token::Slash) {
                    tok = lex.next();
                    if (tok.kind != Token::Number)
                        throw parse_error(line, tok.col, "expected denominator after '/'");
                    const Rat den = Rat::parse(tok.text);
                    if (den.is_zero()) throw parse_error(line, tok.col, "zero denominator");
                    value = value / den;
                    tok = lex.next();
                }
                coef *= value;
            } else if (tok.kind == Token::Name) {
                const int vi = ctx.var_index(tok.text);
                if (vi < 0)
                    throw parse_error(line, tok.col, "unknown variable '" + tok.text + "'");
                unsigned exp = 1;
                tok = lex.next();
                if (tok.kind == Token::Caret) {
                    tok = lex.next();
                    if (tok.kind != Token::Number)
                        throw parse_error(line, tok.col, "expected integer exponent after '^'");
                    try {
                        exp = static_cast<unsigned>(std::stoul(tok.text));
                    } catch (...) {
                        throw parse_error(line, tok.col, "exponent out of range");
                    }
                    tok = lex.next();
                }
                mono[static_cast<std::size_t>(vi)] += exp;
            } else {
                throw parse_error(line, tok.col,
                                  any_factor ? "expected a factor after '*'"
                                             : "expected a coefficient or variable");
            }
            any_factor = true;
            if (tok.kind == Token::Star) {
                tok = lex.next();
                continue;
            }
            break;
        }
        (void)any_factor;
        if (!coef.is_zero()) {
            bool merged = false;
            for (auto& [c, m] : ast.terms)
                if (m == mono) {
                    c += coef;
                    merged = true;
                    break;
                }
            if (merged)
                ast.terms.erase(std::remove_if(ast.terms.begin(), ast.terms.end(),
                                               [](const auto& t) { return t.first.is_zero(); }),
                                ast.terms.end());
            else
                ast.terms.emplace_back(coef, mono);
        }
        if (tok.kind == Token::End) break;
    }
    return ast;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

} // namespace

ProblemSource parse_source(const std::string& text) {
    ProblemSource src;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (split_ws(line).empty()) continue;

        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;

        if (keyword == "ring") {
            if (src.ring) throw parse_error(line_no, 1, "duplicate ring declaration");
            std::vector<std::string> names;
            std::string w;
            FieldSpec field = FieldSpec::rationals();
            while (ls >> w) {
                if (w == "over") {
                    std::string f;
                    if (!(ls >> f)) throw parse_error(line_no, 1, "expected field after 'over'");
                    if (f == "Q") {
                        field = FieldSpec::rationals();
                    } else if (f == "Fp") {
                        long p = 0;
                        if (!(ls >> p)) throw parse_error(line_no, 1, "expected prime after 'Fp'");
                        field = FieldSpec::prime_field(p);
                    } else {
                        throw parse_error(line_no, 1, "unknown field '" + f + "' (use Q or Fp <p>)");
                    }
                    if (ls >> w) throw parse_error(line_no, 1, "trailing tokens after field");
                    break;
                }
                names.push_back(w);
            }
            if (names.empty()) throw parse_error(line_no, 1, "ring declaration needs variables");
            try {
                src.ring = RingContext::make(names, field);
            } catch (const input_error& e) {
                throw parse_error(line_no, 1, e.what());
            }
            continue;
        }

        if (keyword == "ideal" || keyword == "system") {
            if (!src.ring)
                throw parse_error(line_no, 1, "declare the ring before ideals or systems");
            std::string name, eq;
            if (!(ls >> name)) throw parse_error(line_no, 1, "missing name after '" + keyword + "'");
            if (src.find(name)) throw parse_error(line_no, 1, "duplicate name '" + name + "'");
            if (!(ls >> eq) || eq != "=")
                throw parse_error(line_no, 1, "expected '=' after the name");
            std::string rest;
            std::getline(ls, rest);

            ProblemSource::Decl decl;
            decl.kind = keyword == "ideal" ? ProblemSource::DeclKind::Ideal
                                           : ProblemSource::DeclKind::System;
            const int base_col = static_cast<int>(raw.size() - rest.size()) + 1;
            std::size_t start = 0;
            int col = base_col;
            for (;;) {
                std::size_t comma = rest.find(',', start);
                const std::string piece =
                    comma == std::string::npos ? rest.substr(start) : rest.substr(start, comma - start);
                decl.polys.push_back(parse_poly_text(piece, *src.ring, line_no, col));
                if (comma == std::string::npos) break;
                col += static_cast<int>(piece.size()) + 1;
                start = comma + 1;
            }
            if (decl.polys.empty())
                throw parse_error(line_no, 1, "'" + keyword + "' needs at least one polynomial");
            src.decls.emplace_back(name, std::move(decl));
            continue;
        }

        throw parse_error(line_no, 1, "unknown statement '" + keyword + "'");
    }
    if (!src.ring) throw parse_error(std::max(line_no, 1), 1, "input declares no ring");
    return src;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace resint
