/*
   Copyright 2026 The tamecurves Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TAMECURVES_TEXT_HPP
#define TAMECURVES_TEXT_HPP

// Printing and parsing of fields, curves, elements, places and divisors.
//
//   field     GF(p^m; mod=<poly in gen>; gen=<name>)   also GF(p^m), GF(p)
//   curve     P1 | EO(a=<elem>, b=<elem>) | ES(a=<elem>, b=<elem>) | W(A=<elem>, B=<elem>)
//   function  expression in x, y and field constants with + - * / ^ ( )
//   gamma     [[a, b], [c, d]] with function entries
//   place     inf | (<minpoly in x>; <x0>, <y0>)
//   divisor   sum of n*<place>

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "symbol.hpp"

namespace tamecurves {

// ---------------------------------------------------------------------------
// Printing

/// Field element as a polynomial in the generator, highest degree first.
inline std::string to_string(const Field& F, Elem a) {
    if (a == 0) return "0";
    auto d = F.digits(a);
    if (F.degree() == 1) return std::to_string(d[0]);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (!d[i]) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]) + "*";
        out += F.generator_name();
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

inline std::string to_string(FieldElem a) { return to_string(a.field(), a.raw()); }

namespace detail {

inline bool is_single_term(const Field& F, Elem a) {
    if (F.degree() == 1) return true;
    int n = 0;
    for (auto c : F.digits(a)) n += c != 0;
    return n <= 1;
}

}  // namespace detail

/// Polynomial in var, highest degree first.
inline std::string to_string(const Poly& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    const Field& F = *f.field();
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        Elem c = f[static_cast<std::size_t>(i)];
        if (!c) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += to_string(F, c);
            continue;
        }
        if (c != 1) {
            std::string cs = to_string(F, c);
            out += detail::is_single_term(F, c) ? cs : "(" + cs + ")";
            out += "*";
        }
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

namespace detail {

inline bool is_monomial_text(const Poly& f) {
    int n = 0;
    for (auto c : f.coeffs()) n += c != 0;
    return n == 1 && is_single_term(*f.field(), f.lead());
}

inline std::string wrap(const Poly& f) {
    std::string s = to_string(f);
    return is_monomial_text(f) ? s : "(" + s + ")";
}

}  // namespace detail

inline std::string to_string(const RatFunc& r) {
    if (r.den().is_one()) return to_string(r.num());
    return detail::wrap(r.num()) + "/" + detail::wrap(r.den());
}

inline std::string to_string(const FuncElem& f) {
    if (f.v().is_zero()) return to_string(f.u());
    std::string vs;
    const RatFunc& v = f.v();
    if (v.is_constant() && v.num().lead() == 1)
        vs = "y";
    else if (v.den().is_one() && detail::is_monomial_text(v.num()))
        vs = to_string(v.num()) + "*y";
    else
        vs = "(" + to_string(v) + ")*y";
    if (f.u().is_zero()) return vs;
    return to_string(f.u()) + "+" + vs;
}

inline std::string to_string(const Differential& w) { return "(" + to_string(w.coeff()) + ") dx"; }

inline std::string to_string(const Place& P) {
    if (P.is_infinity()) return "inf";
    const Field& L = P.residue_field();
    std::string s = "(" + to_string(P.minpoly()) + "; " + to_string(L, P.x0());
    if (!P.curve()->is_p1()) s += ", " + to_string(L, P.y0());
    return s + ")";
}

inline std::string to_string(const Divisor& D) {
    std::string out;
    for (const auto& [P, n] : D) {
        if (!n) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(n) + "*" + to_string(P);
    }
    return out.empty() ? "0" : out;
}

inline std::string to_string(const GammaElem& g) {
    return "[[" + to_string(g.a) + ", " + to_string(g.b) + "], [" + to_string(g.c) + ", " + to_string(g.d) + "]]";
}

inline std::string field_literal(const Field& F) {
    std::vector<Elem> mc(F.modulus().begin(), F.modulus().end());
    FieldPtr prime = Field::make(F.characteristic(), 1);
    Poly m(prime.get(), mc);
    return "GF(" + std::to_string(F.characteristic()) + "^" + std::to_string(F.degree()) + "; mod=" +
           to_string(m, F.generator_name()) + "; gen=" + F.generator_name() + ")";
}

inline std::string curve_literal(const Curve& X) {
    const Field& k = X.field();
    switch (X.kind()) {
        case CurveKind::P1: return "P1";
        case CurveKind::Ordinary:
            return "EO(a=" + to_string(k, X.param_a()) + ", b=" + to_string(k, X.param_b()) + ")";
        case CurveKind::Supersingular:
            return "ES(a=" + to_string(k, X.param_a()) + ", b=" + to_string(k, X.param_b()) + ")";
        case CurveKind::ShortW:
            return "W(A=" + to_string(k, X.param_a()) + ", B=" + to_string(k, X.param_b()) + ")";
    }
    return "";
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class Lexer {
   public:
    explicit Lexer(std::string s) : s_(std::move(s)) {}

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip();
        return i_ >= s_.size();
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(const std::string& w) {
        skip();
        if (s_.compare(i_, w.size(), w) != 0) return false;
        std::size_t j = i_ + w.size();
        if (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) return false;
        i_ = j;
        return true;
    }
    std::string ident() {
        skip();
        std::size_t j = i_;
        if (j < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) {
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
        }
        std::string r = s_.substr(i_, j - i_);
        i_ = j;
        return r;
    }
    bool at_number() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    bool at_ident() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    std::uint64_t number() {
        skip();
        if (!at_number()) fail("expected a number");
        std::uint64_t v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            if (v > (UINT64_MAX - 9) / 10) fail("number too large");
            v = v * 10 + static_cast<std::uint64_t>(s_[i_++] - '0');
        }
        return v;
    }
    /// Substring up to (not including) the first top-level character in stops.
    std::string until(const std::string& stops) {
        skip();
        int depth = 0;
        std::size_t j = i_;
        for (; j < s_.size(); ++j) {
            char c = s_[j];
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') {
                if (depth == 0 && stops.find(c) != std::string::npos) break;
                --depth;
            }
            if (depth == 0 && stops.find(c) != std::string::npos) break;
        }
        std::string r = s_.substr(i_, j - i_);
        i_ = j;
        return r;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(i_) + " in '" + s_ + "'");
    }

   private:
    std::string s_;
    std::size_t i_ = 0;
};

/// Recursive-descent evaluator for expressions over a ring T.
///   expr   := ['-'] term { ('+' | '-') term }
///   term   := power { ['*' | '/'] power }       (juxtaposition multiplies)
///   power  := atom [ '^' ['-'] int | '^' '(' ['-'] int ')' ]
///   atom   := int | ident | '(' expr ')'
template <class T, class Ops>
class ExprParser {
   public:
    ExprParser(Lexer& lx, const Ops& ops) : lx_(lx), ops_(ops) {}

    T expr() {
        bool neg = lx_.accept('-');
        T acc = term();
        if (neg) acc = ops_.neg(acc);
        for (;;) {
            if (lx_.accept('+'))
                acc = ops_.add(acc, term());
            else if (lx_.accept('-'))
                acc = ops_.sub(acc, term());
            else
                return acc;
        }
    }

   private:
    T term() {
        T acc = power();
        for (;;) {
            if (lx_.accept('*')) {
                acc = ops_.mul(acc, power());
            } else if (lx_.accept('/')) {
                acc = ops_.div(acc, power());
            } else if (lx_.peek() == '(' || lx_.at_ident() || lx_.at_number()) {
                acc = ops_.mul(acc, power());
            } else {
                return acc;
            }
        }
    }
    T power() {
        T base = atom();
        if (!lx_.accept('^')) return base;
        bool paren = lx_.accept('(');
        bool neg = lx_.accept('-');
        std::uint64_t e = lx_.number();
        if (paren) lx_.expect(')');
        if (e > (std::uint64_t{1} << 40)) lx_.fail("exponent too large");
        return ops_.pow(base, neg ? -static_cast<std::int64_t>(e) : static_cast<std::int64_t>(e));
    }
    T atom() {
        if (lx_.accept('(')) {
            T v = expr();
            lx_.expect(')');
            return v;
        }
        if (lx_.at_number()) return ops_.integer(lx_.number());
        if (lx_.at_ident()) {
            std::string id = lx_.ident();
            return ops_.ident(id, lx_);
        }
        lx_.fail("expected a number, a name or '('");
    }

    Lexer& lx_;
    const Ops& ops_;
};

struct ElemOps {
    const Field* F;
    FieldElem add(FieldElem a, FieldElem b) const { return a + b; }
    FieldElem sub(FieldElem a, FieldElem b) const { return a - b; }
    FieldElem neg(FieldElem a) const { return -a; }
    FieldElem mul(FieldElem a, FieldElem b) const { return a * b; }
    FieldElem div(FieldElem a, FieldElem b) const {
        if (b.is_zero()) throw ParseError("division by zero");
        return a / b;
    }
    FieldElem pow(FieldElem a, std::int64_t e) const {
        if (e < 0 && a.is_zero()) throw ParseError("division by zero");
        return a.pow(e);
    }
    FieldElem integer(std::uint64_t n) const {
        return {F, F->from_int(static_cast<std::int64_t>(n % F->characteristic()))};
    }
    FieldElem ident(const std::string& id, Lexer& lx) const {
        if (id == F->generator_name()) return {F, F->gen()};
        lx.fail("unknown name '" + id + "' (field generator is '" + F->generator_name() + "')");
    }
};

struct FuncOps {
    CurvePtr X;
    FuncElem add(const FuncElem& a, const FuncElem& b) const { return a + b; }
    FuncElem sub(const FuncElem& a, const FuncElem& b) const { return a - b; }
    FuncElem neg(const FuncElem& a) const { return -a; }
    FuncElem mul(const FuncElem& a, const FuncElem& b) const { return a * b; }
    FuncElem div(const FuncElem& a, const FuncElem& b) const {
        if (b.is_zero()) throw ParseError("division by zero");
        return a / b;
    }
    FuncElem pow(const FuncElem& a, std::int64_t e) const {
        if (e < 0 && a.is_zero()) throw ParseError("division by zero");
        return a.pow(e);
    }
    FuncElem integer(std::uint64_t n) const {
        return FuncElem::constant(X, X->k()->from_int(static_cast<std::int64_t>(n % X->k()->characteristic())));
    }
    FuncElem ident(const std::string& id, Lexer& lx) const {
        if (id == "x") return FuncElem::x(X);
        if (id == "y") {
            if (X->is_p1()) lx.fail("'y' is not available on P1");
            return FuncElem::y(X);
        }
        if (id == X->field().generator_name()) return FuncElem::constant(X, X->field().gen());
        lx.fail("unknown name '" + id + "'");
    }
};

}  // namespace detail

inline FieldElem parse_elem(const Field& F, const std::string& s) {
    detail::Lexer lx(s);
    detail::ElemOps ops{&F};
    FieldElem v = detail::ExprParser<FieldElem, detail::ElemOps>(lx, ops).expr();
    if (!lx.done()) lx.fail("trailing input");
    return v;
}

inline FuncElem parse_function(const CurvePtr& X, const std::string& s) {
    detail::Lexer lx(s);
    detail::FuncOps ops{X};
    FuncElem v = detail::ExprParser<FuncElem, detail::FuncOps>(lx, ops).expr();
    if (!lx.done()) lx.fail("trailing input");
    return v;
}

/// Polynomial over k in the variable x.
inline Poly parse_poly(const Field& k, const std::string& s) {
    FieldPtr kp = k.self_handle();
    CurvePtr P1 = Curve::p1(kp);
    FuncElem f = parse_function(P1, s);
    if (!f.u().is_polynomial()) throw ParseError("expected a polynomial in x: '" + s + "'");
    return f.u().num();
}

/// GF(p^m; mod=...; gen=...), GF(p^m) or GF(p).
inline FieldPtr parse_field(const std::string& s) {
    detail::Lexer lx(s);
    if (!lx.accept_word("GF")) lx.fail("field literal must start with 'GF('");
    lx.expect('(');
    std::uint64_t p = lx.number(), m = 1;
    if (lx.accept('^')) m = lx.number();
    if (p >= 2 && m >= 1) {
        // GF(q) with q a prime power
        std::uint64_t r = 2;
        while (r * r <= p && p % r) ++r;
        if (p % r) r = p;
        std::uint64_t e = 0, t = p;
        while (t % r == 0) {
            t /= r;
            ++e;
        }
        if (t != 1) lx.fail("field size must be a prime power");
        p = r;
        m *= e;
    }
    if (p < 2 || p > 65521 || m == 0 || m > 63) lx.fail("unsupported characteristic or degree");
    std::string gen = "w", mod_text;
    while (lx.accept(';')) {
        std::string key = lx.ident();
        lx.expect('=');
        std::string val = lx.until(";)");
        while (!val.empty() && std::isspace(static_cast<unsigned char>(val.back()))) val.pop_back();
        if (key == "mod")
            mod_text = val;
        else if (key == "gen")
            gen = val;
        else
            lx.fail("unknown field option '" + key + "'");
    }
    lx.expect(')');
    if (!lx.done()) lx.fail("trailing input");
    if (gen.empty() || !(std::isalpha(static_cast<unsigned char>(gen[0])) || gen[0] == '_') || gen == "x" ||
        gen == "y" || gen == "inf")
        throw ParseError("invalid generator name '" + gen + "'");
    for (char c : gen)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') throw ParseError("invalid generator name '" + gen + "'");
    std::optional<std::vector<std::uint32_t>> modulus;
    if (!mod_text.empty()) {
        FieldPtr prime = Field::make(static_cast<std::uint32_t>(p), 1, std::nullopt, gen);
        CurvePtr line = Curve::p1(prime);
        detail::Lexer ml(mod_text);
        // the modulus is written in the generator name; read it as a polynomial
        struct ModOps : detail::FuncOps {
            std::string g;
            FuncElem ident(const std::string& id, detail::Lexer& lx) const {
                if (id == g) return FuncElem::x(X);
                lx.fail("modulus must be a polynomial in '" + g + "'");
            }
        } ops;
        ops.X = line;
        ops.g = gen;
        FuncElem f = detail::ExprParser<FuncElem, ModOps>(ml, ops).expr();
        if (!ml.done()) ml.fail("trailing input");
        if (!f.u().is_polynomial()) throw ParseError("modulus must be a polynomial");
        std::vector<std::uint32_t> c;
        for (Elem e : f.u().num().coeffs()) c.push_back(static_cast<std::uint32_t>(e));
        modulus = c;
    }
    return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), modulus, gen);
}

inline CurvePtr parse_curve(const FieldPtr& k, const std::string& s) {
    detail::Lexer lx(s);
    std::string name = lx.ident();
    if (name == "P1") {
        if (!lx.done()) lx.fail("trailing input");
        return Curve::p1(k);
    }
    if (name != "EO" && name != "ES" && name != "W")
        throw ParseError("curve must be P1, EO(a=..., b=...), ES(a=..., b=...) or W(A=..., B=...); got '" + s + "'");
    const bool w = name == "W";
    const std::string ka = w ? "A" : "a", kb = w ? "B" : "b";
    lx.expect('(');
    std::optional<FieldElem> a, b;
    for (int i = 0; i < 2; ++i) {
        if (i) lx.expect(',');
        std::string key = lx.ident();
        lx.expect('=');
        FieldElem v = parse_elem(*k, lx.until(",)"));
        if (key == ka && !a)
            a = v;
        else if (key == kb && !b)
            b = v;
        else
            lx.fail("unexpected curve parameter '" + key + "'");
    }
    lx.expect(')');
    if (!lx.done()) lx.fail("trailing input");
    if (name == "EO") return Curve::ordinary(k, a->raw(), b->raw());
    if (name == "ES") return Curve::supersingular(k, a->raw(), b->raw());
    return Curve::short_weierstrass(k, a->raw(), b->raw());
}

inline Place parse_place(const CurvePtr& X, const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "inf") return infinity_place(X);
    detail::Lexer lx(s);
    lx.expect('(');
    Poly pi = parse_poly(X->field(), lx.until(";"));
    if (pi.degree() <= 0) throw ParseError("place minimal polynomial must be nonconstant");
    for (const Place& P : places_over(X, pi.monic())) {
        std::string u;
        for (char c : to_string(P))
            if (!std::isspace(static_cast<unsigned char>(c))) u += c;
        if (u == t) return P;
    }
    // accept the representative written in any equivalent form
    lx.expect(';');
    std::string rest = lx.until(")");
    std::vector<std::string> parts;
    {
        detail::Lexer rl(rest);
        parts.push_back(rl.until(","));
        if (rl.accept(',')) parts.push_back(rl.until(""));
    }
    for (const Place& P : places_over(X, pi.monic())) {
        const Field& L = P.residue_field();
        try {
            if (parse_elem(L, parts[0]).raw() != P.x0()) continue;
            if (parts.size() > 1 && parse_elem(L, parts[1]).raw() != P.y0()) continue;
            return P;
        } catch (const ParseError&) {
        }
    }
    throw ParseError("no place matches '" + s + "'");
}

/// n*<place> +/- ... ; a bare place counts once.
inline Divisor parse_divisor(const CurvePtr& X, const std::string& s) {
    Divisor D;
    detail::Lexer lx(s);
    if (lx.peek() == '0') {
        lx.number();
        if (!lx.done()) lx.fail("trailing input");
        return D;
    }
    for (;;) {
        bool neg = lx.accept('-');
        long n = 1;
        if (lx.at_number()) {
            n = static_cast<long>(lx.number());
            lx.expect('*');
        }
        std::string ptxt;
        if (lx.accept_word("inf"))
            ptxt = "inf";
        else {
            lx.expect('(');
            ptxt = "(" + lx.until(")") + ")";
            lx.expect(')');
        }
        D[parse_place(X, ptxt)] += neg ? -n : n;
        if (lx.done()) break;
        if (!lx.accept('+') && lx.peek() != '-') lx.fail("expected '+' or '-'");
    }
    for (auto it = D.begin(); it != D.end();) it = it->second == 0 ? D.erase(it) : std::next(it);
    return D;
}

inline GammaElem parse_gamma(const CurvePtr& X, const std::string& s) {
    detail::Lexer lx(s);
    lx.expect('[');
    FuncElem e[4];
    for (int r = 0; r < 2; ++r) {
        if (r) lx.expect(',');
        lx.expect('[');
        e[2 * r] = parse_function(X, lx.until(","));
        lx.expect(',');
        e[2 * r + 1] = parse_function(X, lx.until("]"));
        lx.expect(']');
    }
    lx.expect(']');
    if (!lx.done()) lx.fail("trailing input");
    GammaElem g{e[0], e[1], e[2], e[3]};
    if (g.degenerate()) throw DegenerateGamma("ad + bc = 0");
    return g;
}

}  // namespace tamecurves

#endif  // TAMECURVES_TEXT_HPP
