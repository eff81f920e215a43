#include "umbra/expr.hpp"

#include <algorithm>
#include <cctype>

namespace umbra {

namespace {

enum class Tok { end, number, name, lparen, rparen, lbrack, rbrack, comma, slash, plus, minus, star, caret, compose, underscore };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

struct Lexer {
    const std::string& src;
    std::size_t i = 0;
    explicit Lexer(const std::string& s) : src(s) {}

    Token next() {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
        std::size_t start = i;
        if (i >= src.size()) return {Tok::end, "", start};
        char c = src[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            Token t{Tok::number, src.substr(i, j - i), start};
            i = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '.') {
            // names cover species keys and simple genus file names: letters,
            // digits and dots ("forest.json"); '-', '_' and '/' stay operators
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '.'))
                ++j;
            Token t{Tok::name, src.substr(i, j - i), start};
            i = j;
            return t;
        }
        // UTF-8 ring operator for plethysm
        if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < src.size() &&
            static_cast<unsigned char>(src[i + 1]) == 0x88 &&
            static_cast<unsigned char>(src[i + 2]) == 0x98) {
            i += 3;
            return {Tok::compose, "∘", start};
        }
        ++i;
        switch (c) {
            case '(': return {Tok::lparen, "(", start};
            case ')': return {Tok::rparen, ")", start};
            case '[': return {Tok::lbrack, "[", start};
            case ']': return {Tok::rbrack, "]", start};
            case ',': return {Tok::comma, ",", start};
            case '/': return {Tok::slash, "/", start};
            case '+': return {Tok::plus, "+", start};
            case '-': return {Tok::minus, "-", start};
            case '*': return {Tok::star, "*", start};
            case '^': return {Tok::caret, "^", start};
            case '_': return {Tok::underscore, "_", start};
        }
        throw parse_error(std::string("unexpected character '") + c + "'", start);
    }
};

struct Parser {
    Lexer lex;
    Token cur;
    std::vector<std::string>* warnings;

    Parser(const std::string& s, std::vector<std::string>* w) : lex(s), warnings(w) { cur = lex.next(); }

    void advance() { cur = lex.next(); }

    void expect(Tok k, const std::string& what) {
        if (cur.kind != k) throw parse_error("expected " + what, cur.pos);
        advance();
    }

    int parse_int() {
        bool negative = false;
        if (cur.kind == Tok::minus) {
            negative = true;
            advance();
        }
        if (cur.kind != Tok::number) throw parse_error("expected an integer", cur.pos);
        int v = std::stoi(cur.text);
        advance();
        return negative ? -v : v;
    }

    // '[' int (',' int)* ']' with an optional '/' separating a skew pair
    std::vector<int> parse_parts_until(bool* saw_slash) {
        std::vector<int> out;
        while (cur.kind == Tok::number || cur.kind == Tok::minus) {
            out.push_back(parse_int());
            if (cur.kind == Tok::comma) {
                advance();
                continue;
            }
            break;
        }
        if (saw_slash && cur.kind == Tok::slash) {
            *saw_slash = true;
            advance();
        }
        return out;
    }

    Partition to_partition(std::vector<int> v, std::size_t pos) {
        for (int x : v)
            if (x < 0) throw parse_error("partition parts must be nonnegative", pos);
        bool sorted = std::is_sorted(v.begin(), v.end(), std::greater<int>());
        if (!sorted && warnings)
            warnings->push_back("partition given out of order; sorted descending");
        return Partition::from_unsorted(std::move(v));
    }

    ExprPtr mk(Expr e) { return std::make_shared<Expr>(std::move(e)); }

    Rat parse_rational_literal() {
        // number ('/' number)?
        std::size_t pos = cur.pos;
        if (cur.kind != Tok::number) throw parse_error("expected a rational", pos);
        long num = std::stol(cur.text);
        advance();
        long den = 1;
        if (cur.kind == Tok::slash) {
            advance();
            if (cur.kind != Tok::number) throw parse_error("expected a denominator", cur.pos);
            den = std::stol(cur.text);
            advance();
        }
        return frac(num, den);
    }

    ExprPtr parse_expr_() {
        ExprPtr left = parse_term();
        while (cur.kind == Tok::plus || cur.kind == Tok::minus) {
            bool plus = cur.kind == Tok::plus;
            advance();
            ExprPtr right = parse_term();
            Expr e;
            e.kind = plus ? Expr::Kind::add : Expr::Kind::sub;
            e.kids = {left, right};
            left = mk(std::move(e));
        }
        return left;
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_pleth();
        while (cur.kind == Tok::star) {
            advance();
            ExprPtr right = parse_pleth();
            Expr e;
            e.kind = Expr::Kind::mul;
            e.kids = {left, right};
            left = mk(std::move(e));
        }
        return left;
    }

    ExprPtr parse_pleth() {
        ExprPtr left = parse_primary();
        while (cur.kind == Tok::compose) {
            advance();
            ExprPtr right = parse_primary();
            Expr e;
            e.kind = Expr::Kind::pleth;
            e.kids = {left, right};
            left = mk(std::move(e));
        }
        return left;
    }

    ExprPtr parse_bracket_atom(Expr::Kind kind, std::size_t pos) {
        expect(Tok::lbrack, "'['");
        bool saw_slash = false;
        std::vector<int> first = parse_parts_until(&saw_slash);
        Expr e;
        if (saw_slash) {
            if (kind != Expr::Kind::atom_s)
                throw parse_error("skew shape only makes sense for s[...]", pos);
            std::vector<int> second = parse_parts_until(nullptr);
            e.kind = Expr::Kind::atom_skew;
            e.p1 = to_partition(std::move(first), pos);
            e.p2 = to_partition(std::move(second), pos);
        } else {
            e.kind = kind;
            e.p1 = to_partition(std::move(first), pos);
        }
        expect(Tok::rbrack, "']'");
        return mk(std::move(e));
    }

    ExprPtr parse_unary_call(Expr::Kind kind) {
        expect(Tok::lparen, "'('");
        ExprPtr arg = parse_expr_();
        expect(Tok::rparen, "')'");
        Expr e;
        e.kind = kind;
        e.kids = {arg};
        return mk(std::move(e));
    }

    ExprPtr parse_primary() {
        std::size_t pos = cur.pos;
        if (cur.kind == Tok::minus) {
            advance();
            Expr e;
            e.kind = Expr::Kind::neg;
            e.kids = {parse_primary()};
            return mk(std::move(e));
        }
        if (cur.kind == Tok::number) {
            Expr e;
            e.kind = Expr::Kind::rational;
            e.lit = parse_rational_literal();
            return mk(std::move(e));
        }
        if (cur.kind == Tok::lparen) {
            advance();
            ExprPtr inner = parse_expr_();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (cur.kind != Tok::name) throw parse_error("expected an expression", pos);
        std::string id = cur.text;
        advance();

        if (id == "x") {
            Expr e;
            e.kind = Expr::Kind::xpow;
            e.num = 1;
            if (cur.kind == Tok::caret) {
                advance();
                e.num = parse_int();
                if (e.num < 0) throw parse_error("negative power of x", pos);
            }
            return mk(std::move(e));
        }
        if (id == "m") return parse_bracket_atom(Expr::Kind::atom_m, pos);
        if (id == "e") return parse_bracket_atom(Expr::Kind::atom_e, pos);
        if (id == "h") return parse_bracket_atom(Expr::Kind::atom_h, pos);
        if (id == "pow") return parse_bracket_atom(Expr::Kind::atom_pow, pos);
        if (id == "s") return parse_bracket_atom(Expr::Kind::atom_s, pos);
        if (id == "Id") {
            expect(Tok::lbrack, "'['");
            Expr e;
            e.kind = Expr::Kind::atom_id;
            e.num = parse_int();
            if (e.num < 0) throw parse_error("Id degree must be nonnegative", pos);
            expect(Tok::rbrack, "']'");
            return mk(std::move(e));
        }
        if (id == "seq") {
            expect(Tok::lparen, "'('");
            if (cur.kind != Tok::name) throw parse_error("expected a species name", cur.pos);
            Expr e;
            e.kind = Expr::Kind::seq;
            e.name = cur.text;
            advance();
            expect(Tok::comma, "','");
            e.num = parse_int();
            if (e.num < 0) throw parse_error("sequence degree must be nonnegative", pos);
            expect(Tok::rparen, "')'");
            return mk(std::move(e));
        }
        if (id == "full") {
            expect(Tok::lparen, "'('");
            if (cur.kind != Tok::name) throw parse_error("expected a genus name or file", cur.pos);
            Expr e;
            e.kind = Expr::Kind::full;
            e.name = cur.text;
            advance();
            expect(Tok::comma, "','");
            expect(Tok::lbrack, "'['");
            e.p1 = to_partition(parse_parts_until(nullptr), pos);
            expect(Tok::rbrack, "']'");
            expect(Tok::rparen, "')'");
            return mk(std::move(e));
        }
        if (id == "D") {
            if (cur.kind == Tok::underscore) {
                advance();
                if (cur.kind == Tok::number) {
                    int idx = parse_int();
                    if (idx < 1) throw parse_error("derivative index must be positive", pos);
                    ExprPtr call = parse_unary_call(Expr::Kind::d_iter);
                    Expr e = *call;
                    e.num = idx;
                    return mk(std::move(e));
                }
                if (cur.kind == Tok::lbrack) {
                    advance();
                    Partition lam = to_partition(parse_parts_until(nullptr), pos);
                    expect(Tok::rbrack, "']'");
                    ExprPtr call = parse_unary_call(Expr::Kind::d_part);
                    Expr e = *call;
                    e.p1 = lam;
                    return mk(std::move(e));
                }
                throw parse_error("expected an index or a bracketed partition after D_", cur.pos);
            }
            return parse_unary_call(Expr::Kind::d_plain);
        }
        if (id == "E") {
            expect(Tok::lparen, "'('");
            Expr e;
            if (cur.kind == Tok::name && cur.text == "formal") {
                advance();
                e.kind = Expr::Kind::shift_formal_sym;
            } else {
                e.kind = Expr::Kind::shift;
                bool neg = false;
                if (cur.kind == Tok::minus) {
                    neg = true;
                    advance();
                }
                e.lit = parse_rational_literal();
                if (neg) e.lit = -e.lit;
            }
            expect(Tok::rparen, "')'");
            ExprPtr call = parse_unary_call(e.kind);
            Expr out = *call;
            out.lit = e.lit;
            return mk(std::move(out));
        }
        if (id == "eps") return parse_unary_call(Expr::Kind::eps);
        if (id == "omega") return parse_unary_call(Expr::Kind::omega_op);
        if (id == "pi") return parse_unary_call(Expr::Kind::pi_op);
        throw parse_error("unknown name: " + id, pos);
    }
};

std::string parts_text(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

}  // namespace

ParseResult parse_expr(const std::string& input) {
    ParseResult r;
    Parser p(input, &r.warnings);
    r.expr = p.parse_expr_();
    if (p.cur.kind != Tok::end) throw parse_error("trailing input", p.cur.pos);
    return r;
}

std::string print_expr(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::rational: return rat_to_string(e.lit);
        case K::xpow: return e.num == 1 ? "x" : "x^" + std::to_string(e.num);
        case K::atom_m: return "m[" + parts_text(e.p1) + "]";
        case K::atom_e: return "e[" + parts_text(e.p1) + "]";
        case K::atom_h: return "h[" + parts_text(e.p1) + "]";
        case K::atom_pow: return "pow[" + parts_text(e.p1) + "]";
        case K::atom_s: return "s[" + parts_text(e.p1) + "]";
        case K::atom_skew: return "s[" + parts_text(e.p1) + "/" + parts_text(e.p2) + "]";
        case K::atom_id: return "Id[" + std::to_string(e.num) + "]";
        case K::seq: return "seq(" + e.name + ", " + std::to_string(e.num) + ")";
        case K::full: return "full(" + e.name + ", [" + parts_text(e.p1) + "])";
        case K::add: return "(" + print_expr(*e.kids[0]) + " + " + print_expr(*e.kids[1]) + ")";
        case K::sub: return "(" + print_expr(*e.kids[0]) + " - " + print_expr(*e.kids[1]) + ")";
        case K::mul: return "(" + print_expr(*e.kids[0]) + "*" + print_expr(*e.kids[1]) + ")";
        case K::pleth:
            return "(" + print_expr(*e.kids[0]) + " ∘ " + print_expr(*e.kids[1]) + ")";
        case K::neg: return "-" + print_expr(*e.kids[0]);
        case K::d_plain: return "D(" + print_expr(*e.kids[0]) + ")";
        case K::d_iter: return "D_" + std::to_string(e.num) + "(" + print_expr(*e.kids[0]) + ")";
        case K::d_part: return "D_[" + parts_text(e.p1) + "](" + print_expr(*e.kids[0]) + ")";
        case K::shift: return "E(" + rat_to_string(e.lit) + ")(" + print_expr(*e.kids[0]) + ")";
        case K::shift_formal_sym: return "E(formal)(" + print_expr(*e.kids[0]) + ")";
        case K::eps: return "eps(" + print_expr(*e.kids[0]) + ")";
        case K::omega_op: return "omega(" + print_expr(*e.kids[0]) + ")";
        case K::pi_op: return "pi(" + print_expr(*e.kids[0]) + ")";
    }
    throw domain_error("print_expr: unhandled node");
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.lit != b.lit || a.num != b.num || a.name != b.name ||
        a.p1 != b.p1 || a.p2 != b.p2 || a.kids.size() != b.kids.size())
        return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (!expr_equal(*a.kids[i], *b.kids[i])) return false;
    return true;
}

namespace {

SymFunc as_symfunc(const Value& v, const char* where) {
    if (auto* p = std::get_if<SymFunc>(&v)) return *p;
    if (auto* r = std::get_if<Rat>(&v)) return SymFunc::constant(*r);
    throw domain_error(std::string(where) + ": operand is not a symmetric function");
}

UniPoly as_unipoly(const Value& v, const char* where) {
    if (auto* p = std::get_if<UniPoly>(&v)) return *p;
    if (auto* r = std::get_if<Rat>(&v)) return UniPoly({*r});
    throw domain_error(std::string(where) + ": operand is not a univariate polynomial");
}

Value add_values(const Value& a, const Value& b, bool subtract) {
    if (std::holds_alternative<Rat>(a) && std::holds_alternative<Rat>(b)) {
        Rat r = std::get<Rat>(a);
        return subtract ? Rat(r - std::get<Rat>(b)) : Rat(r + std::get<Rat>(b));
    }
    if (std::holds_alternative<UniPoly>(a) || std::holds_alternative<UniPoly>(b)) {
        UniPoly x = as_unipoly(a, "+"), y = as_unipoly(b, "+");
        return subtract ? x - y : x + y;
    }
    SymFunc x = as_symfunc(a, "+"), y = as_symfunc(b, "+");
    return subtract ? x - y : x + y;
}

Value mul_values(const Value& a, const Value& b, int cap) {
    if (std::holds_alternative<Rat>(a) && std::holds_alternative<Rat>(b))
        return Rat(std::get<Rat>(a) * std::get<Rat>(b));
    if (std::holds_alternative<UniPoly>(a) || std::holds_alternative<UniPoly>(b)) {
        return as_unipoly(a, "*") * as_unipoly(b, "*");
    }
    return mul(as_symfunc(a, "*"), as_symfunc(b, "*"), cap);
}

}  // namespace

Value eval_expr(const Expr& e, const EvalConfig& cfg) {
    using K = Expr::Kind;
    auto sub = [&](std::size_t i) { return eval_expr(*e.kids[i], cfg); };
    switch (e.kind) {
        case K::rational: return e.lit;
        case K::xpow: return UniPoly::x_power(e.num);
        case K::atom_m: return m(e.p1);
        case K::atom_e: return basis_e(e.p1, cfg.degree_cap);
        case K::atom_h: return basis_h(e.p1, cfg.degree_cap);
        case K::atom_pow: return basis_pow(e.p1, cfg.degree_cap);
        case K::atom_s: return schur(e.p1, cfg.degree_cap);
        case K::atom_skew: return skew_schur(e.p1, e.p2, cfg.degree_cap);
        case K::atom_id:
            return linear_binomial(named_species(NamedSpecies::Deg, cfg.degree_cap), e.num,
                                   cfg.degree_cap);
        case K::seq:
            return linear_binomial(named_species(e.name, cfg.degree_cap), e.num, cfg.degree_cap);
        case K::full: {
            if (!cfg.genus_loader) throw domain_error("full(...): no genus loader configured");
            QuasiGenus g = cfg.genus_loader(e.name, cfg.degree_cap);
            return full_binomial(g, e.p1, cfg.degree_cap);
        }
        case K::add: return add_values(sub(0), sub(1), false);
        case K::sub: return add_values(sub(0), sub(1), true);
        case K::mul: return mul_values(sub(0), sub(1), cfg.degree_cap);
        case K::pleth:
            return plethysm(as_symfunc(sub(0), "plethysm"), as_symfunc(sub(1), "plethysm"),
                            cfg.degree_cap);
        case K::neg: {
            Value v = sub(0);
            if (auto* r = std::get_if<Rat>(&v)) return Rat(-*r);
            if (auto* u = std::get_if<UniPoly>(&v)) return uni_scale(-1, *u);
            return -as_symfunc(v, "-");
        }
        case K::d_plain: return sym_derivative(as_symfunc(sub(0), "D"));
        case K::d_iter: return iterated_derivative(e.num, as_symfunc(sub(0), "D_i"));
        case K::d_part: return d_lambda(e.p1, as_symfunc(sub(0), "D_[..]"));
        case K::shift: return shift_eval(e.lit, as_symfunc(sub(0), "E"));
        case K::shift_formal_sym: return shift_formal(as_symfunc(sub(0), "E(formal)"));
        case K::eps: return epsilon(as_symfunc(sub(0), "eps"));
        case K::omega_op: return omega(as_symfunc(sub(0), "omega"));
        case K::pi_op: return project_pi(as_symfunc(sub(0), "pi"));
    }
    throw domain_error("eval: unhandled node");
}

std::string print_value(const Value& v) {
    if (auto* r = std::get_if<Rat>(&v)) return rat_to_string(*r);
    if (auto* p = std::get_if<SymFunc>(&v)) return p->to_string();
    if (auto* u = std::get_if<UniPoly>(&v)) return u->to_string();
    return std::get<ShiftedPoly>(v).to_string("a");
}

}  // namespace umbra
