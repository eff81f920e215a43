#include <doctest.h>

#include "umbra/expr.hpp"
#include "umbra/json_io.hpp"
#include "umbra/operators.hpp"

using namespace umbra;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

EvalConfig config() {
    EvalConfig cfg;
    cfg.genus_loader = [](const std::string& name, int bound) {
        if (name == "e") return genus_e(bound);
        if (name == "h") return genus_h(bound);
        throw domain_error("unknown genus: " + name);
    };
    return cfg;
}

Value ev(const std::string& text) {
    ParseResult pr = parse_expr(text);
    return eval_expr(*pr.expr, config());
}

}  // namespace

TEST_CASE("expression evaluation: pinned values") {
    CHECK(std::get<SymFunc>(ev("D(h[3])")) == h_n(2));
    CHECK(std::get<SymFunc>(ev("E(1)(e[2,1]) - e[2,1]")) ==
          shift_eval(1, basis_e(P({2, 1}))) - basis_e(P({2, 1})));
    CHECK(std::get<SymFunc>(ev("pow[2] ∘ pow[3]")) == pow_n(6));
    CHECK(std::get<Rat>(ev("eps(D_[2,1](m[2,2,1]))")) == 0);
    CHECK(std::get<UniPoly>(ev("pi(pow[2] - pow[5])")).is_zero());
    CHECK(std::get<SymFunc>(ev("seq(Forest, 2)")) ==
          scale(3, m(P({2}))) + scale(2, m(P({1, 1}))));
    CHECK(std::get<SymFunc>(ev("Id[3]")) == std::get<SymFunc>(ev("seq(Deg, 3)")));
    CHECK(std::get<SymFunc>(ev("omega(h[2])")) == e_n(2));
    CHECK(std::get<SymFunc>(ev("D_2(h[4])")) == scale(2, h_n(2)));
    CHECK(std::get<SymFunc>(ev("s[2,1]")) == schur(P({2, 1})));
    CHECK(std::get<SymFunc>(ev("s[2,1/1]")) == skew_schur(P({2, 1}), P({1})));
    CHECK(std::get<SymFunc>(ev("full(h, [2,1])")) ==
          scale(Rat(2), basis_h(P({2, 1}))));
    CHECK(std::get<UniPoly>(ev("pi(e[2]) - 1/2*x^2 + 1/2*x")).is_zero());
    CHECK(std::get<Rat>(ev("3/4 + 1/4")) == 1);
    CHECK(std::get<SymFunc>(ev("2*m[1] - m[1] - m[1]")).is_zero());

    // formal shift output
    ShiftedPoly sp = std::get<ShiftedPoly>(ev("E(formal)(m[1,1])"));
    CHECK(sp.at_power(0) == m(P({1, 1})));
    CHECK(sp.at_power(1) == m(P({1})));
}

TEST_CASE("parser diagnostics") {
    CHECK_THROWS_AS(parse_expr("m[2"), parse_error);
    CHECK_THROWS_AS(parse_expr("frob[2]"), parse_error);
    CHECK_THROWS_AS(parse_expr("m[2] +"), parse_error);
    CHECK_THROWS_AS(parse_expr("m[2] m[1]"), parse_error);
    CHECK_THROWS_AS(parse_expr("D_(m[1])"), parse_error);
    CHECK_THROWS_AS(parse_expr("E()(m[1])"), parse_error);

    // positions are reported
    try {
        parse_expr("m[2] + frob[1]");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position() == 7);
    }

    // out-of-order partitions are sorted with a warning
    ParseResult pr = parse_expr("m[1,2]");
    REQUIRE(pr.warnings.size() == 1);
    CHECK(std::get<SymFunc>(eval_expr(*pr.expr, config())) == m(P({2, 1})));

    // domain errors surface from evaluation
    ParseResult bad = parse_expr("s[2,2/3]");
    CHECK_THROWS_AS(eval_expr(*bad.expr, config()), domain_error);
}

TEST_CASE("print and reparse round trip") {
    for (const char* text : {
             "D(h[3])",
             "seq(ExpLin, 3) + 7/2*m[2,1]",
             "pi(pow[2] - pow[5])",
             "omega(m[3,1]) * e[1]",
             "pow[2] ∘ pow[2]",
             "eps(E(1/2)(h[2]))",
             "full(e, [2,2])",
         }) {
        ParseResult pr = parse_expr(text);
        // AST prints re-parse to an equal AST
        ParseResult back = parse_expr(print_expr(*pr.expr));
        CHECK(expr_equal(*pr.expr, *back.expr));

        // evaluated values print in the surface syntax and re-evaluate equal
        // (a zero polynomial legitimately reparses as the rational zero)
        Value v = eval_expr(*pr.expr, config());
        std::string printed = print_value(v);
        Value again = eval_expr(*parse_expr(printed).expr, config());
        CHECK(print_value(again) == printed);
        auto as_poly = [](const Value& val) -> UniPoly {
            if (auto* r = std::get_if<Rat>(&val)) return UniPoly({*r});
            return std::get<UniPoly>(val);
        };
        bool equal;
        if (std::holds_alternative<SymFunc>(v))
            equal = std::holds_alternative<SymFunc>(again) &&
                    std::get<SymFunc>(again) == std::get<SymFunc>(v);
        else
            equal = as_poly(v) == as_poly(again);
        CHECK(equal);
    }
}

TEST_CASE("JSON schemas round trip") {
    Partition lam({3, 1, 1});
    CHECK(partition_to_json(lam).dump() == "[3,1,1]");
    CHECK(partition_from_json(partition_to_json(lam)) == lam);
    CHECK(partition_to_json(Partition()).dump() == "[]");

    SymFunc f = scale(frac(7, 2), m(lam)) + m(Partition());
    json jf = symfunc_to_json(f);
    CHECK(symfunc_from_json(jf) == f);
    CHECK(jf["coeffs"][1]["num"] == "7");
    CHECK(jf["coeffs"][1]["den"] == "2");

    FPSeries series({Rat(1), frac(1, 2)}, 4);
    CHECK(fpseries_from_json(fpseries_to_json(series)) == series);

    QuasiSpecies s = named_species(NamedSpecies::Forest, 4);
    json js = species_to_json(s);
    CHECK(js["a"][3] == "16");
    QuasiSpecies s2 = species_from_json(js);
    for (int n = 0; n <= 4; ++n) CHECK(s2.at(n) == s.at(n));

    QuasiGenus g = genus_h(3);
    QuasiGenus g2 = genus_from_json(genus_to_json(g));
    for (int n = 0; n <= 3; ++n)
        for (auto& mu : partitions_of(n)) CHECK(g2.at(mu) == g.at(mu));

    ShiftInvOp op;
    op.add(Partition({2, 1}), frac(1, 2));
    op.add(Partition(), Rat(3));
    CHECK(op_from_json(op_to_json(op)) == op);

    TensorElem t;
    t.add_term(Partition({2}), Partition({1, 1}), Rat(1));
    CHECK(tensor_from_json(tensor_to_json(t)) == t);

    UniPoly u({Rat(0), Rat(1), frac(1, 2)});
    CHECK(unipoly_from_json(unipoly_to_json(u)) == u);
}
