#ifndef UMBRA_EXPR_HPP
#define UMBRA_EXPR_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "umbra/operators.hpp"
#include "umbra/species.hpp"
#include "umbra/symfunc.hpp"

namespace umbra {

/* Surface syntax for the CLI.
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := pleth ('*' pleth)*
 *   pleth   := primary ('o-compose' primary)*        (the UTF-8 ring operator)
 *   primary := rational | 'x' ('^' int)? | atom | '(' expr ')' | '-' primary | call
 *   atom    := m[..] | e[..] | h[..] | pow[..] | s[..] | s[../..] | Id[n]
 *            | seq(Species, n) | full(genus, [..])
 *   call    := D(expr) | D_i(expr) | D_[..](expr)
 *            | E(rational)(expr) | E(formal)(expr)
 *            | eps(expr) | omega(expr) | pi(expr)
 *
 * Partitions are bracketed lists; non-descending input is sorted with a
 * warning rather than rejected.  'genus' is one of the built-in names e, h or
 * a path to a JSON genus table. */

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind {
        rational,
        xpow,       // x^num
        atom_m,
        atom_e,
        atom_h,
        atom_pow,
        atom_s,
        atom_skew,  // s[p1/p2]
        atom_id,    // Id[num]
        seq,        // seq(name, num)
        full,       // full(name, p1)
        add,
        sub,
        mul,
        pleth,
        neg,
        d_plain,    // D(kid)
        d_iter,     // D_num(kid)
        d_part,     // D_[p1](kid)
        shift,      // E(lit)(kid)
        shift_formal_sym,  // E(formal)(kid)
        eps,
        omega_op,
        pi_op,
    };

    Kind kind;
    Rat lit;            // rational / shift value
    int num = 0;        // integer payloads (Id, seq degree, D index, x power)
    Partition p1, p2;   // partition payloads
    std::string name;   // species / genus name
    std::vector<ExprPtr> kids;
};

struct ParseResult {
    ExprPtr expr;
    std::vector<std::string> warnings;  // e.g. partitions given out of order
};

ParseResult parse_expr(const std::string& input);

std::string print_expr(const Expr& e);
bool expr_equal(const Expr& a, const Expr& b);

struct EvalConfig {
    int degree_cap = default_degree_cap;
    int truncation = default_truncation;
    // loads "e", "h", or a JSON file for full(genus, ...)
    std::function<QuasiGenus(const std::string&, int)> genus_loader;
};

using Value = std::variant<Rat, SymFunc, UniPoly, ShiftedPoly>;

Value eval_expr(const Expr& e, const EvalConfig& cfg);

// Renders a value in the surface syntax (ShiftedPoly uses the reserved output
// symbol 'a' and is the one value form that does not re-parse).
std::string print_value(const Value& v);

}  // namespace umbra

#endif
