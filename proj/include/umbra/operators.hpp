#ifndef UMBRA_OPERATORS_HPP
#define UMBRA_OPERATORS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "umbra/species.hpp"
#include "umbra/symfunc.hpp"

namespace umbra {

// Evaluation at the empty alphabet: the coefficient of m_().
Rat epsilon(const SymFunc& p);

// The symmetric derivative: D m_lambda = m_{lambda\1} when 1 is a part,
// 0 otherwise; a derivation.
SymFunc sym_derivative(const SymFunc& p);

// The i-th iterated derivative: D_i m_lambda = i! m_{lambda\i} when i is a
// part, 0 otherwise.  D_1 = D; not a derivation for i >= 2.
SymFunc iterated_derivative(int i, const SymFunc& p);

// The normalized basis operator D_lambda = prod_i D_{lambda_i}/lambda_i!,
// acting by m_mu -> m_{mu\lambda} (multiset removal), the epsilon-dual of the
// monomial basis: eps(D_lambda m_nu) = delta_{lambda,nu}.
SymFunc d_lambda(const Partition& lambda, const SymFunc& p);

// The symmetric shift E^a = sum_n a^n D_n / n!: E^a p(y) = p(a, y); a ring
// map, but E^a E^b != E^{a+b}.
SymFunc shift_eval(const Rat& a, const SymFunc& p);

/* E^a p organized by powers of a formal shift symbol; the power never exceeds
 * the grade of p.  Nested shifts layer one symbol at a time. */
class ShiftedPoly {
public:
    ShiftedPoly() = default;
    explicit ShiftedPoly(std::vector<SymFunc> by_power);

    const SymFunc& at_power(int k) const;
    int max_power() const { return static_cast<int>(terms_.size()) - 1; }
    SymFunc eval(const Rat& a) const;   // substitute a numeric shift value
    SymFunc at_zero() const { return at_power(0); }

    bool operator==(const ShiftedPoly& o) const { return terms_ == o.terms_; }
    std::string to_string(const std::string& symbol = "a") const;

private:
    std::vector<SymFunc> terms_;  // index = power of the symbol
};

ShiftedPoly shift_formal(const SymFunc& p);

// Two-layer formal shift: coefficient of z1^i z2^j in p(z1, z2, y...).
using ShiftGrid = std::map<std::pair<int, int>, SymFunc>;
ShiftGrid shift_formal2(const SymFunc& p);

// p with a finite list of numeric values adjoined to the alphabet; shifts
// commute, so the order of z is irrelevant.
SymFunc shift_alphabet(const std::vector<Rat>& z, const SymFunc& p);

/* E^a s_lambda = sum over mu inside lambda with lambda/mu a horizontal strip
 * (at most one cell per column) of a^{|lambda|-|mu|} s_mu, assembled here
 * directly from the strip combinatorics. */
ShiftedPoly schur_shift(const Partition& lambda, int cap = default_degree_cap);
// The strip pairs (power, mu) themselves, for inspection and tests.
std::vector<std::pair<int, Partition>> horizontal_strip_shift(const Partition& lambda);

/* Shift-invariant operator: finitely supported coefficients c_lambda of
 * theta = sum c_lambda D_lambda.  Applying to a degree-d element only reads
 * entries with |lambda| <= d. */
class ShiftInvOp {
public:
    using CoeffMap = std::map<Partition, Rat, PartitionOrder>;

    ShiftInvOp() = default;
    explicit ShiftInvOp(CoeffMap coeffs);
    static ShiftInvOp identity();
    static ShiftInvOp basis(const Partition& lambda);  // the single operator D_lambda

    const CoeffMap& coeffs() const { return c_; }
    Rat coeff(const Partition& lambda) const;
    void add(const Partition& lambda, const Rat& c);
    int max_degree() const;  // largest |lambda| in the support

    SymFunc apply(const SymFunc& p) const;
    ShiftInvOp operator+(const ShiftInvOp& o) const;
    ShiftInvOp compose(const ShiftInvOp& o) const;  // operator product, exact on all degrees
    bool operator==(const ShiftInvOp& o) const { return c_ == o.c_; }

    std::string to_string() const;

private:
    CoeffMap c_;
};

ShiftInvOp op_scale(const Rat& c, const ShiftInvOp& f);

/* Expansion theorem: reconstruct a shift-invariant black box from
 * c_lambda = eps(theta m_lambda), |lambda| <= d, then verify the residual on
 * the full monomial basis through degree d.  A failing residual means the
 * box was not shift-invariant. */
ShiftInvOp expansion(const std::function<SymFunc(const SymFunc&)>& theta, int d);

// Taylor coefficients {lambda: eps(D_lambda p)}; reassembling them in the
// monomial basis reproduces p exactly.
std::map<Partition, Rat, PartitionOrder> taylor(const SymFunc& p);

// Both sides of the convolution identity
// eps(theta phi p_n) = sum_k C(n,k) eps(theta p_k) eps(phi p_{n-k})
// for the binomial sequence of a quasi-species.
struct RomanResult {
    bool equal;
    Rat lhs;
    Rat rhs;
};
RomanResult roman_check(const ShiftInvOp& theta, const ShiftInvOp& phi, const QuasiSpecies& s,
                        int n, int cap = default_degree_cap);

}  // namespace umbra

#endif
