#ifndef UMBRA_SYMFUNC_HPP
#define UMBRA_SYMFUNC_HPP

#include <map>
#include <string>
#include <vector>

#include "umbra/partition.hpp"
#include "umbra/rational.hpp"

namespace umbra {

/* Element of the graded ring of symmetric functions over the rationals,
 * stored in the monomial basis: a finitely supported map lambda -> coefficient
 * with no explicit zeros.  The monomial basis is the canonical internal
 * representation everywhere; every other basis is a conversion. */
class SymFunc {
public:
    using CoeffMap = std::map<Partition, Rat, PartitionOrder>;

    SymFunc() = default;
    static SymFunc constant(const Rat& c);
    static SymFunc zero() { return SymFunc(); }

    Rat coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const Rat& c);  // accumulates, trims zeros
    const CoeffMap& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int grade() const;                      // max |lambda| over the support, -1 for 0
    SymFunc homogeneous(int n) const;       // degree-n component
    bool is_homogeneous() const;

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o);
    bool operator==(const SymFunc& o) const { return c_ == o.c_; }
    bool operator!=(const SymFunc& o) const { return c_ != o.c_; }

    std::string to_string() const;  // m-basis terms in reverse-lex order per degree

private:
    CoeffMap c_;
};

SymFunc m(const Partition& lambda);              // basis element m_lambda
SymFunc scale(const Rat& c, const SymFunc& p);
SymFunc truncate_degree(const SymFunc& p, int bound);  // drop terms of degree > bound

/* Product in the monomial basis by the interleaving rule: the coefficient of
 * m_nu in m_lambda * m_mu is the number of pairs of vectors (alpha, beta)
 * with alpha a permutation-with-zeros of lambda, beta one of mu, and
 * alpha + beta = nu positionwise. */
SymFunc mul(const SymFunc& p, const SymFunc& q, int cap = default_degree_cap);
SymFunc mul_mm(const Partition& lambda, const Partition& mu);  // single basis product
inline SymFunc operator*(const SymFunc& p, const SymFunc& q) { return mul(p, q); }

SymFunc power(const SymFunc& p, int e, int cap = default_degree_cap);

// --- classical bases ---------------------------------------------------------

SymFunc basis_e(const Partition& lambda, int cap = default_degree_cap);
SymFunc basis_h(const Partition& lambda, int cap = default_degree_cap);
SymFunc basis_pow(const Partition& lambda, int cap = default_degree_cap);
SymFunc e_n(int n, int cap = default_degree_cap);   // m_(1^n)
SymFunc h_n(int n, int cap = default_degree_cap);   // sum of all m_rho, rho |- n
SymFunc pow_n(int n);                               // m_(n)

/* Schur functions through the Jacobi-Trudi determinant det[h_{lambda_i-i+j}],
 * with h_k = 0 for k < 0 and h_0 = 1.  The skew version requires mu inside
 * lambda (Ferrers); jacobi_trudi_skew is the raw determinant, which simply
 * vanishes on non-containment and is what derivative identities sum over. */
SymFunc schur(const Partition& lambda, int cap = default_degree_cap);
SymFunc skew_schur(const Partition& lambda, const Partition& mu, int cap = default_degree_cap);
SymFunc jacobi_trudi_skew(const Partition& lambda, const Partition& mu,
                          int cap = default_degree_cap);

// The ring involution determined by omega(e_n) = h_n; an involution and an
// algebra map.  forgotten(lambda) = omega(m_lambda).
SymFunc omega(const SymFunc& p);
SymFunc forgotten(const Partition& lambda);

enum class Basis { m, e, h, pow, s };

// Exact coefficients of p in the requested basis (triangular solves in
// reverse-lex order; the h case goes through omega).
std::map<Partition, Rat, PartitionOrder> to_basis(const SymFunc& p, Basis b);
SymFunc from_basis(const std::map<Partition, Rat, PartitionOrder>& coeffs, Basis b);

// Largest partition in the support of the top homogeneous component
// (reverse-lex, largest first).  Diagnostic for basis triangularity.
Partition leading_partition(const SymFunc& p);

// --- univariate polynomials and the projection Pi ---------------------------

/* Exact univariate polynomials over the rationals; coefficient of x^k at
 * index k, trailing zeros trimmed. */
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    static UniPoly x_power(int k);

    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    Rat coeff(int k) const;
    bool is_zero() const { return c_.empty(); }
    Rat eval(const Rat& x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    std::string to_string() const;

private:
    std::vector<Rat> c_;
};

UniPoly uni_scale(const Rat& c, const UniPoly& p);
UniPoly falling_factorial(int n);  // x(x-1)...(x-n+1)
UniPoly rising_factorial(int n);   // x(x+1)...(x+n-1)

/* Pi sets x of the variables to one and the rest to zero:
 * Pi m_lambda = (x)_{l(lambda)} / prod_i mult_i(lambda)!, extended linearly.
 * An algebra homomorphism onto the univariate polynomials. */
UniPoly project_pi(const SymFunc& p);

// --- finite-alphabet expansion (faithful oracle) -----------------------------

/* Polynomial in a fixed number of variables, exponent vectors as keys.  This
 * is the finite-alphabet expansion engine: the independent multiplication
 * oracle, the two-alphabet identity checker, and the substrate for plethysm
 * alphabets. */
class MultiPoly {
public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    Rat coeff(const std::vector<int>& expo) const;
    void add_term(std::vector<int> expo, const Rat& c);
    const std::map<std::vector<int>, Rat>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    bool operator==(const MultiPoly& o) const;

private:
    int nvars_;
    std::map<std::vector<int>, Rat> c_;  // exponent vectors of length nvars_, zeros trimmed? kept full
};

// p(y_1,...,y_k,0,0,...) as an explicit polynomial; faithful on supports with
// at most k parts.
MultiPoly expand_in_vars(const SymFunc& p, int k);

// Reads the coefficients at weakly decreasing exponent vectors.  Exact
// inverse of expand_in_vars on symmetric inputs whose support fits in k vars.
SymFunc collect_symmetric(const MultiPoly& poly);

}  // namespace umbra

#endif
