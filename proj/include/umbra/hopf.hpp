#ifndef UMBRA_HOPF_HPP
#define UMBRA_HOPF_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "umbra/operators.hpp"
#include "umbra/species.hpp"
#include "umbra/symfunc.hpp"

namespace umbra {

/* Element of Lambda (x) Lambda, supported on pairs of partitions.  The
 * coproduct of a degree-n homogeneous element lives on pairs with
 * |mu| + |nu| = n. */
class TensorElem {
public:
    using Key = std::pair<Partition, Partition>;
    struct KeyOrder {
        bool operator()(const Key& a, const Key& b) const {
            PartitionOrder lt;
            if (a.first != b.first) return lt(a.first, b.first);
            return lt(a.second, b.second);
        }
    };
    using CoeffMap = std::map<Key, Rat, KeyOrder>;

    TensorElem() = default;

    Rat coeff(const Partition& left, const Partition& right) const;
    void add_term(const Partition& left, const Partition& right, const Rat& c);
    const CoeffMap& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    TensorElem operator+(const TensorElem& o) const;
    TensorElem operator-(const TensorElem& o) const;
    TensorElem operator*(const TensorElem& o) const;  // componentwise ring product
    TensorElem swap() const;                          // p (x) q  ->  q (x) p
    bool operator==(const TensorElem& o) const { return c_ == o.c_; }

    // Apply linear maps to one leg.
    TensorElem map_left(const std::function<SymFunc(const SymFunc&)>& f) const;
    TensorElem map_right(const std::function<SymFunc(const SymFunc&)>& f) const;

    SymFunc contract_multiply() const;   // mu: p (x) q -> p*q
    SymFunc counit_left() const;         // (eps (x) id)
    SymFunc counit_right() const;        // (id (x) eps)

private:
    CoeffMap c_;
};

// Delta m_lambda = sum over multiset splittings mu u nu = lambda of
// m_mu (x) m_nu, extended linearly; this is the two-alphabet expansion.
TensorElem coproduct(const SymFunc& p);

// The antipode: (-1)^n omega on the degree-n component.
SymFunc antipode(const SymFunc& p);

struct HopfCheck {
    std::string name;
    bool pass;
};
struct HopfReport {
    std::vector<HopfCheck> checks;
    bool all_pass() const;
};

/* Verifies, exhaustively on the monomial basis through degree d:
 * coassociativity, cocommutativity, the counit axioms, the bialgebra law
 * Delta(pq) = Delta p Delta q, both antipode convolution diagrams, the
 * alternating elementary/complete convolution sum_i (-1)^i e_i h_{n-i} =
 * delta_{n,0}, and the projection Pi as a morphism into the univariate
 * binomial Hopf structure (through degree pi_degree). */
HopfReport hopf_axiom_suite(int d, int pi_degree = 5);

/* Homogeneous degree-preserving linear operator given by its action on the
 * monomial basis, materialized through a degree bound: the concrete form of
 * a transfer operator (coalgebra isomorphism). */
class TransferOp {
public:
    TransferOp() = default;
    TransferOp(std::map<Partition, SymFunc, PartitionOrder> images, int max_degree);

    int max_degree() const { return max_degree_; }
    const SymFunc& image_of_m(const Partition& lambda) const;
    Rat d_entry(const Partition& lambda, const Partition& mu) const;  // [m_mu] theta(m_lambda)
    SymFunc apply(const SymFunc& p) const;

private:
    std::map<Partition, SymFunc, PartitionOrder> images_;
    int max_degree_ = -1;
};

/* The unique homogeneous map sending the source full sequence to the target
 * one, materialized through max_degree.  Species sources are extended to full
 * families by products p_lambda = prod p_{lambda_i}; a product family that is
 * not a gradewise basis (e.g. the powers family) is rejected. */
TransferOp transfer_between(const QuasiSpecies& src, const QuasiSpecies& dst, int max_degree);
TransferOp transfer_between(const QuasiGenus& src, const QuasiGenus& dst, int max_degree);

// The involution omega as a transfer operator (e-family -> h-family).
TransferOp omega_transfer(int max_degree);

/* Adjoint of a transfer operator on the shift-invariant algebra: literal
 * transpose of the d-matrix.  adj(theta) D_lambda = sum_mu d_{mu,lambda} D_mu. */
ShiftInvOp adjoint_d_image(const TransferOp& theta, const Partition& lambda);
// Coefficients c_mu with adj(theta) D_n / n! = sum_{mu |- n} c_mu D_mu.
std::map<Partition, Rat, PartitionOrder> adjoint_dn_coeffs(const TransferOp& theta, int n);
// adj(theta) applied to a general operator (degreewise transpose action).
ShiftInvOp adjoint_apply(const TransferOp& theta, const ShiftInvOp& f);

/* Transforms a genus along transfer-operator data: with
 * adj(theta) D_n/n! = sum_{mu |- n} c_mu D_mu, the image full sequence is the
 * one of H, where
 *   H_lambda = sum_{mu |- |lambda|} c_mu sum_M (lambda choose M)
 *              G_{M_1} G_{M_2} ...,
 * M running over nonnegative matrices with row sums mu and column sums
 * lambda, (lambda choose M) = lambda!/prod M_ij!. */
QuasiGenus transfer_apply_genus(
    const std::map<int, std::map<Partition, Rat, PartitionOrder>>& cn_coeffs, const QuasiGenus& g,
    int max_weight);

}  // namespace umbra

#endif
