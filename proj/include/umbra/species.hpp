#ifndef UMBRA_SPECIES_HPP
#define UMBRA_SPECIES_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "umbra/partition.hpp"
#include "umbra/powerseries.hpp"
#include "umbra/symfunc.hpp"

namespace umbra {

/* A quasi-species is just its coefficient sequence: a_n = number (or weight)
 * of structures on an n-element set, materialized up to a degree bound.  The
 * algebra below works on raw tables; the sequence-generating entry points
 * demand a_0 = 1 and a_1 != 0. */
struct QuasiSpecies {
    std::vector<Rat> a;  // index 0..bound

    Rat at(int n) const { return n >= 0 && n < static_cast<int>(a.size()) ? a[n] : Rat(0); }
    int bound() const { return static_cast<int>(a.size()) - 1; }
    void require_sequence_admissible() const;  // a_0 = 1, a_1 != 0
};

enum class NamedSpecies { Deg, Inj, Lin, Forest, ExpLin, Forest1 };

QuasiSpecies named_species(NamedSpecies which, int bound = default_degree_cap);
QuasiSpecies named_species(const std::string& name, int bound = default_degree_cap);

// sum: disjoint union; product: binomial convolution; exp: assemblies (the
// inner constant term is zeroed: blocks are nonempty); compose: Faa di Bruno
// over set-partition types, again with the inner constant zeroed; derive:
// structures on a set with one extra point.
QuasiSpecies species_sum(const QuasiSpecies& s1, const QuasiSpecies& s2);
QuasiSpecies species_product(const QuasiSpecies& s1, const QuasiSpecies& s2);
QuasiSpecies species_exp(const QuasiSpecies& s, int bound = default_degree_cap);
QuasiSpecies species_compose(const QuasiSpecies& outer, const QuasiSpecies& inner,
                             int bound = default_degree_cap);
QuasiSpecies species_derive(const QuasiSpecies& s);

// Exponential generating function sum a_n t^n / n!.
FPSeries species_egf(const QuasiSpecies& s, int truncation);

/* The divided-powers sequence q_n = sum over lambda |- n of
 * (prod_i a_{lambda_i}/lambda_i!) m_lambda, and its binomial-type sibling
 * p_n = n! q_n.  These are the sequences every operator identity quantifies
 * over. */
SymFunc linear_divided(const QuasiSpecies& s, int n, int cap = default_degree_cap);
SymFunc linear_binomial(const QuasiSpecies& s, int n, int cap = default_degree_cap);

// Conjugate delta operator log Gen[S](t) and its compositional inverse (the
// associated delta operator), as truncated series in t.
struct DeltaPair {
    FPSeries conjugate;
    FPSeries associated;
};
DeltaPair delta_pair(const QuasiSpecies& s, int truncation);

/* A quasi-genus assigns a weight to every partition type, materialized up to
 * a weight bound.  G_() = 1 and G_(1) != 0 are demanded where full sequences
 * or transfers are built. */
struct QuasiGenus {
    std::map<Partition, Rat, PartitionOrder> g;

    Rat at(const Partition& lambda) const;
    void set(const Partition& lambda, const Rat& v);
    void require_sequence_admissible() const;  // G_() = 1, G_(1) != 0
};

// The genus of the elementary family (one structure on all-singleton
// partitions), of the complete family (lambda! structures on type lambda),
// and the product genus of a species (G_lambda = prod a_{lambda_i}).
QuasiGenus genus_e(int bound = default_degree_cap);
QuasiGenus genus_h(int bound = default_degree_cap);
QuasiGenus genus_of_species(const QuasiSpecies& s, int bound = default_degree_cap);

// Gen[G](y) = sum G_lambda m_lambda / lambda! truncated to the bound, and its
// inverse (read a genus table off a symmetric function).
SymFunc genus_gen(const QuasiGenus& g, int bound = default_degree_cap);
QuasiGenus genus_from_gen(const SymFunc& f);

QuasiGenus genus_sum(const QuasiGenus& g1, const QuasiGenus& g2);
QuasiGenus genus_product(const QuasiGenus& g1, const QuasiGenus& g2, int bound = default_degree_cap);
QuasiGenus genus_exp(const QuasiGenus& g, int bound = default_degree_cap);
/* Composition goes through the generating functions: Gen[G1 o G2] =
 * Gen[G1] plethysm Gen[G2], inner constant zeroed.  The inner generating
 * function must have nonnegative-integer monomial coefficients; when those
 * coefficients are all 0/1 (a set alphabet) this provably coincides with the
 * partitional composition below.  With repeated letters the two differ:
 * plethysm lets copies of a letter occupy distinct slots of m_lambda, while
 * the partitional classes are blind to which structure a block carries. */
QuasiGenus genus_compose(const QuasiGenus& g1, const QuasiGenus& g2, int bound = default_degree_cap);

/* The definitional composite: structures are (phi, inner structures on the
 * restriction of pi to each block of phi, outer structure on the classes of
 * blocks grouped by their intersection vector with pi).  Brute force over set
 * partitions; weight bound kept small. */
QuasiGenus genus_compose_partitional(const QuasiGenus& g1, const QuasiGenus& g2, int bound = 6);
// (D_n G)_lambda = n! G_{lambda u (n)}.
QuasiGenus genus_derive(int n, const QuasiGenus& g);

/* Full sequence of binomial type for a quasi-genus: the multi-alphabet sum
 *   p_lambda(x_1..x_k) = sum over vector decompositions lambda = a^(1)+..+a^(k)
 *     of lambda!/prod_j a^(j)!  *  prod_j G_{a^(j)}  *  prod_j x_j^{|a^(j)|}
 * computed in k = |lambda| variables and re-collected in the m basis.
 * q_lambda = p_lambda / lambda!. */
SymFunc full_binomial(const QuasiGenus& g, const Partition& lambda, int cap = default_degree_cap);
SymFunc full_divided(const QuasiGenus& g, const Partition& lambda, int cap = default_degree_cap);

/* Descriptor tying a coefficient source to a normalization, per the two
 * families above.  kind() is linear for species sources, full for genera. */
struct BinomialSeq {
    enum class Kind { linear, full };
    enum class Normalization { binomial, divided_powers };

    std::variant<QuasiSpecies, QuasiGenus> source;
    Normalization normalization = Normalization::binomial;

    Kind kind() const {
        return std::holds_alternative<QuasiSpecies>(source) ? Kind::linear : Kind::full;
    }
    SymFunc at(const Partition& lambda, int cap = default_degree_cap) const;
    SymFunc at(int n, int cap = default_degree_cap) const;  // linear sources
};

/* Plethysm p o q by alphabet substitution: q is expanded in enough variables,
 * its monomials (with multiplicity) become the new alphabet, and p is
 * evaluated on that alphabet.  q must expand with nonnegative integer
 * coefficients; working degree deg(p)*deg(q) must stay within the cap. */
SymFunc plethysm(const SymFunc& p, const SymFunc& q, int cap = default_degree_cap);

// Plethysm restricted to an explicit k-variable alphabet: exact value of
// (p o q)(y_1..y_k, 0, 0, ...) up to total degree max_degree (default: the
// full working degree).  Faithful for result partitions of <= k parts.
SymFunc plethysm_in_vars(const SymFunc& p, const SymFunc& q, int k, int max_degree = -1);

/* Brute-force enriched / generic function enumeration: all k^n functions from
 * an n-set (or a partitioned n-set) into k points, each weighted by the
 * structure counts on its fibers, tallied by fiber-size vector.  This is the
 * independent oracle for the two sequence generators above. */
std::map<std::vector<int>, Rat> enumerate_enriched(const QuasiSpecies& s, int n, int k);
std::map<std::vector<int>, Rat> enumerate_enriched(const QuasiGenus& g, const Partition& lambda,
                                                   int k);

}  // namespace umbra

#endif
