#ifndef UMBRA_PARTITION_HPP
#define UMBRA_PARTITION_HPP

#include <map>
#include <string>
#include <vector>

#include "umbra/errors.hpp"
#include "umbra/rational.hpp"

namespace umbra {

/* Integer partitions are the universal index type of the whole engine: they
 * index monomial symmetric functions, iterated derivatives, genus tables and
 * transfer matrices.  Parts are stored dense (the weakly decreasing list);
 * multiplicities are computed on demand, which is cheap at the degrees this
 * library is meant for. */
class Partition {
public:
    Partition() = default;

    // parts must already be weakly decreasing and strictly positive.
    explicit Partition(std::vector<int> parts);

    // Sorts descending and drops zeros; negative entries are rejected.
    static Partition from_unsorted(std::vector<int> v);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const;                       // |lambda| = sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    int mult(int i) const;                  // number of parts equal to i
    int part(int i) const;                  // 1-based; 0 beyond the length
    Int part_factorial() const;             // lambda! = prod_i lambda_i!

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    std::string to_string() const;          // "(3,1,1)", "()" for empty

private:
    std::vector<int> parts_;
};

/* Reverse lexicographic comparison: compare the first differing part, the
 * larger part comes earlier.  On partitions of equal weight this is the
 * classical ordering (4) < (31) < (22) < (211) < (1111) reading "<" as
 * "earlier".  revlex_before(a,b) = "a strictly precedes b". */
bool revlex_before(const Partition& a, const Partition& b);

/* Strict weak order used by every map in the engine: weight ascending, then
 * reverse-lexicographic (earlier = less).  Deterministic iteration order for
 * all printed output falls out of this. */
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

// All partitions of n, each exactly once, in reverse lexicographic order
// (largest first).  n above the cap is a resource_error.
std::vector<Partition> partitions_of(int n, int cap = default_degree_cap);

// --- multiset comparisons (parts as multisets) -----------------------------

bool multiset_contains(const Partition& lambda, const Partition& mu);
Partition multiset_diff(const Partition& lambda, const Partition& mu);   // lambda \ mu
Partition multiset_union(const Partition& lambda, const Partition& mu);  // lambda u mu

// --- Ferrers (pointwise) comparisons ---------------------------------------

/* Finitely supported vector of nonnegative integers.  1-based accessor to
 * match lambda_i subscripting; trailing zeros are trimmed so equal vectors
 * compare equal. */
class IntVec {
public:
    IntVec() = default;
    explicit IntVec(std::vector<int> entries);

    int at(int i) const;  // 1-based, 0 outside support
    int support_length() const { return static_cast<int>(e_.size()); }
    int total() const;    // |alpha|
    Int entry_factorial() const;  // alpha! = prod alpha_i!
    Partition sorted() const;     // descending, zeros dropped
    const std::vector<int>& entries() const { return e_; }

    bool operator==(const IntVec& o) const { return e_ == o.e_; }
    bool operator!=(const IntVec& o) const { return e_ != o.e_; }

private:
    std::vector<int> e_;
};

bool ferrers_contains(const Partition& lambda, const Partition& mu);     // mu_i <= lambda_i
IntVec ferrers_diff(const Partition& lambda, const Partition& mu);       // componentwise difference
Partition conjugate(const Partition& lambda);

// --- multinomials -----------------------------------------------------------

// (n choose lambda) = n! / (lambda_1! lambda_2! ...); requires |lambda| = n.
Int multinomial(int n, const Partition& lambda);

// (lambda choose alpha) = prod_i C(lambda_i, alpha_i); requires alpha <= lambda pointwise.
Int multinomial(const Partition& lambda, const IntVec& alpha);

// --- matrices with prescribed margins ---------------------------------------

struct NatMatrix {
    std::vector<std::vector<int>> rows;  // rectangular

    IntVec row_sums() const;
    IntVec col_sums() const;
};

// Every nonnegative integer matrix with the given row and column sums, each
// exactly once (deterministic order).  |rows| != |cols| is a domain_error.
std::vector<NatMatrix> matrices_with_margins(const Partition& row_sums,
                                             const Partition& col_sums);

}  // namespace umbra

#endif
