#include "umbra/species.hpp"

#include <algorithm>
#include <functional>

namespace umbra {

void QuasiSpecies::require_sequence_admissible() const {
    if (at(0) != 1) throw domain_error("quasi-species must have a_0 = 1");
    if (is_zero(at(1))) throw domain_error("quasi-species must have a_1 != 0");
}

namespace {
// Number of set partitions of an n-set whose block-size type is lambda:
// n! / (prod_i lambda_i! * prod_v mult_v(lambda)!).
Int set_partitions_of_type(const Partition& lambda) {
    Int denom = lambda.part_factorial();
    for (int v = 1; v <= lambda.part(1); ++v) denom *= factorial(lambda.mult(v));
    return factorial(lambda.size()) / denom;
}
}  // namespace

QuasiSpecies named_species(NamedSpecies which, int bound) {
    QuasiSpecies s;
    s.a.assign(bound + 1, Rat(0));
    switch (which) {
        case NamedSpecies::Deg:
            for (int n = 0; n <= bound; ++n) s.a[n] = 1;
            break;
        case NamedSpecies::Inj:
            s.a[0] = 1;
            if (bound >= 1) s.a[1] = 1;
            break;
        case NamedSpecies::Lin:
            for (int n = 0; n <= bound; ++n) s.a[n] = Rat(factorial(n));
            break;
        case NamedSpecies::Forest:
            // rooted forests on n labeled vertices: (n+1)^(n-1)
            s.a[0] = 1;
            for (int n = 1; n <= bound; ++n) s.a[n] = Rat(int_pow(Int(n + 1), n - 1));
            break;
        case NamedSpecies::ExpLin: {
            // assemblies of linear orders: exp of Lin on nonempty sets
            QuasiSpecies lin = named_species(NamedSpecies::Lin, bound);
            s = species_exp(lin, bound);
            break;
        }
        case NamedSpecies::Forest1: {
            // forests of rooted trees of height <= 1: exp of (n trees on n points)
            QuasiSpecies t1;
            t1.a.assign(bound + 1, Rat(0));
            for (int n = 1; n <= bound; ++n) t1.a[n] = n;
            s = species_exp(t1, bound);
            break;
        }
    }
    return s;
}

QuasiSpecies named_species(const std::string& name, int bound) {
    if (name == "Deg") return named_species(NamedSpecies::Deg, bound);
    if (name == "Inj") return named_species(NamedSpecies::Inj, bound);
    if (name == "Lin") return named_species(NamedSpecies::Lin, bound);
    if (name == "Forest") return named_species(NamedSpecies::Forest, bound);
    if (name == "ExpLin") return named_species(NamedSpecies::ExpLin, bound);
    if (name == "Forest1") return named_species(NamedSpecies::Forest1, bound);
    throw domain_error("unknown species name: " + name);
}

QuasiSpecies species_sum(const QuasiSpecies& s1, const QuasiSpecies& s2) {
    QuasiSpecies r;
    int b = std::min(s1.bound(), s2.bound());
    r.a.resize(b + 1);
    for (int n = 0; n <= b; ++n) r.a[n] = s1.at(n) + s2.at(n);
    return r;
}

QuasiSpecies species_product(const QuasiSpecies& s1, const QuasiSpecies& s2) {
    QuasiSpecies r;
    int b = std::min(s1.bound(), s2.bound());
    r.a.assign(b + 1, Rat(0));
    for (int n = 0; n <= b; ++n)
        for (int k = 0; k <= n; ++k) r.a[n] += Rat(binomial(n, k)) * s1.at(k) * s2.at(n - k);
    return r;
}

QuasiSpecies species_exp(const QuasiSpecies& s, int bound) {
    // Exponential formula: sum over set-partition types, one structure per
    // block; structures on the empty set are discarded (blocks are nonempty).
    QuasiSpecies r;
    int b = std::min(bound, s.bound());
    r.a.assign(b + 1, Rat(0));
    r.a[0] = 1;
    for (int n = 1; n <= b; ++n) {
        for (const Partition& lambda : partitions_of(n, b)) {
            Rat w = Rat(set_partitions_of_type(lambda));
            for (int p : lambda.parts()) w *= s.at(p);
            r.a[n] += w;
        }
    }
    return r;
}

QuasiSpecies species_compose(const QuasiSpecies& outer, const QuasiSpecies& inner, int bound) {
    // Faa di Bruno over set-partition types; the inner constant is zeroed.
    QuasiSpecies r;
    int b = std::min({bound, outer.bound(), inner.bound()});
    r.a.assign(b + 1, Rat(0));
    r.a[0] = outer.at(0);
    for (int n = 1; n <= b; ++n) {
        for (const Partition& lambda : partitions_of(n, b)) {
            Rat w = Rat(set_partitions_of_type(lambda)) * outer.at(lambda.length());
            for (int p : lambda.parts()) w *= inner.at(p);
            r.a[n] += w;
        }
    }
    return r;
}

QuasiSpecies species_derive(const QuasiSpecies& s) {
    if (s.bound() < 1) throw domain_error("species_derive: no materialized coefficients left");
    QuasiSpecies r;
    r.a.assign(s.bound(), Rat(0));
    for (int n = 0; n < s.bound(); ++n) r.a[n] = s.at(n + 1);
    return r;
}

FPSeries species_egf(const QuasiSpecies& s, int truncation) {
    if (s.bound() < truncation)
        throw domain_error("species_egf: species not materialized to the truncation order");
    FPSeries f = FPSeries::zero(truncation);
    for (int n = 0; n <= truncation; ++n) f.set_coeff(n, s.at(n) / Rat(factorial(n)));
    return f;
}

SymFunc linear_divided(const QuasiSpecies& s, int n, int cap) {
    s.require_sequence_admissible();
    if (n > cap) throw resource_error("linear sequence degree exceeds cap");
    if (n > s.bound())
        throw resource_error("species not materialized to degree " + std::to_string(n));
    SymFunc q;
    for (const Partition& lambda : partitions_of(n, cap)) {
        Rat c = 1;
        for (int p : lambda.parts()) c *= s.at(p) / Rat(factorial(p));
        q.add_term(lambda, c);
    }
    return q;
}

SymFunc linear_binomial(const QuasiSpecies& s, int n, int cap) {
    return scale(Rat(factorial(n)), linear_divided(s, n, cap));
}

DeltaPair delta_pair(const QuasiSpecies& s, int truncation) {
    s.require_sequence_admissible();
    FPSeries gen = species_egf(s, truncation);
    FPSeries conj = fps_log(gen);
    return DeltaPair{conj, fps_inverse(conj)};
}

// --- genera -------------------------------------------------------------------

Rat QuasiGenus::at(const Partition& lambda) const {
    auto it = g.find(lambda);
    return it == g.end() ? Rat(0) : it->second;
}

void QuasiGenus::set(const Partition& lambda, const Rat& v) {
    if (is_zero(v))
        g.erase(lambda);
    else
        g[lambda] = v;
}

void QuasiGenus::require_sequence_admissible() const {
    if (at(Partition()) != 1) throw domain_error("quasi-genus must have G_() = 1");
    if (is_zero(at(Partition({1})))) throw domain_error("quasi-genus must have G_(1) != 0");
}

QuasiGenus genus_e(int bound) {
    QuasiGenus g;
    g.set(Partition(), 1);
    for (int n = 1; n <= bound; ++n) g.set(Partition(std::vector<int>(n, 1)), 1);
    return g;
}

QuasiGenus genus_h(int bound) {
    QuasiGenus g;
    for (int n = 0; n <= bound; ++n)
        for (const Partition& lambda : partitions_of(n, bound))
            g.set(lambda, Rat(lambda.part_factorial()));
    return g;
}

QuasiGenus genus_of_species(const QuasiSpecies& s, int bound) {
    QuasiGenus g;
    for (int n = 0; n <= std::min(bound, s.bound()); ++n)
        for (const Partition& lambda : partitions_of(n, bound)) {
            Rat v = 1;
            for (int p : lambda.parts()) v *= s.at(p);
            g.set(lambda, v);
        }
    return g;
}

SymFunc genus_gen(const QuasiGenus& g, int bound) {
    SymFunc f;
    for (auto& [lambda, v] : g.g) {
        if (lambda.size() > bound) continue;
        f.add_term(lambda, v / Rat(lambda.part_factorial()));
    }
    return f;
}

QuasiGenus genus_from_gen(const SymFunc& f) {
    QuasiGenus g;
    for (auto& [lambda, c] : f.terms()) g.set(lambda, c * Rat(lambda.part_factorial()));
    return g;
}

QuasiGenus genus_sum(const QuasiGenus& g1, const QuasiGenus& g2) {
    QuasiGenus r = g1;
    for (auto& [l, v] : g2.g) r.set(l, r.at(l) + v);
    return r;
}

QuasiGenus genus_product(const QuasiGenus& g1, const QuasiGenus& g2, int bound) {
    SymFunc prod = mul(genus_gen(g1, bound), genus_gen(g2, bound), 2 * bound);
    return genus_from_gen(truncate_degree(prod, bound));
}

QuasiGenus genus_exp(const QuasiGenus& g, int bound) {
    SymFunc base = genus_gen(g, bound);
    SymFunc positive = base - SymFunc::constant(base.coeff(Partition()));
    SymFunc r = SymFunc::constant(1);
    SymFunc pw = SymFunc::constant(1);
    Rat fact = 1;
    for (int k = 1; k <= bound; ++k) {
        pw = truncate_degree(mul(pw, positive, 2 * bound), bound);
        if (pw.is_zero()) break;
        fact *= k;
        r += scale(1 / fact, pw);
    }
    return genus_from_gen(r);
}

QuasiGenus genus_compose(const QuasiGenus& g1, const QuasiGenus& g2, int bound) {
    SymFunc outer = genus_gen(g1, bound);
    SymFunc inner = genus_gen(g2, bound);
    inner = inner - SymFunc::constant(inner.coeff(Partition()));  // no empty inner parts
    SymFunc r = plethysm_in_vars(outer, inner, bound, bound);
    return genus_from_gen(truncate_degree(r, bound));
}

QuasiGenus genus_compose_partitional(const QuasiGenus& g1, const QuasiGenus& g2, int bound) {
    if (bound > 8) throw resource_error("genus_compose_partitional: weight bound too large");
    QuasiGenus h;
    h.set(Partition(), g1.at(Partition()));
    for (int n = 1; n <= bound; ++n) {
        for (const Partition& type : partitions_of(n, bound)) {
            std::vector<int> block_of(n);
            {
                int pos = 0, b = 0;
                for (int p : type.parts()) {
                    for (int t = 0; t < p; ++t) block_of[pos++] = b;
                    ++b;
                }
            }
            Rat total = 0;
            std::vector<int> assign(n, 0);  // restricted growth string = set partition
            std::function<void(int, int)> rec = [&](int i, int nparts) {
                if (i == n) {
                    Rat w = 1;
                    std::map<std::vector<int>, int> classes;  // intersection vector -> #blocks
                    for (int part = 0; part < nparts && !is_zero(w); ++part) {
                        std::vector<int> cut(type.length(), 0);
                        for (int v = 0; v < n; ++v)
                            if (assign[v] == part) ++cut[block_of[v]];
                        ++classes[cut];
                        w *= g2.at(Partition::from_unsorted(cut));
                    }
                    if (is_zero(w)) return;
                    std::vector<int> class_sizes;
                    for (auto& [cut, cnt] : classes) class_sizes.push_back(cnt);
                    total += w * g1.at(Partition::from_unsorted(class_sizes));
                    return;
                }
                for (int part = 0; part <= nparts; ++part) {
                    assign[i] = part;
                    rec(i + 1, std::max(nparts, part + 1));
                }
            };
            rec(0, 0);
            h.set(type, total);
        }
    }
    return h;
}

QuasiGenus genus_derive(int n, const QuasiGenus& g) {
    if (n < 1) throw domain_error("genus_derive: n must be positive");
    QuasiGenus r;
    Rat nf = Rat(factorial(n));
    for (auto& [lambda, v] : g.g) {
        if (lambda.mult(n) == 0) continue;
        r.set(multiset_diff(lambda, Partition({n})), nf * v);
    }
    return r;
}

SymFunc full_binomial(const QuasiGenus& g, const Partition& lambda, int cap) {
    g.require_sequence_admissible();
    int n = lambda.size();
    if (n > cap) throw resource_error("full sequence degree exceeds cap");
    if (n == 0) return SymFunc::constant(1);
    int k = n;  // |lambda| variables always suffice
    int ell = lambda.length();

    /* Enumerate the vector decompositions lambda = a^(1) + ... + a^(k), one
     * summand per variable: row i of the assignment matrix is a
     * k-composition of lambda_i, column j is a^(j).  Each decomposition
     * contributes lambda!/prod a^(j)! * prod G_{a^(j)} * prod x_j^{|a^(j)|}. */
    MultiPoly acc(k);
    std::vector<std::vector<int>> rows(ell, std::vector<int>(k, 0));
    Int lambda_fact = lambda.part_factorial();

    std::function<void(int)> rec = [&](int i) {
        if (i == ell) {
            Rat w(lambda_fact);
            std::vector<int> expo(k, 0);
            for (int j = 0; j < k && !is_zero(w); ++j) {
                std::vector<int> col(ell);
                int tot = 0;
                for (int r = 0; r < ell; ++r) {
                    col[r] = rows[r][j];
                    tot += col[r];
                    w /= Rat(factorial(rows[r][j]));
                }
                w *= g.at(Partition::from_unsorted(col));
                expo[j] = tot;
            }
            if (!is_zero(w)) acc.add_term(std::move(expo), w);
            return;
        }
        std::vector<int>& row = rows[i];
        std::function<void(int, int)> comp = [&](int j, int rest) {
            if (j == k - 1) {
                row[j] = rest;
                rec(i + 1);
                row[j] = 0;
                return;
            }
            for (int v = 0; v <= rest; ++v) {
                row[j] = v;
                comp(j + 1, rest - v);
            }
            row[j] = 0;
        };
        comp(0, lambda.part(i + 1));
    };
    rec(0);
    return collect_symmetric(acc);
}

SymFunc full_divided(const QuasiGenus& g, const Partition& lambda, int cap) {
    return scale(Rat(1) / Rat(lambda.part_factorial()), full_binomial(g, lambda, cap));
}

SymFunc BinomialSeq::at(const Partition& lambda, int cap) const {
    if (std::holds_alternative<QuasiSpecies>(source)) {
        if (lambda.length() > 1)
            throw domain_error("linear sequence indexed by a partition with several parts");
        return at(lambda.size(), cap);
    }
    const QuasiGenus& g = std::get<QuasiGenus>(source);
    return normalization == Normalization::binomial ? full_binomial(g, lambda, cap)
                                                    : full_divided(g, lambda, cap);
}

SymFunc BinomialSeq::at(int n, int cap) const {
    if (std::holds_alternative<QuasiSpecies>(source)) {
        const QuasiSpecies& s = std::get<QuasiSpecies>(source);
        return normalization == Normalization::binomial ? linear_binomial(s, n, cap)
                                                        : linear_divided(s, n, cap);
    }
    return at(Partition(n ? std::vector<int>{n} : std::vector<int>{}), cap);
}

namespace {
int total_degree(const std::vector<int>& expo) {
    int d = 0;
    for (int e : expo) d += e;
    return d;
}

MultiPoly mul_truncated(const MultiPoly& a, const MultiPoly& b, int max_degree) {
    MultiPoly out(std::max(a.nvars(), b.nvars()));
    for (auto& [e1, c1] : a.terms()) {
        int d1 = total_degree(e1);
        if (d1 > max_degree) continue;
        for (auto& [e2, c2] : b.terms()) {
            if (d1 + total_degree(e2) > max_degree) continue;
            std::vector<int> e(out.nvars(), 0);
            for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
            for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
            out.add_term(std::move(e), c1 * c2);
        }
    }
    return out;
}
}  // namespace

SymFunc plethysm_in_vars(const SymFunc& p, const SymFunc& q, int k, int max_degree) {
    k = std::max(1, k);
    MultiPoly qx = expand_in_vars(q, k);
    for (auto& [expo, c] : qx.terms()) {
        (void)expo;
        if (!is_integer(c) || sgn(c) < 0)
            throw domain_error(
                "plethysm: inner argument must expand with nonnegative integer coefficients");
    }
    if (max_degree < 0) max_degree = std::max(p.grade(), 0) * std::max(q.grade(), 0);

    /* Evaluation on the monomial alphabet of q is a ring map, so it is enough
     * to know it on power sums, where it just scales exponent vectors:
     * pow_n(alphabet) = sum_alpha c_alpha y^(n alpha). */
    auto pow_on_alphabet = [&qx, k](int n) {
        MultiPoly r(k);
        for (auto& [expo, c] : qx.terms()) {
            std::vector<int> e(expo);
            for (int& x : e) x *= n;
            r.add_term(std::move(e), c);
        }
        return r;
    };

    MultiPoly acc(k);
    for (auto& [lambda, c] : to_basis(p, Basis::pow)) {
        MultiPoly prod(k);
        prod.add_term(std::vector<int>(k, 0), 1);
        for (int part : lambda.parts()) prod = mul_truncated(prod, pow_on_alphabet(part), max_degree);
        for (auto& [e, w] : prod.terms()) acc.add_term(e, c * w);
    }
    return collect_symmetric(acc);
}

SymFunc plethysm(const SymFunc& p, const SymFunc& q, int cap) {
    long dp = std::max(p.grade(), 0), dq = std::max(q.grade(), 0);
    long work = dp * dq;
    if (work > cap) throw resource_error("plethysm: working degree exceeds cap");
    return plethysm_in_vars(p, q, static_cast<int>(std::max(work, 1L)));
}

std::map<std::vector<int>, Rat> enumerate_enriched(const QuasiSpecies& s, int n, int k) {
    if (n < 0 || n > 6 || k < 1 || k > 6)
        throw resource_error("enumerate_enriched: sizes out of the brute-force range");
    std::map<std::vector<int>, Rat> out;
    std::vector<int> f(n, 0);  // f[i] in [0,k)
    while (true) {
        std::vector<int> fiber(k, 0);
        for (int i = 0; i < n; ++i) ++fiber[f[i]];
        Rat w = 1;
        for (int y = 0; y < k; ++y) w *= s.at(fiber[y]);
        if (!is_zero(w)) {
            auto [it, ins] = out.emplace(fiber, w);
            if (!ins) it->second += w;
        }
        int i = 0;
        for (; i < n; ++i) {
            if (++f[i] < k) break;
            f[i] = 0;
        }
        if (i == n) break;
    }
    return out;
}

std::map<std::vector<int>, Rat> enumerate_enriched(const QuasiGenus& g, const Partition& lambda,
                                                   int k) {
    int n = lambda.size();
    if (n > 6 || k < 1 || k > 6)
        throw resource_error("enumerate_enriched: sizes out of the brute-force range");
    // Canonical partitioned set: block b holds lambda_b consecutive points.
    std::vector<int> block_of(n);
    {
        int pos = 0, b = 0;
        for (int p : lambda.parts()) {
            for (int t = 0; t < p; ++t) block_of[pos++] = b;
            ++b;
        }
    }
    int nblocks = lambda.length();
    std::map<std::vector<int>, Rat> out;
    std::vector<int> f(n, 0);
    while (true) {
        std::vector<int> fiber(k, 0);
        Rat w = 1;
        for (int y = 0; y < k && !is_zero(w); ++y) {
            std::vector<int> cut(nblocks, 0);
            int tot = 0;
            for (int i = 0; i < n; ++i)
                if (f[i] == y) {
                    ++cut[block_of[i]];
                    ++tot;
                }
            fiber[y] = tot;
            w *= g.at(Partition::from_unsorted(cut));
        }
        if (!is_zero(w)) {
            auto [it, ins] = out.emplace(fiber, w);
            if (!ins) it->second += w;
        }
        int i = 0;
        for (; i < n; ++i) {
            if (++f[i] < k) break;
            f[i] = 0;
        }
        if (i == n) break;
    }
    return out;
}

}  // namespace umbra
