#include <doctest.h>

#include <random>

#include "umbra/hopf.hpp"

using namespace umbra;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

std::mt19937_64 rng(0x5eed5005);

Partition random_partition(int max_weight) {
    std::uniform_int_distribution<int> dn(0, max_weight);
    int n = dn(rng);
    auto ps = partitions_of(n);
    std::uniform_int_distribution<std::size_t> di(0, ps.size() - 1);
    return ps[di(rng)];
}

SymFunc random_symfunc(int max_weight, int nterms) {
    std::uniform_int_distribution<int> dc(-4, 4);
    SymFunc f;
    for (int t = 0; t < nterms; ++t) {
        int num = dc(rng);
        if (num == 0) num = 1;
        f.add_term(random_partition(max_weight), frac(num, 1 + (t % 3)));
    }
    return f;
}

QuasiGenus random_generic_genus(int bound) {
    // generic: pairwise distinct positive values keep every degree invertible
    QuasiGenus g;
    g.set(Partition(), 1);
    int v = 1;
    std::uniform_int_distribution<int> dstep(1, 5);
    for (int n = 1; n <= bound; ++n)
        for (auto& lam : partitions_of(n)) {
            v += dstep(rng);
            g.set(lam, Rat(v));
        }
    return g;
}

}  // namespace

TEST_CASE("coproduct splits monomials over sub-multisets") {
    TensorElem d1 = coproduct(m(P({1})));
    CHECK(d1.coeff(P({1}), Partition()) == 1);
    CHECK(d1.coeff(Partition(), P({1})) == 1);
    CHECK(d1.terms().size() == 2);

    // Delta h_n = sum h_k (x) h_{n-k}
    for (int n = 1; n <= 6; ++n) {
        TensorElem dh = coproduct(h_n(n));
        TensorElem expect;
        for (int k = 0; k <= n; ++k) {
            SymFunc hk = h_n(k), hnk = h_n(n - k);
            for (auto& [lm, lc] : hk.terms())
                for (auto& [rm, rc] : hnk.terms()) expect.add_term(lm, rm, lc * rc);
        }
        CHECK(dh == expect);
    }

    // pow_n is primitive
    for (int n = 1; n <= 6; ++n) {
        TensorElem dp = coproduct(pow_n(n));
        CHECK(dp.coeff(P({n}), Partition()) == 1);
        CHECK(dp.coeff(Partition(), P({n})) == 1);
        CHECK(dp.terms().size() == 2);
    }

    // Delta e_lambda over vectors below lambda (product form of the e-shift)
    for (auto lam : {P({2, 1}), P({2, 2}), P({3, 1})}) {
        TensorElem de = coproduct(basis_e(lam));
        TensorElem expect;
        std::vector<int> alpha(lam.length(), 0);
        std::function<void(int, TensorElem&)> rec = [&](int i, TensorElem& acc) {
            if (i == lam.length()) {
                SymFunc left = SymFunc::constant(1), right = SymFunc::constant(1);
                for (int t = 0; t < lam.length(); ++t) {
                    left = mul(left, e_n(alpha[t]));
                    right = mul(right, e_n(lam.parts()[t] - alpha[t]));
                }
                for (auto& [lm, lc] : left.terms())
                    for (auto& [rm, rc] : right.terms()) acc.add_term(lm, rm, lc * rc);
                return;
            }
            for (int v = 0; v <= lam.parts()[i]; ++v) {
                alpha[i] = v;
                rec(i + 1, acc);
            }
        };
        rec(0, expect);
        CHECK(de == expect);
    }

    // Delta pow_lambda with multiplicity binomials
    for (auto lam : {P({2, 1}), P({2, 2}), P({3, 2, 2})}) {
        TensorElem dp = coproduct(basis_pow(lam));
        TensorElem expect;
        for (int k = 0; k <= lam.size(); ++k)
            for (auto& mu : partitions_of(k)) {
                if (!multiset_contains(lam, mu)) continue;
                Rat c = 1;
                for (int v = 1; v <= lam.part(1); ++v)
                    c *= Rat(binomial(lam.mult(v), mu.mult(v)));
                SymFunc pl = basis_pow(mu), pr = basis_pow(multiset_diff(lam, mu));
                for (auto& [lm, lc] : pl.terms())
                    for (auto& [rm, rc] : pr.terms()) expect.add_term(lm, rm, c * lc * rc);
            }
        CHECK(dp == expect);
    }
}

TEST_CASE("full divided powers split like the coproduct") {
    // q_lambda(y u z) = sum_alpha q_alpha(y) q_{lambda-alpha}(z), alpha
    // running over vectors below lambda componentwise
    for (int rep = 0; rep < 3; ++rep) {
        QuasiGenus g = random_generic_genus(5);
        for (auto lam : {P({2, 1}), P({3, 1}), P({2, 2}), P({1, 1, 1}), P({4, 1})}) {
            int k1 = lam.size(), k2 = lam.size();
            MultiPoly lhs = expand_in_vars(full_divided(g, lam), k1 + k2);
            MultiPoly rhs(k1 + k2);
            std::vector<int> alpha(lam.length(), 0);
            std::function<void(int)> rec = [&](int i) {
                if (i == lam.length()) {
                    std::vector<int> rest(lam.length());
                    for (int t = 0; t < lam.length(); ++t)
                        rest[t] = lam.parts()[t] - alpha[t];
                    SymFunc qa = full_divided(g, Partition::from_unsorted(alpha));
                    SymFunc qb = full_divided(g, Partition::from_unsorted(rest));
                    MultiPoly pa = expand_in_vars(qa, k1);
                    MultiPoly pb = expand_in_vars(qb, k2);
                    for (auto& [ea, ca] : pa.terms())
                        for (auto& [eb, cb] : pb.terms()) {
                            std::vector<int> e(k1 + k2, 0);
                            for (int t = 0; t < k1; ++t) e[t] = ea[t];
                            for (int t = 0; t < k2; ++t) e[k1 + t] = eb[t];
                            rhs.add_term(std::move(e), ca * cb);
                        }
                    return;
                }
                for (int v = 0; v <= lam.parts()[i]; ++v) {
                    alpha[i] = v;
                    rec(i + 1);
                }
            };
            rec(0);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("antipode is the signed involution") {
    CHECK(antipode(h_n(2)) == e_n(2));       // even degree: plain omega
    CHECK(antipode(h_n(3)) == -e_n(3));      // odd degree: sign flips
    CHECK(antipode(SymFunc::constant(5)) == SymFunc::constant(5));
}

TEST_CASE("Hopf axiom suite passes through degree 6") {
    HopfReport rep = hopf_axiom_suite(6, 4);
    for (auto& c : rep.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass());
}

TEST_CASE("transfer between the injection and disposition families is omega") {
    QuasiSpecies inj = named_species(NamedSpecies::Inj, 8);
    QuasiSpecies lin = named_species(NamedSpecies::Lin, 8);
    TransferOp theta = transfer_between(inj, lin, 5);
    for (int n = 0; n <= 5; ++n)
        for (auto& lam : partitions_of(n)) CHECK(theta.image_of_m(lam) == omega(m(lam)));

    // and it carries e_lambda to h_lambda
    for (int n = 0; n <= 5; ++n)
        for (auto& lam : partitions_of(n)) CHECK(theta.apply(basis_e(lam)) == basis_h(lam));
}

TEST_CASE("the powers family is rejected: its products are not full") {
    QuasiSpecies deg = named_species(NamedSpecies::Deg, 8);
    QuasiSpecies inj = named_species(NamedSpecies::Inj, 8);
    CHECK_THROWS_AS(transfer_between(deg, inj, 3), domain_error);
}

TEST_CASE("genus-to-genus transfer carries full sequences") {
    QuasiGenus src = random_generic_genus(4), dst = random_generic_genus(4);
    TransferOp theta = transfer_between(src, dst, 4);
    for (int n = 0; n <= 4; ++n)
        for (auto& lam : partitions_of(n))
            CHECK(theta.apply(full_binomial(src, lam)) == full_binomial(dst, lam));

    // transfer operators are coalgebra maps: (theta x theta) Delta = Delta theta
    auto f = [&theta](const SymFunc& p) { return theta.apply(p); };
    for (int n = 0; n <= 4; ++n)
        for (auto& lam : partitions_of(n)) {
            TensorElem lhs = coproduct(theta.apply(m(lam)));
            TensorElem rhs = coproduct(m(lam)).map_left(f).map_right(f);
            CHECK(lhs == rhs);
        }

    // and they preserve the counit
    for (int rep = 0; rep < 8; ++rep) {
        SymFunc p = random_symfunc(4, 3);
        CHECK(epsilon(theta.apply(p)) == epsilon(p));
    }
}

TEST_CASE("adjoints transpose the coefficient matrix") {
    QuasiGenus src = random_generic_genus(5), dst = random_generic_genus(5);
    TransferOp theta = transfer_between(src, dst, 5);

    // defining relation: eps((adj theta f) p) = eps(f (theta p))
    std::uniform_int_distribution<int> dc(-3, 3);
    for (int rep = 0; rep < 12; ++rep) {
        ShiftInvOp f;
        for (int t = 0; t < 3; ++t) f.add(random_partition(5), Rat(dc(rng)));
        SymFunc p = random_symfunc(5, 3);
        CHECK(epsilon(adjoint_apply(theta, f).apply(p)) == epsilon(f.apply(theta.apply(p))));
    }

    // transpose relation on basis pairs, and the double adjoint
    for (int n = 0; n <= 5; ++n)
        for (auto& lam : partitions_of(n)) {
            ShiftInvOp img = adjoint_d_image(theta, lam);
            for (auto& mu : partitions_of(n)) {
                CHECK(img.coeff(mu) == theta.d_entry(mu, lam));
                // adj(adj theta) D_mu read through two transposes returns theta
                CHECK(epsilon(img.apply(m(mu))) == theta.d_entry(mu, lam));
            }
        }

    // identity transfers to the identity adjoint
    TransferOp idt = transfer_between(src, src, 4);
    for (int n = 0; n <= 4; ++n)
        for (auto& lam : partitions_of(n)) {
            ShiftInvOp img = adjoint_d_image(idt, lam);
            CHECK(img == ShiftInvOp::basis(lam));
        }
}

TEST_CASE("adjoint reverses composites of transfer operators") {
    // adj(theta1 . theta2) = adj(theta2) . adj(theta1) on the D_lambda basis
    int N = 4;
    QuasiGenus a = random_generic_genus(N), b = random_generic_genus(N),
               c = random_generic_genus(N);
    TransferOp t1 = transfer_between(b, c, N);  // carries b-sequences to c-sequences
    TransferOp t2 = transfer_between(a, b, N);
    // composite transfer: apply t2 then t1
    std::map<Partition, SymFunc, PartitionOrder> images;
    for (int n = 0; n <= N; ++n)
        for (auto& lam : partitions_of(n)) images[lam] = t1.apply(t2.image_of_m(lam));
    TransferOp comp(std::move(images), N);

    for (int n = 0; n <= N; ++n)
        for (auto& lam : partitions_of(n)) {
            ShiftInvOp lhs = adjoint_d_image(comp, lam);
            // adj(t2) applied to adj(t1) D_lambda
            ShiftInvOp rhs = adjoint_apply(t2, adjoint_d_image(t1, lam));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("adjoint of omega via the forgotten functions") {
    TransferOp om = omega_transfer(5);
    // coefficients of adj(omega) D_n are the m_(n)-coefficients of f_mu
    for (int n = 1; n <= 5; ++n) {
        auto cs = adjoint_dn_coeffs(om, n);
        for (auto& mu : partitions_of(n)) {
            Rat expect = forgotten(mu).coeff(P({n}));
            CHECK(cs.count(mu) == (is_zero(expect) ? 0u : 1u));
            if (!is_zero(expect)) CHECK(cs[mu] == expect);
        }
    }
    // pinned degree 2: adj(omega) D_(2) = -D_(2) + D_(1,1)
    auto c2 = adjoint_dn_coeffs(om, 2);
    CHECK(c2[P({2})] == -1);
    CHECK(c2[P({1, 1})] == 1);
}

TEST_CASE("transfer data transforms genera through margin matrices") {
    // identity data: c_{(n)} = 1, everything else 0  ->  H = G
    QuasiGenus g = random_generic_genus(4);
    std::map<int, std::map<Partition, Rat, PartitionOrder>> idc;
    for (int n = 1; n <= 4; ++n) idc[n][P({n})] = 1;
    QuasiGenus h = transfer_apply_genus(idc, g, 4);
    for (int n = 0; n <= 4; ++n)
        for (auto& lam : partitions_of(n)) CHECK(h.at(lam) == g.at(lam));

    // omega data carries the elementary genus to the complete genus
    TransferOp om = omega_transfer(4);
    std::map<int, std::map<Partition, Rat, PartitionOrder>> oc;
    for (int n = 1; n <= 4; ++n) oc[n] = adjoint_dn_coeffs(om, n);
    QuasiGenus he = transfer_apply_genus(oc, genus_e(4), 4);
    QuasiGenus hh = genus_h(4);
    for (int n = 0; n <= 4; ++n)
        for (auto& lam : partitions_of(n)) CHECK(he.at(lam) == hh.at(lam));
}
