#include <doctest.h>

#include <random>

#include "umbra/symfunc.hpp"

using namespace umbra;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

std::mt19937_64 rng(0x5eed5001);

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

}  // namespace

TEST_CASE("monomial expansion in finitely many variables") {
    // m_() is the constant 1
    CHECK(m(Partition()) == SymFunc::constant(1));

    // m_(2,1) in 3 variables: a^2b + a^2c + b^2a + b^2c + c^2a + c^2b
    MultiPoly e21 = expand_in_vars(m(P({2, 1})), 3);
    CHECK(e21.terms().size() == 6);
    CHECK(e21.coeff({2, 1, 0}) == 1);
    CHECK(e21.coeff({0, 1, 2}) == 1);
    CHECK(e21.coeff({1, 1, 1}) == 0);

    // m_(1,1) in 3 variables: ab + ac + bc
    MultiPoly e11 = expand_in_vars(m(P({1, 1})), 3);
    CHECK(e11.terms().size() == 3);
    CHECK(e11.coeff({1, 1, 0}) == 1);

    // too few variables kills the monomial
    CHECK(expand_in_vars(m(P({1, 1, 1})), 2).is_zero());

    // collect round-trips
    SymFunc f = random_symfunc(5, 4);
    CHECK(collect_symmetric(expand_in_vars(f, 6)) == f);
}

TEST_CASE("addition and scaling") {
    SymFunc p = random_symfunc(5, 3);
    CHECK(p + SymFunc() == p);
    CHECK(m(P({1})) + m(P({1})) == scale(2, m(P({1}))));
    CHECK(scale(frac(1, 2), scale(2, m(P({2})))) == m(P({2})));
    CHECK((p - p).is_zero());
}

TEST_CASE("monomial products: pinned values") {
    SymFunc m1 = m(P({1}));
    CHECK(mul(m1, m1) == scale(2, m(P({1, 1}))) + m(P({2})));
    CHECK(mul(SymFunc::constant(1), m1) == m1);

    // m_(1) * m_(2) = m_(2,1) + m_(3); oracle: 3-variable polynomial product
    SymFunc lhs = mul(m1, m(P({2})));
    MultiPoly oracle = expand_in_vars(m1, 3) * expand_in_vars(m(P({2})), 3);
    CHECK(lhs == m(P({2, 1})) + m(P({3})));
    CHECK(expand_in_vars(lhs, 3) == oracle);
}

TEST_CASE("multiplication agrees with the finite-variable oracle") {
    for (int rep = 0; rep < 60; ++rep) {
        SymFunc p = random_symfunc(5, 3), q = random_symfunc(5, 3);
        MultiPoly oracle = expand_in_vars(p, 10) * expand_in_vars(q, 10);
        CHECK(expand_in_vars(mul(p, q), 10) == oracle);
    }
}

TEST_CASE("multiplication is commutative, associative, distributive") {
    for (int rep = 0; rep < 25; ++rep) {
        SymFunc p = random_symfunc(4, 2), q = random_symfunc(4, 2), r = random_symfunc(4, 2);
        CHECK(mul(p, q) == mul(q, p));
        CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
        CHECK(mul(p, q + r) == mul(p, q) + mul(p, r));
    }
    CHECK_THROWS_AS(mul(m(P({20})), m(P({20})), 32), resource_error);
}

TEST_CASE("elementary, complete and power sum bases") {
    // e_n = m_(1^n); tables in 3 variables
    MultiPoly e2 = expand_in_vars(e_n(2), 3);
    CHECK(e2.coeff({1, 1, 0}) == 1);
    CHECK(e2.terms().size() == 3);
    MultiPoly e3 = expand_in_vars(e_n(3), 3);
    CHECK(e3.coeff({1, 1, 1}) == 1);
    CHECK(e3.terms().size() == 1);

    CHECK(h_n(2) == m(P({2})) + m(P({1, 1})));
    MultiPoly h2 = expand_in_vars(h_n(2), 3);
    CHECK(h2.terms().size() == 6);  // ab+ac+bc+a^2+b^2+c^2
    CHECK(h2.coeff({2, 0, 0}) == 1);
    CHECK(h2.coeff({1, 1, 0}) == 1);

    CHECK(pow_n(2) == m(P({2})));
    CHECK(basis_pow(P({2, 1})) == mul(pow_n(2), pow_n(1)));
    CHECK(basis_e(P({2, 1})) == mul(e_n(2), e_n(1)));
    CHECK(basis_h(P({3})) == h_n(3));
}

TEST_CASE("Schur functions by Jacobi-Trudi") {
    // 1x1 determinant
    for (int n = 1; n <= 5; ++n) CHECK(schur(P({n})) == h_n(n));

    // 2x2 by hand: s_(1,1) = h_1^2 - h_2 = e_2
    CHECK(schur(P({1, 1})) == mul(h_n(1), h_n(1)) - h_n(2));
    CHECK(schur(P({1, 1})) == m(P({1, 1})));

    // s_(2,1) = h_2 h_1 - h_3 = m_(2,1) + 2 m_(1,1,1)
    CHECK(schur(P({2, 1})) == mul(h_n(2), h_n(1)) - h_n(3));
    CHECK(schur(P({2, 1})) == m(P({2, 1})) + scale(2, m(P({1, 1, 1}))));

    CHECK(schur(Partition()) == SymFunc::constant(1));

    CHECK_THROWS_AS(skew_schur(P({2, 2}), P({3})), domain_error);
    CHECK(skew_schur(P({2, 1}), P({2})) == h_n(1));
}

TEST_CASE("Schur equals the alternant ratio in l(lambda)+1 variables") {
    // a_{lambda+delta} = det[ y_i^{lambda_j + N - j} ], delta = (N-1,...,0);
    // check a_delta * s_lambda = a_{lambda+delta} as N-variable polynomials.
    auto alternant = [](const std::vector<int>& expo, int N) {
        MultiPoly det(N);
        std::vector<int> perm(N);
        for (int i = 0; i < N; ++i) perm[i] = i;
        do {
            int inv = 0;
            for (int i = 0; i < N; ++i)
                for (int j = i + 1; j < N; ++j)
                    if (perm[i] > perm[j]) ++inv;
            std::vector<int> mono(N, 0);
            for (int i = 0; i < N; ++i) mono[i] = expo[perm[i]];
            det.add_term(std::move(mono), Rat(inv % 2 ? -1 : 1));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return det;
    };
    for (int n = 0; n <= 6; ++n)
        for (auto& lam : partitions_of(n)) {
            int N = lam.length() + 1;
            std::vector<int> shape(N, 0), staircase(N, 0);
            for (int i = 0; i < N; ++i) {
                shape[i] = lam.part(i + 1) + (N - 1 - i);
                staircase[i] = N - 1 - i;
            }
            MultiPoly lhs = alternant(staircase, N) * expand_in_vars(schur(lam), N);
            CHECK(lhs == alternant(shape, N));
        }
}

TEST_CASE("omega swaps e and h and is an involutive ring map") {
    CHECK(omega(h_n(2)) == e_n(2));
    CHECK(omega(SymFunc::constant(1)) == SymFunc::constant(1));
    for (int n = 1; n <= 6; ++n) {
        CHECK(omega(e_n(n)) == h_n(n));
        CHECK(omega(h_n(n)) == e_n(n));
        // omega(pow_n) = (-1)^(n-1) pow_n
        CHECK(omega(pow_n(n)) == scale(Rat((n - 1) % 2 ? -1 : 1), pow_n(n)));
    }
    // pinned by the pow relation: omega(m_(2)) = -m_(2)
    CHECK(omega(m(P({2}))) == -m(P({2})));

    for (int rep = 0; rep < 15; ++rep) {
        SymFunc p = random_symfunc(5, 3), q = random_symfunc(4, 2);
        CHECK(omega(omega(p)) == p);
        CHECK(omega(mul(p, q)) == mul(omega(p), omega(q)));
    }
}

TEST_CASE("forgotten symmetric functions") {
    CHECK(forgotten(P({1})) == m(P({1})));
    CHECK(forgotten(P({1, 1})) == h_n(2));       // omega(e_2)
    CHECK(forgotten(P({2})) == -m(P({2})));      // same oracle as the omega test
}

TEST_CASE("alternating e/h convolution vanishes") {
    for (int n = 1; n <= 12; ++n) {
        SymFunc acc;
        for (int i = 0; i <= n; ++i)
            acc += scale(Rat(i % 2 ? -1 : 1), mul(e_n(i), h_n(n - i)));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("basis conversions: pinned coefficients") {
    auto he = to_basis(h_n(2), Basis::e);
    CHECK(he[P({1, 1})] == 1);
    CHECK(he[P({2})] == -1);
    CHECK(he.size() == 2);

    auto mm = to_basis(m(P({3, 1})), Basis::m);
    CHECK(mm.size() == 1);
    CHECK(mm[P({3, 1})] == 1);

    auto sh = to_basis(schur(P({2, 1})), Basis::h);
    CHECK(sh[P({2, 1})] == 1);
    CHECK(sh[P({3})] == -1);
    CHECK(sh.size() == 2);
}

TEST_CASE("basis conversions round-trip through degree 8") {
    for (Basis b : {Basis::m, Basis::e, Basis::h, Basis::pow, Basis::s}) {
        for (int rep = 0; rep < 6; ++rep) {
            SymFunc p = random_symfunc(8, 3);
            CHECK(from_basis(to_basis(p, b), b) == p);
        }
    }
}

TEST_CASE("projection Pi") {
    // Pi m_(1,1) = x(x-1)/2
    UniPoly p11 = project_pi(m(P({1, 1})));
    CHECK(p11 == uni_scale(frac(1, 2), falling_factorial(2)));

    // Pi pow_lambda = x^(l(lambda))
    for (auto lam : {P({3}), P({2, 1}), P({4, 2, 1})})
        CHECK(project_pi(basis_pow(lam)) == UniPoly::x_power(lam.length()));

    // Pi e_n = C(x, n)
    for (int n = 0; n <= 5; ++n)
        CHECK(project_pi(e_n(n)) == uni_scale(Rat(1) / Rat(factorial(n)), falling_factorial(n)));

    // homomorphism on random pairs
    for (int rep = 0; rep < 20; ++rep) {
        SymFunc p = random_symfunc(6, 3), q = random_symfunc(6, 3);
        CHECK(project_pi(mul(p, q)) == project_pi(p) * project_pi(q));
    }

    // kernel contains pow_n - pow_m
    for (int n = 1; n <= 8; ++n)
        for (int mm2 = 1; mm2 < n; ++mm2)
            CHECK(project_pi(pow_n(n) - pow_n(mm2)).is_zero());
}

TEST_CASE("UniPoly arithmetic") {
    UniPoly x = UniPoly::x_power(1);
    CHECK((x * x + x).to_string() == "x^2 + x");
    CHECK(falling_factorial(2).eval(5) == 20);
    CHECK(rising_factorial(3).eval(2) == 24);
    CHECK(UniPoly({Rat(1), Rat(-1)}) * UniPoly({Rat(1), Rat(1)}) ==
          UniPoly({Rat(1), Rat(0), Rat(-1)}));
}
