#include <doctest.h>

#include <random>

#include "umbra/powerseries.hpp"
#include "umbra/species.hpp"

using namespace umbra;

namespace {
std::mt19937_64 rng(0x5eed5002);

FPSeries random_series(int T, bool zero_const, bool unit_linear) {
    std::uniform_int_distribution<int> dc(-3, 3);
    FPSeries f = FPSeries::zero(T);
    for (int k = zero_const ? 1 : 0; k <= T; ++k) f.set_coeff(k, dc(rng));
    if (unit_linear && is_zero(f.coeff(1))) f.set_coeff(1, 1);
    return f;
}

// Independent oracle: Lagrange inversion, [t^n] f^{-1} = (1/n) [t^{n-1}] (t/f)^n.
FPSeries lagrange_inverse(const FPSeries& f) {
    int T = f.truncation();
    // u = f/t as a series of truncation T-1 with u(0) = f'(0) != 0
    FPSeries u = FPSeries::zero(T - 1);
    for (int k = 1; k <= T; ++k) u.set_coeff(k - 1, f.coeff(k));
    // w = 1/u by coefficient recursion
    FPSeries w = FPSeries::zero(T - 1);
    w.set_coeff(0, 1 / u.coeff(0));
    for (int n = 1; n <= T - 1; ++n) {
        Rat acc = 0;
        for (int k = 1; k <= n; ++k) acc += u.coeff(k) * w.coeff(n - k);
        w.set_coeff(n, -acc / u.coeff(0));
    }
    FPSeries g = FPSeries::zero(T);
    FPSeries wn = FPSeries::one(T - 1);
    for (int n = 1; n <= T; ++n) {
        wn = wn * w;  // (t/f)^n with the t's cancelled
        g.set_coeff(n, wn.coeff(n - 1) / Rat(n));
    }
    return g;
}
}  // namespace

TEST_CASE("series arithmetic") {
    int T = 8;
    FPSeries one = FPSeries::one(T), t = FPSeries::t(T);
    CHECK((one + t) * (one - t) == one - t * t);
    FPSeries f = random_series(T, false, false);
    CHECK(f * one == f);

    // geometric series times (1 - t) telescopes to 1
    FPSeries geo = FPSeries::zero(T);
    for (int k = 0; k <= T; ++k) geo.set_coeff(k, 1);
    CHECK(geo * (one - t) == one);

    // truncation of a product is the min of the operands'
    CHECK((FPSeries::one(5) * FPSeries::one(9)).truncation() == 5);
}

TEST_CASE("exp and log") {
    int T = 12;
    FPSeries expt = fps_exp(FPSeries::t(T));
    for (int k = 0; k <= T; ++k) CHECK(expt.coeff(k) == Rat(1) / Rat(factorial(k)));

    // log(1+t) = t - t^2/2 + t^3/3 - ...
    FPSeries log1p = fps_log(FPSeries::one(T) + FPSeries::t(T));
    for (int k = 1; k <= T; ++k) CHECK(log1p.coeff(k) == frac(k % 2 ? 1 : -1, k));

    // exp(t/(1-t)): n! [t^n] = 1, 1, 3, 13, 73 (exponential formula oracle below)
    FPSeries tover = FPSeries::zero(T);
    for (int k = 1; k <= T; ++k) tover.set_coeff(k, 1);
    FPSeries el = fps_exp(tover);
    std::vector<long> expect{1, 1, 3, 13, 73};
    for (int n = 0; n <= 4; ++n) CHECK(el.coeff(n) * Rat(factorial(n)) == expect[n]);
    // independent route: the combinatorial exponential formula
    QuasiSpecies lin = named_species(NamedSpecies::Lin, T);
    QuasiSpecies asm_lin = species_exp(lin, T);
    for (int n = 0; n <= T; ++n) CHECK(el.coeff(n) == asm_lin.at(n) / Rat(factorial(n)));

    CHECK_THROWS_AS(fps_exp(FPSeries::one(4)), domain_error);
    CHECK_THROWS_AS(fps_log(FPSeries::t(4)), domain_error);

    for (int rep = 0; rep < 20; ++rep) {
        int T2 = 10 + (rep % 7);  // up to truncation 16
        FPSeries f = random_series(T2, true, false);
        CHECK(fps_log(fps_exp(f)) == f);
        FPSeries g = FPSeries::one(T2) + random_series(T2, true, false);
        CHECK(fps_exp(fps_log(g)) == g);
    }
}

TEST_CASE("composition and compositional inverse") {
    int T = 10;
    // inverse of log(1+t) is e^t - 1
    FPSeries log1p = fps_log(FPSeries::one(T) + FPSeries::t(T));
    FPSeries em1 = fps_exp(FPSeries::t(T)) - FPSeries::one(T);
    CHECK(fps_inverse(log1p) == em1);

    // inverse of 1 - e^{-t} is log(1/(1-t))
    FPSeries one_minus_exp = FPSeries::one(T) - fps_exp(fps_scale(-1, FPSeries::t(T)));
    FPSeries geo = FPSeries::zero(T);
    for (int k = 0; k <= T; ++k) geo.set_coeff(k, 1);
    CHECK(fps_inverse(one_minus_exp) == fps_log(geo));

    // inverse of t e^{-t} counts rooted trees: n! [t^n] = n^{n-1}
    FPSeries te = FPSeries::t(T) * fps_exp(fps_scale(-1, FPSeries::t(T)));
    FPSeries trees = fps_inverse(te);
    std::vector<long> expect{1, 2, 9, 64};
    for (int n = 1; n <= 4; ++n) CHECK(trees.coeff(n) * Rat(factorial(n)) == expect[n - 1]);

    CHECK_THROWS_AS(fps_compose(FPSeries::t(5), FPSeries::one(5)), domain_error);
    CHECK_THROWS_AS(fps_inverse(FPSeries::one(5)), domain_error);
    CHECK_THROWS_AS(fps_inverse(FPSeries::t(5) * FPSeries::t(5)), domain_error);

    for (int rep = 0; rep < 15; ++rep) {
        FPSeries f = random_series(9, true, true);
        FPSeries g = fps_inverse(f);
        CHECK(fps_compose(f, g) == FPSeries::t(9));
        CHECK(fps_compose(g, f) == FPSeries::t(9));
        CHECK(g == lagrange_inverse(f));
    }
}

TEST_CASE("delta operator pair per species") {
    int T = 8;
    // degenerate: conjugate t, associated t
    DeltaPair deg = delta_pair(named_species(NamedSpecies::Deg, T), T);
    CHECK(deg.conjugate == FPSeries::t(T));
    CHECK(deg.associated == FPSeries::t(T));

    // injections: conjugate log(1+t), associated e^t - 1
    DeltaPair inj = delta_pair(named_species(NamedSpecies::Inj, T), T);
    CHECK(inj.conjugate == fps_log(FPSeries::one(T) + FPSeries::t(T)));
    CHECK(inj.associated == fps_exp(FPSeries::t(T)) - FPSeries::one(T));

    // assemblies of linear orders: conjugate t/(1-t), associated t/(1+t)
    DeltaPair lag = delta_pair(named_species(NamedSpecies::ExpLin, T), T);
    FPSeries tgeo = FPSeries::zero(T), talt = FPSeries::zero(T);
    for (int k = 1; k <= T; ++k) {
        tgeo.set_coeff(k, 1);
        talt.set_coeff(k, Rat(k % 2 ? 1 : -1));
    }
    CHECK(lag.conjugate == tgeo);
    CHECK(lag.associated == talt);

    // rooted forests: conjugate is the tree series, associated t e^{-t}
    DeltaPair forest = delta_pair(named_species(NamedSpecies::Forest, T), T);
    CHECK(forest.associated == FPSeries::t(T) * fps_exp(fps_scale(-1, FPSeries::t(T))));
    for (int n = 1; n <= 6; ++n)
        CHECK(forest.conjugate.coeff(n) == Rat(int_pow(Int(n), n - 1)) / Rat(factorial(n)));
}

TEST_CASE("species operations mirror their generating functions") {
    int T = 10;
    std::uniform_int_distribution<int> dc(-3, 3);
    auto random_species = [&](bool unit_head) {
        QuasiSpecies s;
        s.a.assign(T + 1, Rat(0));
        for (int n = 0; n <= T; ++n) s.a[n] = dc(rng);
        if (unit_head) s.a[0] = 1;
        return s;
    };
    for (int rep = 0; rep < 12; ++rep) {
        QuasiSpecies s1 = random_species(true), s2 = random_species(true);
        CHECK(species_egf(species_sum(s1, s2), T) == species_egf(s1, T) + species_egf(s2, T));
        CHECK(species_egf(species_product(s1, s2), T) ==
              species_egf(s1, T) * species_egf(s2, T));

        QuasiSpecies inner = s2;
        inner.a[0] = 0;
        CHECK(species_egf(species_exp(inner, T), T) == fps_exp(species_egf(inner, T)));
        CHECK(species_egf(species_compose(s1, inner, T), T) ==
              fps_compose(species_egf(s1, T), species_egf(inner, T)));

        FPSeries ds = species_egf(species_derive(s1), T - 1);
        CHECK(ds == fps_derivative(species_egf(s1, T)));
    }
}
