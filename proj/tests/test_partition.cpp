#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "umbra/partition.hpp"

using namespace umbra;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("partitions_of generates reverse lexicographic order") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p1 = partitions_of(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == P({1}));

    // Oracle: generate exhaustively by brute force over part vectors, then
    // sort by the reverse-lex comparator and compare.
    auto p4 = partitions_of(4);
    std::vector<Partition> oracle;
    for (int a = 4; a >= 1; --a)
        for (int b = a; b >= 0; --b)
            for (int c = b; c >= 0; --c)
                for (int d = c; d >= 0; --d) {
                    if (b == 0 && (c > 0 || d > 0)) continue;
                    if (c == 0 && d > 0) continue;
                    if (a + b + c + d != 4) continue;
                    std::vector<int> v{a, b, c, d};
                    oracle.push_back(Partition::from_unsorted(v));
                }
    std::sort(oracle.begin(), oracle.end(),
              [](const Partition& x, const Partition& y) { return revlex_before(x, y); });
    oracle.erase(std::unique(oracle.begin(), oracle.end()), oracle.end());
    REQUIRE(p4.size() == oracle.size());
    for (std::size_t i = 0; i < p4.size(); ++i) CHECK(p4[i] == oracle[i]);

    CHECK(p4[0] == P({4}));
    CHECK(p4[1] == P({3, 1}));
    CHECK(p4[2] == P({2, 2}));
    CHECK(p4[3] == P({2, 1, 1}));
    CHECK(p4[4] == P({1, 1, 1, 1}));
}

TEST_CASE("partitions_of is strictly decreasing in reverse-lex and respects the cap") {
    for (int n = 0; n <= 9; ++n) {
        auto ps = partitions_of(n);
        for (std::size_t i = 1; i < ps.size(); ++i) CHECK(revlex_before(ps[i - 1], ps[i]));
    }
    CHECK_THROWS_AS(partitions_of(5, 4), resource_error);
}

TEST_CASE("reverse-lex comparison is a strict total order on small partitions") {
    std::vector<Partition> all;
    for (int n = 0; n <= 6; ++n)
        for (auto& p : partitions_of(n)) all.push_back(p);
    for (auto& a : all) CHECK_FALSE(revlex_before(a, a));
    for (auto& a : all)
        for (auto& b : all) {
            if (a == b) continue;
            CHECK(revlex_before(a, b) != revlex_before(b, a));
            for (auto& c : all)
                if (revlex_before(a, b) && revlex_before(b, c)) CHECK(revlex_before(a, c));
        }
}

TEST_CASE("multiset operations") {
    Partition lam({2, 2, 1}), mu({2, 1});
    CHECK(multiset_contains(lam, mu));
    CHECK(multiset_diff(lam, mu) == P({2}));
    CHECK(multiset_union(lam, mu) == P({2, 2, 2, 1, 1}));

    // empty mu is neutral
    CHECK(multiset_contains(lam, Partition()));
    CHECK(multiset_diff(lam, Partition()) == lam);
    CHECK(multiset_union(lam, Partition()) == lam);

    CHECK_FALSE(multiset_contains(P({3}), P({2})));
    CHECK_THROWS_AS(multiset_diff(P({3}), P({2})), domain_error);
}

TEST_CASE("multiset diff then union restores the partition") {
    for (int n = 0; n <= 6; ++n)
        for (auto& lam : partitions_of(n))
            for (int k = 0; k <= n; ++k)
                for (auto& mu : partitions_of(k)) {
                    if (!multiset_contains(lam, mu)) continue;
                    CHECK(multiset_union(multiset_diff(lam, mu), mu) == lam);
                }
}

TEST_CASE("Ferrers operations") {
    CHECK(ferrers_contains(P({3, 1}), P({2, 1})));
    CHECK(ferrers_diff(P({3, 1}), P({2, 1})) == IntVec({1, 0}));
    CHECK_FALSE(ferrers_contains(P({2, 2}), P({3})));
    CHECK(ferrers_contains(P({2, 2}), P({2, 2})));
    CHECK(ferrers_diff(P({2, 2}), P({2, 2})) == IntVec());
    CHECK_THROWS_AS(ferrers_diff(P({2, 2}), P({3})), domain_error);
}

TEST_CASE("conjugate partition") {
    CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
    CHECK(conjugate(P({2, 2})) == P({2, 2}));
    CHECK(conjugate(Partition()) == Partition());
    for (int n = 0; n <= 7; ++n)
        for (auto& lam : partitions_of(n)) CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("multinomial coefficients") {
    CHECK(multinomial(4, P({2, 1, 1})) == 12);
    CHECK(multinomial(P({2, 2}), IntVec({1, 1})) == 4);
    CHECK(multinomial(P({3, 1}), IntVec()) == 1);
    CHECK_THROWS_AS(multinomial(P({2, 1}), IntVec({3})), domain_error);

    // multinomial(lambda, alpha) * alpha! * (lambda - alpha)! == lambda!
    for (int n = 1; n <= 6; ++n)
        for (auto& lam : partitions_of(n)) {
            std::vector<int> alpha(lam.length(), 0);
            std::function<void(int)> rec = [&](int i) {
                if (i == lam.length()) {
                    IntVec a(alpha);
                    std::vector<int> rest;
                    for (int t = 0; t < lam.length(); ++t)
                        rest.push_back(lam.parts()[t] - alpha[t]);
                    IntVec r(rest);
                    CHECK(multinomial(lam, a) * a.entry_factorial() * r.entry_factorial() ==
                          lam.part_factorial());
                    return;
                }
                for (int v = 0; v <= lam.parts()[i]; ++v) {
                    alpha[i] = v;
                    rec(i + 1);
                }
                alpha[i] = 0;
            };
            rec(0);
        }
}

namespace {
// Independent count of matrices with fixed margins: scan columns, state =
// remaining row budget vector.
long count_margin_matrices(std::vector<int> rows, const std::vector<int>& cols, std::size_t j,
                           std::map<std::pair<std::vector<int>, std::size_t>, long>& memo) {
    if (j == cols.size()) {
        for (int r : rows)
            if (r) return 0;
        return 1;
    }
    auto key = std::make_pair(rows, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    // distribute cols[j] over the rows
    long total = 0;
    std::vector<int> take(rows.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
        if (i == rows.size()) {
            if (rest) return;
            std::vector<int> next = rows;
            for (std::size_t t = 0; t < rows.size(); ++t) next[t] -= take[t];
            total += count_margin_matrices(next, cols, j + 1, memo);
            return;
        }
        for (int v = 0; v <= std::min(rest, rows[i]); ++v) {
            take[i] = v;
            rec(i + 1, rest - v);
        }
        take[i] = 0;
    };
    rec(0, cols[j]);
    memo[key] = total;
    return total;
}
}  // namespace

TEST_CASE("matrices_with_margins") {
    auto ms = matrices_with_margins(P({1}), P({1}));
    REQUIRE(ms.size() == 1);
    CHECK(ms[0].rows == std::vector<std::vector<int>>{{1}});

    auto perms = matrices_with_margins(P({1, 1}), P({1, 1}));
    REQUIRE(perms.size() == 2);

    auto forced = matrices_with_margins(P({2}), P({1, 1}));
    REQUIRE(forced.size() == 1);
    CHECK(forced[0].rows == std::vector<std::vector<int>>{{1, 1}});

    CHECK_THROWS_AS(matrices_with_margins(P({2}), P({1})), domain_error);

    // enumerated count agrees with the DP counter for all margins of weight <= 6
    for (int n = 1; n <= 6; ++n)
        for (auto& r : partitions_of(n))
            for (auto& c : partitions_of(n)) {
                auto list = matrices_with_margins(r, c);
                for (auto& M : list) {
                    CHECK(M.row_sums() == IntVec(r.parts()));
                    CHECK(M.col_sums() == IntVec(c.parts()));
                }
                std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
                long dp = count_margin_matrices(r.parts(), c.parts(), 0, memo);
                CHECK(static_cast<long>(list.size()) == dp);
            }
}

TEST_CASE("partition validation and accessors") {
    CHECK_THROWS_AS(P({1, 2}), domain_error);
    CHECK_THROWS_AS(P({0}), domain_error);
    Partition lam({3, 2, 2});
    CHECK(lam.size() == 7);
    CHECK(lam.length() == 3);
    CHECK(lam.mult(2) == 2);
    CHECK(lam.part(1) == 3);
    CHECK(lam.part(4) == 0);
    CHECK(lam.part_factorial() == 24);
    CHECK(Partition::from_unsorted({0, 2, 1, 2}) == P({2, 2, 1}));
}
