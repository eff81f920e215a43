#include "umbra/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace umbra {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw domain_error("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw domain_error("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> v) {
    for (int x : v)
        if (x < 0) throw domain_error("partition parts must be nonnegative");
    std::sort(v.begin(), v.end(), std::greater<int>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return Partition(std::move(v));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::mult(int i) const {
    int c = 0;
    for (int p : parts_) c += (p == i);
    return c;
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[i - 1];
}

Int Partition::part_factorial() const {
    Int f = 1;
    for (int p : parts_) f *= factorial(p);
    return f;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool revlex_before(const Partition& a, const Partition& b) {
    const auto& u = a.parts();
    const auto& v = b.parts();
    for (std::size_t i = 0; i < std::max(u.size(), v.size()); ++i) {
        int x = i < u.size() ? u[i] : 0;
        int y = i < v.size() ? v[i] : 0;
        if (x != y) return x > y;  // larger first differing part comes earlier
    }
    return false;
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return revlex_before(a, b);
}

std::vector<Partition> partitions_of(int n, int cap) {
    if (n < 0) throw domain_error("partitions_of: negative weight");
    if (n > cap) throw resource_error("partitions_of: weight " + std::to_string(n) +
                                      " exceeds degree cap " + std::to_string(cap));
    std::vector<Partition> out;
    std::vector<int> cur;
    // Largest-first recursion emits reverse lexicographic order directly.
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

namespace {
// Multiplicity scan shared by the multiset operations.
std::map<int, int> mults(const Partition& p) {
    std::map<int, int> m;
    for (int x : p.parts()) ++m[x];
    return m;
}
}  // namespace

bool multiset_contains(const Partition& lambda, const Partition& mu) {
    auto ml = mults(lambda);
    for (auto& [v, c] : mults(mu))
        if (ml[v] < c) return false;
    return true;
}

Partition multiset_diff(const Partition& lambda, const Partition& mu) {
    if (!multiset_contains(lambda, mu))
        throw domain_error("multiset_diff: " + mu.to_string() + " is not a sub-multiset of " +
                           lambda.to_string());
    auto mm = mults(mu);
    std::vector<int> out;
    for (int x : lambda.parts()) {
        auto it = mm.find(x);
        if (it != mm.end() && it->second > 0)
            --it->second;
        else
            out.push_back(x);
    }
    return Partition(std::move(out));
}

Partition multiset_union(const Partition& lambda, const Partition& mu) {
    std::vector<int> out;
    out.reserve(lambda.parts().size() + mu.parts().size());
    std::merge(lambda.parts().begin(), lambda.parts().end(), mu.parts().begin(), mu.parts().end(),
               std::back_inserter(out), std::greater<int>());
    return Partition(std::move(out));
}

IntVec::IntVec(std::vector<int> entries) : e_(std::move(entries)) {
    for (int x : e_)
        if (x < 0) throw domain_error("IntVec entries must be nonnegative");
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
}

int IntVec::at(int i) const {
    if (i < 1 || i > support_length()) return 0;
    return e_[i - 1];
}

int IntVec::total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

Int IntVec::entry_factorial() const {
    Int f = 1;
    for (int x : e_) f *= factorial(x);
    return f;
}

Partition IntVec::sorted() const { return Partition::from_unsorted(e_); }

bool ferrers_contains(const Partition& lambda, const Partition& mu) {
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

IntVec ferrers_diff(const Partition& lambda, const Partition& mu) {
    if (!ferrers_contains(lambda, mu))
        throw domain_error("ferrers_diff: " + mu.to_string() + " is not contained in " +
                           lambda.to_string());
    std::vector<int> d(lambda.length());
    for (int i = 1; i <= lambda.length(); ++i) d[i - 1] = lambda.part(i) - mu.part(i);
    return IntVec(std::move(d));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    for (int j = 1; j <= lambda.part(1); ++j) {
        int c = 0;
        for (int p : lambda.parts()) c += (p >= j);
        out.push_back(c);
    }
    return Partition(std::move(out));
}

Int multinomial(int n, const Partition& lambda) {
    if (lambda.size() != n)
        throw domain_error("multinomial: lambda must be a partition of n");
    return factorial(n) / lambda.part_factorial();
}

Int multinomial(const Partition& lambda, const IntVec& alpha) {
    int len = std::max(lambda.length(), alpha.support_length());
    Int r = 1;
    for (int i = 1; i <= len; ++i) {
        if (alpha.at(i) > lambda.part(i))
            throw domain_error("multinomial: alpha exceeds lambda componentwise");
        r *= binomial(lambda.part(i), alpha.at(i));
    }
    return r;
}

IntVec NatMatrix::row_sums() const {
    std::vector<int> s;
    for (auto& r : rows) s.push_back(std::accumulate(r.begin(), r.end(), 0));
    return IntVec(std::move(s));
}

IntVec NatMatrix::col_sums() const {
    if (rows.empty()) return IntVec();
    std::vector<int> s(rows[0].size(), 0);
    for (auto& r : rows)
        for (std::size_t j = 0; j < r.size(); ++j) s[j] += r[j];
    return IntVec(std::move(s));
}

std::vector<NatMatrix> matrices_with_margins(const Partition& row_sums,
                                             const Partition& col_sums) {
    if (row_sums.size() != col_sums.size())
        throw domain_error("matrices_with_margins: margins must have equal totals");
    int nr = row_sums.length(), nc = col_sums.length();
    std::vector<NatMatrix> out;
    if (nr == 0) {
        if (col_sums.empty()) out.push_back(NatMatrix{});
        return out;
    }
    std::vector<int> colrest(col_sums.parts());
    NatMatrix work;
    work.rows.assign(nr, std::vector<int>(nc, 0));

    // Fill row by row; within a row, cell by cell against the remaining
    // column budgets.
    std::function<void(int, int, int)> cell = [&](int i, int j, int rowrest) {
        if (j == nc) {
            if (rowrest != 0) return;
            if (i + 1 == nr) {
                out.push_back(work);
            } else {
                cell(i + 1, 0, row_sums.part(i + 2));
            }
            return;
        }
        int hi = std::min(rowrest, colrest[j]);
        for (int v = 0; v <= hi; ++v) {
            work.rows[i][j] = v;
            colrest[j] -= v;
            cell(i, j + 1, rowrest - v);
            colrest[j] += v;
            work.rows[i][j] = 0;
        }
    };
    cell(0, 0, row_sums.part(1));
    return out;
}

}  // namespace umbra
