#include "umbra/symfunc.hpp"

#include <algorithm>
#include <functional>

namespace umbra {

SymFunc SymFunc::constant(const Rat& c) {
    SymFunc p;
    p.add_term(Partition(), c);
    return p;
}

Rat SymFunc::coeff(const Partition& lambda) const {
    auto it = c_.find(lambda);
    return it == c_.end() ? Rat(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rat& c) {
    if (umbra::is_zero(c)) return;
    auto [it, inserted] = c_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (umbra::is_zero(it->second)) c_.erase(it);
    }
}

int SymFunc::grade() const {
    int g = -1;
    for (auto& [l, c] : c_) g = std::max(g, l.size());
    return g;
}

SymFunc SymFunc::homogeneous(int n) const {
    SymFunc out;
    for (auto& [l, c] : c_)
        if (l.size() == n) out.add_term(l, c);
    return out;
}

bool SymFunc::is_homogeneous() const {
    if (c_.empty()) return true;
    int n = c_.begin()->first.size();
    for (auto& [l, c] : c_)
        if (l.size() != n) return false;
    return true;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc out = *this;
    for (auto& [l, c] : o.c_) out.add_term(l, c);
    return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    for (auto& [l, c] : o.c_) add_term(l, c);
    return *this;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    SymFunc out = *this;
    for (auto& [l, c] : o.c_) out.add_term(l, -c);
    return out;
}

SymFunc SymFunc::operator-() const {
    SymFunc out;
    for (auto& [l, c] : c_) out.add_term(l, -c);
    return out;
}

std::string SymFunc::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [l, c] : c_) {
        Rat a = c;
        if (first) {
            if (sgn(a) < 0) s += "-", a = -a;
        } else {
            s += sgn(a) < 0 ? " - " : " + ";
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        std::string mono;
        if (l.empty()) {
            mono = rat_to_string(a);
        } else {
            std::string idx;
            for (std::size_t i = 0; i < l.parts().size(); ++i) {
                if (i) idx += ",";
                idx += std::to_string(l.parts()[i]);
            }
            mono = (a == 1 ? "" : rat_to_string(a) + "*") + "m[" + idx + "]";
        }
        s += mono;
    }
    return s;
}

SymFunc m(const Partition& lambda) {
    SymFunc p;
    p.add_term(lambda, 1);
    return p;
}

SymFunc scale(const Rat& c, const SymFunc& p) {
    SymFunc out;
    if (is_zero(c)) return out;
    for (auto& [l, a] : p.terms()) out.add_term(l, c * a);
    return out;
}

SymFunc truncate_degree(const SymFunc& p, int bound) {
    SymFunc out;
    for (auto& [l, a] : p.terms())
        if (l.size() <= bound) out.add_term(l, a);
    return out;
}

namespace {

/* Count the interleavings contributing to m_nu in m_lambda * m_mu: pairs of
 * vectors (alpha, beta) of length l(nu) with alpha + beta = nu, alpha a
 * permutation-with-zeros of lambda, beta of mu.  DFS over positions,
 * consuming part multisets; branching on distinct values only. */
long count_interleavings(const Partition& nu, std::map<int, int> remA, std::map<int, int> remB) {
    const auto& target = nu.parts();
    std::function<long(std::size_t)> rec = [&](std::size_t pos) -> long {
        if (pos == target.size()) return 1;  // both multisets exhausted by weight count
        int t = target[pos];
        long total = 0;
        // alpha takes 0 at this position: beta must take t
        {
            auto it = remB.find(t);
            if (it != remB.end() && it->second > 0) {
                --it->second;
                total += rec(pos + 1);
                ++it->second;
            }
        }
        // alpha takes a distinct value a (0 < a <= t); beta takes t-a (0 means absent)
        for (auto& [a, ca] : remA) {
            if (ca == 0 || a > t) continue;
            int b = t - a;
            if (b == 0) {
                --remA[a];
                total += rec(pos + 1);
                ++remA[a];
            } else {
                auto itb = remB.find(b);
                if (itb != remB.end() && itb->second > 0) {
                    --remA[a];
                    --itb->second;
                    total += rec(pos + 1);
                    ++itb->second;
                    ++remA[a];
                }
            }
        }
        return total;
    };
    return rec(0);
}

std::map<int, int> part_mults(const Partition& p) {
    std::map<int, int> m;
    for (int x : p.parts()) ++m[x];
    return m;
}

}  // namespace

SymFunc mul_mm(const Partition& lambda, const Partition& mu) {
    if (lambda.empty()) return m(mu);
    if (mu.empty()) return m(lambda);
    int n = lambda.size() + mu.size();
    int lmin = std::max(lambda.length(), mu.length());
    int lmax = lambda.length() + mu.length();
    SymFunc out;
    for (const Partition& nu : partitions_of(n, n)) {
        if (nu.length() < lmin || nu.length() > lmax) continue;
        if (nu.part(1) > lambda.part(1) + mu.part(1)) continue;
        long cnt = count_interleavings(nu, part_mults(lambda), part_mults(mu));
        if (cnt) out.add_term(nu, Rat(cnt));
    }
    return out;
}

SymFunc mul(const SymFunc& p, const SymFunc& q, int cap) {
    if (p.is_zero() || q.is_zero()) return SymFunc();
    if (p.grade() + q.grade() > cap)
        throw resource_error("mul: product grade exceeds degree cap");
    SymFunc out;
    for (auto& [l, a] : p.terms())
        for (auto& [mu, b] : q.terms()) out += scale(a * b, mul_mm(l, mu));
    return out;
}

SymFunc power(const SymFunc& p, int e, int cap) {
    SymFunc out = SymFunc::constant(1);
    for (int i = 0; i < e; ++i) out = mul(out, p, cap);
    return out;
}

SymFunc e_n(int n, int cap) {
    if (n > cap) throw resource_error("e_n: degree cap exceeded");
    if (n < 0) return SymFunc();
    return m(Partition(std::vector<int>(n, 1)));
}

SymFunc h_n(int n, int cap) {
    if (n > cap) throw resource_error("h_n: degree cap exceeded");
    if (n < 0) return SymFunc();
    SymFunc out;
    for (const Partition& rho : partitions_of(n, cap)) out.add_term(rho, 1);
    return out;
}

SymFunc pow_n(int n) {
    if (n == 0) return SymFunc::constant(1);
    return m(Partition({n}));
}

namespace {
SymFunc product_basis(const Partition& lambda, int cap, SymFunc (*gen)(int, int)) {
    if (lambda.size() > cap) throw resource_error("basis element exceeds degree cap");
    SymFunc out = SymFunc::constant(1);
    for (int p : lambda.parts()) out = mul(out, gen(p, cap), cap);
    return out;
}
}  // namespace

SymFunc basis_e(const Partition& lambda, int cap) { return product_basis(lambda, cap, e_n); }
SymFunc basis_h(const Partition& lambda, int cap) { return product_basis(lambda, cap, h_n); }

SymFunc basis_pow(const Partition& lambda, int cap) {
    if (lambda.size() > cap) throw resource_error("basis element exceeds degree cap");
    SymFunc out = SymFunc::constant(1);
    for (int p : lambda.parts()) out = mul(out, pow_n(p), cap);
    return out;
}

namespace {

/* Jacobi-Trudi determinants are expanded in h-index space first (a signed sum
 * over permutations of index lists), then each distinct h_kappa is expanded
 * into the monomial basis once. */
SymFunc h_determinant(const std::vector<std::vector<int>>& idx, int cap) {
    int n = static_cast<int>(idx.size());
    std::map<Partition, Rat, PartitionOrder> hcoeff;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<int> pick;
    // Iterate permutations with parity tracked by inversion count.
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& avail, int sign) {
        if (avail.empty()) {
            std::vector<int> parts;
            for (int k : pick) {
                if (k < 0) return;  // dead branch guard; filtered earlier
                if (k > 0) parts.push_back(k);
            }
            Partition kappa = Partition::from_unsorted(parts);
            auto [it, ins] = hcoeff.emplace(kappa, Rat(sign));
            if (!ins) it->second += sign;
            return;
        }
        int row = n - static_cast<int>(avail.size());
        for (std::size_t i = 0; i < avail.size(); ++i) {
            int col = avail[i];
            int k = idx[row][col];
            if (k < 0) continue;  // h of negative index: whole term vanishes
            // parity: removing element at position i flips sign by i
            std::vector<int> rest;
            rest.reserve(avail.size() - 1);
            for (std::size_t j = 0; j < avail.size(); ++j)
                if (j != i) rest.push_back(avail[j]);
            pick.push_back(k);
            rec(rest, (i % 2 == 0) ? sign : -sign);
            pick.pop_back();
        }
    };
    rec(perm, 1);
    SymFunc out;
    for (auto& [kappa, c] : hcoeff) {
        if (is_zero(c)) continue;
        out += scale(c, basis_h(kappa, cap));
    }
    return out;
}

}  // namespace

SymFunc jacobi_trudi_skew(const Partition& lambda, const Partition& mu, int cap) {
    int n = lambda.length();
    if (n == 0) return SymFunc::constant(1);
    if (lambda.size() > cap) throw resource_error("schur: degree cap exceeded");
    std::vector<std::vector<int>> idx(n, std::vector<int>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) idx[i - 1][j - 1] = lambda.part(i) - mu.part(j) - i + j;
    return h_determinant(idx, cap);
}

SymFunc schur(const Partition& lambda, int cap) {
    return jacobi_trudi_skew(lambda, Partition(), cap);
}

SymFunc skew_schur(const Partition& lambda, const Partition& mu, int cap) {
    if (!ferrers_contains(lambda, mu))
        throw domain_error("skew_schur: " + mu.to_string() + " is not contained in " +
                           lambda.to_string());
    return jacobi_trudi_skew(lambda, mu, cap);
}

Partition leading_partition(const SymFunc& p) {
    if (p.is_zero()) throw domain_error("leading_partition of zero");
    int g = p.grade();
    const Partition* best = nullptr;
    for (auto& [l, c] : p.terms()) {
        if (l.size() != g) continue;
        if (!best || revlex_before(l, *best)) best = &l;
    }
    return *best;
}

/* Conversion to the e basis is a triangular solve: the reverse-lex-largest
 * monomial of e_kappa is m_{kappa'} with coefficient 1 (Gale-Ryser extremal
 * matrix), and every other monomial of e_kappa is strictly smaller. */
static std::map<Partition, Rat, PartitionOrder> to_e_basis(SymFunc p) {
    std::map<Partition, Rat, PartitionOrder> out;
    while (!p.is_zero()) {
        Partition mu = leading_partition(p);
        Rat c = p.coeff(mu);
        Partition kappa = conjugate(mu);
        out[kappa] = c;
        p = p - scale(c, basis_e(kappa, std::max(default_degree_cap, p.grade())));
    }
    return out;
}

SymFunc omega(const SymFunc& p) {
    SymFunc out;
    for (auto& [kappa, c] : to_e_basis(p))
        out += scale(c, basis_h(kappa, std::max(default_degree_cap, p.grade())));
    return out;
}

SymFunc forgotten(const Partition& lambda) { return omega(m(lambda)); }

std::map<Partition, Rat, PartitionOrder> to_basis(const SymFunc& p, Basis b) {
    std::map<Partition, Rat, PartitionOrder> out;
    int cap = std::max(default_degree_cap, p.grade());
    switch (b) {
        case Basis::m:
            for (auto& [l, c] : p.terms()) out[l] = c;
            return out;
        case Basis::e:
            return to_e_basis(p);
        case Basis::h: {
            // p = sum c_k h_k  <=>  omega(p) = sum c_k e_k
            return to_e_basis(omega(p));
        }
        case Basis::pow: {
            /* pow_kappa = (prod mult_i(kappa)!) m_kappa + coarser terms, and
             * coarsenings are reverse-lex earlier, so peel the map-largest
             * (finest) support partition each round. */
            SymFunc rest = p;
            while (!rest.is_zero()) {
                Partition kappa = rest.terms().rbegin()->first;
                Int mf = 1;
                for (int v = 1; v <= kappa.part(1); ++v) mf *= factorial(kappa.mult(v));
                Rat c = rest.coeff(kappa) / Rat(mf);
                out[kappa] = c;
                rest = rest - scale(c, basis_pow(kappa, cap));
            }
            return out;
        }
        case Basis::s: {
            // s_kappa = m_kappa + strictly smaller terms (Kostka triangularity)
            SymFunc rest = p;
            while (!rest.is_zero()) {
                Partition kappa = leading_partition(rest);
                Rat c = rest.coeff(kappa);
                out[kappa] = c;
                rest = rest - scale(c, schur(kappa, cap));
            }
            return out;
        }
    }
    throw domain_error("to_basis: unknown basis");
}

SymFunc from_basis(const std::map<Partition, Rat, PartitionOrder>& coeffs, Basis b) {
    SymFunc out;
    for (auto& [l, c] : coeffs) {
        switch (b) {
            case Basis::m: out += scale(c, m(l)); break;
            case Basis::e: out += scale(c, basis_e(l)); break;
            case Basis::h: out += scale(c, basis_h(l)); break;
            case Basis::pow: out += scale(c, basis_pow(l)); break;
            case Basis::s: out += scale(c, schur(l)); break;
        }
    }
    return out;
}

// --- UniPoly -----------------------------------------------------------------

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && umbra::is_zero(c_.back())) c_.pop_back();
}

UniPoly UniPoly::x_power(int k) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = 1;
    return UniPoly(std::move(c));
}

Rat UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

Rat UniPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(c));
}

std::string UniPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        Rat a = c_[k];
        if (umbra::is_zero(a)) continue;
        if (!s.empty()) {
            s += sgn(a) < 0 ? " - " : " + ";
            if (sgn(a) < 0) a = -a;
        } else if (sgn(a) < 0) {
            s += "-";
            a = -a;
        }
        if (k == 0) {
            s += rat_to_string(a);
        } else {
            if (a != 1) s += rat_to_string(a) + "*";
            s += k == 1 ? "x" : "x^" + std::to_string(k);
        }
    }
    return s;
}

UniPoly uni_scale(const Rat& c, const UniPoly& p) {
    std::vector<Rat> out(p.coeffs());
    for (auto& a : out) a *= c;
    return UniPoly(std::move(out));
}

UniPoly falling_factorial(int n) {
    UniPoly r = UniPoly({Rat(1)});
    for (int i = 0; i < n; ++i) r = r * UniPoly({Rat(-i), Rat(1)});
    return r;
}

UniPoly rising_factorial(int n) {
    UniPoly r = UniPoly({Rat(1)});
    for (int i = 0; i < n; ++i) r = r * UniPoly({Rat(i), Rat(1)});
    return r;
}

UniPoly project_pi(const SymFunc& p) {
    UniPoly out;
    for (auto& [l, c] : p.terms()) {
        Int mf = 1;
        for (int v = 1; v <= l.part(1); ++v) mf *= factorial(l.mult(v));
        out = out + uni_scale(c / Rat(mf), falling_factorial(l.length()));
    }
    return out;
}

// --- MultiPoly ---------------------------------------------------------------

Rat MultiPoly::coeff(const std::vector<int>& expo) const {
    auto it = c_.find(expo);
    return it == c_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(std::vector<int> expo, const Rat& c) {
    if (umbra::is_zero(c)) return;
    expo.resize(nvars_, 0);
    auto [it, ins] = c_.emplace(std::move(expo), c);
    if (!ins) {
        it->second += c;
        if (umbra::is_zero(it->second)) c_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (auto& [e, c] : o.c_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (auto& [e, c] : o.c_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out(std::max(nvars_, o.nvars_));
    for (auto& [e1, c1] : c_)
        for (auto& [e2, c2] : o.c_) {
            std::vector<int> e(out.nvars(), 0);
            for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
            for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
            out.add_term(std::move(e), c1 * c2);
        }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const { return c_ == o.c_; }

MultiPoly expand_in_vars(const SymFunc& p, int k) {
    MultiPoly out(k);
    for (auto& [l, c] : p.terms()) {
        if (l.length() > k) continue;  // too few variables: the monomial dies
        std::vector<int> expo(k, 0);
        for (int i = 0; i < l.length(); ++i) expo[i] = l.parts()[i];
        // descending start + next_permutation over "greater" = all distinct rearrangements
        std::sort(expo.begin(), expo.end(), std::greater<int>());
        do {
            out.add_term(expo, c);
        } while (std::next_permutation(expo.begin(), expo.end(), std::greater<int>()));
    }
    return out;
}

SymFunc collect_symmetric(const MultiPoly& poly) {
    SymFunc out;
    for (auto& [e, c] : poly.terms()) {
        bool sorted = true;
        for (std::size_t i = 1; i < e.size(); ++i)
            if (e[i - 1] < e[i]) {
                sorted = false;
                break;
            }
        if (!sorted) continue;
        out.add_term(Partition::from_unsorted(e), c);
    }
    return out;
}

}  // namespace umbra
