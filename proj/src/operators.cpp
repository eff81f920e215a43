#include "umbra/operators.hpp"

#include <algorithm>

namespace umbra {

Rat epsilon(const SymFunc& p) { return p.coeff(Partition()); }

SymFunc sym_derivative(const SymFunc& p) {
    SymFunc out;
    Partition one({1});
    for (auto& [l, c] : p.terms()) {
        if (l.mult(1) == 0) continue;
        out.add_term(multiset_diff(l, one), c);
    }
    return out;
}

SymFunc iterated_derivative(int i, const SymFunc& p) {
    if (i < 1) throw domain_error("iterated_derivative: index must be positive");
    SymFunc out;
    Partition pi({i});
    Rat f(factorial(i));
    for (auto& [l, c] : p.terms()) {
        if (l.mult(i) == 0) continue;
        out.add_term(multiset_diff(l, pi), f * c);
    }
    return out;
}

SymFunc d_lambda(const Partition& lambda, const SymFunc& p) {
    SymFunc out;
    for (auto& [mu, c] : p.terms()) {
        if (!multiset_contains(mu, lambda)) continue;
        out.add_term(multiset_diff(mu, lambda), c);
    }
    return out;
}

SymFunc shift_eval(const Rat& a, const SymFunc& p) {
    SymFunc out = p;
    if (is_zero(a)) return out;
    Rat apow = 1;
    int g = p.grade();
    for (int n = 1; n <= g; ++n) {
        apow *= a;
        out += scale(apow, d_lambda(Partition({n}), p));
    }
    return out;
}

ShiftedPoly::ShiftedPoly(std::vector<SymFunc> by_power) : terms_(std::move(by_power)) {
    while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

const SymFunc& ShiftedPoly::at_power(int k) const {
    static const SymFunc zero;
    if (k < 0 || k > max_power()) return zero;
    return terms_[k];
}

SymFunc ShiftedPoly::eval(const Rat& a) const {
    SymFunc out;
    Rat apow = 1;
    for (int k = 0; k <= max_power(); ++k) {
        out += scale(apow, terms_[k]);
        apow *= a;
    }
    return out;
}

std::string ShiftedPoly::to_string(const std::string& symbol) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (int k = 0; k <= max_power(); ++k) {
        if (terms_[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (k == 0) {
            s += terms_[k].to_string();
        } else {
            s += symbol + (k == 1 ? "" : "^" + std::to_string(k)) + "*(" + terms_[k].to_string() +
                 ")";
        }
    }
    return s.empty() ? "0" : s;
}

ShiftedPoly shift_formal(const SymFunc& p) {
    int g = std::max(p.grade(), 0);
    std::vector<SymFunc> by_power(g + 1);
    by_power[0] = p;
    for (int n = 1; n <= g; ++n) by_power[n] = d_lambda(Partition({n}), p);
    return ShiftedPoly(std::move(by_power));
}

ShiftGrid shift_formal2(const SymFunc& p) {
    ShiftGrid grid;
    ShiftedPoly outer = shift_formal(p);
    for (int i = 0; i <= outer.max_power(); ++i) {
        ShiftedPoly inner = shift_formal(outer.at_power(i));
        for (int j = 0; j <= inner.max_power(); ++j) {
            if (!inner.at_power(j).is_zero()) grid[{j, i}] = inner.at_power(j);
        }
    }
    return grid;
}

SymFunc shift_alphabet(const std::vector<Rat>& z, const SymFunc& p) {
    SymFunc out = p;
    for (const Rat& a : z) out = shift_eval(a, out);
    return out;
}

std::vector<std::pair<int, Partition>> horizontal_strip_shift(const Partition& lambda) {
    // mu interleaves lambda: lambda_{i+1} <= mu_i <= lambda_i.
    std::vector<std::pair<int, Partition>> out;
    int ell = lambda.length();
    std::vector<int> mu(ell, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == ell) {
            Partition p = Partition::from_unsorted(mu);
            out.emplace_back(lambda.size() - p.size(), p);
            return;
        }
        int lo = lambda.part(i + 2);  // next part (0 beyond the end)
        int hi = lambda.part(i + 1);
        for (int v = lo; v <= hi; ++v) {
            mu[i] = v;
            rec(i + 1);
        }
        mu[i] = 0;
    };
    rec(0);
    return out;
}

ShiftedPoly schur_shift(const Partition& lambda, int cap) {
    std::vector<SymFunc> by_power(lambda.size() + 1);
    for (auto& [k, mu] : horizontal_strip_shift(lambda)) by_power[k] += schur(mu, cap);
    return ShiftedPoly(std::move(by_power));
}

ShiftInvOp::ShiftInvOp(CoeffMap coeffs) : c_(std::move(coeffs)) {
    for (auto it = c_.begin(); it != c_.end();) {
        if (is_zero(it->second))
            it = c_.erase(it);
        else
            ++it;
    }
}

ShiftInvOp ShiftInvOp::identity() { return basis(Partition()); }

ShiftInvOp ShiftInvOp::basis(const Partition& lambda) {
    ShiftInvOp f;
    f.add(lambda, 1);
    return f;
}

Rat ShiftInvOp::coeff(const Partition& lambda) const {
    auto it = c_.find(lambda);
    return it == c_.end() ? Rat(0) : it->second;
}

void ShiftInvOp::add(const Partition& lambda, const Rat& c) {
    if (is_zero(c)) return;
    auto [it, ins] = c_.emplace(lambda, c);
    if (!ins) {
        it->second += c;
        if (is_zero(it->second)) c_.erase(it);
    }
}

int ShiftInvOp::max_degree() const {
    int d = -1;
    for (auto& [l, c] : c_) d = std::max(d, l.size());
    return d;
}

SymFunc ShiftInvOp::apply(const SymFunc& p) const {
    SymFunc out;
    for (auto& [l, c] : c_) {
        if (l.size() > p.grade()) continue;  // grading: higher entries act by zero
        out += scale(c, d_lambda(l, p));
    }
    return out;
}

ShiftInvOp ShiftInvOp::operator+(const ShiftInvOp& o) const {
    ShiftInvOp r = *this;
    for (auto& [l, c] : o.c_) r.add(l, c);
    return r;
}

ShiftInvOp ShiftInvOp::compose(const ShiftInvOp& o) const {
    // D_lambda D_mu = D_{lambda u mu}: removals compose as the multiset union,
    // and the part-factorial normalizations multiply out to the union's.
    ShiftInvOp r;
    for (auto& [l, cl] : c_)
        for (auto& [mu, cm] : o.c_) r.add(multiset_union(l, mu), cl * cm);
    return r;
}

std::string ShiftInvOp::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto& [l, c] : c_) {
        if (!s.empty()) s += " + ";
        std::string idx;
        for (std::size_t i = 0; i < l.parts().size(); ++i) {
            if (i) idx += ",";
            idx += std::to_string(l.parts()[i]);
        }
        s += rat_to_string(c) + "*D[" + idx + "]";
    }
    return s;
}

ShiftInvOp op_scale(const Rat& c, const ShiftInvOp& f) {
    ShiftInvOp r;
    for (auto& [l, a] : f.coeffs()) r.add(l, c * a);
    return r;
}

ShiftInvOp expansion(const std::function<SymFunc(const SymFunc&)>& theta, int d) {
    ShiftInvOp::CoeffMap coeffs;
    for (int n = 0; n <= d; ++n)
        for (const Partition& lambda : partitions_of(n, std::max(n, default_degree_cap))) {
            Rat c = epsilon(theta(m(lambda)));
            if (!is_zero(c)) coeffs[lambda] = c;
        }
    ShiftInvOp op(std::move(coeffs));
    // Residual check on the spanning set: a mismatch means the black box was
    // not shift-invariant, which the reconstruction theorem excludes.
    for (int n = 0; n <= d; ++n)
        for (const Partition& lambda : partitions_of(n, std::max(n, default_degree_cap))) {
            if (op.apply(m(lambda)) != theta(m(lambda)))
                throw domain_error("expansion: operator is not shift-invariant on degree <= " +
                                   std::to_string(d));
        }
    return op;
}

std::map<Partition, Rat, PartitionOrder> taylor(const SymFunc& p) {
    std::map<Partition, Rat, PartitionOrder> out;
    int g = p.grade();
    for (int n = 0; n <= g; ++n)
        for (const Partition& lambda : partitions_of(n, std::max(n, default_degree_cap))) {
            Rat c = epsilon(d_lambda(lambda, p));
            if (!is_zero(c)) out[lambda] = c;
        }
    return out;
}

RomanResult roman_check(const ShiftInvOp& theta, const ShiftInvOp& phi, const QuasiSpecies& s,
                        int n, int cap) {
    Rat lhs = epsilon(theta.apply(phi.apply(linear_binomial(s, n, cap))));
    Rat rhs = 0;
    for (int k = 0; k <= n; ++k) {
        Rat tk = epsilon(theta.apply(linear_binomial(s, k, cap)));
        if (is_zero(tk)) continue;
        Rat pk = epsilon(phi.apply(linear_binomial(s, n - k, cap)));
        rhs += Rat(binomial(n, k)) * tk * pk;
    }
    return RomanResult{lhs == rhs, lhs, rhs};
}

}  // namespace umbra
