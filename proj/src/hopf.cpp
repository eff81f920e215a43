#include "umbra/hopf.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace umbra {

Rat TensorElem::coeff(const Partition& left, const Partition& right) const {
    auto it = c_.find({left, right});
    return it == c_.end() ? Rat(0) : it->second;
}

void TensorElem::add_term(const Partition& left, const Partition& right, const Rat& c) {
    if (umbra::is_zero(c)) return;
    auto [it, ins] = c_.emplace(Key{left, right}, c);
    if (!ins) {
        it->second += c;
        if (umbra::is_zero(it->second)) c_.erase(it);
    }
}

TensorElem TensorElem::operator+(const TensorElem& o) const {
    TensorElem r = *this;
    for (auto& [k, c] : o.c_) r.add_term(k.first, k.second, c);
    return r;
}

TensorElem TensorElem::operator-(const TensorElem& o) const {
    TensorElem r = *this;
    for (auto& [k, c] : o.c_) r.add_term(k.first, k.second, -c);
    return r;
}

TensorElem TensorElem::operator*(const TensorElem& o) const {
    TensorElem r;
    for (auto& [k1, c1] : c_)
        for (auto& [k2, c2] : o.c_) {
            SymFunc left = mul(m(k1.first), m(k2.first));
            SymFunc right = mul(m(k1.second), m(k2.second));
            Rat c = c1 * c2;
            for (auto& [lm, lc] : left.terms())
                for (auto& [rm, rc] : right.terms()) r.add_term(lm, rm, c * lc * rc);
        }
    return r;
}

TensorElem TensorElem::swap() const {
    TensorElem r;
    for (auto& [k, c] : c_) r.add_term(k.second, k.first, c);
    return r;
}

TensorElem TensorElem::map_left(const std::function<SymFunc(const SymFunc&)>& f) const {
    TensorElem r;
    for (auto& [k, c] : c_) {
        SymFunc img = f(m(k.first));
        for (auto& [l, a] : img.terms()) r.add_term(l, k.second, c * a);
    }
    return r;
}

TensorElem TensorElem::map_right(const std::function<SymFunc(const SymFunc&)>& f) const {
    TensorElem r;
    for (auto& [k, c] : c_) {
        SymFunc img = f(m(k.second));
        for (auto& [l, a] : img.terms()) r.add_term(k.first, l, c * a);
    }
    return r;
}

SymFunc TensorElem::contract_multiply() const {
    SymFunc r;
    for (auto& [k, c] : c_) r += scale(c, mul(m(k.first), m(k.second)));
    return r;
}

SymFunc TensorElem::counit_left() const {
    SymFunc r;
    for (auto& [k, c] : c_)
        if (k.first.empty()) r.add_term(k.second, c);
    return r;
}

SymFunc TensorElem::counit_right() const {
    SymFunc r;
    for (auto& [k, c] : c_)
        if (k.second.empty()) r.add_term(k.first, c);
    return r;
}

TensorElem coproduct(const SymFunc& p) {
    TensorElem r;
    for (auto& [lambda, c] : p.terms()) {
        // all distinct sub-multisets mu of lambda; nu = lambda \ mu
        std::vector<std::pair<int, int>> vals;  // (value, multiplicity)
        for (int v = lambda.part(1); v >= 1; --v)
            if (lambda.mult(v)) vals.emplace_back(v, lambda.mult(v));
        std::vector<int> take(vals.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == vals.size()) {
                std::vector<int> muv, nuv;
                for (std::size_t t = 0; t < vals.size(); ++t) {
                    for (int j = 0; j < take[t]; ++j) muv.push_back(vals[t].first);
                    for (int j = take[t]; j < vals[t].second; ++j) nuv.push_back(vals[t].first);
                }
                r.add_term(Partition::from_unsorted(muv), Partition::from_unsorted(nuv), c);
                return;
            }
            for (int j = 0; j <= vals[i].second; ++j) {
                take[i] = j;
                rec(i + 1);
            }
            take[i] = 0;
        };
        rec(0);
    }
    return r;
}

SymFunc antipode(const SymFunc& p) {
    SymFunc out;
    for (int n = 0; n <= p.grade(); ++n) {
        SymFunc comp = p.homogeneous(n);
        if (comp.is_zero()) continue;
        out += scale(Rat(n % 2 ? -1 : 1), omega(comp));
    }
    return out;
}

bool HopfReport::all_pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

// Minimal univariate binomial Hopf structure, used only to test Pi as a
// morphism: polynomials in two variables as exponent-pair maps.
using UniPoly2 = std::map<std::pair<int, int>, Rat>;

UniPoly2 poly_coproduct(const UniPoly& p) {
    UniPoly2 r;
    for (int n = 0; n <= p.degree(); ++n) {
        Rat c = p.coeff(n);
        if (is_zero(c)) continue;
        for (int k = 0; k <= n; ++k) {
            Rat v = c * Rat(binomial(n, k));
            auto [it, ins] = r.emplace(std::make_pair(k, n - k), v);
            if (!ins) {
                it->second += v;
                if (is_zero(it->second)) r.erase(it);
            }
        }
    }
    return r;
}

UniPoly2 pi_tensor(const TensorElem& t) {
    UniPoly2 r;
    for (auto& [k, c] : t.terms()) {
        UniPoly left = project_pi(m(k.first));
        UniPoly right = project_pi(m(k.second));
        for (int i = 0; i <= left.degree(); ++i) {
            if (is_zero(left.coeff(i))) continue;
            for (int j = 0; j <= right.degree(); ++j) {
                Rat v = c * left.coeff(i) * right.coeff(j);
                if (is_zero(v)) continue;
                auto [it, ins] = r.emplace(std::make_pair(i, j), v);
                if (!ins) {
                    it->second += v;
                    if (is_zero(it->second)) r.erase(it);
                }
            }
        }
    }
    return r;
}

using Triple = std::tuple<Partition, Partition, Partition>;
struct TripleOrder {
    bool operator()(const Triple& a, const Triple& b) const {
        PartitionOrder lt;
        if (std::get<0>(a) != std::get<0>(b)) return lt(std::get<0>(a), std::get<0>(b));
        if (std::get<1>(a) != std::get<1>(b)) return lt(std::get<1>(a), std::get<1>(b));
        return lt(std::get<2>(a), std::get<2>(b));
    }
};
using Tensor3 = std::map<Triple, Rat, TripleOrder>;

void add3(Tensor3& t, const Partition& a, const Partition& b, const Partition& c, const Rat& v) {
    if (is_zero(v)) return;
    auto [it, ins] = t.emplace(Triple{a, b, c}, v);
    if (!ins) {
        it->second += v;
        if (is_zero(it->second)) t.erase(it);
    }
}

Tensor3 coassoc_left(const TensorElem& d) {  // (Delta (x) id)
    Tensor3 t;
    for (auto& [k, c] : d.terms()) {
        TensorElem inner = coproduct(m(k.first));
        for (auto& [ik, ic] : inner.terms()) add3(t, ik.first, ik.second, k.second, c * ic);
    }
    return t;
}

Tensor3 coassoc_right(const TensorElem& d) {  // (id (x) Delta)
    Tensor3 t;
    for (auto& [k, c] : d.terms()) {
        TensorElem inner = coproduct(m(k.second));
        for (auto& [ik, ic] : inner.terms()) add3(t, k.first, ik.first, ik.second, c * ic);
    }
    return t;
}

}  // namespace

HopfReport hopf_axiom_suite(int d, int pi_degree) {
    HopfReport rep;
    auto record = [&rep](const std::string& name, bool ok) {
        rep.checks.push_back(HopfCheck{name, ok});
    };

    std::vector<Partition> basis;
    for (int n = 0; n <= d; ++n)
        for (const Partition& l : partitions_of(n, std::max(n, default_degree_cap)))
            basis.push_back(l);

    bool coassoc = true, cocomm = true, counit = true, antip = true;
    for (const Partition& lambda : basis) {
        TensorElem delta = coproduct(m(lambda));
        coassoc &= (coassoc_left(delta) == coassoc_right(delta));
        cocomm &= (delta.swap() == delta);
        counit &= (delta.counit_left() == m(lambda)) && (delta.counit_right() == m(lambda));
        SymFunc conv_left = delta.map_left(antipode).contract_multiply();
        SymFunc conv_right = delta.map_right(antipode).contract_multiply();
        SymFunc unit_eps = lambda.empty() ? SymFunc::constant(1) : SymFunc();
        antip &= (conv_left == unit_eps) && (conv_right == unit_eps);
    }
    record("coassociativity", coassoc);
    record("cocommutativity", cocomm);
    record("counit", counit);
    record("antipode convolution", antip);

    bool bialg = true;
    for (const Partition& lambda : basis)
        for (const Partition& mu : basis) {
            if (lambda.size() + mu.size() > d) continue;
            TensorElem lhs = coproduct(mul(m(lambda), m(mu)));
            TensorElem rhs = coproduct(m(lambda)) * coproduct(m(mu));
            if (!(lhs == rhs)) {
                bialg = false;
                break;
            }
        }
    record("bialgebra Delta(pq) = Delta(p)Delta(q)", bialg);

    bool alt = true;
    for (int n = 1; n <= d; ++n) {
        SymFunc acc;
        for (int i = 0; i <= n; ++i)
            acc += scale(Rat(i % 2 ? -1 : 1), mul(e_n(i), h_n(n - i)));
        alt &= acc.is_zero();
    }
    record("sum (-1)^i e_i h_{n-i} = delta_{n,0}", alt);

    bool pim = true;
    for (int n = 0; n <= pi_degree; ++n)
        for (const Partition& lambda : partitions_of(n, std::max(n, default_degree_cap))) {
            UniPoly2 lhs = poly_coproduct(project_pi(m(lambda)));
            UniPoly2 rhs = pi_tensor(coproduct(m(lambda)));
            if (lhs != rhs) {
                pim = false;
                break;
            }
        }
    record("Pi is a Hopf morphism", pim);

    return rep;
}

// --- transfer operators --------------------------------------------------------

TransferOp::TransferOp(std::map<Partition, SymFunc, PartitionOrder> images, int max_degree)
    : images_(std::move(images)), max_degree_(max_degree) {}

const SymFunc& TransferOp::image_of_m(const Partition& lambda) const {
    auto it = images_.find(lambda);
    if (it == images_.end())
        throw resource_error("transfer operator not materialized at " + lambda.to_string());
    return it->second;
}

Rat TransferOp::d_entry(const Partition& lambda, const Partition& mu) const {
    return image_of_m(lambda).coeff(mu);
}

SymFunc TransferOp::apply(const SymFunc& p) const {
    SymFunc out;
    for (auto& [l, c] : p.terms()) out += scale(c, image_of_m(l));
    return out;
}

namespace {

// Exact dense linear solve A x = b over the rationals; A is consumed.
// Returns false when A is singular.
bool solve_exact(std::vector<std::vector<Rat>> A, std::vector<Rat> b, std::vector<Rat>& x) {
    std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && is_zero(A[piv][col])) ++piv;
        if (piv == n) return false;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        Rat inv = 1 / A[col][col];
        for (std::size_t j = col; j < n; ++j) A[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(A[r][col])) continue;
            Rat f = A[r][col];
            for (std::size_t j = col; j < n; ++j) A[r][j] -= f * A[col][j];
            b[r] -= f * b[col];
        }
    }
    x = std::move(b);
    return true;
}

TransferOp transfer_from_families(
    const std::function<SymFunc(const Partition&)>& src_family,
    const std::function<SymFunc(const Partition&)>& dst_family, int max_degree,
    const std::string& what) {
    std::map<Partition, SymFunc, PartitionOrder> images;
    images[Partition()] = SymFunc::constant(1);
    for (int n = 1; n <= max_degree; ++n) {
        std::vector<Partition> idx = partitions_of(n, std::max(n, default_degree_cap));
        std::size_t sz = idx.size();
        std::vector<SymFunc> src(sz), dst(sz);
        for (std::size_t i = 0; i < sz; ++i) {
            src[i] = src_family(idx[i]);
            dst[i] = dst_family(idx[i]);
        }
        // A[i][j] = [m_{idx_j}] src_i ; solve A^T x = e_mu for each mu.
        std::vector<std::vector<Rat>> At(sz, std::vector<Rat>(sz));
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = 0; j < sz; ++j) At[j][i] = src[i].coeff(idx[j]);
        for (std::size_t mu = 0; mu < sz; ++mu) {
            std::vector<Rat> b(sz, Rat(0)), x;
            b[mu] = 1;
            if (!solve_exact(At, b, x))
                throw domain_error(what + ": family is not a basis in degree " + std::to_string(n));
            SymFunc img;
            for (std::size_t i = 0; i < sz; ++i) img += scale(x[i], dst[i]);
            images[idx[mu]] = img;
        }
    }
    return TransferOp(std::move(images), max_degree);
}

}  // namespace

TransferOp transfer_between(const QuasiSpecies& src, const QuasiSpecies& dst, int max_degree) {
    src.require_sequence_admissible();
    dst.require_sequence_admissible();
    auto fam = [max_degree](const QuasiSpecies& s) {
        return [&s, max_degree](const Partition& lambda) {
            SymFunc p = SymFunc::constant(1);
            for (int part : lambda.parts())
                p = mul(p, linear_binomial(s, part, std::max(max_degree, default_degree_cap)));
            return p;
        };
    };
    return transfer_from_families(fam(src), fam(dst), max_degree,
                                  "transfer_between(species): product extension");
}

TransferOp transfer_between(const QuasiGenus& src, const QuasiGenus& dst, int max_degree) {
    src.require_sequence_admissible();
    dst.require_sequence_admissible();
    int cap = std::max(max_degree, default_degree_cap);
    auto sf = [&src, cap](const Partition& l) { return full_binomial(src, l, cap); };
    auto df = [&dst, cap](const Partition& l) { return full_binomial(dst, l, cap); };
    return transfer_from_families(sf, df, max_degree, "transfer_between(genus)");
}

TransferOp omega_transfer(int max_degree) {
    std::map<Partition, SymFunc, PartitionOrder> images;
    for (int n = 0; n <= max_degree; ++n)
        for (const Partition& l : partitions_of(n, std::max(n, default_degree_cap)))
            images[l] = omega(m(l));
    return TransferOp(std::move(images), max_degree);
}

ShiftInvOp adjoint_d_image(const TransferOp& theta, const Partition& lambda) {
    ShiftInvOp out;
    int n = lambda.size();
    for (const Partition& mu : partitions_of(n, std::max(n, default_degree_cap)))
        out.add(mu, theta.d_entry(mu, lambda));
    return out;
}

std::map<Partition, Rat, PartitionOrder> adjoint_dn_coeffs(const TransferOp& theta, int n) {
    std::map<Partition, Rat, PartitionOrder> out;
    Partition row({n});
    for (const Partition& mu : partitions_of(n, std::max(n, default_degree_cap))) {
        Rat c = theta.d_entry(mu, row);
        if (!is_zero(c)) out[mu] = c;
    }
    return out;
}

ShiftInvOp adjoint_apply(const TransferOp& theta, const ShiftInvOp& f) {
    ShiftInvOp out;
    for (auto& [l, c] : f.coeffs()) {
        ShiftInvOp img = adjoint_d_image(theta, l);
        for (auto& [mu, a] : img.coeffs()) out.add(mu, c * a);
    }
    return out;
}

QuasiGenus transfer_apply_genus(
    const std::map<int, std::map<Partition, Rat, PartitionOrder>>& cn_coeffs, const QuasiGenus& g,
    int max_weight) {
    QuasiGenus h;
    h.set(Partition(), 1);
    for (int n = 1; n <= max_weight; ++n) {
        auto cn = cn_coeffs.find(n);
        if (cn == cn_coeffs.end())
            throw domain_error("transfer_apply_genus: missing coefficients for degree " +
                               std::to_string(n));
        for (const Partition& lambda : partitions_of(n, std::max(n, default_degree_cap))) {
            Rat acc = 0;
            Int lf = lambda.part_factorial();
            for (auto& [mu, c] : cn->second) {
                Rat inner = 0;
                for (const NatMatrix& M : matrices_with_margins(mu, lambda)) {
                    Rat w(lf);
                    for (auto& row : M.rows)
                        for (int v : row) w /= Rat(factorial(v));
                    for (auto& row : M.rows) w *= g.at(Partition::from_unsorted(row));
                    inner += w;
                }
                acc += c * inner;
            }
            h.set(lambda, acc);
        }
    }
    return h;
}

}  // namespace umbra
