#include "umbra/powerseries.hpp"

#include <algorithm>

namespace umbra {

FPSeries::FPSeries(std::vector<Rat> coeffs, int truncation) : trunc_(truncation), c_(std::move(coeffs)) {
    if (truncation < 0) throw domain_error("FPSeries: negative truncation");
    c_.resize(trunc_ + 1, Rat(0));
}

Rat FPSeries::coeff(int k) const {
    if (k < 0) return 0;
    if (k > trunc_) throw domain_error("FPSeries: coefficient beyond truncation is undefined");
    return c_[k];
}

void FPSeries::set_coeff(int k, const Rat& c) {
    if (k < 0 || k > trunc_) throw domain_error("FPSeries: index out of range");
    c_[k] = c;
}

FPSeries FPSeries::operator+(const FPSeries& o) const {
    int T = std::min(trunc_, o.trunc_);
    FPSeries r = zero(T);
    for (int k = 0; k <= T; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

FPSeries FPSeries::operator-(const FPSeries& o) const {
    int T = std::min(trunc_, o.trunc_);
    FPSeries r = zero(T);
    for (int k = 0; k <= T; ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

FPSeries FPSeries::operator*(const FPSeries& o) const {
    int T = std::min(trunc_, o.trunc_);
    FPSeries r = zero(T);
    for (int i = 0; i <= T; ++i) {
        if (is_zero(c_[i])) continue;
        for (int j = 0; i + j <= T; ++j) {
            if (is_zero(o.c_[j])) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

bool FPSeries::operator==(const FPSeries& o) const {
    if (trunc_ != o.trunc_) return false;
    return c_ == o.c_;
}

std::string FPSeries::to_string() const {
    std::string s = "[";
    for (int k = 0; k <= trunc_; ++k) {
        if (k) s += ", ";
        s += rat_to_string(c_[k]);
    }
    return s + "]";
}

FPSeries fps_scale(const Rat& c, const FPSeries& f) {
    FPSeries r = FPSeries::zero(f.truncation());
    for (int k = 0; k <= f.truncation(); ++k) r.set_coeff(k, c * f.coeff(k));
    return r;
}

FPSeries fps_derivative(const FPSeries& f) {
    if (f.truncation() == 0) return FPSeries::zero(0);
    FPSeries r = FPSeries::zero(f.truncation() - 1);
    for (int k = 1; k <= f.truncation(); ++k) r.set_coeff(k - 1, Rat(k) * f.coeff(k));
    return r;
}

FPSeries fps_exp(const FPSeries& f) {
    if (!is_zero(f.coeff(0))) throw domain_error("fps_exp: constant term must vanish");
    int T = f.truncation();
    FPSeries r = FPSeries::one(T);
    FPSeries pw = FPSeries::one(T);
    Rat fact = 1;
    for (int k = 1; k <= T; ++k) {
        pw = pw * f;
        fact *= k;
        r = r + fps_scale(1 / fact, pw);
    }
    return r;
}

FPSeries fps_log(const FPSeries& f) {
    if (f.coeff(0) != 1) throw domain_error("fps_log: constant term must be one");
    int T = f.truncation();
    FPSeries u = f - FPSeries::one(T);  // u(0) = 0
    FPSeries r = FPSeries::zero(T);
    FPSeries pw = FPSeries::one(T);
    for (int k = 1; k <= T; ++k) {
        pw = pw * u;
        r = r + fps_scale(frac((k % 2) ? 1 : -1, k), pw);
    }
    return r;
}

FPSeries fps_compose(const FPSeries& f, const FPSeries& g) {
    if (!is_zero(g.coeff(0))) throw domain_error("fps_compose: inner constant term must vanish");
    int T = std::min(f.truncation(), g.truncation());
    // Horner from the top coefficient down; every step stays truncated at T.
    // g has positive valuation, so f-coefficients beyond T cannot reach t^<=T.
    FPSeries r = FPSeries::zero(T);
    for (int k = T; k >= 0; --k) {
        r = r * g + fps_scale(f.coeff(k), FPSeries::one(T));
    }
    return r;
}

FPSeries fps_inverse(const FPSeries& f) {
    if (!is_zero(f.coeff(0))) throw domain_error("fps_inverse: constant term must vanish");
    if (is_zero(f.coeff(1))) throw domain_error("fps_inverse: linear term must not vanish");
    int T = f.truncation();
    FPSeries g = FPSeries::zero(T);
    g.set_coeff(1, 1 / f.coeff(1));
    // Newton-free coefficient recursion: adding g_n t^n moves [t^n] f(g) by
    // f'(0) g_n, so each coefficient is pinned by one linear solve.
    for (int n = 2; n <= T; ++n) {
        Rat resid = fps_compose(f, g).coeff(n);
        g.set_coeff(n, -resid / f.coeff(1));
    }
    return g;
}

}  // namespace umbra
