#ifndef UMBRA_POWERSERIES_HPP
#define UMBRA_POWERSERIES_HPP

#include <string>
#include <vector>

#include "umbra/errors.hpp"
#include "umbra/rational.hpp"

namespace umbra {

/* Truncated univariate formal power series over the rationals.  Coefficients
 * t^0..t^T are stored; nothing beyond the truncation order is ever assumed
 * zero, and arithmetic results carry the minimum of the operand truncations. */
class FPSeries {
public:
    FPSeries() : trunc_(default_truncation), c_(default_truncation + 1, Rat(0)) {}
    FPSeries(std::vector<Rat> coeffs, int truncation);
    static FPSeries zero(int truncation) { return FPSeries({}, truncation); }
    static FPSeries one(int truncation) { return FPSeries({Rat(1)}, truncation); }
    static FPSeries t(int truncation) { return FPSeries({Rat(0), Rat(1)}, truncation); }

    int truncation() const { return trunc_; }
    Rat coeff(int k) const;
    void set_coeff(int k, const Rat& c);

    FPSeries operator+(const FPSeries& o) const;
    FPSeries operator-(const FPSeries& o) const;
    FPSeries operator*(const FPSeries& o) const;  // Cauchy product, truncated
    bool operator==(const FPSeries& o) const;     // same truncation and coefficients

    std::string to_string() const;

private:
    int trunc_;
    std::vector<Rat> c_;
};

FPSeries fps_scale(const Rat& c, const FPSeries& f);
FPSeries fps_derivative(const FPSeries& f);  // termwise d/dt, truncation drops by one

// exp needs f(0) = 0; log needs f(0) = 1.  Exact truncated results.
FPSeries fps_exp(const FPSeries& f);
FPSeries fps_log(const FPSeries& f);

// compose needs g(0) = 0; inverse needs f(0) = 0 and f'(0) != 0.  The inverse
// is found by coefficient-by-coefficient recursion and satisfies
// f(g(t)) = t = g(f(t)) up to the truncation order.
FPSeries fps_compose(const FPSeries& f, const FPSeries& g);
FPSeries fps_inverse(const FPSeries& f);

}  // namespace umbra

#endif
