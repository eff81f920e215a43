#include "umbra/rational.hpp"

#include "umbra/errors.hpp"

namespace umbra {

Int factorial(long n) {
    Int f;
    if (n < 0) throw domain_error("factorial of negative integer");
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat frac(long num, long den) {
    if (den == 0) throw domain_error("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw domain_error("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw domain_error("malformed rational literal: " + s);
    if (q.get_den() == 0) throw domain_error("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace umbra
