#ifndef UMBRA_ERRORS_HPP
#define UMBRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace umbra {

// Violated mathematical precondition (multiset non-containment, bad series
// constant term, inadmissible plethysm argument, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Combinatorial size guard tripped (degree cap, enumeration cap).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Surface-syntax error, carries a character position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Everything in the engine is graded; the cap bounds the degree of any value
// we agree to materialize.  Guards combinatorial explosion, nothing else.
inline constexpr int default_degree_cap = 32;

// Default truncation order for univariate formal power series.
inline constexpr int default_truncation = 12;

}  // namespace umbra

#endif
