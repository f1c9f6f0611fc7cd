#ifndef UNCLOGIC_RAT_HPP
#define UNCLOGIC_RAT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace unclogic {

// Exact rational arithmetic everywhere; all comparisons in this project are
// exact, there are no tolerances.
using Rat = mpq_class;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg), pos_(0) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_ = 0;
};

class SortError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat_of(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a/b", integer, or decimal literals ("0.4" -> 2/5). Exact, no floats.
Rat rat_from_string(const std::string& text);

// Canonical form: "a" for integers, "a/b" otherwise.
std::string rat_to_string(const Rat& r);

inline bool in_unit_interval(const Rat& r) { return r >= 0 && r <= 1; }

}  // namespace unclogic

#endif
