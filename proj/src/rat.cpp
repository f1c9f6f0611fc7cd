#include "unclogic/rat.hpp"

#include <cctype>

namespace unclogic {

Rat rat_from_string(const std::string& text) {
    std::size_t i = 0, n = text.size();
    auto fail = [&](const std::string& why) -> Rat {
        throw ParseError("bad rational '" + text + "': " + why, i);
    };
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    bool neg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    std::string intpart, fracpart, denpart;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) intpart += text[i++];
    if (i < n && text[i] == '.') {
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) fracpart += text[i++];
        if (intpart.empty() && fracpart.empty()) return fail("no digits");
    } else if (i < n && text[i] == '/') {
        ++i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) denpart += text[i++];
        if (intpart.empty() || denpart.empty()) return fail("missing numerator or denominator");
    }
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != n || start == n || (intpart.empty() && fracpart.empty()))
        return fail("trailing characters or no digits");

    mpz_class num(intpart.empty() ? "0" : intpart);
    mpz_class den(1);
    if (!fracpart.empty()) {
        for (char c : fracpart) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
    } else if (!denpart.empty()) {
        den = mpz_class(denpart);
        if (den == 0) return fail("zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    if (neg) r = -r;
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace unclogic
