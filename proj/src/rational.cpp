#include "glbranch/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace glb {

bool is_integer(const Rat& r) { return denominator(r) == 1; }

Int as_integer(const Rat& r) {
    if (!is_integer(r))
        throw std::invalid_argument("expected integer value, got " + format_rat(r));
    return numerator(r);
}

long as_long(const Rat& r) { return as_integer(r).convert_to<long>(); }

namespace {

Int parse_int_part(std::string_view s, std::string_view whole) {
    if (s.empty())
        throw std::invalid_argument("empty number in rational '" + std::string(whole) + "'");
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size())
        throw std::invalid_argument("missing digits in rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw std::invalid_argument("unexpected character '" + std::string(1, s[j]) +
                                        "' at position " + std::to_string(j) + " in rational '" +
                                        std::string(whole) + "'");
    }
    return Int(std::string(s));
}

}  // namespace

Rat parse_rat(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int_part(s, s));
    Int num = parse_int_part(s.substr(0, slash), s);
    Int den = parse_int_part(s.substr(slash + 1), s);
    if (den == 0) throw std::invalid_argument("zero denominator in rational '" + std::string(s) + "'");
    return Rat(num, den);
}

std::string format_rat(const Rat& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) out += "/" + denominator(r).str();
    return out;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int result = 1;
    for (long i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

}  // namespace glb
