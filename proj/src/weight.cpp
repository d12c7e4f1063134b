#include "glbranch/weight.hpp"

#include <sstream>
#include <stdexcept>

namespace glb {

SuperWeight::SuperWeight(std::vector<Rat> l, std::vector<Rat> w)
    : m(static_cast<int>(l.size())),
      n(static_cast<int>(w.size())),
      lambda(std::move(l)),
      omega(std::move(w)) {
    if (m < 1) throw std::invalid_argument("SuperWeight requires m >= 1");
}

SuperWeight rho(int m, int n) {
    if (m < 1) throw std::invalid_argument("rho requires m >= 1");
    if (n < 0) throw std::invalid_argument("rho requires n >= 0");
    std::vector<Rat> l(m), w(n);
    for (int i = 1; i <= m; ++i) l[i - 1] = Rat(m - n - 2 * i + 1, 2);
    for (int mu = 1; mu <= n; ++mu) w[mu - 1] = Rat(m + n - 2 * mu + 1, 2);
    return SuperWeight(std::move(l), std::move(w));
}

Rat atyp_form(const SuperWeight& w, int i, int mu) {
    if (w.n < 1) throw std::invalid_argument("atyp_form requires n >= 1");
    if (i < 1 || i > w.m) throw std::invalid_argument("atyp_form: index i out of range");
    if (mu < 1 || mu > w.n) throw std::invalid_argument("atyp_form: index mu out of range");
    return w.lambda[i - 1] + w.omega[mu - 1] + (w.m - i - mu + 1);
}

namespace {

bool block_dominant(const std::vector<Rat>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        Rat diff = v[i] - v[i + 1];
        if (!is_integer(diff) || diff < 0) return false;
    }
    return true;
}

}  // namespace

bool is_dominant(const SuperWeight& w) {
    return block_dominant(w.lambda) && block_dominant(w.omega);
}

bool is_dominant(const ClassicalWeight& w) { return block_dominant(w.parts); }

bool is_integral(const SuperWeight& w) {
    for (const Rat& r : w.lambda)
        if (!is_integer(r)) return false;
    for (const Rat& r : w.omega)
        if (!is_integer(r)) return false;
    return true;
}

bool is_integral(const ClassicalWeight& w) {
    for (const Rat& r : w.parts)
        if (!is_integer(r)) return false;
    return true;
}

SuperWeight twist(const SuperWeight& w, const Rat& s) {
    std::vector<Rat> l = w.lambda, o = w.omega;
    for (Rat& r : l) r += s;
    for (Rat& r : o) r -= s;
    return SuperWeight(std::move(l), std::move(o));
}

Rat weight_sum(const SuperWeight& w) {
    Rat s = 0;
    for (const Rat& r : w.lambda) s += r;
    for (const Rat& r : w.omega) s += r;
    return s;
}

Rat weight_sum(const ClassicalWeight& w) {
    Rat s = 0;
    for (const Rat& r : w.parts) s += r;
    return s;
}

namespace {

// true if a > b lexicographically (shorter sequences compare by prefix)
bool lex_greater(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Rat> concat(const SuperWeight& w) {
    std::vector<Rat> v = w.lambda;
    v.insert(v.end(), w.omega.begin(), w.omega.end());
    return v;
}

std::vector<Rat> parse_entries(std::string_view s, std::string_view whole) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string_view tok =
            comma == std::string_view::npos ? s.substr(start) : s.substr(start, comma - start);
        try {
            out.push_back(parse_rat(tok));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("in weight '" + std::string(whole) + "': " + e.what());
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

bool desc_lex_less(const SuperWeight& a, const SuperWeight& b) {
    return lex_greater(concat(a), concat(b));
}

bool desc_lex_less(const ClassicalWeight& a, const ClassicalWeight& b) {
    return lex_greater(a.parts, b.parts);
}

SuperWeight parse_super_weight(std::string_view s) {
    auto bar = s.find('|');
    if (bar == std::string_view::npos)
        throw std::invalid_argument("weight '" + std::string(s) +
                                    "' is missing the '|' separating even and odd parts");
    if (s.find('|', bar + 1) != std::string_view::npos)
        throw std::invalid_argument("weight '" + std::string(s) + "' has more than one '|'");
    std::vector<Rat> l = parse_entries(s.substr(0, bar), s);
    std::string_view rest = s.substr(bar + 1);
    std::vector<Rat> w = rest.empty() ? std::vector<Rat>{} : parse_entries(rest, s);
    return SuperWeight(std::move(l), std::move(w));
}

ClassicalWeight parse_classical_weight(std::string_view s) {
    if (s.empty()) return ClassicalWeight{};
    return ClassicalWeight(parse_entries(s, s));
}

std::string to_string(const SuperWeight& w) {
    std::ostringstream os;
    for (int i = 0; i < w.m; ++i) os << (i ? "," : "") << format_rat(w.lambda[i]);
    os << '|';
    for (int mu = 0; mu < w.n; ++mu) os << (mu ? "," : "") << format_rat(w.omega[mu]);
    return os.str();
}

std::string to_string(const ClassicalWeight& w) {
    std::ostringstream os;
    for (int i = 0; i < w.d(); ++i) os << (i ? "," : "") << format_rat(w.parts[i]);
    return os.str();
}

}  // namespace glb
