#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "glbranch/rational.hpp"

namespace glb {

// Dominant integral weight of gl_d, entries may be rational with integer
// differences.
struct ClassicalWeight {
    std::vector<Rat> parts;

    ClassicalWeight() = default;
    explicit ClassicalWeight(std::vector<Rat> p) : parts(std::move(p)) {}

    int d() const { return static_cast<int>(parts.size()); }

    bool operator==(const ClassicalWeight&) const = default;
};

// A gl(m|n) weight (l_1..l_m | w_1..w_n).  No dominance is enforced at
// construction; classification and branching check it explicitly.
struct SuperWeight {
    int m = 1;
    int n = 0;
    std::vector<Rat> lambda;
    std::vector<Rat> omega;

    SuperWeight(std::vector<Rat> l, std::vector<Rat> w);

    ClassicalWeight even_part() const { return ClassicalWeight(lambda); }
    ClassicalWeight odd_part() const { return ClassicalWeight(omega); }

    bool operator==(const SuperWeight&) const = default;
};

// rho_{m|n}: even entry i is (m-n-2i+1)/2, odd entry mu is (m+n-2mu+1)/2.
SuperWeight rho(int m, int n);

// (w + rho, eps_i - delta_mu), 1-based indices.  Closed form
// l_i + w_mu + m - i - mu + 1.
Rat atyp_form(const SuperWeight& w, int i, int mu);

bool is_dominant(const SuperWeight& w);
bool is_dominant(const ClassicalWeight& w);
bool is_integral(const SuperWeight& w);
bool is_integral(const ClassicalWeight& w);

// (l_1+s, ..., l_m+s | w_1-s, ..., w_n-s)
SuperWeight twist(const SuperWeight& w, const Rat& s);

Rat weight_sum(const SuperWeight& w);
Rat weight_sum(const ClassicalWeight& w);

// Descending lexicographic order on the concatenated entry sequence; the
// canonical ordering for all branch lists.
bool desc_lex_less(const SuperWeight& a, const SuperWeight& b);
bool desc_lex_less(const ClassicalWeight& a, const ClassicalWeight& b);

// Textual syntax "l1,...,lm|w1,...,wn"; empty odd part written "l1,...,lm|".
SuperWeight parse_super_weight(std::string_view s);
ClassicalWeight parse_classical_weight(std::string_view s);
std::string to_string(const SuperWeight& w);
std::string to_string(const ClassicalWeight& w);

}  // namespace glb
