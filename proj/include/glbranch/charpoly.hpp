#pragma once

#include <map>
#include <string>
#include <vector>

#include "glbranch/rational.hpp"

namespace glb {

// Sparse Laurent polynomial in nvars variables with arbitrary-precision
// integer coefficients.  Zero coefficients are never stored.
class CharPoly {
   public:
    using Exponents = std::vector<long>;

    explicit CharPoly(int nvars) : nvars_(nvars) {}

    static CharPoly one(int nvars);
    static CharPoly monomial(int nvars, Exponents exp, Int coeff = 1);

    int nvars() const { return nvars_; }
    const std::map<Exponents, Int>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& exp, const Int& coeff);

    CharPoly& operator+=(const CharPoly& o);
    CharPoly operator*(const CharPoly& o) const;

    // Multiplies by the single monomial with the given exponents.
    CharPoly shifted(const Exponents& exp) const;

    Int eval_ones() const;

    // Keeps only terms with zero exponent in every variable of [from, to).
    CharPoly restrict_zero(int from, int to) const;

    bool operator==(const CharPoly& o) const;

    std::string str() const;  // deterministic, for diagnostics

   private:
    int nvars_;
    std::map<Exponents, Int> terms_;
};

// Re-indexes a polynomial in (x_1..x_m, y_1..y_{n-1}) as one in
// (x_1..x_m, y_1..y_n) with y_n-exponent delta everywhere.
CharPoly embed_with_last_var(const CharPoly& cp, long delta);

}  // namespace glb
