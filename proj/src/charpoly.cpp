#include "glbranch/charpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace glb {

CharPoly CharPoly::one(int nvars) { return monomial(nvars, Exponents(nvars, 0)); }

CharPoly CharPoly::monomial(int nvars, Exponents exp, Int coeff) {
    if (static_cast<int>(exp.size()) != nvars)
        throw std::invalid_argument("monomial exponent vector has wrong length");
    CharPoly p(nvars);
    p.add_term(exp, coeff);
    return p;
}

void CharPoly::add_term(const Exponents& exp, const Int& coeff) {
    if (static_cast<int>(exp.size()) != nvars_)
        throw std::invalid_argument("exponent vector has wrong length");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

CharPoly& CharPoly::operator+=(const CharPoly& o) {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [exp, c] : o.terms_) add_term(exp, c);
    return *this;
}

CharPoly CharPoly::operator*(const CharPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    CharPoly out(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (int v = 0; v < nvars_; ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

CharPoly CharPoly::shifted(const Exponents& exp) const {
    if (static_cast<int>(exp.size()) != nvars_)
        throw std::invalid_argument("exponent vector has wrong length");
    CharPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents shifted_exp(nvars_);
        for (int v = 0; v < nvars_; ++v) shifted_exp[v] = e[v] + exp[v];
        out.terms_.emplace(std::move(shifted_exp), c);
    }
    return out;
}

Int CharPoly::eval_ones() const {
    Int total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

CharPoly CharPoly::restrict_zero(int from, int to) const {
    CharPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (int v = from; keep && v < to; ++v) keep = e[v] == 0;
        if (keep) out.terms_.emplace(e, c);
    }
    return out;
}

bool CharPoly::operator==(const CharPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::string CharPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*[";
        for (int v = 0; v < nvars_; ++v) os << (v ? "," : "") << e[v];
        os << "]";
    }
    if (first) os << "0";
    return os.str();
}

CharPoly embed_with_last_var(const CharPoly& cp, long delta) {
    CharPoly out(cp.nvars() + 1);
    for (const auto& [e, c] : cp.terms()) {
        CharPoly::Exponents exp = e;
        exp.push_back(delta);
        out.add_term(exp, c);
    }
    return out;
}

}  // namespace glb
