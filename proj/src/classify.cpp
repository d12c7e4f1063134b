#include "glbranch/classify.hpp"

#include <stdexcept>

namespace glb {

bool is_typical(const SuperWeight& w) {
    if (w.n < 1) throw std::invalid_argument("is_typical requires n >= 1");
    return vanishing_pairs(w).empty();
}

std::vector<std::pair<int, int>> vanishing_pairs(const SuperWeight& w) {
    if (w.n < 1) throw std::invalid_argument("vanishing_pairs requires n >= 1");
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= w.m; ++i)
        for (int mu = 1; mu <= w.n; ++mu)
            if (atyp_form(w, i, mu) == 0) out.emplace_back(i, mu);
    return out;
}

std::vector<int> type1_witnesses(const SuperWeight& w) {
    std::vector<int> out;
    for (int mu = 1; mu <= w.n; ++mu)
        if (atyp_form(w, w.m, mu) == 0 && w.omega[mu - 1] == w.omega[w.n - 1]) out.push_back(mu);
    return out;
}

std::vector<int> type2_witnesses(const SuperWeight& w) {
    std::vector<int> out;
    for (int k = 1; k <= w.m; ++k)
        if (atyp_form(w, k, 1) == 0 && w.lambda[0] == w.lambda[k - 1]) out.push_back(k);
    return out;
}

UnitaryClass1 classify_type1(const SuperWeight& w) {
    if (w.n < 1) throw std::invalid_argument("classify_type1 requires n >= 1");
    if (!is_dominant(w)) return {Type1Verdict::NotDominant};

    bool typical_cond = atyp_form(w, w.m, w.n) > 0;
    std::vector<int> witnesses = type1_witnesses(w);
    if (typical_cond && !witnesses.empty())
        throw std::logic_error("classify_type1: conditions (1) and (2) both hold for " +
                               to_string(w));
    if (typical_cond) return {Type1Verdict::TypicalUnitary};
    if (!witnesses.empty()) return {Type1Verdict::AtypicalUnitary, witnesses.front()};
    return {Type1Verdict::NotUnitary};
}

UnitaryClass2 classify_type2(const SuperWeight& w) {
    if (w.n < 1) throw std::invalid_argument("classify_type2 requires n >= 1");
    if (!is_dominant(w)) return {Type2Verdict::NotDominant};

    bool typical_cond = atyp_form(w, 1, 1) < 0;
    std::vector<int> witnesses = type2_witnesses(w);
    if (typical_cond && !witnesses.empty())
        throw std::logic_error("classify_type2: conditions (1) and (2) both hold for " +
                               to_string(w));
    if (typical_cond) return {Type2Verdict::TypicalUnitary2};
    if (!witnesses.empty()) return {Type2Verdict::AtypicalUnitary2, witnesses.back()};
    return {Type2Verdict::NotUnitary};
}

std::string to_string(const UnitaryClass1& c) {
    switch (c.verdict) {
        case Type1Verdict::NotDominant: return "NotDominant";
        case Type1Verdict::NotUnitary: return "NotUnitary";
        case Type1Verdict::TypicalUnitary: return "TypicalUnitary";
        case Type1Verdict::AtypicalUnitary:
            return "AtypicalUnitary(mu=" + std::to_string(c.mu) + ")";
    }
    return "?";
}

std::string to_string(const UnitaryClass2& c) {
    switch (c.verdict) {
        case Type2Verdict::NotDominant: return "NotDominant";
        case Type2Verdict::NotUnitary: return "NotUnitary";
        case Type2Verdict::TypicalUnitary2: return "TypicalUnitary2";
        case Type2Verdict::AtypicalUnitary2:
            return "AtypicalUnitary2(k=" + std::to_string(c.k) + ")";
    }
    return "?";
}

}  // namespace glb
