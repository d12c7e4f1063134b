#pragma once

#include <string>
#include <utility>
#include <vector>

#include "glbranch/weight.hpp"

namespace glb {

enum class Type1Verdict { NotDominant, NotUnitary, TypicalUnitary, AtypicalUnitary };
enum class Type2Verdict { NotDominant, NotUnitary, TypicalUnitary2, AtypicalUnitary2 };

struct UnitaryClass1 {
    Type1Verdict verdict;
    int mu = 0;  // atypicality witness, 1-based, valid for AtypicalUnitary

    bool unitary() const {
        return verdict == Type1Verdict::TypicalUnitary || verdict == Type1Verdict::AtypicalUnitary;
    }
};

struct UnitaryClass2 {
    Type2Verdict verdict;
    int k = 0;  // maximal index with (Y+rho, eps_k - delta_1) = 0

    bool unitary() const {
        return verdict == Type2Verdict::TypicalUnitary2 ||
               verdict == Type2Verdict::AtypicalUnitary2;
    }
};

// (w + rho, eps_i - delta_mu) != 0 for all odd positive roots.
bool is_typical(const SuperWeight& w);

// All pairs (i, mu) with (w + rho, eps_i - delta_mu) = 0, in row-major order.
std::vector<std::pair<int, int>> vanishing_pairs(const SuperWeight& w);

// Diagnostics: every mu (resp. k) satisfying the atypical unitarity equations.
// Monotonicity of the form makes these lists have at most one element.
std::vector<int> type1_witnesses(const SuperWeight& w);
std::vector<int> type2_witnesses(const SuperWeight& w);

UnitaryClass1 classify_type1(const SuperWeight& w);
UnitaryClass2 classify_type2(const SuperWeight& w);

std::string to_string(const UnitaryClass1& c);
std::string to_string(const UnitaryClass2& c);

}  // namespace glb
