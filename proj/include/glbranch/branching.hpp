#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "glbranch/partition.hpp"
#include "glbranch/weight.hpp"

namespace glb {

// Branch lists are duplicate-free and in descending lexicographic order.
// Results over gl(m|n-1) with n = 1 are SuperWeights with empty odd part.
using BranchList = std::vector<SuperWeight>;

// gl_d -> gl_{d-1} interlacing (multiplicity-free classical branching).
std::vector<ClassicalWeight> classical_branch(const ClassicalWeight& w);

// Tensoring with the k-th exterior power of the natural module (dual=false)
// or its dual (dual=true).
std::vector<ClassicalWeight> pieri(const ClassicalWeight& w, int k, bool dual);

// Restriction of a unitary simple module to gl(m|n-1): interlacing (C1)(C2).
BranchList branch_type1(const SuperWeight& w);

// Restriction of a type 2 unitary simple module: interlacing (C1')(C2).
BranchList branch_type2(const SuperWeight& w);

// Kac module branching: unrestricted {0,1}-drops on the even part, classical
// interlacing on the odd part.
BranchList kac_branch(const SuperWeight& w);

// Polynomial-module branching indexed by vertical strips.
std::vector<std::pair<Partition, SuperWeight>> poly_branch(const Partition& p, int m, int n);

// One full interlacing chain: gl(m|n) down to gl(m|0), then the classical
// chain down to gl_1.
struct GTPattern {
    std::vector<SuperWeight> super_chain;        // w = w[n], ..., w[0]
    std::vector<ClassicalWeight> classical_chain;  // gl_m, ..., gl_1
};

// Number of interlacing chains; equals the module dimension.
Int gt_count(const SuperWeight& w);

// Streams patterns depth-first in deterministic order.
void gt_patterns(const SuperWeight& w, const std::function<void(const GTPattern&)>& emit);

}  // namespace glb
