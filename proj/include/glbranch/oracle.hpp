#pragma once

#include <string>
#include <vector>

#include "glbranch/branching.hpp"
#include "glbranch/charpoly.hpp"
#include "glbranch/classify.hpp"
#include "glbranch/partition.hpp"
#include "glbranch/weight.hpp"

namespace glb {

// Classical Weyl dimension formula; an overall rational shift cancels.
Int weyl_dim(const ClassicalWeight& w);

// dim K(w) = 2^{mn} * dim L_0(w).
Int kac_dim(const SuperWeight& w);

// Number of (m,n)-hook semistandard tableaux of shape p: alphabet
// 1 < ... < m < 1' < ... < n', unbarred letters weakly increase along rows and
// strictly down columns, barred letters the other way round.  Computed by
// adding one letter at a time (horizontal strips, then vertical strips).
Int hook_tableau_dim(const Partition& p, int m, int n);

// Weight generating function of the same tableaux; variables x_1..x_m,
// y_1..y_n.  Evaluating at all-ones gives hook_tableau_dim.
CharPoly hook_tableau_char(const Partition& p, int m, int n);

// Character of the simple gl_d-module, by Gelfand-Tsetlin chain enumeration;
// variables offset..offset+d-1 of an nvars-variable polynomial.
CharPoly classical_char(const ClassicalWeight& w, int nvars, int offset);

// ch K(w) = ch L_0(w) * prod_{i,mu} (1 + x_i^{-1} y_mu).
CharPoly kac_char(const SuperWeight& w);

// Dimension of the unitary simple module: Kac dimension when typical, hook
// tableau count of the associated partition when atypical.  n = 0 falls back
// to the classical Weyl dimension.
Int dim_unitary(const SuperWeight& w);

// Same for type 2 unitary weights, via the dual polynomial realization.
Int dim_type2(const SuperWeight& w);

// Exact character of the unitary simple module (integral weights only).
CharPoly char_unitary(const SuperWeight& w);

enum class BranchKind { Type1, Type2, Kac };

struct Check {
    std::string claim;
    std::string lhs;
    std::string rhs;
    bool pass;
};

struct Report {
    std::vector<Check> checks;
    bool ok() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Executable check of one branching decomposition: dimension-sum identity,
// multiplicity-freeness, and (integral type 1 / Kac) character restriction.
Report verify_branch(const SuperWeight& w, BranchKind kind);

// Graded-dimension check of the (gl_d, gl(m|n)) Howe duality up to the given
// total degree.
Report howe_check(int d, int m, int n, int max_degree);

// Partitions of k with at most max_parts parts, descending lexicographic.
std::vector<Partition> partitions_of(long k, int max_parts);

}  // namespace glb
