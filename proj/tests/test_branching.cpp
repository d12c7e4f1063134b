#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "glbranch/branching.hpp"
#include "glbranch/classify.hpp"
#include "glbranch/oracle.hpp"
#include "sweep.hpp"

using namespace glb;

namespace {
SuperWeight SW(const char* s) { return parse_super_weight(s); }
ClassicalWeight CW(const char* s) { return parse_classical_weight(s); }
Partition P(const char* s) { return parse_partition(s); }
}  // namespace

TEST_CASE("classical_branch") {
    CHECK(classical_branch(CW("1,0")) == std::vector<ClassicalWeight>{CW("1"), CW("0")});
    CHECK(classical_branch(CW("2,0")) ==
          std::vector<ClassicalWeight>{CW("2"), CW("1"), CW("0")});
    CHECK(classical_branch(CW("7")) == std::vector<ClassicalWeight>{ClassicalWeight{}});
    CHECK_THROWS_AS(classical_branch(CW("0,1")), std::invalid_argument);
}

TEST_CASE("pieri") {
    CHECK(pieri(CW("1,0"), 1, true) == std::vector<ClassicalWeight>{CW("1,-1"), CW("0,0")});
    CHECK(pieri(CW("1,0"), 0, true) == std::vector<ClassicalWeight>{CW("1,0")});
    CHECK(pieri(CW("1,0"), 0, false) == std::vector<ClassicalWeight>{CW("1,0")});
    CHECK(pieri(CW("0,0"), 2, false) == std::vector<ClassicalWeight>{CW("1,1")});
    CHECK_THROWS_AS(pieri(CW("1,0"), 3, false), std::invalid_argument);
}

TEST_CASE("branch_type1 pinned decompositions") {
    // Atypical with the last-even-entry exception active.
    CHECK(branch_type1(SW("1,0|0,0")) == BranchList{SW("1,0|0"), SW("0,0|0")});
    // Typical, exception inactive.
    CHECK(branch_type1(SW("1|0")) == BranchList{SW("1|"), SW("0|")});
    // Atypical with non-constant odd part: the interlacing inequalities alone
    // would also admit (0|1), which has no place in the decomposition.
    CHECK(branch_type1(SW("1|1,0")) == BranchList{SW("1|1"), SW("1|0"), SW("0|0")});
    CHECK_THROWS_AS(branch_type1(SW("1,0|0,-1")), std::invalid_argument);
    CHECK_THROWS_AS(branch_type1(SW("1|")), std::invalid_argument);
}

TEST_CASE("one-dimensional family branches to a single summand") {
    for (Rat s : {Rat(0), Rat(1), Rat(3, 2)}) {
        SuperWeight w({s, s}, {-s, -s});
        BranchList b = branch_type1(w);
        REQUIRE(b.size() == 1);
        CHECK(b[0] == SuperWeight({s, s}, {-s}));
    }
}

TEST_CASE("branch_type2 pinned decompositions") {
    CHECK(branch_type2(SW("0,0|0,-1")) == BranchList{SW("0,0|0"), SW("0,0|-1")});
    CHECK(branch_type2(SW("-2|1")) == BranchList{SW("-2|"), SW("-3|")});
    CHECK_THROWS_AS(branch_type2(SW("1|0")), std::invalid_argument);
}

TEST_CASE("kac_branch pinned decompositions") {
    CHECK(kac_branch(SW("0|0")) == BranchList{SW("0|"), SW("-1|")});
    CHECK(kac_branch(SW("1|0")) == BranchList{SW("1|"), SW("0|")});
    CHECK(kac_branch(SW("0,0|0")) == BranchList{SW("0,0|"), SW("0,-1|"), SW("-1,-1|")});
    CHECK_THROWS_AS(kac_branch(SW("1/2,-1/2|1/2")), std::invalid_argument);
}

TEST_CASE("poly_branch") {
    auto pb = poly_branch(P("1"), 2, 2);
    REQUIRE(pb.size() == 2);
    CHECK(pb[0].first == P("1"));
    CHECK(pb[0].second == SW("1,0|0"));
    CHECK(pb[1].first == P(""));
    CHECK(pb[1].second == SW("0,0|0"));

    auto pb2 = poly_branch(P("2,1"), 1, 1);
    REQUIRE(pb2.size() == 2);
    CHECK(pb2[0].second == SW("2|"));
    CHECK(pb2[1].second == SW("1|"));

    auto pb3 = poly_branch(P(""), 2, 2);
    REQUIRE(pb3.size() == 1);
    CHECK(pb3[0].second == SW("0,0|0"));
}

TEST_CASE("branch lists are multiplicity-free and ordered") {
    for (const SuperWeight& w : testing::dominant_integral_weights(2, 2, 2)) {
        if (!classify_type1(w).unitary()) continue;
        BranchList b = branch_type1(w);
        for (std::size_t i = 0; i + 1 < b.size(); ++i) {
            CHECK(desc_lex_less(b[i], b[i + 1]));
            CHECK_FALSE(b[i] == b[i + 1]);
        }
    }
}

TEST_CASE("typical branches stay typical and agree with kac_branch") {
    for (const SuperWeight& w : testing::dominant_integral_weights(2, 2, 2)) {
        if (classify_type1(w).verdict != Type1Verdict::TypicalUnitary) continue;
        BranchList b = branch_type1(w);
        CHECK(b == kac_branch(w));
        if (w.n > 1)
            for (const SuperWeight& x : b)
                CHECK(classify_type1(x).verdict == Type1Verdict::TypicalUnitary);
    }
}

TEST_CASE("atypical branching agrees with the vertical-strip route") {
    for (const SuperWeight& w : testing::dominant_integral_weights(2, 2, 3)) {
        if (classify_type1(w).verdict != Type1Verdict::AtypicalUnitary) continue;
        HookData h = hook_from_atypical(w);
        Rat wn = w.omega[w.n - 1];
        BranchList via_strips;
        for (auto& [q, nat] : poly_branch(h.sigma, w.m, w.n))
            via_strips.push_back(twist(nat, -wn));
        std::sort(via_strips.begin(), via_strips.end(), [](const SuperWeight& a, const SuperWeight& b) { return desc_lex_less(a, b); });
        CHECK(branch_type1(w) == via_strips);
    }
}

TEST_CASE("duality maps type 1 branches onto type 2 branches of the dual") {
    for (const SuperWeight& w : testing::dominant_integral_weights(2, 2, 2)) {
        if (!classify_type1(w).unitary()) continue;
        BranchList mapped;
        for (const SuperWeight& b : branch_type1(w)) mapped.push_back(dual_weight(b));
        std::sort(mapped.begin(), mapped.end(), [](const SuperWeight& a, const SuperWeight& b) { return desc_lex_less(a, b); });
        CHECK(mapped == branch_type2(dual_weight(w)));
    }
}

TEST_CASE("gt_count pinned values") {
    CHECK(gt_count(SW("1,0|0,0")) == 4);
    CHECK(gt_count(SW("1|0")) == 2);
    CHECK(gt_count(SW("0|0")) == 1);
    CHECK_THROWS_AS(gt_count(SW("1,0|0,-1")), std::invalid_argument);
}

TEST_CASE("gt_patterns streams every interlacing chain") {
    long seen = 0;
    gt_patterns(SW("1,0|0,0"), [&](const GTPattern& pat) {
        ++seen;
        REQUIRE(pat.super_chain.size() == 3);  // gl(2|2), gl(2|1), gl(2|0)
        REQUIRE(pat.classical_chain.size() == 2);  // gl_2, gl_1
        CHECK(pat.super_chain[0] == SW("1,0|0,0"));
    });
    CHECK(seen == 4);
}

TEST_CASE("gt_count equals the dimension oracle") {
    for (const SuperWeight& w : testing::dominant_integral_weights(2, 1, 2)) {
        if (!classify_type1(w).unitary()) continue;
        CHECK(gt_count(w) == dim_unitary(w));
    }
}
