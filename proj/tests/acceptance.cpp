// Acceptance suite: one exact, tolerance-zero check block per criterion.
// Prints one PASS/FAIL line per criterion; exit code is the failure count.

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "glbranch/branching.hpp"
#include "glbranch/charpoly.hpp"
#include "glbranch/classify.hpp"
#include "glbranch/oracle.hpp"
#include "glbranch/partition.hpp"
#include "sweep.hpp"

using namespace glb;

namespace {

SuperWeight SW(const char* s) { return parse_super_weight(s); }

struct Criterion {
    long checked = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failures.size() < 5) failures.push_back(what);
        if (!ok && failures.size() == 5) failures.push_back("...");
    }
};

int report(int number, const char* title, const Criterion& c) {
    bool ok = c.failures.empty();
    std::printf("%s criterion %d (%s): %ld checks\n", ok ? "PASS" : "FAIL", number, title,
                c.checked);
    for (const std::string& f : c.failures) std::printf("       %s\n", f.c_str());
    return ok ? 0 : 1;
}

Int memo_dim(const SuperWeight& w, std::map<std::string, Int>& memo) {
    std::string key = std::to_string(w.m) + "|" + std::to_string(w.n) + ":" + to_string(w);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int d = dim_unitary(w);
    memo[key] = d;
    return d;
}

}  // namespace

int main() {
    int failures = 0;
    std::map<std::string, Int> dim_memo;

    // 1. Dimension conservation for type 1 branching, m,n <= 3, entries in [-3,3].
    {
        Criterion c;
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n)
                for (const SuperWeight& w : testing::dominant_integral_weights(m, n, 3)) {
                    if (!classify_type1(w).unitary()) continue;
                    Int lhs = memo_dim(w, dim_memo), rhs = 0;
                    for (const SuperWeight& b : branch_type1(w)) rhs += memo_dim(b, dim_memo);
                    c.expect(lhs == rhs, to_string(w) + ": dim " + lhs.str() + " != sum " +
                                             rhs.str());
                }
        failures += report(1, "type 1 dimension conservation", c);
    }

    // 2. Character restriction identity, m,n <= 2, entries in [-3,3].
    {
        Criterion c;
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                for (const SuperWeight& w : testing::dominant_integral_weights(m, n, 3)) {
                    if (!classify_type1(w).unitary()) continue;
                    CharPoly lhs = char_unitary(w);
                    CharPoly rhs(w.m + w.n);
                    for (const SuperWeight& b : branch_type1(w)) {
                        long delta = as_long(weight_sum(w) - weight_sum(b));
                        rhs += embed_with_last_var(char_unitary(b), delta);
                    }
                    c.expect(lhs == rhs, to_string(w) + ": character restriction mismatch");
                }
        failures += report(2, "character restriction", c);
    }

    // 3. Kac branching oracle, m,n <= 2, entries in [0,3].
    {
        Criterion c;
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                for (const SuperWeight& w : testing::dominant_integral_weights(m, n, 3)) {
                    bool nonneg = true;
                    for (const Rat& e : w.lambda) nonneg = nonneg && e >= 0;
                    for (const Rat& e : w.omega) nonneg = nonneg && e >= 0;
                    if (!nonneg) continue;
                    Report r = verify_branch(w, BranchKind::Kac);
                    c.expect(r.ok(), to_string(w) + ": Kac branching check failed");
                }
        failures += report(3, "Kac branching dimension and character", c);
    }

    // 4. Cross-representation agreement on the criterion-1 sweep.
    {
        Criterion c;
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n)
                for (const SuperWeight& w : testing::dominant_integral_weights(m, n, 3)) {
                    if (classify_type1(w).verdict != Type1Verdict::AtypicalUnitary) continue;
                    Rat wn = w.omega[w.n - 1];
                    HookData h = hook_from_atypical(w);
                    c.expect(natural_weight(h.sigma, m, n) == twist(w, wn),
                             to_string(w) + ": sigma^nat != twisted weight");
                    BranchList via_strips;
                    for (auto& [q, nat] : poly_branch(h.sigma, m, n))
                        via_strips.push_back(twist(nat, -wn));
                    std::sort(via_strips.begin(), via_strips.end(), [](const SuperWeight& a, const SuperWeight& b) { return desc_lex_less(a, b); });
                    c.expect(branch_type1(w) == via_strips,
                             to_string(w) + ": strip route differs from interlacing route");
                }
        failures += report(4, "cross-representation agreement", c);
    }

    // 5. Duality suite on the criterion-1 sweep.
    {
        Criterion c;
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n)
                for (const SuperWeight& w : testing::dominant_integral_weights(m, n, 3)) {
                    UnitaryClass1 c1 = classify_type1(w);
                    if (!c1.unitary()) continue;
                    SuperWeight d = dual_weight(w);
                    UnitaryClass2 c2 = classify_type2(d);
                    c.expect(c2.unitary(), to_string(w) + ": dual not type 2 unitary");
                    c.expect((c1.verdict == Type1Verdict::TypicalUnitary) ==
                                 (c2.verdict == Type2Verdict::TypicalUnitary2),
                             to_string(w) + ": typicality not preserved by dual");
                    c.expect(dual_weight(d) == w, to_string(w) + ": dual not an involution");
                    BranchList mapped;
                    for (const SuperWeight& b : branch_type1(w)) mapped.push_back(dual_weight(b));
                    std::sort(mapped.begin(), mapped.end(), [](const SuperWeight& a, const SuperWeight& b) { return desc_lex_less(a, b); });
                    c.expect(mapped == branch_type2(d),
                             to_string(w) + ": branch lists not exchanged by duality");
                }
        failures += report(5, "duality suite", c);
    }

    // 6. Howe duality graded check, d,m,n <= 3, degrees <= 6.
    {
        Criterion c;
        for (int d = 1; d <= 3; ++d)
            for (int m = 1; m <= 3; ++m)
                for (int n = 1; n <= 3; ++n) {
                    Report r = howe_check(d, m, n, 6);
                    for (const Check& ch : r.checks)
                        c.expect(ch.pass, "d=" + std::to_string(d) + " m=" + std::to_string(m) +
                                              " n=" + std::to_string(n) + " " + ch.claim + ": " +
                                              ch.lhs + " != " + ch.rhs);
                }
        failures += report(6, "Howe duality graded dimensions", c);
    }

    // 7. GT pattern count equals dim_unitary, m,n <= 2, entries in [-2,2].
    {
        Criterion c;
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                for (const SuperWeight& w : testing::dominant_integral_weights(m, n, 2)) {
                    if (!classify_type1(w).unitary()) continue;
                    c.expect(gt_count(w) == dim_unitary(w),
                             to_string(w) + ": GT count != dimension");
                }
        c.expect(gt_count(SW("1,0|0,0")) == 4, "gt count of 1,0|0,0 != 4");
        failures += report(7, "GT pattern counting", c);
    }

    // 8. Edge cases.
    {
        Criterion c;
        for (Rat s : {Rat(0), Rat(1), Rat(3, 2)}) {
            SuperWeight w({s, s}, {-s, -s});
            BranchList b = branch_type1(w);
            c.expect(b.size() == 1 && b[0] == SuperWeight({s, s}, {-s}),
                     "one-dimensional family branch not a single summand");
        }
        BranchList frozen = branch_type1(SW("1,0|0,0"));
        bool freeze_ok = frozen.size() == 2;
        for (const SuperWeight& b : frozen) freeze_ok = freeze_ok && b.lambda[1] == 0;
        c.expect(freeze_ok, "last-even-entry freeze not exercised by 1,0|0,0");
        c.expect(kac_branch(SW("0|0")) == BranchList{SW("0|"), SW("-1|")},
                 "K(0,0) at m=n=1 does not branch to two summands");
        failures += report(8, "edge cases", c);
    }

    return failures;
}
