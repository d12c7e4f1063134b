#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "glbranch/branching.hpp"
#include "glbranch/classify.hpp"
#include "glbranch/oracle.hpp"
#include "glbranch/partition.hpp"
#include "glbranch/weight.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

json weight_list_json(const glb::BranchList& branches) {
    json arr = json::array();
    for (const auto& b : branches) arr.push_back(glb::to_string(b));
    return arr;
}

json report_json(const glb::Report& report) {
    json arr = json::array();
    for (const auto& c : report.checks)
        arr.push_back({{"claim", c.claim}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    return arr;
}

void print_report(const glb::Report& report, const std::string& context) {
    for (const auto& c : report.checks)
        std::cout << (c.pass ? "pass" : "FAIL") << "  " << context << "  " << c.claim << ": "
                  << c.lhs << (c.pass ? " = " : " != ") << c.rhs << "\n";
}

// Non-increasing integer sequences of the given length with entries in
// [-max_entry, max_entry].
void dominant_blocks(int length, long max_entry, long cap, std::vector<long>& prefix,
                     std::vector<std::vector<long>>& out) {
    if (length == 0) {
        out.push_back(prefix);
        return;
    }
    for (long v = cap; v >= -max_entry; --v) {
        prefix.push_back(v);
        dominant_blocks(length - 1, max_entry, v, prefix, out);
        prefix.pop_back();
    }
}

std::vector<glb::SuperWeight> dominant_integral_sweep(int m, int n, long max_entry) {
    std::vector<std::vector<long>> evens, odds;
    std::vector<long> prefix;
    dominant_blocks(m, max_entry, max_entry, prefix, evens);
    dominant_blocks(n, max_entry, max_entry, prefix, odds);
    std::vector<glb::SuperWeight> out;
    for (const auto& l : evens) {
        std::vector<glb::Rat> lam(l.begin(), l.end());
        for (const auto& o : odds) {
            std::vector<glb::Rat> om(o.begin(), o.end());
            out.emplace_back(lam, om);
        }
    }
    return out;
}

struct VerifyStats {
    long weights = 0;
    long checks = 0;
    long failures = 0;
};

void run_report(const glb::Report& report, const std::string& context, VerifyStats& stats,
                bool verbose) {
    stats.checks += static_cast<long>(report.checks.size());
    for (const auto& c : report.checks)
        if (!c.pass) ++stats.failures;
    if (verbose || !report.ok()) print_report(report, context);
}

int verify_branch_sweep(int max_m, int max_n, long max_entry, bool json_out) {
    VerifyStats stats;
    for (int m = 1; m <= max_m; ++m) {
        for (int n = 1; n <= max_n; ++n) {
            for (const auto& w : dominant_integral_sweep(m, n, max_entry)) {
                ++stats.weights;
                if (glb::classify_type1(w).unitary())
                    run_report(glb::verify_branch(w, glb::BranchKind::Type1),
                               "type1 " + glb::to_string(w), stats, false);
                if (glb::classify_type2(w).unitary())
                    run_report(glb::verify_branch(w, glb::BranchKind::Type2),
                               "type2 " + glb::to_string(w), stats, false);
                run_report(glb::verify_branch(w, glb::BranchKind::Kac),
                           "kac " + glb::to_string(w), stats, false);
            }
        }
    }
    if (json_out) {
        std::cout << json{{"weights", stats.weights},
                          {"checks", stats.checks},
                          {"failures", stats.failures}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "verified " << stats.checks << " checks over " << stats.weights
                  << " weights, " << stats.failures << " failures\n";
    }
    return stats.failures == 0 ? kExitOk : kExitVerifyFailed;
}

int verify_dual_sweep(int max_m, int max_n, long max_entry, bool json_out) {
    VerifyStats stats;
    for (int m = 1; m <= max_m; ++m) {
        for (int n = 1; n <= max_n; ++n) {
            for (const auto& w : dominant_integral_sweep(m, n, max_entry)) {
                auto c1 = glb::classify_type1(w);
                if (!c1.unitary()) continue;
                ++stats.weights;
                glb::Report report;
                glb::SuperWeight dual = glb::dual_weight(w);
                report.checks.push_back({"involution", glb::to_string(w),
                                         glb::to_string(glb::dual_weight(dual)),
                                         glb::dual_weight(dual) == w});
                auto c2 = glb::classify_type2(dual);
                bool transport =
                    c2.unitary() &&
                    ((c1.verdict == glb::Type1Verdict::TypicalUnitary) ==
                     (c2.verdict == glb::Type2Verdict::TypicalUnitary2));
                report.checks.push_back({"class transport", glb::to_string(c1),
                                         glb::to_string(c2), transport});
                glb::BranchList mapped;
                for (const auto& b : glb::branch_type1(w)) mapped.push_back(glb::dual_weight(b));
                std::sort(mapped.begin(), mapped.end(),
                          [](const glb::SuperWeight& a, const glb::SuperWeight& b) {
                              return glb::desc_lex_less(a, b);
                          });
                glb::BranchList expected = glb::branch_type2(dual);
                report.checks.push_back({"branch bijection",
                                         std::to_string(mapped.size()) + " dual branches",
                                         std::to_string(expected.size()) + " type2 branches",
                                         mapped == expected});
                run_report(report, "dual " + glb::to_string(w), stats, false);
            }
        }
    }
    if (json_out) {
        std::cout << json{{"weights", stats.weights},
                          {"checks", stats.checks},
                          {"failures", stats.failures}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "verified " << stats.checks << " checks over " << stats.weights
                  << " unitary weights, " << stats.failures << " failures\n";
    }
    return stats.failures == 0 ? kExitOk : kExitVerifyFailed;
}

int verify_howe_sweep(int max_m, int max_n, bool json_out) {
    VerifyStats stats;
    for (int d = 1; d <= max_m; ++d)
        for (int m = 1; m <= max_m; ++m)
            for (int n = 1; n <= max_n; ++n) {
                ++stats.weights;
                run_report(glb::howe_check(d, m, n, 6),
                           "howe d=" + std::to_string(d) + " m=" + std::to_string(m) +
                               " n=" + std::to_string(n),
                           stats, false);
            }
    if (json_out) {
        std::cout << json{{"cases", stats.weights},
                          {"checks", stats.checks},
                          {"failures", stats.failures}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "verified " << stats.checks << " graded checks over " << stats.weights
                  << " (d,m,n) triples, " << stats.failures << " failures\n";
    }
    return stats.failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact branching rules and verification oracles for unitary gl(m|n) modules"};
    app.require_subcommand(1);

    std::string weight_str, kind, partition_str;
    bool json_out = false, emit = false;
    int opt_m = 1, opt_n = 1, opt_d = 1, max_degree = 6;
    int max_m = 2, max_n = 2;
    long max_entry = 2;

    auto* classify_cmd = app.add_subcommand("classify", "Classify a weight (both star types)");
    classify_cmd->add_option("--weight", weight_str, "weight as l1,..,lm|w1,..,wn")->required();
    classify_cmd->add_flag("--json", json_out);

    auto* branch_cmd = app.add_subcommand("branch", "Branch a module to gl(m|n-1)");
    branch_cmd->add_option("--kind", kind, "type1|type2|kac")->required();
    branch_cmd->add_option("--weight", weight_str)->required();
    branch_cmd->add_flag("--json", json_out);

    auto* dual_cmd = app.add_subcommand("dual", "Highest weight of the dual module");
    dual_cmd->add_option("--weight", weight_str)->required();
    dual_cmd->add_flag("--json", json_out);

    auto* gt_cmd = app.add_subcommand("gt", "Count (and list) Gelfand-Tsetlin patterns");
    gt_cmd->add_option("--weight", weight_str)->required();
    gt_cmd->add_flag("--emit", emit, "list the patterns as well");
    gt_cmd->add_flag("--json", json_out);

    auto* dim_cmd = app.add_subcommand("dim", "Dimension of the unitary simple module");
    dim_cmd->add_option("--weight", weight_str)->required();
    dim_cmd->add_flag("--json", json_out);

    auto* poly_cmd = app.add_subcommand("poly-branch", "Branch a polynomial module by partition");
    poly_cmd->add_option("--m", opt_m)->required();
    poly_cmd->add_option("--n", opt_n)->required();
    poly_cmd->add_option("--partition", partition_str, "partition as p1,p2,...")->required();
    poly_cmd->add_flag("--json", json_out);

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive verification sweeps");
    verify_cmd->add_option("--kind", kind, "branch|dual|howe")->required();
    verify_cmd->add_option("--max-m", max_m);
    verify_cmd->add_option("--max-n", max_n);
    verify_cmd->add_option("--max-entry", max_entry);
    verify_cmd->add_flag("--json", json_out);

    auto* howe_cmd = app.add_subcommand("howe", "Graded Howe duality check");
    howe_cmd->add_option("--d", opt_d)->required();
    howe_cmd->add_option("--m", opt_m)->required();
    howe_cmd->add_option("--n", opt_n)->required();
    howe_cmd->add_option("--max-degree", max_degree);
    howe_cmd->add_flag("--json", json_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify_cmd->parsed()) {
            glb::SuperWeight w = glb::parse_super_weight(weight_str);
            if (w.n == 0) {
                std::cerr << "error: classify requires n >= 1\n";
                return kExitUsage;
            }
            auto c1 = glb::classify_type1(w);
            auto c2 = glb::classify_type2(w);
            if (json_out) {
                json out{{"weight", glb::to_string(w)},
                         {"type1", glb::to_string(c1)},
                         {"type2", glb::to_string(c2)}};
                if (c1.verdict != glb::Type1Verdict::NotDominant) {
                    out["type1_witnesses"] = glb::type1_witnesses(w);
                    out["type2_witnesses"] = glb::type2_witnesses(w);
                }
                std::cout << out.dump() << "\n";
            } else {
                std::cout << "type1: " << glb::to_string(c1) << "\n"
                          << "type2: " << glb::to_string(c2) << "\n";
            }
        } else if (branch_cmd->parsed()) {
            glb::SuperWeight w = glb::parse_super_weight(weight_str);
            glb::BranchList branches;
            if (kind == "type1")
                branches = glb::branch_type1(w);
            else if (kind == "type2")
                branches = glb::branch_type2(w);
            else if (kind == "kac")
                branches = glb::kac_branch(w);
            else {
                std::cerr << "error: unknown branch kind '" << kind << "'\n";
                return kExitUsage;
            }
            if (json_out) {
                std::cout << weight_list_json(branches).dump() << "\n";
            } else {
                for (const auto& b : branches) std::cout << glb::to_string(b) << "\n";
            }
        } else if (dual_cmd->parsed()) {
            glb::SuperWeight w = glb::parse_super_weight(weight_str);
            glb::SuperWeight dual = glb::dual_weight(w);
            if (json_out)
                std::cout << json(glb::to_string(dual)).dump() << "\n";
            else
                std::cout << glb::to_string(dual) << "\n";
        } else if (gt_cmd->parsed()) {
            glb::SuperWeight w = glb::parse_super_weight(weight_str);
            glb::Int count = glb::gt_count(w);
            if (emit) {
                json patterns = json::array();
                glb::gt_patterns(w, [&](const glb::GTPattern& pat) {
                    json chain = json::array();
                    for (const auto& s : pat.super_chain) chain.push_back(glb::to_string(s));
                    for (const auto& c : pat.classical_chain) chain.push_back(glb::to_string(c));
                    patterns.push_back(chain);
                });
                if (json_out) {
                    std::cout << json{{"count", count.str()}, {"patterns", patterns}}.dump()
                              << "\n";
                } else {
                    std::cout << count.str() << "\n";
                    for (const auto& chain : patterns) {
                        for (std::size_t i = 0; i < chain.size(); ++i)
                            std::cout << (i ? " > " : "") << chain[i].get<std::string>();
                        std::cout << "\n";
                    }
                }
            } else if (json_out) {
                std::cout << json{{"count", count.str()}}.dump() << "\n";
            } else {
                std::cout << count.str() << "\n";
            }
        } else if (dim_cmd->parsed()) {
            glb::SuperWeight w = glb::parse_super_weight(weight_str);
            glb::Int dim = glb::dim_unitary(w);
            if (json_out)
                std::cout << json{{"dim", dim.str()}}.dump() << "\n";
            else
                std::cout << dim.str() << "\n";
        } else if (poly_cmd->parsed()) {
            glb::Partition p = glb::parse_partition(partition_str);
            auto pairs = glb::poly_branch(p, opt_m, opt_n);
            if (json_out) {
                json arr = json::array();
                for (const auto& [q, nat] : pairs)
                    arr.push_back(
                        {{"partition", glb::to_string(q)}, {"weight", glb::to_string(nat)}});
                std::cout << arr.dump() << "\n";
            } else {
                for (const auto& [q, nat] : pairs)
                    std::cout << "(" << glb::to_string(q) << ")  " << glb::to_string(nat) << "\n";
            }
        } else if (verify_cmd->parsed()) {
            if (kind == "branch") return verify_branch_sweep(max_m, max_n, max_entry, json_out);
            if (kind == "dual") return verify_dual_sweep(max_m, max_n, max_entry, json_out);
            if (kind == "howe") return verify_howe_sweep(max_m, max_n, json_out);
            std::cerr << "error: unknown verify kind '" << kind << "'\n";
            return kExitUsage;
        } else if (howe_cmd->parsed()) {
            glb::Report report = glb::howe_check(opt_d, opt_m, opt_n, max_degree);
            if (json_out)
                std::cout << report_json(report).dump() << "\n";
            else
                print_report(report, "howe");
            return report.ok() ? kExitOk : kExitVerifyFailed;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
