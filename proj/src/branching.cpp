#include "glbranch/branching.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "glbranch/classify.hpp"

namespace glb {

namespace {

// All choices w'_i in [w_{i+1}, w_i] with integer steps, for i = 1..d-1.
std::vector<std::vector<Rat>> interlace_choices(const std::vector<Rat>& parts) {
    std::vector<std::vector<Rat>> out{{}};
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        long gap = as_long(parts[i] - parts[i + 1]);
        std::vector<std::vector<Rat>> next;
        for (const auto& prefix : out) {
            for (long t = 0; t <= gap; ++t) {
                auto ext = prefix;
                ext.push_back(parts[i] - t);
                next.push_back(std::move(ext));
            }
        }
        out = std::move(next);
    }
    if (parts.size() <= 1) return {{}};
    return out;
}

// All dominant {0,1}-drop results; frozen[i] pins entry i.
std::vector<std::vector<Rat>> drop_choices(const std::vector<Rat>& parts,
                                           const std::vector<bool>& frozen) {
    std::vector<std::vector<Rat>> out;
    const std::size_t d = parts.size();
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<Rat> cand(d);
        bool ok = true;
        for (std::size_t i = 0; i < d; ++i) {
            bool drop = mask & (1u << i);
            if (drop && frozen[i]) {
                ok = false;
                break;
            }
            cand[i] = drop ? parts[i] - 1 : parts[i];
        }
        for (std::size_t i = 0; ok && i + 1 < d; ++i) ok = cand[i] >= cand[i + 1];
        if (ok) out.push_back(std::move(cand));
    }
    return out;
}

BranchList assemble(const std::vector<std::vector<Rat>>& evens,
                    const std::vector<std::vector<Rat>>& odds) {
    BranchList out;
    for (const auto& l : evens)
        for (const auto& o : odds) out.emplace_back(l, o);
    std::sort(out.begin(), out.end(),
              [](const SuperWeight& a, const SuperWeight& b) { return desc_lex_less(a, b); });
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i] == out[i + 1])
            throw std::logic_error("branch list is not multiplicity-free");
    return out;
}

}  // namespace

std::vector<ClassicalWeight> classical_branch(const ClassicalWeight& w) {
    if (w.d() < 1) throw std::invalid_argument("classical_branch requires d >= 1");
    if (!is_dominant(w)) throw std::invalid_argument("classical_branch requires is_dominant");
    std::vector<ClassicalWeight> out;
    for (auto& parts : interlace_choices(w.parts)) out.emplace_back(std::move(parts));
    std::sort(out.begin(), out.end(),
              [](const ClassicalWeight& a, const ClassicalWeight& b) { return desc_lex_less(a, b); });
    return out;
}

std::vector<ClassicalWeight> pieri(const ClassicalWeight& w, int k, bool dual) {
    if (!is_dominant(w)) throw std::invalid_argument("pieri requires is_dominant");
    if (k < 0 || k > w.d()) throw std::invalid_argument("pieri requires 0 <= k <= d");
    const int d = w.d();
    std::vector<ClassicalWeight> out;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<Rat> cand(d);
        int boxes = 0;
        for (int i = 0; i < d; ++i) {
            bool move = mask & (1u << i);
            boxes += move;
            cand[i] = dual ? Rat(w.parts[i] - int(move)) : Rat(w.parts[i] + int(move));
        }
        if (boxes != k) continue;
        ClassicalWeight c(std::move(cand));
        if (is_dominant(c)) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const ClassicalWeight& a, const ClassicalWeight& b) { return desc_lex_less(a, b); });
    return out;
}

BranchList branch_type1(const SuperWeight& w) {
    if (w.n < 1) throw std::invalid_argument("branch_type1 requires n >= 1");
    UnitaryClass1 c = classify_type1(w);
    if (!c.unitary())
        throw std::invalid_argument("branch_type1 requires a unitary weight (classify_type1: " +
                                    to_string(c) + ")");

    std::vector<bool> frozen(w.m, false);
    // (C1) exception: (w + rho, eps_m - delta_1) = 0 pins the last even entry.
    if (atyp_form(w, w.m, 1) == 0) frozen[w.m - 1] = true;

    BranchList out = assemble(drop_choices(w.lambda, frozen), interlace_choices(w.omega));
    if (c.verdict == Type1Verdict::AtypicalUnitary) {
        // In the atypical case L(w) is a twisted polynomial module, and the
        // branches are exactly the twisted natural weights of the vertical
        // strips of its hook partition.  The interlacing inequalities alone
        // over-generate when omega_1 > omega_n: candidates whose twist by
        // omega_n is not a natural hook weight have no strip preimage and do
        // not occur in the decomposition.
        Rat wn = w.omega[w.n - 1];
        std::erase_if(out, [&](const SuperWeight& b) { return !is_natural_weight(twist(b, wn)); });
    }
    if (w.n > 1)
        for (const SuperWeight& b : out)
            if (!classify_type1(b).unitary())
                throw std::logic_error("branch_type1 produced a non-unitary branch " +
                                       to_string(b) + " from " + to_string(w));
    return out;
}

BranchList branch_type2(const SuperWeight& w) {
    if (w.n < 1) throw std::invalid_argument("branch_type2 requires n >= 1");
    UnitaryClass2 c = classify_type2(w);
    if (!c.unitary())
        throw std::invalid_argument("branch_type2 requires a type 2 unitary weight "
                                    "(classify_type2: " +
                                    to_string(c) + ")");

    // (C1'): the maximal k with (w + rho, eps_k - delta_1) = 0 pins entries 1..k.
    int kmax = 0;
    for (int k = 1; k <= w.m; ++k)
        if (atyp_form(w, k, 1) == 0) kmax = k;
    std::vector<bool> frozen(w.m, false);
    for (int i = 0; i < kmax; ++i) frozen[i] = true;

    BranchList out = assemble(drop_choices(w.lambda, frozen), interlace_choices(w.omega));
    if (w.n > 1)
        for (const SuperWeight& b : out)
            if (!classify_type2(b).unitary())
                throw std::logic_error("branch_type2 produced a non-type-2-unitary branch " +
                                       to_string(b) + " from " + to_string(w));
    return out;
}

BranchList kac_branch(const SuperWeight& w) {
    if (w.n < 1) throw std::invalid_argument("kac_branch requires n >= 1");
    if (!is_dominant(w)) throw std::invalid_argument("kac_branch requires is_dominant");
    if (!is_integral(w)) throw std::invalid_argument("kac_branch requires is_integral");
    std::vector<bool> frozen(w.m, false);
    return assemble(drop_choices(w.lambda, frozen), interlace_choices(w.omega));
}

std::vector<std::pair<Partition, SuperWeight>> poly_branch(const Partition& p, int m, int n) {
    if (n < 1) throw std::invalid_argument("poly_branch requires n >= 1");
    std::vector<std::pair<Partition, SuperWeight>> out;
    for (Partition& q : vertical_strips(p, m, n)) {
        SuperWeight nat = natural_weight(q, m, n - 1);
        out.emplace_back(std::move(q), std::move(nat));
    }
    return out;
}

namespace {

Int classical_count(const ClassicalWeight& w, std::map<std::string, Int>& memo) {
    if (w.d() <= 1) return 1;
    std::string key = std::to_string(w.d()) + ":" + to_string(w);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = 0;
    for (const ClassicalWeight& b : classical_branch(w)) total += classical_count(b, memo);
    memo[key] = total;
    return total;
}

Int super_count(const SuperWeight& w, std::map<std::string, Int>& memo) {
    if (w.n == 0) return classical_count(w.even_part(), memo);
    std::string key = "s" + std::to_string(w.n) + ":" + to_string(w);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = 0;
    for (const SuperWeight& b : branch_type1(w)) total += super_count(b, memo);
    memo[key] = total;
    return total;
}

void classical_dfs(const ClassicalWeight& w, GTPattern& pat,
                   const std::function<void(const GTPattern&)>& emit) {
    pat.classical_chain.push_back(w);
    if (w.d() <= 1) {
        emit(pat);
    } else {
        for (const ClassicalWeight& b : classical_branch(w)) classical_dfs(b, pat, emit);
    }
    pat.classical_chain.pop_back();
}

void super_dfs(const SuperWeight& w, GTPattern& pat,
               const std::function<void(const GTPattern&)>& emit) {
    pat.super_chain.push_back(w);
    if (w.n == 0) {
        classical_dfs(w.even_part(), pat, emit);
    } else {
        for (const SuperWeight& b : branch_type1(w)) super_dfs(b, pat, emit);
    }
    pat.super_chain.pop_back();
}

}  // namespace

Int gt_count(const SuperWeight& w) {
    if (w.n >= 1 && !classify_type1(w).unitary())
        throw std::invalid_argument("gt_count requires a unitary weight");
    if (w.n == 0 && !is_dominant(w))
        throw std::invalid_argument("gt_count requires a dominant weight");
    std::map<std::string, Int> memo;
    return super_count(w, memo);
}

void gt_patterns(const SuperWeight& w, const std::function<void(const GTPattern&)>& emit) {
    if (w.n >= 1 && !classify_type1(w).unitary())
        throw std::invalid_argument("gt_patterns requires a unitary weight");
    if (w.n == 0 && !is_dominant(w))
        throw std::invalid_argument("gt_patterns requires a dominant weight");
    GTPattern pat;
    super_dfs(w, pat, emit);
}

}  // namespace glb
