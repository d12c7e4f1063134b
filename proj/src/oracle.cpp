#include "glbranch/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace glb {

Int weyl_dim(const ClassicalWeight& w) {
    if (!is_dominant(w)) throw std::invalid_argument("weyl_dim requires is_dominant");
    const int d = w.d();
    Rat prod = 1;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            prod *= (w.parts[i - 1] - w.parts[j - 1] + (j - i)) / Rat(j - i);
    return as_integer(prod);
}

Int kac_dim(const SuperWeight& w) {
    if (!is_dominant(w)) throw std::invalid_argument("kac_dim requires is_dominant");
    return (Int(1) << (w.m * w.n)) * weyl_dim(w.even_part()) * weyl_dim(w.odd_part());
}

namespace {

// All mu with nu <= mu <= bound and mu/nu a horizontal (at most one box per
// column) or vertical (at most one box per row) strip.
std::vector<Partition> strip_successors(const Partition& nu, const Partition& bound,
                                        bool horizontal) {
    const int rows = bound.length();
    std::vector<Partition> out;
    std::vector<long> mu(rows);
    auto rec = [&](auto&& self, int r) -> void {
        if (r == rows) {
            out.emplace_back(mu);
            return;
        }
        long lo = nu.part(r + 1);
        long hi = bound.part(r + 1);
        if (horizontal) {
            if (r > 0) hi = std::min(hi, nu.part(r));
            for (long v = lo; v <= hi; ++v) {
                mu[r] = v;
                self(self, r + 1);
            }
        } else {
            if (r > 0) hi = std::min(hi, mu[r - 1]);
            for (long v = lo; v <= std::min(hi, lo + 1); ++v) {
                mu[r] = v;
                self(self, r + 1);
            }
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

Int hook_tableau_dim(const Partition& p, int m, int n) {
    if (!is_hook(p, m, n))
        throw std::invalid_argument("hook_tableau_dim requires an (m,n)-hook partition");
    std::map<Partition, Int> cur{{Partition{}, 1}};
    for (int letter = 0; letter < m + n; ++letter) {
        bool horizontal = letter < m;
        std::map<Partition, Int> next;
        for (const auto& [nu, count] : cur)
            for (Partition& mu : strip_successors(nu, p, horizontal)) next[std::move(mu)] += count;
        cur = std::move(next);
    }
    auto it = cur.find(p);
    return it == cur.end() ? Int(0) : it->second;
}

CharPoly hook_tableau_char(const Partition& p, int m, int n) {
    if (!is_hook(p, m, n))
        throw std::invalid_argument("hook_tableau_char requires an (m,n)-hook partition");
    const int nvars = m + n;
    std::map<Partition, CharPoly> cur;
    cur.emplace(Partition{}, CharPoly::one(nvars));
    for (int letter = 0; letter < nvars; ++letter) {
        bool horizontal = letter < m;
        std::map<Partition, CharPoly> next;
        for (const auto& [nu, poly] : cur) {
            for (Partition& mu : strip_successors(nu, p, horizontal)) {
                CharPoly::Exponents exp(nvars, 0);
                exp[letter] = mu.size() - nu.size();
                CharPoly contrib = poly.shifted(exp);
                auto [it, inserted] = next.emplace(std::move(mu), contrib);
                if (!inserted) it->second += contrib;
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(p);
    return it == cur.end() ? CharPoly(nvars) : it->second;
}

CharPoly classical_char(const ClassicalWeight& w, int nvars, int offset) {
    if (!is_dominant(w)) throw std::invalid_argument("classical_char requires is_dominant");
    if (!is_integral(w)) throw std::invalid_argument("classical_char requires is_integral");
    if (w.d() == 0) return CharPoly::one(nvars);
    CharPoly out(nvars);
    Rat total = weight_sum(w);
    for (const ClassicalWeight& b : classical_branch(w)) {
        CharPoly sub = classical_char(b, nvars, offset);
        CharPoly::Exponents exp(nvars, 0);
        exp[offset + w.d() - 1] = as_long(total - weight_sum(b));
        out += sub.shifted(exp);
    }
    return out;
}

CharPoly kac_char(const SuperWeight& w) {
    if (!is_dominant(w)) throw std::invalid_argument("kac_char requires is_dominant");
    if (!is_integral(w)) throw std::invalid_argument("kac_char requires is_integral");
    const int nvars = w.m + w.n;
    CharPoly ch = classical_char(w.even_part(), nvars, 0) *
                  classical_char(w.odd_part(), nvars, w.m);
    for (int i = 0; i < w.m; ++i) {
        for (int mu = 0; mu < w.n; ++mu) {
            CharPoly factor = CharPoly::one(nvars);
            CharPoly::Exponents exp(nvars, 0);
            exp[i] = -1;
            exp[w.m + mu] = 1;
            factor.add_term(exp, 1);
            ch = ch * factor;
        }
    }
    return ch;
}

Int dim_unitary(const SuperWeight& w) {
    if (w.n == 0) {
        if (!is_dominant(w)) throw std::invalid_argument("dim_unitary requires is_dominant");
        return weyl_dim(w.even_part());
    }
    UnitaryClass1 c = classify_type1(w);
    if (c.verdict == Type1Verdict::TypicalUnitary) return kac_dim(w);
    if (c.verdict == Type1Verdict::AtypicalUnitary)
        return hook_tableau_dim(hook_from_atypical(w).sigma, w.m, w.n);
    throw std::invalid_argument("dim_unitary requires a unitary weight (classify_type1: " +
                                to_string(c) + ")");
}

Int dim_type2(const SuperWeight& w) {
    if (w.n == 0) {
        if (!is_dominant(w)) throw std::invalid_argument("dim_type2 requires is_dominant");
        return weyl_dim(w.even_part());
    }
    UnitaryClass2 c = classify_type2(w);
    if (c.verdict == Type2Verdict::TypicalUnitary2) return kac_dim(w);
    if (c.verdict == Type2Verdict::AtypicalUnitary2)
        return hook_tableau_dim(hook_from_atypical_type2(w).sigma, w.m, w.n);
    throw std::invalid_argument("dim_type2 requires a type 2 unitary weight (classify_type2: " +
                                to_string(c) + ")");
}

CharPoly char_unitary(const SuperWeight& w) {
    if (!is_integral(w)) throw std::invalid_argument("char_unitary requires is_integral");
    if (w.n == 0) {
        if (!is_dominant(w)) throw std::invalid_argument("char_unitary requires is_dominant");
        return classical_char(w.even_part(), w.m, 0);
    }
    UnitaryClass1 c = classify_type1(w);
    if (c.verdict == Type1Verdict::TypicalUnitary) return kac_char(w);
    if (c.verdict == Type1Verdict::AtypicalUnitary) {
        HookData hd = hook_from_atypical(w);
        long wn = as_long(w.omega[w.n - 1]);
        CharPoly::Exponents exp(w.m + w.n, 0);
        for (int i = 0; i < w.m; ++i) exp[i] = -wn;
        for (int mu = 0; mu < w.n; ++mu) exp[w.m + mu] = wn;
        return hook_tableau_char(hd.sigma, w.m, w.n).shifted(exp);
    }
    throw std::invalid_argument("char_unitary requires a unitary weight (classify_type1: " +
                                to_string(c) + ")");
}

namespace {

std::string char_summary(const CharPoly& cp) {
    return "terms=" + std::to_string(cp.term_count()) + " sum=" + cp.eval_ones().str();
}

void check_multiplicity_free(Report& report, const BranchList& branches) {
    bool distinct = true;
    for (std::size_t i = 0; i + 1 < branches.size(); ++i)
        if (branches[i] == branches[i + 1]) distinct = false;
    report.checks.push_back({"multiplicity-free", std::to_string(branches.size()) + " branches",
                             "pairwise distinct", distinct});
}

void check_char_restriction(Report& report, const SuperWeight& w, const BranchList& branches,
                            bool kac) {
    CharPoly lhs = kac ? kac_char(w) : char_unitary(w);
    CharPoly rhs(w.m + w.n);
    Rat total = weight_sum(w);
    for (const SuperWeight& b : branches) {
        long delta = as_long(total - weight_sum(b));
        rhs += embed_with_last_var(kac ? kac_char(b) : char_unitary(b), delta);
    }
    report.checks.push_back(
        {"character restriction", char_summary(lhs), char_summary(rhs), lhs == rhs});
}

}  // namespace

Report verify_branch(const SuperWeight& w, BranchKind kind) {
    Report report;
    switch (kind) {
        case BranchKind::Type1: {
            BranchList branches = branch_type1(w);
            check_multiplicity_free(report, branches);
            Int lhs = dim_unitary(w), rhs = 0;
            for (const SuperWeight& b : branches) rhs += dim_unitary(b);
            report.checks.push_back({"dimension sum", lhs.str(), rhs.str(), lhs == rhs});
            if (is_integral(w)) check_char_restriction(report, w, branches, false);
            break;
        }
        case BranchKind::Type2: {
            BranchList branches = branch_type2(w);
            check_multiplicity_free(report, branches);
            Int lhs = dim_type2(w), rhs = 0;
            for (const SuperWeight& b : branches) rhs += dim_type2(b);
            report.checks.push_back({"dimension sum", lhs.str(), rhs.str(), lhs == rhs});
            break;
        }
        case BranchKind::Kac: {
            BranchList branches = kac_branch(w);
            check_multiplicity_free(report, branches);
            Int lhs = kac_dim(w), rhs = 0;
            for (const SuperWeight& b : branches) rhs += kac_dim(b);
            report.checks.push_back({"Kac dimension sum", lhs.str(), rhs.str(), lhs == rhs});
            check_char_restriction(report, w, branches, true);
            break;
        }
    }
    return report;
}

std::vector<Partition> partitions_of(long k, int max_parts) {
    std::vector<Partition> out;
    std::vector<long> parts;
    auto rec = [&](auto&& self, long remaining, long cap) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        if (static_cast<int>(parts.size()) == max_parts) return;
        for (long v = std::min(cap, remaining); v >= 1; --v) {
            parts.push_back(v);
            self(self, remaining - v, v);
            parts.pop_back();
        }
    };
    rec(rec, k, k);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return b.parts() < a.parts(); });
    return out;
}

Report howe_check(int d, int m, int n, int max_degree) {
    if (d < 1 || m < 1 || n < 1 || max_degree < 0)
        throw std::invalid_argument("howe_check requires d, m, n >= 1 and max_degree >= 0");
    Report report;
    for (long k = 0; k <= max_degree; ++k) {
        Int lhs = 0;
        for (const Partition& p : partitions_of(k, d)) {
            if (!is_hook(p, m, n)) continue;
            std::vector<Rat> padded(d, 0);
            for (int i = 0; i < p.length(); ++i) padded[i] = p.parts()[i];
            lhs += weyl_dim(ClassicalWeight(std::move(padded))) * hook_tableau_dim(p, m, n);
        }
        // coefficient of t^k in (1-t)^{-dm} (1+t)^{dn}
        Int rhs = 0;
        for (long j = 0; j <= std::min<long>(k, static_cast<long>(d) * n); ++j)
            rhs += binomial(static_cast<long>(d) * n, j) *
                   binomial(static_cast<long>(d) * m + k - j - 1, k - j);
        report.checks.push_back({"graded dimension, degree " + std::to_string(k), lhs.str(),
                                 rhs.str(), lhs == rhs});
    }
    return report;
}

}  // namespace glb
