#include "glbranch/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "glbranch/classify.hpp"

namespace glb {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be non-increasing");
    if (!parts_.empty() && parts_.back() < 0)
        throw std::invalid_argument("partition parts must be non-negative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("partition row index must be >= 1");
    return i <= length() ? parts_[i - 1] : 0;
}

long Partition::size() const {
    long s = 0;
    for (long p : parts_) s += p;
    return s;
}

Partition conjugate(const Partition& p) {
    std::vector<long> c(p.length() ? static_cast<std::size_t>(p.parts()[0]) : 0, 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
        long col = static_cast<long>(j) + 1;
        c[j] = static_cast<long>(
            std::count_if(p.parts().begin(), p.parts().end(), [&](long r) { return r >= col; }));
    }
    return Partition(std::move(c));
}

bool is_hook(const Partition& p, int m, int n) { return p.part(m + 1) <= n; }

SuperWeight natural_weight(const Partition& p, int m, int n) {
    if (!is_hook(p, m, n))
        throw std::invalid_argument("natural_weight requires an (m,n)-hook partition");
    Partition c = conjugate(p);
    std::vector<Rat> l(m), w(n);
    for (int i = 1; i <= m; ++i) l[i - 1] = p.part(i);
    for (int mu = 1; mu <= n; ++mu) w[mu - 1] = std::max(c.part(mu) - m, 0L);
    return SuperWeight(std::move(l), std::move(w));
}

bool is_natural_weight(const SuperWeight& w) {
    if (!is_dominant(w) || !is_integral(w)) return false;
    for (const Rat& r : w.lambda)
        if (r < 0) return false;
    int positive = 0;
    for (const Rat& r : w.omega) {
        if (r < 0) return false;
        if (r > 0) ++positive;
    }
    // Columns of height m + omega_mu must fit under row m of the partition.
    return w.m == 0 || w.lambda[w.m - 1] >= positive;
}

HookData hook_from_atypical(const SuperWeight& w) {
    UnitaryClass1 c = classify_type1(w);
    if (c.verdict != Type1Verdict::AtypicalUnitary)
        throw std::invalid_argument("hook_from_atypical requires an atypical unitary weight");
    Rat wn = w.omega[w.n - 1];

    std::vector<long> parts;
    parts.reserve(w.m);
    for (int i = 0; i < w.m; ++i) parts.push_back(as_long(w.lambda[i] + wn));
    std::vector<long> block;
    for (int mu = 0; mu < c.mu - 1; ++mu) block.push_back(as_long(w.omega[mu] - wn));
    Partition block_conj = conjugate(Partition(std::move(block)));
    for (long col : block_conj.parts()) parts.push_back(col);

    long d = w.m + as_long(w.omega[0] - wn);
    Partition sigma(std::move(parts));
    if (!(natural_weight(sigma, w.m, w.n) == twist(w, wn)))
        throw std::logic_error("hook_from_atypical: sigma^nat != twist(w, w_n) for " +
                               to_string(w));
    return {d, std::move(sigma)};
}

SuperWeight lowest_weight_poly(const Partition& p, int m, int n) {
    if (!is_hook(p, m, n))
        throw std::invalid_argument("lowest_weight_poly requires an (m,n)-hook partition");
    Partition c = conjugate(p);
    std::vector<Rat> l(m), w(n);
    for (int i = 1; i <= m; ++i) l[i - 1] = std::max(p.part(m + 1 - i) - n, 0L);
    for (int mu = 1; mu <= n; ++mu) w[mu - 1] = c.part(n + 1 - mu);
    return SuperWeight(std::move(l), std::move(w));
}

namespace {

SuperWeight negate(const SuperWeight& w) {
    std::vector<Rat> l = w.lambda, o = w.omega;
    for (Rat& r : l) r = -r;
    for (Rat& r : o) r = -r;
    return SuperWeight(std::move(l), std::move(o));
}

SuperWeight dual_typical(const SuperWeight& w) {
    std::vector<Rat> l(w.m), o(w.n);
    for (int i = 0; i < w.m; ++i) l[i] = Rat(w.n) - w.lambda[w.m - 1 - i];
    for (int mu = 0; mu < w.n; ++mu) o[mu] = -w.omega[w.n - 1 - mu] - w.m;
    return SuperWeight(std::move(l), std::move(o));
}

SuperWeight dual_of_type1_atypical(const SuperWeight& w) {
    HookData hd = hook_from_atypical(w);
    SuperWeight low = lowest_weight_poly(hd.sigma, w.m, w.n);
    return twist(negate(low), w.omega[w.n - 1]);
}

}  // namespace

DualHookData hook_from_atypical_type2(const SuperWeight& w) {
    UnitaryClass2 c = classify_type2(w);
    if (c.verdict != Type2Verdict::AtypicalUnitary2)
        throw std::invalid_argument(
            "hook_from_atypical_type2 requires an atypical type 2 unitary weight");
    const int m = w.m, n = w.n;
    Rat s = w.lambda[0];

    // Lowest weight of the underlying polynomial module, read off from
    // w = twist(-low, s).
    std::vector<long> excess(m);   // <sigma_i - n>, i = 1..m
    std::vector<long> columns(n);  // sigma^c_j, j = 1..n
    for (int i = 1; i <= m; ++i) excess[i - 1] = as_long(s - w.lambda[m - i]);
    for (int j = 1; j <= n; ++j) columns[j - 1] = as_long(-s - w.omega[n - j]);

    long nrows = std::max<long>(m, columns[0]);
    std::vector<long> parts;
    for (long i = 1; i <= nrows; ++i) {
        if (i <= m && excess[i - 1] > 0) {
            parts.push_back(n + excess[i - 1]);
        } else {
            parts.push_back(static_cast<long>(
                std::count_if(columns.begin(), columns.end(), [&](long h) { return h >= i; })));
        }
    }
    Partition sigma(std::move(parts));

    SuperWeight primal = twist(natural_weight(sigma, m, n), -s);
    if (!(dual_of_type1_atypical(primal) == w))
        throw std::logic_error("hook_from_atypical_type2: reconstruction failed for " +
                               to_string(w));
    long d = m + as_long(primal.omega[0] - primal.omega[n - 1]);
    return {d, std::move(sigma), std::move(s)};
}

SuperWeight dual_weight(const SuperWeight& w) {
    if (w.n == 0) {
        if (!is_dominant(w)) throw std::invalid_argument("dual_weight requires a dominant weight");
        std::vector<Rat> l(w.m);
        for (int i = 0; i < w.m; ++i) l[i] = -w.lambda[w.m - 1 - i];
        return SuperWeight(std::move(l), {});
    }
    UnitaryClass1 c1 = classify_type1(w);
    if (c1.verdict == Type1Verdict::TypicalUnitary) return dual_typical(w);
    if (c1.verdict == Type1Verdict::AtypicalUnitary) return dual_of_type1_atypical(w);
    UnitaryClass2 c2 = classify_type2(w);
    if (c2.verdict == Type2Verdict::TypicalUnitary2) return dual_typical(w);
    if (c2.verdict == Type2Verdict::AtypicalUnitary2) {
        DualHookData dh = hook_from_atypical_type2(w);
        return twist(natural_weight(dh.sigma, w.m, w.n), -dh.s);
    }
    throw std::invalid_argument("dual_weight requires a unitary weight (either star type), got " +
                                to_string(w));
}

std::vector<Partition> vertical_strips(const Partition& p, int m, int n) {
    if (n < 1) throw std::invalid_argument("vertical_strips requires n >= 1");
    if (!is_hook(p, m, n))
        throw std::invalid_argument("vertical_strips requires an (m,n)-hook partition");
    const int len = p.length();
    std::vector<Partition> out;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
        std::vector<long> q(p.parts());
        for (int i = 0; i < len; ++i)
            if (mask & (1u << i)) --q[i];
        bool ok = true;
        for (int i = 0; ok && i + 1 < len; ++i) ok = q[i] >= q[i + 1];
        if (!ok || (len && q.back() < 0)) continue;
        Partition cand(std::move(q));
        if (is_hook(cand, m, n - 1)) out.push_back(std::move(cand));
    }
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return b.parts() < a.parts(); });
    return out;
}

Partition parse_partition(std::string_view s) {
    if (s.empty()) return Partition{};
    std::vector<long> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string_view tok =
            comma == std::string_view::npos ? s.substr(start) : s.substr(start, comma - start);
        Rat r;
        try {
            r = parse_rat(tok);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("in partition '" + std::string(s) + "': " + e.what());
        }
        parts.push_back(as_long(r));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    for (int i = 0; i < p.length(); ++i) os << (i ? "," : "") << p.parts()[i];
    return os.str();
}

}  // namespace glb
