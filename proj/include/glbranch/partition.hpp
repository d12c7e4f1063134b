#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "glbranch/weight.hpp"

namespace glb {

// Non-increasing sequence of non-negative integers.  Trailing zeros are
// normalized away; declared lengths (P_d membership) travel separately.
class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long part(int i) const;  // 1-based, zero beyond the length
    long size() const;       // number of boxes

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

   private:
    std::vector<long> parts_;
};

Partition conjugate(const Partition& p);

// (m,n)-hook: part m+1 (zero if absent) is <= n.
bool is_hook(const Partition& p, int m, int n);

// lambda^nat = (l_1..l_m, <c_1 - m>, ..., <c_n - m>) with <x> = max{x, 0}.
SuperWeight natural_weight(const Partition& p, int m, int n);

// Whether w lies in the image of natural_weight, i.e. w = p^nat for some
// (m,n)-hook partition p: dominant, integral, non-negative, and the last
// even entry at least the number of positive odd entries.
bool is_natural_weight(const SuperWeight& w);

struct HookData {
    long d;           // declared length, d = m + w_1 - w_n
    Partition sigma;  // hook partition with sigma^nat = twist(w, w_n)
};

// Inverse of natural_weight on atypical unitary weights (up to the twist by
// w_n); asserts natural_weight(sigma, m, n) == twist(w, w_n).
HookData hook_from_atypical(const SuperWeight& w);

struct DualHookData {
    long d;
    Partition sigma;  // L(w) is isomorphic to the dual of L(sigma^nat) x C_{-s}
    Rat s;
};

// For an atypical type 2 unitary weight w, recovers the hook partition sigma
// and twist s with dual_weight(twist(natural_weight(sigma), -s)) == w.
DualHookData hook_from_atypical_type2(const SuperWeight& w);

// Lowest weight of the polynomial module L(p^nat):
// (<p_m - n>, ..., <p_1 - n> | c_n, ..., c_1).
SuperWeight lowest_weight_poly(const Partition& p, int m, int n);

// Highest weight of the dual module.  Defined on unitary weights of either
// star type; an involution exchanging type 1 and type 2.
SuperWeight dual_weight(const SuperWeight& w);

// All p' with p_i - p'_i in {0,1}, p' a partition, (m, n-1)-hook.
// Descending lexicographic order.
std::vector<Partition> vertical_strips(const Partition& p, int m, int n);

// Text syntax "p1,p2,..."; empty string is the empty partition.
Partition parse_partition(std::string_view s);
std::string to_string(const Partition& p);

}  // namespace glb
