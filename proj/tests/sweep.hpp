#pragma once

#include <functional>
#include <vector>

#include "glbranch/weight.hpp"

namespace glb::testing {

// All dominant integral gl(m|n) weights with entries in [-max_entry, max_entry]
// (non-increasing integer sequences in each block).
inline std::vector<SuperWeight> dominant_integral_weights(int m, int n, long max_entry) {
    std::vector<SuperWeight> out;
    std::vector<long> l(m), o(n);
    std::function<void(int)> rec_o = [&](int mu) {
        if (mu == n) {
            std::vector<Rat> lam(l.begin(), l.end()), om(o.begin(), o.end());
            out.emplace_back(std::move(lam), std::move(om));
            return;
        }
        long top = mu == 0 ? max_entry : o[mu - 1];
        for (long v = -max_entry; v <= top; ++v) {
            o[mu] = v;
            rec_o(mu + 1);
        }
    };
    std::function<void(int)> rec_l = [&](int i) {
        if (i == m) {
            rec_o(0);
            return;
        }
        long top = i == 0 ? max_entry : l[i - 1];
        for (long v = -max_entry; v <= top; ++v) {
            l[i] = v;
            rec_l(i + 1);
        }
    };
    rec_l(0);
    return out;
}

}  // namespace glb::testing
