#pragma once

#include <vector>

#include "worm/base.hpp"

namespace worm {

// Enumerates every set partition of {0..m-1} as a restricted growth string:
// rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]). Visits partitions in
// lexicographic rgs order; fn receives the rgs and its block count.
template <typename Fn>
void for_each_partition(int m, Fn&& fn)
{
    if (m < 0)
        throw contract_error("for_each_partition: negative ground set");
    if (m == 0)
        return;
    std::vector<int> rgs(m, 0);
    std::vector<int> prefix_max(m, 0); // max of rgs[0..i-1], with prefix_max[0] = -1
    prefix_max[0] = -1;
    for (;;) {
        int blocks = 0;
        for (int i = 0; i < m; ++i)
            blocks = std::max(blocks, rgs[i]);
        fn(const_cast<const std::vector<int>&>(rgs), blocks + 1);

        int i = m - 1;
        while (i > 0 && rgs[i] > prefix_max[i])
            --i;
        if (i == 0)
            return;
        ++rgs[i];
        for (int j = i + 1; j < m; ++j) {
            rgs[j] = 0;
            prefix_max[j] = std::max(prefix_max[j - 1], rgs[j - 1]);
        }
    }
}

} // namespace worm
