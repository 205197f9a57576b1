#pragma once

#include <array>
#include <utility>
#include <vector>

#include "wgm/tau_set.hpp"

namespace wgm {

// The type-A Coxeter graph on generators {1, .., n}: a path with bonds
// (i, i+1).  `active` carves out a parabolic sub-diagram; bonds and A_4
// windows are only those lying entirely inside it.
struct CoxeterTypeA {
    int n = 0;
    TauSet active;

    explicit CoxeterTypeA(int rank) : n(rank), active(TauSet::up_to(rank)) {
        if (rank < 0 || rank > 30) throw domain_error("CoxeterTypeA: rank out of range");
    }
    CoxeterTypeA(int rank, TauSet act) : CoxeterTypeA(rank) {
        if (!act.subset_of(TauSet::up_to(rank)))
            throw domain_error("CoxeterTypeA: active set exceeds rank");
        active = act;
    }

    bool is_active(int i) const { return i >= 1 && i <= n && active.contains(i); }

    bool bonded(int i, int j) const {
        if (!is_active(i) || !is_active(j)) return false;
        return i - j == 1 || j - i == 1;
    }

    std::vector<std::pair<int, int>> bonds() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i < n; ++i)
            if (bonded(i, i + 1)) out.push_back({i, i + 1});
        return out;
    }

    // Consecutive quadruples k-i-j-l, every generator active.
    std::vector<std::array<int, 4>> a4_paths() const {
        std::vector<std::array<int, 4>> out;
        for (int c = 1; c + 3 <= n; ++c)
            if (is_active(c) && is_active(c + 1) && is_active(c + 2) && is_active(c + 3))
                out.push_back({c, c + 1, c + 2, c + 3});
        return out;
    }

    std::vector<int> generators() const { return active.to_list(); }
};

} // namespace wgm
