#include "wgm/rsk.hpp"

#include <algorithm>

namespace wgm {

RskPair rsk(const Permutation& w) {
    std::vector<std::vector<int>> p, q;
    for (int i = 1; i <= w.size(); ++i) {
        int x = w(i);
        std::size_t row = 0;
        while (true) {
            if (row == p.size()) {
                p.push_back({x});
                q.push_back({i});
                break;
            }
            auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
            if (it == p[row].end()) {
                p[row].push_back(x);
                q[row].push_back(i);
                break;
            }
            std::swap(*it, x);
            ++row;
        }
    }
    return {StandardTableau::from_rows(p), StandardTableau::from_rows(q)};
}

} // namespace wgm
