#include "wgm/tableau.hpp"

#include <algorithm>

namespace wgm {

StandardTableau StandardTableau::from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    int m = 0;
    for (const auto& row : rows) {
        parts.push_back(static_cast<int>(row.size()));
        m += static_cast<int>(row.size());
    }
    StandardTableau t;
    t.shape_ = Partition(parts);
    t.row_.assign(m + 1, -1);
    t.col_.assign(m + 1, -1);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
            int e = rows[r][c];
            if (e < 1 || e > m || t.row_[e] != -1)
                throw domain_error("StandardTableau: entries must be exactly 1..m");
            t.row_[e] = r;
            t.col_[e] = c;
            if (c > 0 && rows[r][c - 1] >= e)
                throw domain_error("StandardTableau: rows must increase");
            if (r > 0 && rows[r - 1][c] >= e)
                throw domain_error("StandardTableau: columns must increase");
        }
    return t;
}

int StandardTableau::entry_at(int row, int col) const {
    for (int e = 1; e <= size(); ++e)
        if (row_[e] == row && col_[e] == col) return e;
    throw domain_error("StandardTableau: no such cell");
}

TauSet StandardTableau::descent_tau() const {
    TauSet tau;
    for (int i = 1; i < size(); ++i)
        if (row_[i] < row_[i + 1]) tau = tau.with(i);
    return tau;
}

std::vector<int> StandardTableau::content_reading_word() const {
    const int m = size();
    // (diagonal, row) sorts each diagonal top to bottom.
    std::vector<std::pair<std::pair<int, int>, int>> cells;
    for (int e = 1; e <= m; ++e) cells.push_back({{diagonal(e), row_[e]}, e});
    std::sort(cells.begin(), cells.end());
    std::vector<int> word;
    for (const auto& c : cells) word.push_back(c.second);
    return word;
}

std::vector<std::vector<int>> StandardTableau::rows() const {
    std::vector<std::vector<int>> out(shape_.rows());
    for (int r = 0; r < shape_.rows(); ++r) out[r].assign(shape_.part(r), 0);
    for (int e = 1; e <= size(); ++e) out[row_[e]][col_[e]] = e;
    return out;
}

std::string StandardTableau::id() const {
    std::string s = "[";
    auto rws = rows();
    for (size_t r = 0; r < rws.size(); ++r) {
        if (r) s += ',';
        s += '[';
        for (size_t c = 0; c < rws[r].size(); ++c) {
            if (c) s += ',';
            s += std::to_string(rws[r][c]);
        }
        s += ']';
    }
    return s + "]";
}

bool StandardTableau::operator<(const StandardTableau& o) const {
    return rows() < o.rows();
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    const int m = shape.size();
    std::vector<std::vector<int>> grid(shape.rows());
    for (int r = 0; r < shape.rows(); ++r) grid[r].assign(shape.part(r), 0);
    std::vector<StandardTableau> out;
    auto fill = [&](auto&& self, int e) -> void {
        if (e > m) {
            out.push_back(StandardTableau::from_rows(grid));
            return;
        }
        for (int r = 0; r < shape.rows(); ++r) {
            int c = 0;
            while (c < shape.part(r) && grid[r][c] != 0) ++c;
            if (c == shape.part(r)) continue;
            if (r > 0 && grid[r - 1][c] == 0) continue;
            grid[r][c] = e;
            self(self, e + 1);
            grid[r][c] = 0;
        }
    };
    fill(fill, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DualKnuthMove> dual_knuth_neighbors(const StandardTableau& t) {
    const int m = t.size();
    std::vector<DualKnuthMove> out;
    auto grid = t.rows();
    for (int i = 1; i < m; ++i) {
        int di = t.diagonal(i), dj = t.diagonal(i + 1);
        int lo = std::min(di, dj), hi = std::max(di, dj);
        int witness = 0;
        for (int w : {i - 1, i + 2}) {
            if (w < 1 || w > m) continue;
            int dw = t.diagonal(w);
            if (dw > lo && dw < hi) {
                witness = w;
                break;
            }
        }
        if (witness == 0) continue;
        std::swap(grid[t.row_of(i)][t.col_of(i)], grid[t.row_of(i + 1)][t.col_of(i + 1)]);
        // A witnessed swap sits on diagonals two or more apart, so the swapped
        // entries cannot be row- or column-adjacent; from_rows revalidates.
        out.push_back({StandardTableau::from_rows(grid), i, witness});
        std::swap(grid[t.row_of(i)][t.col_of(i)], grid[t.row_of(i + 1)][t.col_of(i + 1)]);
    }
    return out;
}

} // namespace wgm
