#pragma once

#include <string>
#include <vector>

#include "wgm/partition.hpp"
#include "wgm/tau_set.hpp"

namespace wgm {

// Standard Young tableau in English convention: rows and columns strictly
// increasing, entries exactly 1..m.
class StandardTableau {
public:
    static StandardTableau from_rows(const std::vector<std::vector<int>>& rows);

    const Partition& shape() const { return shape_; }
    int size() const { return static_cast<int>(row_.size()) - 1; }

    int row_of(int entry) const { return row_.at(entry); }
    int col_of(int entry) const { return col_.at(entry); }
    int diagonal(int entry) const { return col_.at(entry) - row_.at(entry); }
    int entry_at(int row, int col) const;

    // {i : i sits in a higher row than i+1}, higher meaning smaller row index.
    TauSet descent_tau() const;

    // Diagonals in increasing order, each read top to bottom.
    std::vector<int> content_reading_word() const;

    std::vector<std::vector<int>> rows() const;
    std::string id() const; // "[[1,2],[3,4]]"

    bool operator==(const StandardTableau& o) const { return row_ == o.row_ && col_ == o.col_; }
    bool operator<(const StandardTableau& o) const;

private:
    StandardTableau() = default;
    Partition shape_;
    std::vector<int> row_, col_; // indexed by entry, slot 0 unused
};

// All standard tableaux of the shape, sorted by row-reading word.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

struct DualKnuthMove {
    StandardTableau result;
    int exchanged; // i, for the swap of i and i+1
    int witness;   // i-1 or i+2, on a diagonal strictly between
};

// All tableaux reachable by one dual Knuth move.  At most one move exists per
// exchanged value; when both witnesses qualify the smaller one is recorded.
std::vector<DualKnuthMove> dual_knuth_neighbors(const StandardTableau& t);

} // namespace wgm
