#pragma once

#include <string>
#include <vector>

#include "wgm/errors.hpp"

namespace wgm {

// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text); // "3,2,1"
    static std::vector<Partition> all(int m);        // partitions of m, lex-descending

    int size() const;                                // sum of parts
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int r) const { return parts_.at(r); }
    const std::vector<int>& parts() const { return parts_; }

    // Row indices whose last cell can be removed.
    std::vector<int> corners() const;
    Partition remove_corner(int row) const;
    bool contains_cell(int row, int col) const;

    // Number of standard fillings, by the hook-length formula.
    unsigned long long hook_count() const;

    std::string to_string() const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
};

} // namespace wgm
