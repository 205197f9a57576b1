#pragma once

#include <string>
#include <vector>

#include "wgm/tau_set.hpp"

namespace wgm {

// Permutation of {1..m} in one-line notation.
class Permutation {
public:
    static Permutation identity(int m);
    static Permutation longest(int m); // m, m-1, .., 1
    explicit Permutation(std::vector<int> one_line);

    int size() const { return static_cast<int>(v_.size()); }
    int operator()(int i) const { return v_.at(i - 1); }
    int position_of(int value) const;

    // {i : i sits to the right of i+1}; these index s_i with s_i w < w.
    TauSet left_descents() const;
    // {i : w(i) > w(i+1)}; these index s_i with w s_i < w.
    TauSet right_descents() const;

    Permutation mult_left(int s) const;  // s_s * w: swap the values s, s+1
    Permutation mult_right(int s) const; // w * s_s: swap positions s, s+1

    int length() const; // inversions
    Permutation inverse() const;
    bool is_involution() const;

    std::string one_line() const; // digits for m <= 9, comma-joined beyond
    const std::vector<int>& values() const { return v_; }

    bool operator==(const Permutation& o) const { return v_ == o.v_; }
    bool operator<(const Permutation& o) const { return v_ < o.v_; }

private:
    std::vector<int> v_;
};

// All of S_m in lexicographic one-line order; index_in_sm inverts the list.
std::vector<Permutation> all_permutations(int m);
int index_in_sm(const Permutation& w);

} // namespace wgm
