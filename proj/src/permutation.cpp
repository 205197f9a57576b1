#include "wgm/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace wgm {

Permutation Permutation::identity(int m) {
    if (m < 1 || m > 12) throw domain_error("Permutation: size out of range");
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::longest(int m) {
    Permutation w = identity(m);
    std::reverse(w.v_.begin(), w.v_.end());
    return w;
}

Permutation::Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
    int m = static_cast<int>(v_.size());
    if (m < 1 || m > 12) throw domain_error("Permutation: size out of range");
    std::vector<char> seen(m + 1, 0);
    for (int x : v_) {
        if (x < 1 || x > m || seen[x]) throw domain_error("Permutation: not a permutation of 1..m");
        seen[x] = 1;
    }
}

int Permutation::position_of(int value) const {
    for (int i = 0; i < size(); ++i)
        if (v_[i] == value) return i + 1;
    throw domain_error("Permutation: value out of range");
}

TauSet Permutation::left_descents() const {
    std::vector<int> pos(size() + 1);
    for (int i = 0; i < size(); ++i) pos[v_[i]] = i;
    TauSet t;
    for (int i = 1; i < size(); ++i)
        if (pos[i] > pos[i + 1]) t = t.with(i);
    return t;
}

TauSet Permutation::right_descents() const {
    TauSet t;
    for (int i = 1; i < size(); ++i)
        if (v_[i - 1] > v_[i]) t = t.with(i);
    return t;
}

Permutation Permutation::mult_left(int s) const {
    if (s < 1 || s >= size()) throw domain_error("Permutation: generator out of range");
    Permutation w = *this;
    for (int& x : w.v_) {
        if (x == s) x = s + 1;
        else if (x == s + 1) x = s;
    }
    return w;
}

Permutation Permutation::mult_right(int s) const {
    if (s < 1 || s >= size()) throw domain_error("Permutation: generator out of range");
    Permutation w = *this;
    std::swap(w.v_[s - 1], w.v_[s]);
    return w;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (v_[i] > v_[j]) ++inv;
    return inv;
}

Permutation Permutation::inverse() const {
    std::vector<int> v(size());
    for (int i = 0; i < size(); ++i) v[v_[i] - 1] = i + 1;
    return Permutation(std::move(v));
}

bool Permutation::is_involution() const { return inverse() == *this; }

std::string Permutation::one_line() const {
    std::string s;
    for (int i = 0; i < size(); ++i) {
        if (size() > 9 && i) s += ',';
        s += std::to_string(v_[i]);
    }
    return s;
}

std::vector<Permutation> all_permutations(int m) {
    if (m < 1 || m > 10) throw resource_error("all_permutations: size out of range");
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.push_back(Permutation(v));
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

int index_in_sm(const Permutation& w) {
    // Lexicographic rank via the factorial number system.
    int m = w.size();
    long long fact = 1;
    for (int i = 2; i < m; ++i) fact *= i;
    long long rank = 0;
    std::vector<char> used(m + 1, 0);
    for (int i = 1; i <= m; ++i) {
        int smaller = 0;
        for (int x = 1; x < w(i); ++x)
            if (!used[x]) ++smaller;
        rank += smaller * fact;
        used[w(i)] = 1;
        if (m - i > 1) fact /= (m - i);
    }
    return static_cast<int>(rank);
}

} // namespace wgm
