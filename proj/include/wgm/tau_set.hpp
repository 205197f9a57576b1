#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

#include "wgm/errors.hpp"

namespace wgm {

// A set of simple generators, stored as a bitmask with generator i at bit i
// (bit 0 unused).  Wide enough for every rank this code will ever see;
// ranks are guarded long before 31 matters.
class TauSet {
public:
    constexpr TauSet() = default;
    constexpr explicit TauSet(std::uint32_t bits) : bits_(bits) {}

    static TauSet from_list(const std::vector<int>& gens) {
        TauSet t;
        for (int i : gens) t = t.with(i);
        return t;
    }

    // The full generator set {1, .., n}.
    static TauSet up_to(int n) {
        if (n < 0 || n > 31) throw domain_error("TauSet::up_to: n out of range");
        if (n == 0) return TauSet();
        return TauSet(((std::uint32_t{1} << (n + 1)) - 1) & ~std::uint32_t{1});
    }

    bool contains(int i) const {
        check(i);
        return (bits_ >> i) & 1u;
    }
    TauSet with(int i) const {
        check(i);
        return TauSet(bits_ | (std::uint32_t{1} << i));
    }
    TauSet without(int i) const {
        check(i);
        return TauSet(bits_ & ~(std::uint32_t{1} << i));
    }

    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr std::uint32_t bits() const { return bits_; }

    constexpr bool subset_of(TauSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool incomparable(TauSet o) const { return !subset_of(o) && !o.subset_of(*this); }
    constexpr TauSet intersect(TauSet o) const { return TauSet(bits_ & o.bits_); }
    constexpr TauSet unite(TauSet o) const { return TauSet(bits_ | o.bits_); }
    constexpr TauSet diff(TauSet o) const { return TauSet(bits_ & ~o.bits_); }

    // The diagram symmetry i -> n+1-i on generators {1, .., n}.
    TauSet flip(int n) const {
        TauSet r;
        for (int i = 1; i <= n; ++i)
            if (contains(i)) r = r.with(n + 1 - i);
        return r;
    }

    std::vector<int> to_list() const {
        std::vector<int> out;
        for (int i = 1; i < 32; ++i)
            if ((bits_ >> i) & 1u) out.push_back(i);
        return out;
    }

    friend constexpr auto operator<=>(TauSet, TauSet) = default;

private:
    static void check(int i) {
        if (i < 1 || i > 31) throw domain_error("TauSet: generator index out of range");
    }
    std::uint32_t bits_ = 0;
};

} // namespace wgm
