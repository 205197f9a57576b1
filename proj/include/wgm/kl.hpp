#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "wgm/permutation.hpp"

namespace wgm {

// Polynomial in q with exact 64-bit integer coefficients.
class Poly {
public:
    Poly() = default; // zero
    explicit Poly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly one() { return Poly({1}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0;
    }
    const std::vector<long long>& coeffs() const { return c_; }

    Poly plus(const Poly& o) const;
    Poly minus(const Poly& o) const;
    Poly shifted(int k) const; // times q^k
    Poly scaled(long long f) const;
    bool nonnegative() const;

    std::string to_string() const; // "1+q+2q^2", "0"
    bool operator==(const Poly& o) const { return c_ == o.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<long long> c_;
};

// Kazhdan-Lusztig polynomials P_{u,w} for S_m, with Bruhat order by rank
// matrix dominance and the mu invariants read off top coefficients.
// Computed polynomials are hard-checked: coefficients non-negative, constant
// term 1, degree at most (l(w)-l(u)-1)/2.
class KLTable {
public:
    explicit KLTable(int m); // 1 <= m <= 7

    int m() const { return m_; }
    int size() const { return static_cast<int>(group_.size()); }
    const std::vector<Permutation>& group() const { return group_; }
    int index(const Permutation& w) const;
    int length(int w) const { return length_.at(w); }
    TauSet left_descents(int w) const { return ldesc_.at(w); }

    bool leq(int u, int w) const; // Bruhat order
    const Poly& kl(int u, int w);
    long long mu(int u, int w);         // 0 unless u < w with odd length gap
    long long mu_between(int u, int w); // arguments ordered by length first

private:
    int smul(int s, int w) const { return lmult_[(s - 1) * size() + w]; }
    const Poly& compute(int u, int w);

    int m_ = 0;
    std::vector<Permutation> group_;
    std::vector<int> length_;
    std::vector<TauSet> ldesc_;
    std::vector<int> lmult_; // (s-1)*N + w  ->  index of s_s * w

    int words_ = 0;                            // 64-bit words per bit row
    std::vector<std::uint64_t> leq_rows_;      // row w: bits over u with u <= w
    std::vector<std::uint64_t> geq_rows_;      // row u: bits over z with u <= z
    std::vector<std::uint64_t> desc_masks_;    // row s-1: bits over z with s in L(z)

    std::unordered_map<std::uint64_t, Poly> memo_;
};

} // namespace wgm
