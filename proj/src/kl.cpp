#include "wgm/kl.hpp"

#include <algorithm>
#include <bit>

#include "wgm/errors.hpp"

namespace wgm {

Poly Poly::plus(const Poly& o) const {
    std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
    return Poly(std::move(r));
}

Poly Poly::minus(const Poly& o) const {
    std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(static_cast<int>(k)) - o.coeff(static_cast<int>(k));
    return Poly(std::move(r));
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return Poly();
    std::vector<long long> r(c_.size() + k, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return Poly(std::move(r));
}

Poly Poly::scaled(long long f) const {
    std::vector<long long> r = c_;
    for (long long& x : r) x *= f;
    return Poly(std::move(r));
}

bool Poly::nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](long long x) { return x >= 0; });
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
        if (c_[k] == 0) continue;
        if (!s.empty()) s += "+";
        if (k == 0) {
            s += std::to_string(c_[k]);
            continue;
        }
        if (c_[k] != 1) s += std::to_string(c_[k]);
        s += "q";
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

namespace {

// Rank matrix r(i,j) = #{k <= i : w(k) >= j}; Bruhat u <= w is entrywise
// dominance r_u <= r_w.
std::vector<std::uint8_t> rank_matrix(const Permutation& w) {
    int m = w.size();
    std::vector<std::uint8_t> r(m * m, 0);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            int c = (i > 1 ? r[(i - 2) * m + (j - 1)] : 0) + (w(i) >= j ? 1 : 0);
            r[(i - 1) * m + (j - 1)] = static_cast<std::uint8_t>(c);
        }
    return r;
}

} // namespace

KLTable::KLTable(int m) : m_(m) {
    if (m < 1) throw domain_error("KLTable: m must be positive");
    if (m > 7) throw resource_error("KLTable: guarded at m <= 7");
    group_ = all_permutations(m);
    int n = size();
    length_.reserve(n);
    ldesc_.reserve(n);
    for (const auto& w : group_) {
        length_.push_back(w.length());
        ldesc_.push_back(w.left_descents());
    }
    lmult_.assign(static_cast<std::size_t>(std::max(0, m - 1)) * n, 0);
    for (int s = 1; s < m; ++s)
        for (int w = 0; w < n; ++w) lmult_[(s - 1) * n + w] = index_in_sm(group_[w].mult_left(s));

    words_ = (n + 63) / 64;
    leq_rows_.assign(static_cast<std::size_t>(n) * words_, 0);
    geq_rows_.assign(static_cast<std::size_t>(n) * words_, 0);
    std::vector<std::vector<std::uint8_t>> ranks;
    ranks.reserve(n);
    for (const auto& w : group_) ranks.push_back(rank_matrix(w));
    for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u) {
            if (length_[u] > length_[w]) continue;
            const auto &ru = ranks[u], &rw = ranks[w];
            bool dom = true;
            for (std::size_t k = 0; k < ru.size(); ++k)
                if (ru[k] > rw[k]) {
                    dom = false;
                    break;
                }
            if (dom) {
                leq_rows_[static_cast<std::size_t>(w) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
                geq_rows_[static_cast<std::size_t>(u) * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
            }
        }
    desc_masks_.assign(static_cast<std::size_t>(std::max(0, m - 1)) * words_, 0);
    for (int s = 1; s < m; ++s)
        for (int z = 0; z < n; ++z)
            if (ldesc_[z].contains(s))
                desc_masks_[static_cast<std::size_t>(s - 1) * words_ + z / 64] |=
                    std::uint64_t{1} << (z % 64);
}

int KLTable::index(const Permutation& w) const {
    if (w.size() != m_) throw domain_error("KLTable: permutation size mismatch");
    return index_in_sm(w);
}

bool KLTable::leq(int u, int w) const {
    return (leq_rows_[static_cast<std::size_t>(w) * words_ + u / 64] >> (u % 64)) & 1u;
}

const Poly& KLTable::kl(int u, int w) { return compute(u, w); }

const Poly& KLTable::compute(int u, int w) {
    static const Poly zero;
    static const Poly unit = Poly::one();
    if (u < 0 || w < 0 || u >= size() || w >= size())
        throw domain_error("KLTable: index out of range");
    if (!leq(u, w)) return zero;
    if (u == w) return unit;
    int lu = length_[u], lw = length_[w];
    // Degree < 1 forces a constant, and the constant term below u <= w is 1.
    if (lw - lu <= 2) return unit;
    std::uint64_t key = static_cast<std::uint64_t>(u) * size() + w;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    TauSet lw_only = ldesc_[w].diff(ldesc_[u]);
    int s = (lw_only.empty() ? ldesc_[w] : lw_only).to_list().front();
    int v = smul(s, w);
    int su = smul(s, u);
    int c = ldesc_[u].contains(s) ? 1 : 0;
    Poly r = compute(su, v).shifted(1 - c).plus(compute(u, v).shifted(c));
    for (int word = 0; word < words_; ++word) {
        std::uint64_t bits = geq_rows_[static_cast<std::size_t>(u) * words_ + word] &
                             leq_rows_[static_cast<std::size_t>(v) * words_ + word] &
                             desc_masks_[static_cast<std::size_t>(s - 1) * words_ + word];
        while (bits) {
            int z = word * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            long long mz = mu(z, v);
            if (mz == 0) continue;
            r = r.minus(compute(u, z).scaled(mz).shifted((lw - length_[z]) / 2));
        }
    }
    if (!r.nonnegative() || r.coeff(0) != 1 || 2 * r.degree() > lw - lu - 1)
        throw structural_error("kl", "invalid polynomial for " + group_[u].one_line() + " <= " +
                                         group_[w].one_line() + ": " + r.to_string());
    return memo_.emplace(key, std::move(r)).first->second;
}

long long KLTable::mu(int u, int w) {
    if (u == w || !leq(u, w)) return 0;
    int d = length_[w] - length_[u];
    if (d % 2 == 0) return 0;
    return kl(u, w).coeff((d - 1) / 2);
}

long long KLTable::mu_between(int u, int w) {
    if (length_[u] == length_[w]) return 0;
    return length_[u] < length_[w] ? mu(u, w) : mu(w, u);
}

} // namespace wgm
