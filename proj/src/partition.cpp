#include "wgm/partition.hpp"

#include <numeric>

namespace wgm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t r = 0; r < parts_.size(); ++r) {
        if (parts_[r] <= 0) throw domain_error("Partition: parts must be positive");
        if (r > 0 && parts_[r] > parts_[r - 1])
            throw domain_error("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string piece = text.substr(pos, next - pos);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
            throw domain_error("Partition: bad part '" + piece + "' in '" + text + "'");
        parts.push_back(std::stoi(piece));
        pos = next + 1;
    }
    if (parts.empty()) throw domain_error("Partition: empty");
    return Partition(parts);
}

std::vector<Partition> Partition::all(int m) {
    if (m < 0) throw domain_error("Partition::all: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::corners() const {
    std::vector<int> out;
    for (int r = 0; r < rows(); ++r)
        if (r + 1 == rows() || parts_[r + 1] < parts_[r]) out.push_back(r);
    return out;
}

Partition Partition::remove_corner(int row) const {
    if (row < 0 || row >= rows() || (row + 1 < rows() && parts_[row + 1] == parts_[row]))
        throw domain_error("Partition: not a removable corner");
    std::vector<int> parts = parts_;
    if (--parts[row] == 0) parts.pop_back();
    return Partition(parts);
}

bool Partition::contains_cell(int row, int col) const {
    return row >= 0 && row < rows() && col >= 0 && col < parts_[row];
}

unsigned long long Partition::hook_count() const {
    const int m = size();
    if (m > 20) throw resource_error("hook_count: size past 64-bit factorial range");
    unsigned long long fact = 1, hooks = 1;
    for (int k = 2; k <= m; ++k) fact *= static_cast<unsigned long long>(k);
    std::vector<int> collen(rows() == 0 ? 0 : parts_[0], 0);
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < parts_[r]; ++c) ++collen[c];
    for (int r = 0; r < rows(); ++r)
        for (int c = 0; c < parts_[r]; ++c)
            hooks *= static_cast<unsigned long long>((parts_[r] - c) + (collen[c] - r) - 1);
    return fact / hooks;
}

std::string Partition::to_string() const {
    std::string out;
    for (int r = 0; r < rows(); ++r) {
        if (r) out += ',';
        out += std::to_string(parts_[r]);
    }
    return out;
}

} // namespace wgm
