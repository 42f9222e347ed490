#pragma once

#include <cstdint>
#include <vector>

namespace olat {

// Dense boolean relation on {0..n-1}, one bitset row per element.
// O(1) membership queries dominate every algorithm downstream, so the
// relation is stored closed, not as covers.
class BitRel {
public:
    BitRel() = default;
    explicit BitRel(int n)
        : n_(n), words_((n + 63) / 64),
          bits_(static_cast<std::size_t>(n) * words_) {}

    int size() const { return n_; }

    bool get(int i, int j) const {
        return (bits_[row(i) + static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1u;
    }
    void set(int i, int j) {
        bits_[row(i) + static_cast<std::size_t>(j) / 64] |= std::uint64_t{1} << (j % 64);
    }
    void clear(int i, int j) {
        bits_[row(i) + static_cast<std::size_t>(j) / 64] &= ~(std::uint64_t{1} << (j % 64));
    }

    void reflexive_close() {
        for (int i = 0; i < n_; ++i) set(i, i);
    }

    // Warshall on bitset rows.
    void transitive_close() {
        for (int k = 0; k < n_; ++k) {
            const std::size_t rk = row(k);
            for (int i = 0; i < n_; ++i) {
                if (!get(i, k)) continue;
                const std::size_t ri = row(i);
                for (int w = 0; w < words_; ++w) bits_[ri + w] |= bits_[rk + w];
            }
        }
    }

    friend bool operator==(const BitRel&, const BitRel&) = default;

private:
    std::size_t row(int i) const { return static_cast<std::size_t>(i) * words_; }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace olat
