#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace causet {

/// Square boolean matrix with packed 64-bit rows. Row operations are the
/// workhorse for transitive closure/reduction: OR-ing and AND-ing whole
/// rows runs at word speed.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n)
        : n_(n), words_(words_for(n)), bits_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j) {
        bits_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    }
    void reset(std::size_t i, std::size_t j) {
        bits_[i * words_ + (j >> 6)] &= ~(std::uint64_t{1} << (j & 63));
    }

    std::span<const std::uint64_t> row(std::size_t i) const {
        return {bits_.data() + i * words_, words_};
    }
    std::span<std::uint64_t> row(std::size_t i) {
        return {bits_.data() + i * words_, words_};
    }

    /// Number of set bits in the whole matrix.
    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : bits_) c += std::popcount(w);
        return c;
    }

    std::size_t row_count(std::size_t i) const {
        std::size_t c = 0;
        for (std::uint64_t w : row(i)) c += std::popcount(w);
        return c;
    }

    template <class F>
    void for_each_in_row(std::size_t i, F&& f) const {
        const std::uint64_t* r = bits_.data() + i * words_;
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t m = r[w];
            while (m) {
                f((w << 6) + static_cast<std::size_t>(std::countr_zero(m)));
                m &= m - 1;
            }
        }
    }

    static void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
    }

    /// sub[w] & ~super[w] empty for all words.
    static bool is_subset(std::span<const std::uint64_t> sub,
                          std::span<const std::uint64_t> super) {
        for (std::size_t w = 0; w < sub.size(); ++w) {
            if (sub[w] & ~super[w]) return false;
        }
        return true;
    }

    /// True iff every set bit lies strictly above the diagonal.
    bool strictly_upper_triangular() const {
        for (std::size_t i = 0; i < n_; ++i) {
            bool bad = false;
            for_each_in_row(i, [&](std::size_t j) { bad |= (j <= i); });
            if (bad) return false;
        }
        return true;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    static std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}
