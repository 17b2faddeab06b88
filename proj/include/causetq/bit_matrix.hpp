#ifndef CAUSETQ_BIT_MATRIX_HPP
#define CAUSETQ_BIT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace causetq {

/// Square bit matrix, row-major over 64-bit words. Used as a dense
/// reachability structure: row r holds the strict successor set of event r.
class BitMatrix {
public:
    BitMatrix() : n_(0), words_(0) {}
    explicit BitMatrix(std::size_t n)
        : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool test(std::size_t r, std::size_t c) const {
        return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c) {
        bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
    }

    const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }
    std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }

    /// row(dst) |= row(src)
    void or_row(std::size_t dst, std::size_t src) {
        std::uint64_t* d = row(dst);
        const std::uint64_t* s = row(src);
        for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
    }

    bool operator==(const BitMatrix& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace causetq

#endif
