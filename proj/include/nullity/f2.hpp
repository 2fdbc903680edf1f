#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace nullity {

// Bit vector over F2 packed into 64-bit words. Bits past size() stay zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : size_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_with(const BitVec& o);
    std::size_t popcount() const;
    bool any() const;
    long lowest_set() const;  // -1 when all zero

    bool operator==(const BitVec& o) const = default;
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> w_;

    friend int f2_dot_parity(const BitVec& x, const BitVec& y);
};

// |x AND y| mod 2
int f2_dot_parity(const BitVec& x, const BitVec& y);

// Dense matrix over F2, row-major, each row packed into 64-bit words.
// Bits past cols() in the last word of a row stay zero.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);
    static BinaryMatrix identity(int n);
    static BinaryMatrix from_rows(int cols, const std::vector<BitVec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int i, int j) const {
        return (w_[std::size_t(i) * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(int i, int j, bool v = true);
    void add_identity();  // toggles the main diagonal

    BitVec row(int i) const;
    void set_row(int i, const BitVec& v);
    void xor_rows(int dst, int src);
    void swap_rows(int a, int b);

    bool operator==(const BinaryMatrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

// Subspace of F2^ambient_dim. Basis is in reduced row-echelon form with
// strictly increasing pivot columns; dim == basis.size().
struct F2Subspace {
    int ambient_dim = 0;
    std::vector<BitVec> basis;

    int dim() const { return int(basis.size()); }
    bool contains(const BitVec& v) const;
    static F2Subspace from_generators(int ambient_dim, std::vector<BitVec> gens);
};

// Word-packed Gaussian elimination. rank + nullity == cols.
std::pair<int, int> f2_rank_nullity(BinaryMatrix m);
int f2_nullity(const BinaryMatrix& m);

// Basis of {x : m x = 0}, reduced echelon form.
F2Subspace f2_kernel_basis(BinaryMatrix m);

// span(a) ∩ span(b), via the kernel of the stacked-generator matrix.
F2Subspace f2_intersect(const F2Subspace& a, const F2Subspace& b);

// span(a) + span(b)
F2Subspace f2_sum(const F2Subspace& a, const F2Subspace& b);

}  // namespace nullity
