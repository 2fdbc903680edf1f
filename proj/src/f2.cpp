#include "nullity/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nullity {

void BitVec::xor_with(const BitVec& o) {
    if (o.size_ != size_) throw std::invalid_argument("BitVec size mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::size_t(std::popcount(w));
    return c;
}

bool BitVec::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

long BitVec::lowest_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return long(k * 64 + std::size_t(std::countr_zero(w_[k])));
    return -1;
}

int f2_dot_parity(const BitVec& x, const BitVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("BitVec size mismatch");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < x.w_.size(); ++k) acc ^= x.w_[k] & y.w_[k];
    return std::popcount(acc) & 1;
}

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
      w_(std::size_t(rows) * std::size_t((cols + 63) / 64), 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

BinaryMatrix BinaryMatrix::identity(int n) {
    BinaryMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(int cols, const std::vector<BitVec>& rows) {
    BinaryMatrix m(int(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(int(i), rows[i]);
    return m;
}

void BinaryMatrix::set(int i, int j, bool v) {
    const std::uint64_t m = std::uint64_t(1) << (j & 63);
    std::uint64_t& word = w_[std::size_t(i) * wpr_ + (j >> 6)];
    if (v)
        word |= m;
    else
        word &= ~m;
}

void BinaryMatrix::add_identity() {
    const int d = std::min(rows_, cols_);
    for (int i = 0; i < d; ++i)
        w_[std::size_t(i) * wpr_ + (i >> 6)] ^= std::uint64_t(1) << (i & 63);
}

BitVec BinaryMatrix::row(int i) const {
    BitVec v(std::size_t(cols_));
    for (int j = 0; j < cols_; ++j)
        if (get(i, j)) v.set(std::size_t(j));
    return v;
}

void BinaryMatrix::set_row(int i, const BitVec& v) {
    if (int(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
    const auto& words = v.words();
    for (int k = 0; k < wpr_; ++k) w_[std::size_t(i) * wpr_ + k] = words[std::size_t(k)];
}

void BinaryMatrix::xor_rows(int dst, int src) {
    std::uint64_t* d = &w_[std::size_t(dst) * wpr_];
    const std::uint64_t* s = &w_[std::size_t(src) * wpr_];
    for (int k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

void BinaryMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    std::uint64_t* pa = &w_[std::size_t(a) * wpr_];
    std::uint64_t* pb = &w_[std::size_t(b) * wpr_];
    for (int k = 0; k < wpr_; ++k) std::swap(pa[k], pb[k]);
}

namespace {

// Forward elimination only; returns rank. Destroys m.
int eliminate(BinaryMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m.get(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        m.swap_rows(r, piv);
        for (int i = r + 1; i < rows; ++i)
            if (m.get(i, c)) m.xor_rows(i, r);
        ++r;
    }
    return r;
}

// Full reduction to RREF; returns pivot columns in increasing order.
std::vector<int> rref(BinaryMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m.get(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        m.swap_rows(r, piv);
        for (int i = 0; i < rows; ++i)
            if (i != r && m.get(i, c)) m.xor_rows(i, r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::pair<int, int> f2_rank_nullity(BinaryMatrix m) {
    const int rank = eliminate(m);
    return {rank, m.cols() - rank};
}

int f2_nullity(const BinaryMatrix& m) { return f2_rank_nullity(m).second; }

F2Subspace f2_kernel_basis(BinaryMatrix m) {
    const int cols = m.cols();
    const std::vector<int> pivots = rref(m);

    std::vector<bool> is_pivot(std::size_t(cols), false);
    for (int p : pivots) is_pivot[std::size_t(p)] = true;

    std::vector<BitVec> gens;
    gens.reserve(std::size_t(cols) - pivots.size());
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[std::size_t(f)]) continue;
        BitVec x(std::size_t(cols));
        x.set(std::size_t(f));
        for (std::size_t t = 0; t < pivots.size(); ++t)
            if (m.get(int(t), f)) x.set(std::size_t(pivots[t]));
        gens.push_back(std::move(x));
    }
    return F2Subspace::from_generators(cols, std::move(gens));
}

F2Subspace F2Subspace::from_generators(int ambient_dim, std::vector<BitVec> gens) {
    for (const auto& g : gens)
        if (int(g.size()) != ambient_dim)
            throw std::invalid_argument("generator length mismatch");
    BinaryMatrix m = BinaryMatrix::from_rows(ambient_dim, gens);
    const std::vector<int> pivots = rref(m);
    F2Subspace s;
    s.ambient_dim = ambient_dim;
    s.basis.reserve(pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) s.basis.push_back(m.row(int(r)));
    return s;
}

bool F2Subspace::contains(const BitVec& v) const {
    if (int(v.size()) != ambient_dim) throw std::invalid_argument("ambient dimension mismatch");
    BitVec x = v;
    for (const auto& b : basis) {
        const long p = b.lowest_set();
        if (p >= 0 && x.get(std::size_t(p))) x.xor_with(b);
    }
    return !x.any();
}

F2Subspace f2_intersect(const F2Subspace& a, const F2Subspace& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("ambient dimension mismatch");
    const int ka = a.dim(), kb = b.dim();

    // Columns are the generators of a then b; kernel vectors (x, y) satisfy
    // sum x_i a_i = sum y_j b_j, so the a-part images span the intersection.
    BinaryMatrix stacked(a.ambient_dim, ka + kb);
    for (int j = 0; j < ka; ++j)
        for (int i = 0; i < a.ambient_dim; ++i)
            if (a.basis[std::size_t(j)].get(std::size_t(i))) stacked.set(i, j);
    for (int j = 0; j < kb; ++j)
        for (int i = 0; i < a.ambient_dim; ++i)
            if (b.basis[std::size_t(j)].get(std::size_t(i))) stacked.set(i, ka + j);

    const F2Subspace coeff = f2_kernel_basis(std::move(stacked));
    std::vector<BitVec> gens;
    gens.reserve(coeff.basis.size());
    for (const auto& k : coeff.basis) {
        BitVec v(std::size_t(a.ambient_dim));
        for (int j = 0; j < ka; ++j)
            if (k.get(std::size_t(j))) v.xor_with(a.basis[std::size_t(j)]);
        gens.push_back(std::move(v));
    }
    return F2Subspace::from_generators(a.ambient_dim, std::move(gens));
}

F2Subspace f2_sum(const F2Subspace& a, const F2Subspace& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("ambient dimension mismatch");
    std::vector<BitVec> gens = a.basis;
    gens.insert(gens.end(), b.basis.begin(), b.basis.end());
    return F2Subspace::from_generators(a.ambient_dim, std::move(gens));
}

}  // namespace nullity
