#pragma once

#include <cstdint>
#include <vector>

namespace mota1 {

// Dense F2 vector packed into 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o)
    {
        for (size_t k = 0; k < w_.size(); ++k)
            w_[k] ^= o.w_[k];
        return *this;
    }

    bool any() const
    {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    // Index of the lowest set bit, -1 when zero.
    int lowest_set() const
    {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return (int)(64 * k) + __builtin_ctzll(w_[k]);
        return -1;
    }

    int popcount() const
    {
        int c = 0;
        for (uint64_t w : w_)
            c += __builtin_popcountll(w);
        return c;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Row-major dense F2 matrix.
struct BitMatrix {
    int rows = 0, cols = 0;
    std::vector<BitVec> row;

    BitMatrix() = default;
    BitMatrix(int r, int c) : rows(r), cols(c), row(r, BitVec(c)) {}

    bool get(int r, int c) const { return row[r].test(c); }
    void set(int r, int c) { row[r].set(c); }
};

BitMatrix transpose(const BitMatrix& m);

// v·M for a row vector v of length M.rows; result has length M.cols.
BitVec apply_rows(const BitVec& v, const BitMatrix& m);

int rank(BitMatrix m);

// Canonical solution of A·x = b (free coordinates zero); false if inconsistent.
bool solve(const BitMatrix& a, const BitVec& b, BitVec& x);

// Canonical basis of {x : A·x = 0}, one vector per free column of the reduced
// echelon form, in column order.
std::vector<BitVec> nullspace(const BitMatrix& a);

// Incrementally maintained reduced echelon basis of a subspace of F2^n.
class Echelon {
public:
    explicit Echelon(int n) : n_(n) {}

    int dim() const { return n_; }
    int rank() const { return (int)rows_.size(); }
    const std::vector<BitVec>& rows() const { return rows_; }

    // Reduce v against the rows held so far.
    BitVec reduce(BitVec v) const;

    // Insert v; returns true if it enlarged the span.
    bool insert(BitVec v);

    bool contains(const BitVec& v) const { return !reduce(v).any(); }

private:
    int n_;
    std::vector<BitVec> rows_;  // reduced, ordered by pivot column
    std::vector<int> pivots_;
};

}  // namespace mota1
