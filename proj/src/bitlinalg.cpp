#include "mota1/bitlinalg.hpp"

#include <algorithm>

namespace mota1 {

BitMatrix transpose(const BitMatrix& m)
{
    BitMatrix t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.get(r, c)) t.set(c, r);
    return t;
}

BitVec apply_rows(const BitVec& v, const BitMatrix& m)
{
    BitVec out(m.cols);
    for (int r = 0; r < m.rows; ++r)
        if (v.test(r)) out ^= m.row[r];
    return out;
}

int rank(BitMatrix m)
{
    int rk = 0;
    for (int c = 0; c < m.cols && rk < m.rows; ++c) {
        int pivot = -1;
        for (int r = rk; r < m.rows; ++r)
            if (m.row[r].test(c)) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m.row[rk], m.row[pivot]);
        for (int r = 0; r < m.rows; ++r)
            if (r != rk && m.row[r].test(c)) m.row[r] ^= m.row[rk];
        ++rk;
    }
    return rk;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each of the
// first `rank` rows.
std::vector<int> rref(BitMatrix& m)
{
    std::vector<int> pivots;
    int rk = 0;
    for (int c = 0; c < m.cols && rk < m.rows; ++c) {
        int pivot = -1;
        for (int r = rk; r < m.rows; ++r)
            if (m.row[r].test(c)) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m.row[rk], m.row[pivot]);
        for (int r = 0; r < m.rows; ++r)
            if (r != rk && m.row[r].test(c)) m.row[r] ^= m.row[rk];
        pivots.push_back(c);
        ++rk;
    }
    return pivots;
}

}  // namespace

bool solve(const BitMatrix& a, const BitVec& b, BitVec& x)
{
    // Eliminate on the augmented matrix [A | b].
    BitMatrix aug(a.rows, a.cols + 1);
    for (int r = 0; r < a.rows; ++r) {
        aug.row[r] = BitVec(a.cols + 1);
        for (int c = 0; c < a.cols; ++c)
            if (a.get(r, c)) aug.set(r, c);
        if (b.test(r)) aug.set(r, a.cols);
    }
    std::vector<int> pivots;
    int rk = 0;
    for (int c = 0; c < a.cols && rk < aug.rows; ++c) {
        int pivot = -1;
        for (int r = rk; r < aug.rows; ++r)
            if (aug.row[r].test(c)) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(aug.row[rk], aug.row[pivot]);
        for (int r = 0; r < aug.rows; ++r)
            if (r != rk && aug.row[r].test(c)) aug.row[r] ^= aug.row[rk];
        pivots.push_back(c);
        ++rk;
    }
    for (int r = rk; r < aug.rows; ++r)
        if (aug.row[r].test(a.cols)) return false;  // 0 = 1
    x = BitVec(a.cols);
    for (int r = 0; r < rk; ++r)
        if (aug.row[r].test(a.cols)) x.set(pivots[r]);
    return true;
}

std::vector<BitVec> nullspace(const BitMatrix& a)
{
    BitMatrix m = a;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(a.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (int c = 0; c < a.cols; ++c) {
        if (is_pivot[c]) continue;
        BitVec v(a.cols);
        v.set(c);
        for (int r = 0; r < (int)pivots.size(); ++r)
            if (m.row[r].test(c)) v.set(pivots[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

BitVec Echelon::reduce(BitVec v) const
{
    for (size_t k = 0; k < rows_.size(); ++k)
        if (v.test(pivots_[k])) v ^= rows_[k];
    return v;
}

bool Echelon::insert(BitVec v)
{
    v = reduce(std::move(v));
    int p = v.lowest_set();
    if (p < 0) return false;
    for (size_t k = 0; k < rows_.size(); ++k)
        if (rows_[k].test(p)) rows_[k] ^= v;
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    size_t at = pos - pivots_.begin();
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
}

}  // namespace mota1
