#pragma once

#include "mota1/basis.hpp"
#include "mota1/bidegree.hpp"
#include "mota1/bitlinalg.hpp"
#include "mota1/errors.hpp"

#include <utility>
#include <vector>

namespace mota1 {

// Homogeneous M2-linear map between graded bases.  The (i,j) entry, when
// present, is the monomial tau^k with k = w_i + degree.w - w_j forced by
// homogeneity, so only a bit is stored.  Construction rejects entries that
// violate s_j = s_i + degree.s or k >= 0.
class MonomialMap {
public:
    MonomialMap(BasisPtr source, BasisPtr target, Bidegree degree,
                std::vector<std::pair<int, int>> entries);

    static MonomialMap zero(BasisPtr source, BasisPtr target, Bidegree degree);
    static MonomialMap identity(BasisPtr basis);

    const BasisPtr& source() const { return source_; }
    const BasisPtr& target() const { return target_; }
    Bidegree degree() const { return degree_; }

    // Sorted, duplicate-free (source index, target index) pairs.
    const std::vector<std::pair<int, int>>& entries() const { return entries_; }

    // Forced tau power of entry (i,j).
    int valuation(int i, int j) const
    {
        return source_->degree(i).w + degree_.w - target_->degree(j).w;
    }

    bool is_zero() const { return entries_.empty(); }

    // Same bits regarded as tau^k times the map: degree + (0,k).
    MonomialMap tau_shift(int k) const;

    friend bool operator==(const MonomialMap& a, const MonomialMap& b)
    {
        return same_basis(a.source_, b.source_) && same_basis(a.target_, b.target_) &&
               a.degree_ == b.degree_ && a.entries_ == b.entries_;
    }

private:
    BasisPtr source_;
    BasisPtr target_;
    Bidegree degree_;
    std::vector<std::pair<int, int>> entries_;
};

// f ∘ g (g applied first); degree adds, tau valuations add and land on the
// forced one automatically, so the bit of (i,j) is the mod-2 count of middle
// indices.
MonomialMap compose(const MonomialMap& f, const MonomialMap& g);

// One F2-basis vector tau^power · g_gen of a bidegree component.
struct ExpandedSlot {
    int gen;
    int power;
    friend bool operator==(const ExpandedSlot&, const ExpandedSlot&) = default;
};

// F2-basis of the (s,w) component of the free module on B:
// tau^{w-w_i} g_i for all i with s_i = s, w_i <= w, in basis order.
std::vector<ExpandedSlot> expand_bidegree(const GradedBasis& b, Bidegree d);

// The d component of f as an F2 matrix: rows indexed by
// expand_bidegree(source, d), columns by expand_bidegree(target, d + degree).
BitMatrix expanded_matrix(const MonomialMap& f, Bidegree d);

// Rank over the fraction field F2(tau), where every tau^k is a unit: equals
// the F2 rank of the bit matrix.
int generic_rank(const MonomialMap& f);

struct KernelResult {
    BasisPtr basis;     // M2-basis of ker f
    MonomialMap incl;   // degree (0,0) inclusion into f.source
};

// M2-basis of ker f by the windowed degreewise algorithm: per internal degree
// s of the source, F2 kernels of the expanded maps are computed for weights in
// [min,max] of the source generators at s, and new basis elements are a
// complement of tau·(previous kernel) in each step.  Above the window tau acts
// bijectively on the kernel, which is asserted with one extra weight step.
KernelResult kernel(const MonomialMap& f);

// True iff the expanded map is surjective at every bidegree (s,w) with s a
// target degree and w up to the largest target generator weight at s; above
// that window tau is surjective on the cokernel.
bool is_surjective(const MonomialMap& f);

// The unique g on K with incl ∘ g = f ∘ incl, for an endomorphism f of the
// ambient basis; throws MembershipFailure when f·incl leaves the span of incl.
MonomialMap restrict_to(const MonomialMap& f, const BasisPtr& k, const MonomialMap& incl);

// Homogeneous element of the free module on a basis, stored in expanded
// coordinates at its bidegree.
struct Element {
    BasisPtr basis;
    Bidegree deg;
    BitVec coords;  // over expand_bidegree(*basis, deg)
};

Element apply(const MonomialMap& f, const Element& e);

}  // namespace mota1
