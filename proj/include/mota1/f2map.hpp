#pragma once

#include "mota1/basis.hpp"
#include "mota1/bidegree.hpp"
#include "mota1/bitlinalg.hpp"
#include "mota1/errors.hpp"

#include <utility>
#include <vector>

namespace mota1 {

// Homogeneous F2-linear map between graded bases, the tau = 0 world: an entry
// (i,j) requires the exact degree shift s_j = s_i + a, w_j = w_i + b.
class F2Map {
public:
    F2Map(BasisPtr source, BasisPtr target, Bidegree degree,
          std::vector<std::pair<int, int>> entries);

    static F2Map zero(BasisPtr source, BasisPtr target, Bidegree degree);

    const BasisPtr& source() const { return source_; }
    const BasisPtr& target() const { return target_; }
    Bidegree degree() const { return degree_; }
    const std::vector<std::pair<int, int>>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    friend bool operator==(const F2Map& a, const F2Map& b)
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

F2Map compose(const F2Map& f, const F2Map& g);

// Mod-2 sum of parallel maps.
F2Map add(const F2Map& a, const F2Map& b);

// Generators sitting exactly in bidegree d, in basis order: the F2-basis of
// the d component of a module with trivial tau action.
std::vector<int> f2_component(const GradedBasis& b, Bidegree d);

// The d component of f: rows over f2_component(source, d), columns over
// f2_component(target, d + degree).
BitMatrix f2_expanded_matrix(const F2Map& f, Bidegree d);

}  // namespace mota1
