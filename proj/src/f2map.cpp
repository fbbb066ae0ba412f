#include "mota1/f2map.hpp"

#include <algorithm>
#include <set>

namespace mota1 {

F2Map::F2Map(BasisPtr source, BasisPtr target, Bidegree degree,
             std::vector<std::pair<int, int>> entries)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree),
      entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end());
    entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
    for (auto [i, j] : entries_) {
        if (i < 0 || i >= source_->size() || j < 0 || j >= target_->size())
            throw DegreeConstraintViolation("entry index out of range");
        if (target_->degree(j) != source_->degree(i) + degree_)
            throw DegreeConstraintViolation("F2 entry " + source_->id(i) + " -> " +
                                            target_->id(j) + " off the exact degree shift");
    }
}

F2Map F2Map::zero(BasisPtr source, BasisPtr target, Bidegree degree)
{
    return F2Map(std::move(source), std::move(target), degree, {});
}

F2Map compose(const F2Map& f, const F2Map& g)
{
    if (!same_basis(g.target(), f.source()))
        throw CompositionMismatch("compose: target of inner map differs from source of outer map");
    std::vector<std::vector<int>> out(f.source()->size());
    for (auto [m, j] : f.entries())
        out[m].push_back(j);
    std::set<std::pair<int, int>> acc;
    for (auto [i, m] : g.entries())
        for (int j : out[m]) {
            auto key = std::make_pair(i, j);
            auto it = acc.find(key);
            if (it == acc.end()) acc.insert(key); else acc.erase(it);
        }
    return F2Map(g.source(), f.target(), f.degree() + g.degree(), {acc.begin(), acc.end()});
}

F2Map add(const F2Map& a, const F2Map& b)
{
    if (!same_basis(a.source(), b.source()) || !same_basis(a.target(), b.target()) ||
        a.degree() != b.degree())
        throw CompositionMismatch("add: maps are not parallel");
    std::vector<std::pair<int, int>> sym;
    std::set_symmetric_difference(a.entries().begin(), a.entries().end(),
                                  b.entries().begin(), b.entries().end(),
                                  std::back_inserter(sym));
    return F2Map(a.source(), a.target(), a.degree(), std::move(sym));
}

std::vector<int> f2_component(const GradedBasis& b, Bidegree d)
{
    std::vector<int> gens;
    for (int i = 0; i < b.size(); ++i)
        if (b.degree(i) == d) gens.push_back(i);
    return gens;
}

BitMatrix f2_expanded_matrix(const F2Map& f, Bidegree d)
{
    auto src = f2_component(*f.source(), d);
    auto dst = f2_component(*f.target(), d + f.degree());
    std::vector<int> pos(f.target()->size(), -1);
    for (int c = 0; c < (int)dst.size(); ++c)
        pos[dst[c]] = c;
    std::vector<std::vector<int>> out(f.source()->size());
    for (auto [i, j] : f.entries())
        out[i].push_back(j);
    BitMatrix m((int)src.size(), (int)dst.size());
    for (int r = 0; r < (int)src.size(); ++r)
        for (int j : out[src[r]])
            m.set(r, pos[j]);
    return m;
}

}  // namespace mota1
