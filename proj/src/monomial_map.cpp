#include "mota1/monomial_map.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace mota1 {

MonomialMap::MonomialMap(BasisPtr source, BasisPtr target, Bidegree degree,
                         std::vector<std::pair<int, int>> entries)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree),
      entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end());
    entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
    for (auto [i, j] : entries_) {
        if (i < 0 || i >= source_->size() || j < 0 || j >= target_->size())
            throw DegreeConstraintViolation("entry index out of range");
        Bidegree di = source_->degree(i), dj = target_->degree(j);
        if (dj.s != di.s + degree_.s)
            throw DegreeConstraintViolation(
                "entry " + source_->id(i) + " -> " + target_->id(j) +
                ": target must sit in internal degree " + std::to_string(di.s + degree_.s));
        if (di.w + degree_.w - dj.w < 0)
            throw DegreeConstraintViolation(
                "entry " + source_->id(i) + " -> " + target_->id(j) +
                ": negative tau valuation");
    }
}

MonomialMap MonomialMap::zero(BasisPtr source, BasisPtr target, Bidegree degree)
{
    return MonomialMap(std::move(source), std::move(target), degree, {});
}

MonomialMap MonomialMap::identity(BasisPtr basis)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < basis->size(); ++i)
        e.emplace_back(i, i);
    BasisPtr b2 = basis;
    return MonomialMap(std::move(basis), std::move(b2), Bidegree{0, 0}, std::move(e));
}

MonomialMap MonomialMap::tau_shift(int k) const
{
    return MonomialMap(source_, target_, Bidegree{degree_.s, degree_.w + k}, entries_);
}

MonomialMap compose(const MonomialMap& f, const MonomialMap& g)
{
    if (!same_basis(g.target(), f.source()))
        throw CompositionMismatch("compose: target of inner map differs from source of outer map");

    // Bucket f's entries by source index, then count middle-index paths mod 2.
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
    return MonomialMap(g.source(), f.target(), f.degree() + g.degree(),
                       {acc.begin(), acc.end()});
}

std::vector<ExpandedSlot> expand_bidegree(const GradedBasis& b, Bidegree d)
{
    std::vector<ExpandedSlot> slots;
    for (int i = 0; i < b.size(); ++i) {
        Bidegree gi = b.degree(i);
        if (gi.s == d.s && gi.w <= d.w)
            slots.push_back({i, d.w - gi.w});
    }
    return slots;
}

BitMatrix expanded_matrix(const MonomialMap& f, Bidegree d)
{
    auto src = expand_bidegree(*f.source(), d);
    auto dst = expand_bidegree(*f.target(), d + f.degree());

    std::vector<int> dst_pos(f.target()->size(), -1);
    for (int c = 0; c < (int)dst.size(); ++c)
        dst_pos[dst[c].gen] = c;

    std::vector<std::vector<int>> out(f.source()->size());
    for (auto [i, j] : f.entries())
        out[i].push_back(j);

    BitMatrix m((int)src.size(), (int)dst.size());
    for (int r = 0; r < (int)src.size(); ++r)
        for (int j : out[src[r].gen]) {
            // k >= 0 on the entry makes the target slot present whenever the
            // source slot is.
            if (dst_pos[j] < 0)
                throw InternalError("expanded entry fell outside the target component");
            m.set(r, dst_pos[j]);
        }
    return m;
}

int generic_rank(const MonomialMap& f)
{
    BitMatrix m(f.source()->size(), f.target()->size());
    for (auto [i, j] : f.entries())
        m.set(i, j);
    return rank(m);
}

namespace {

// Distinct internal degrees of a basis with [min,max] generator weight each.
struct DegreeWindow {
    int s;
    int wmin;
    int wmax;
};

std::vector<DegreeWindow> weight_windows(const GradedBasis& b)
{
    std::map<int, std::pair<int, int>> by_s;
    for (const Generator& g : b.generators()) {
        auto it = by_s.find(g.deg.s);
        if (it == by_s.end())
            by_s.emplace(g.deg.s, std::make_pair(g.deg.w, g.deg.w));
        else {
            it->second.first = std::min(it->second.first, g.deg.w);
            it->second.second = std::max(it->second.second, g.deg.w);
        }
    }
    std::vector<DegreeWindow> ws;
    for (auto& [s, mm] : by_s)
        ws.push_back({s, mm.first, mm.second});
    return ws;
}

}  // namespace

KernelResult kernel(const MonomialMap& f)
{
    const GradedBasis& src = *f.source();
    std::vector<Generator> kgens;
    std::vector<std::pair<int, int>> incl_entries;

    // Kernel vectors are discovered per internal degree, weight by weight; a
    // vector over expand_bidegree(src,(s,w)) becomes a kernel generator with
    // incl entries read off its slots.
    for (const DegreeWindow& win : weight_windows(src)) {
        std::vector<BitVec> prev;                   // kernel of the previous weight
        std::vector<ExpandedSlot> prev_slots;
        for (int w = win.wmin; w <= win.wmax + 1; ++w) {
            Bidegree d{win.s, w};
            auto slots = expand_bidegree(src, d);
            BitMatrix e = expanded_matrix(f, d);
            std::vector<BitVec> ker = nullspace(transpose(e));

            // tau embeds the previous component slotwise (same generator,
            // power + 1); build its image inside the current kernel.
            std::vector<int> gen_pos(src.size(), -1);
            for (int c = 0; c < (int)slots.size(); ++c)
                gen_pos[slots[c].gen] = c;
            Echelon seen((int)slots.size());
            for (const BitVec& v : prev) {
                BitVec lifted((int)slots.size());
                for (int c = 0; c < (int)prev_slots.size(); ++c)
                    if (v.test(c)) lifted.set(gen_pos[prev_slots[c].gen]);
                seen.insert(std::move(lifted));
            }

            int fresh = 0;
            for (const BitVec& v : ker) {
                BitVec r = seen.reduce(v);
                if (!r.any()) continue;
                ++fresh;
                if (w == win.wmax + 1)
                    throw InternalError("kernel failed to stabilize above the weight window");
                int t = (int)kgens.size();
                kgens.push_back({"k" + std::to_string(t), d});
                for (int c = 0; c < (int)slots.size(); ++c)
                    if (r.test(c)) incl_entries.emplace_back(t, slots[c].gen);
                seen.insert(std::move(r));
            }
            (void)fresh;
            prev = std::move(ker);
            prev_slots = std::move(slots);
        }
    }

    BasisPtr kb = make_basis(std::move(kgens));
    MonomialMap incl(kb, f.source(), Bidegree{0, 0}, std::move(incl_entries));
    if (kb->size() != src.size() - generic_rank(f))
        throw InternalError("kernel rank does not match rank-nullity");
    return {kb, std::move(incl)};
}

bool is_surjective(const MonomialMap& f)
{
    const GradedBasis& tgt = *f.target();
    for (const DegreeWindow& win : weight_windows(tgt)) {
        for (int w = win.wmin; w <= win.wmax; ++w) {
            Bidegree d{win.s, w};
            int dim = (int)expand_bidegree(tgt, d).size();
            BitMatrix e = expanded_matrix(f, d - f.degree());
            if (rank(e) != dim) return false;
        }
    }
    return true;
}

MonomialMap restrict_to(const MonomialMap& f, const BasisPtr& k, const MonomialMap& incl)
{
    if (!same_basis(incl.source(), k) || !same_basis(incl.target(), f.source()) ||
        !same_basis(f.source(), f.target()))
        throw CompositionMismatch("restrict_to: expected an endomorphism and an inclusion of a submodule");

    MonomialMap fi = compose(f, incl);
    std::vector<std::vector<int>> out(k->size());
    for (auto [t, j] : fi.entries())
        out[t].push_back(j);

    std::vector<std::pair<int, int>> entries;
    for (int t = 0; t < k->size(); ++t) {
        Bidegree d = k->degree(t) + f.degree();
        auto amb = expand_bidegree(*f.source(), d);
        std::vector<int> pos(f.source()->size(), -1);
        for (int c = 0; c < (int)amb.size(); ++c)
            pos[amb[c].gen] = c;

        BitVec target_vec((int)amb.size());
        for (int j : out[t])
            target_vec.flip(pos[j]);
        if (!target_vec.any()) continue;

        // Solve x · incl = f·incl(g_t) in the expanded component.
        BitMatrix e = expanded_matrix(incl, d);
        BitVec x;
        if (!solve(transpose(e), target_vec, x))
            throw MembershipFailure("image of generator '" + k->id(t) +
                                    "' leaves the span of the submodule");
        auto kslots = expand_bidegree(*k, d);
        for (int c = 0; c < (int)kslots.size(); ++c)
            if (x.test(c)) entries.emplace_back(t, kslots[c].gen);
    }
    return MonomialMap(k, k, f.degree(), std::move(entries));
}

Element apply(const MonomialMap& f, const Element& e)
{
    BitMatrix m = expanded_matrix(f, e.deg);
    return {f.target(), e.deg + f.degree(), apply_rows(e.coords, m)};
}

}  // namespace mota1
