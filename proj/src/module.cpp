#include "mota1/module.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace mota1 {

std::string describe(const std::vector<Violation>& vs)
{
    std::string s;
    for (const Violation& v : vs) {
        if (!s.empty()) s += "; ";
        s += v.relation + " fails at " + v.generator + " " + to_string(v.at);
    }
    return s;
}

namespace {

// One violation per source generator that appears in a differing entry.
void diff_violations(const MonomialMap& lhs, const MonomialMap& rhs,
                     const std::string& relation, const GradedBasis& basis,
                     std::vector<Violation>& out)
{
    std::vector<std::pair<int, int>> sym;
    std::set_symmetric_difference(lhs.entries().begin(), lhs.entries().end(),
                                  rhs.entries().begin(), rhs.entries().end(),
                                  std::back_inserter(sym));
    int last = -1;
    for (auto [i, j] : sym) {
        (void)j;
        if (i == last) continue;
        last = i;
        out.push_back({relation, basis.id(i), basis.degree(i)});
    }
}

std::string unique_id(std::string candidate, std::unordered_set<std::string>& taken)
{
    if (taken.insert(candidate).second) return candidate;
    for (int n = 2;; ++n) {
        std::string alt = candidate + "_" + std::to_string(n);
        if (taken.insert(alt).second) return alt;
    }
}

}  // namespace

std::vector<Violation> validate(const A1Module& m)
{
    std::vector<Violation> out;
    if (!same_basis(m.sq1.source(), m.basis) || !same_basis(m.sq1.target(), m.basis) ||
        !same_basis(m.sq2.source(), m.basis) || !same_basis(m.sq2.target(), m.basis)) {
        out.push_back({"actions are endomorphisms of the basis", "-", {0, 0}});
        return out;
    }
    if (m.sq1.degree() != kSq1Deg)
        out.push_back({"Sq1 has degree (1,0)", "-", m.sq1.degree()});
    if (m.sq2.degree() != kSq2Deg)
        out.push_back({"Sq2 has degree (2,1)", "-", m.sq2.degree()});
    if (!out.empty()) return out;

    MonomialMap s11 = compose(m.sq1, m.sq1);
    diff_violations(s11, MonomialMap::zero(m.basis, m.basis, s11.degree()),
                    "Sq1 Sq1 = 0", *m.basis, out);

    MonomialMap s22 = compose(m.sq2, m.sq2);
    MonomialMap s121 = compose(m.sq1, compose(m.sq2, m.sq1));
    diff_violations(s22, s121.tau_shift(1), "Sq2 Sq2 = tau Sq1 Sq2 Sq1", *m.basis, out);

    MonomialMap lhs = compose(m.sq1, compose(m.sq2, compose(m.sq1, m.sq2)));
    MonomialMap rhs = compose(m.sq2, compose(m.sq1, compose(m.sq2, m.sq1)));
    diff_violations(lhs, rhs, "Sq1 Sq2 Sq1 Sq2 = Sq2 Sq1 Sq2 Sq1", *m.basis, out);
    return out;
}

std::vector<Violation> validate_map(const ModuleMap& phi)
{
    std::vector<Violation> out;
    if (phi.map.degree() != Bidegree{0, 0})
        out.push_back({"module map has degree (0,0)", "-", phi.map.degree()});
    if (!same_basis(phi.map.source(), phi.source.basis) ||
        !same_basis(phi.map.target(), phi.target.basis)) {
        out.push_back({"map bases match the modules", "-", {0, 0}});
        return out;
    }
    if (!out.empty()) return out;
    diff_violations(compose(phi.map, phi.source.sq1), compose(phi.target.sq1, phi.map),
                    "Sq1-linearity", *phi.source.basis, out);
    diff_violations(compose(phi.map, phi.source.sq2), compose(phi.target.sq2, phi.map),
                    "Sq2-linearity", *phi.source.basis, out);
    return out;
}

A1Module suspend(const A1Module& m, int a, int b)
{
    std::vector<Generator> gens;
    gens.reserve(m.basis->size());
    for (const Generator& g : m.basis->generators())
        gens.push_back({g.id, g.deg + Bidegree{a, b}});
    BasisPtr basis = make_basis(std::move(gens));
    std::string name = (a == 0 && b == 0)
        ? m.name
        : "S[" + std::to_string(a) + "," + std::to_string(b) + "](" + m.name + ")";
    return {name,
            basis,
            MonomialMap(basis, basis, kSq1Deg, m.sq1.entries()),
            MonomialMap(basis, basis, kSq2Deg, m.sq2.entries())};
}

namespace {

// Accumulates tensor action terms mod 2 with explicit tau powers, then checks
// every surviving coefficient is a single monomial sitting at the forced
// valuation before emitting the entry bit.
class TermAccumulator {
public:
    void add(int src, int dst, int power) { acc_[{src, dst}][power] ^= 1; }

    std::vector<std::pair<int, int>> harvest(const GradedBasis& basis, Bidegree op_degree)
    {
        std::vector<std::pair<int, int>> entries;
        for (auto& [key, powers] : acc_) {
            int live = -1;
            for (auto [p, bit] : powers) {
                if (!bit) continue;
                if (live >= 0)
                    throw InternalError("tensor action accumulated two distinct tau powers");
                live = p;
            }
            if (live < 0) continue;
            int forced = basis.degree(key.first).w + op_degree.w - basis.degree(key.second).w;
            if (live != forced)
                throw InternalError("tensor action valuation differs from the forced one");
            entries.push_back(key);
        }
        return entries;
    }

private:
    std::map<std::pair<int, int>, std::map<int, char>> acc_;
};

}  // namespace

A1Module tensor(const A1Module& m, const A1Module& n)
{
    const int nn = n.basis->size();
    std::vector<Generator> gens;
    gens.reserve(m.basis->size() * nn);
    std::unordered_set<std::string> taken;
    for (const Generator& g : m.basis->generators())
        for (const Generator& h : n.basis->generators())
            gens.push_back({unique_id(g.id + "*" + h.id, taken), g.deg + h.deg});
    BasisPtr basis = make_basis(std::move(gens));
    auto pair_index = [nn](int i, int j) { return i * nn + j; };

    TermAccumulator sq1_acc;
    for (auto [i, i2] : m.sq1.entries()) {
        int k = m.sq1.valuation(i, i2);
        for (int j = 0; j < nn; ++j)
            sq1_acc.add(pair_index(i, j), pair_index(i2, j), k);
    }
    for (auto [j, j2] : n.sq1.entries()) {
        int k = n.sq1.valuation(j, j2);
        for (int i = 0; i < m.basis->size(); ++i)
            sq1_acc.add(pair_index(i, j), pair_index(i, j2), k);
    }

    TermAccumulator sq2_acc;
    for (auto [i, i2] : m.sq2.entries()) {
        int k = m.sq2.valuation(i, i2);
        for (int j = 0; j < nn; ++j)
            sq2_acc.add(pair_index(i, j), pair_index(i2, j), k);
    }
    for (auto [j, j2] : n.sq2.entries()) {
        int k = n.sq2.valuation(j, j2);
        for (int i = 0; i < m.basis->size(); ++i)
            sq2_acc.add(pair_index(i, j), pair_index(i, j2), k);
    }
    // Middle coproduct term tau · Sq1 ⊗ Sq1.
    for (auto [i, i2] : m.sq1.entries()) {
        int ki = m.sq1.valuation(i, i2);
        for (auto [j, j2] : n.sq1.entries()) {
            int kj = n.sq1.valuation(j, j2);
            sq2_acc.add(pair_index(i, j), pair_index(i2, j2), ki + kj + 1);
        }
    }

    return {"(" + m.name + "*" + n.name + ")",
            basis,
            MonomialMap(basis, basis, kSq1Deg, sq1_acc.harvest(*basis, kSq1Deg)),
            MonomialMap(basis, basis, kSq2Deg, sq2_acc.harvest(*basis, kSq2Deg))};
}

A1Module dual(const A1Module& m)
{
    std::vector<Generator> gens;
    gens.reserve(m.basis->size());
    std::unordered_set<std::string> taken;
    for (const Generator& g : m.basis->generators())
        gens.push_back({unique_id(g.id + "~", taken), -g.deg});
    BasisPtr basis = make_basis(std::move(gens));

    auto transpose_entries = [](const MonomialMap& f) {
        std::vector<std::pair<int, int>> e;
        e.reserve(f.entries().size());
        for (auto [i, j] : f.entries())
            e.emplace_back(j, i);
        return e;
    };
    return {"D(" + m.name + ")",
            basis,
            MonomialMap(basis, basis, kSq1Deg, transpose_entries(m.sq1)),
            MonomialMap(basis, basis, kSq2Deg, transpose_entries(m.sq2))};
}

A1Module direct_sum(const std::vector<A1Module>& parts)
{
    std::vector<Generator> gens;
    std::vector<std::pair<int, int>> e1, e2;
    int offset = 0;
    std::string name;
    for (int p = 0; p < (int)parts.size(); ++p) {
        const A1Module& part = parts[p];
        for (const Generator& g : part.basis->generators())
            gens.push_back({std::to_string(p) + "." + g.id, g.deg});
        for (auto [i, j] : part.sq1.entries())
            e1.emplace_back(offset + i, offset + j);
        for (auto [i, j] : part.sq2.entries())
            e2.emplace_back(offset + i, offset + j);
        offset += part.basis->size();
        name += (p ? "+" : "") + part.name;
    }
    BasisPtr basis = make_basis(std::move(gens));
    return {"(" + name + ")",
            basis,
            MonomialMap(basis, basis, kSq1Deg, std::move(e1)),
            MonomialMap(basis, basis, kSq2Deg, std::move(e2))};
}

std::vector<Violation> validate(const F2A1Module& m)
{
    std::vector<Violation> out;
    auto diff = [&](const F2Map& lhs, const F2Map& rhs, const std::string& relation) {
        std::vector<std::pair<int, int>> sym;
        std::set_symmetric_difference(lhs.entries().begin(), lhs.entries().end(),
                                      rhs.entries().begin(), rhs.entries().end(),
                                      std::back_inserter(sym));
        int last = -1;
        for (auto [i, j] : sym) {
            (void)j;
            if (i == last) continue;
            last = i;
            out.push_back({relation, m.basis->id(i), m.basis->degree(i)});
        }
    };
    F2Map s11 = compose(m.sq1, m.sq1);
    diff(s11, F2Map::zero(m.basis, m.basis, s11.degree()), "Sq1 Sq1 = 0");
    F2Map s22 = compose(m.sq2, m.sq2);
    diff(s22, F2Map::zero(m.basis, m.basis, s22.degree()), "Sq2 Sq2 = 0");
    diff(compose(m.sq1, compose(m.sq2, compose(m.sq1, m.sq2))),
         compose(m.sq2, compose(m.sq1, compose(m.sq2, m.sq1))),
         "Sq1 Sq2 Sq1 Sq2 = Sq2 Sq1 Sq2 Sq1");
    return out;
}

namespace {

F2Map drop_positive_valuations(const MonomialMap& f)
{
    std::vector<std::pair<int, int>> kept;
    for (auto [i, j] : f.entries())
        if (f.valuation(i, j) == 0) kept.emplace_back(i, j);
    return F2Map(f.source(), f.target(), f.degree(), std::move(kept));
}

}  // namespace

F2A1Module quotient_tau(const A1Module& m)
{
    return {m.name + "/tau", m.basis, drop_positive_valuations(m.sq1),
            drop_positive_valuations(m.sq2)};
}

F2Map quotient_tau(const ModuleMap& phi)
{
    return drop_positive_valuations(phi.map);
}

F2A1Module tensor(const F2A1Module& m, const F2A1Module& n)
{
    const int nn = n.basis->size();
    std::vector<Generator> gens;
    std::unordered_set<std::string> taken;
    for (const Generator& g : m.basis->generators())
        for (const Generator& h : n.basis->generators())
            gens.push_back({unique_id(g.id + "*" + h.id, taken), g.deg + h.deg});
    BasisPtr basis = make_basis(std::move(gens));
    auto pair_index = [nn](int i, int j) { return i * nn + j; };

    // Over F2 both operations act as derivations: the tau middle term of the
    // Sq2 coproduct is gone.
    auto derivation = [&](const F2Map& fm, const F2Map& fn, Bidegree deg) {
        std::vector<std::pair<int, int>> e;
        for (auto [i, i2] : fm.entries())
            for (int j = 0; j < nn; ++j)
                e.emplace_back(pair_index(i, j), pair_index(i2, j));
        for (auto [j, j2] : fn.entries())
            for (int i = 0; i < m.basis->size(); ++i)
                e.emplace_back(pair_index(i, j), pair_index(i, j2));
        return F2Map(basis, basis, deg, std::move(e));
    };
    return {"(" + m.name + "*" + n.name + ")", basis,
            derivation(m.sq1, n.sq1, kSq1Deg), derivation(m.sq2, n.sq2, kSq2Deg)};
}

bool structurally_equal(const A1Module& a, const A1Module& b)
{
    return *a.basis == *b.basis && a.sq1.entries() == b.sq1.entries() &&
           a.sq2.entries() == b.sq2.entries();
}

bool positionally_equal(const A1Module& a, const A1Module& b)
{
    if (a.basis->size() != b.basis->size()) return false;
    for (int i = 0; i < a.basis->size(); ++i)
        if (a.basis->degree(i) != b.basis->degree(i)) return false;
    return a.sq1.entries() == b.sq1.entries() && a.sq2.entries() == b.sq2.entries();
}

bool positionally_equal(const F2A1Module& a, const F2A1Module& b)
{
    if (a.basis->size() != b.basis->size()) return false;
    for (int i = 0; i < a.basis->size(); ++i)
        if (a.basis->degree(i) != b.basis->degree(i)) return false;
    return a.sq1.entries() == b.sq1.entries() && a.sq2.entries() == b.sq2.entries();
}

}  // namespace mota1
