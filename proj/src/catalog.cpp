#include "mota1/catalog.hpp"

namespace mota1 {

namespace {

struct Edge {
    const char* src;
    const char* dst;
};

A1Module build(const std::string& name, std::vector<Generator> gens,
               const std::vector<Edge>& sq1_edges, const std::vector<Edge>& sq2_edges)
{
    BasisPtr basis = make_basis(std::move(gens));
    auto entries = [&](const std::vector<Edge>& edges) {
        std::vector<std::pair<int, int>> e;
        for (const Edge& ed : edges)
            e.emplace_back(basis->index_of(ed.src), basis->index_of(ed.dst));
        return e;
    };
    return {name, basis, MonomialMap(basis, basis, kSq1Deg, entries(sq1_edges)),
            MonomialMap(basis, basis, kSq2Deg, entries(sq2_edges))};
}

A1Module make_m2()
{
    return build("M2", {{"u", {0, 0}}}, {}, {});
}

// Free module of rank one.  The monomial basis in degree order; Sq2·Sq2
// lands on tau·Sq1Sq2Sq1 via the forced valuation of the sq2sq1sq2... edge.
A1Module make_a1()
{
    return build("A1",
                 {{"one", {0, 0}},
                  {"sq1", {1, 0}},
                  {"sq2", {2, 1}},
                  {"sq1sq2", {3, 1}},
                  {"sq2sq1", {3, 1}},
                  {"sq1sq2sq1", {4, 1}},
                  {"sq2sq1sq2", {5, 2}},
                  {"sq1sq2sq1sq2", {6, 2}}},
                 {{"one", "sq1"},
                  {"sq2", "sq1sq2"},
                  {"sq2sq1", "sq1sq2sq1"},
                  {"sq2sq1sq2", "sq1sq2sq1sq2"}},
                 {{"one", "sq2"},
                  {"sq1", "sq2sq1"},
                  {"sq2", "sq1sq2sq1"},  // Sq2 Sq2 = tau Sq1 Sq2 Sq1
                  {"sq1sq2", "sq2sq1sq2"},
                  {"sq1sq2sq1", "sq1sq2sq1sq2"}}});
}

// Two generators x, y with Sq2 x = tau y and Sq1 Sq2 Sq1 x = Sq2 y.
A1Module make_a1tilde()
{
    return build("A1tilde",
                 {{"x", {0, 0}},
                  {"x1", {1, 0}},
                  {"y", {2, 0}},
                  {"y1", {3, 0}},
                  {"w3", {3, 1}},
                  {"z4", {4, 1}},
                  {"z5", {5, 1}},
                  {"z6", {6, 1}}},
                 {{"x", "x1"}, {"y", "y1"}, {"w3", "z4"}, {"z5", "z6"}},
                 {{"x", "y"},  // tau y
                  {"x1", "w3"},
                  {"y", "z4"},
                  {"y1", "z5"},
                  {"z4", "z6"}}});  // tau z6
}

// The joker: x, y with Sq2 x = tau y, Sq1 Sq2 Sq1 x = Sq2 y, Sq1 y = 0.
A1Module make_joker()
{
    return build("J",
                 {{"x", {0, 0}},
                  {"x1", {1, 0}},
                  {"y", {2, 0}},
                  {"z3", {3, 1}},
                  {"z4", {4, 1}}},
                 {{"x", "x1"}, {"z3", "z4"}},
                 {{"x", "y"},  // tau y
                  {"x1", "z3"},
                  {"y", "z4"}}});
}

}  // namespace

const A1Module& builtin(const std::string& name)
{
    static const A1Module m2 = make_m2();
    static const A1Module a1 = make_a1();
    static const A1Module a1tilde = make_a1tilde();
    static const A1Module joker = make_joker();
    if (name == "M2") return m2;
    if (name == "A1") return a1;
    if (name == "A1tilde") return a1tilde;
    if (name == "J") return joker;
    throw UnknownName("unknown builtin module '" + name + "'");
}

const std::vector<std::string>& builtin_names()
{
    static const std::vector<std::string> names = {"M2", "A1", "A1tilde", "J"};
    return names;
}

const std::vector<std::vector<int>>& a1_monomial_words()
{
    // Application order, innermost first: sq1sq2 acts as Sq1(Sq2(-)).
    static const std::vector<std::vector<int>> words = {
        {},            // one
        {1},           // sq1
        {2},           // sq2
        {2, 1},        // sq1sq2
        {1, 2},        // sq2sq1
        {1, 2, 1},     // sq1sq2sq1
        {2, 1, 2},     // sq2sq1sq2
        {2, 1, 2, 1},  // sq1sq2sq1sq2
    };
    return words;
}

}  // namespace mota1
