#include "mota1/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace mota1 {

namespace {

std::vector<std::string> tokenize(const std::string& line)
{
    std::string stripped = line.substr(0, line.find('#'));
    std::istringstream in(stripped);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t)
        toks.push_back(t);
    return toks;
}

bool parse_int(const std::string& s, int& out)
{
    try {
        size_t used = 0;
        out = std::stoi(s, &used);
        return used == s.size();
    } catch (...) {
        return false;
    }
}

struct RawEdge {
    int line;
    std::string op;  // "sq1" | "sq2"
    std::string src;
    std::string dst;
};

}  // namespace

A1Module parse_module(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    std::string name;
    bool saw_module = false;
    std::vector<Generator> gens;
    std::vector<RawEdge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (!saw_module) {
            if (kw != "module" || toks.size() != 2)
                throw ParseError(lineno, "expected 'module <name>' first");
            name = toks[1];
            saw_module = true;
            continue;
        }
        if (kw == "module") {
            throw ParseError(lineno, "duplicate 'module' line");
        } else if (kw == "gen") {
            int s, w;
            if (toks.size() != 4 || !parse_int(toks[2], s) || !parse_int(toks[3], w))
                throw ParseError(lineno, "expected 'gen <id> <s> <w>'");
            gens.push_back({toks[1], {s, w}});
        } else if (kw == "sq1" || kw == "sq2") {
            if (toks.size() < 3)
                throw ParseError(lineno, "expected '" + kw + " <src> <dst> [<dst>...]'");
            for (size_t t = 2; t < toks.size(); ++t)
                edges.push_back({lineno, kw, toks[1], toks[t]});
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (!saw_module)
        throw ParseError(lineno, "missing 'module <name>' line");

    BasisPtr basis;
    try {
        basis = make_basis(std::move(gens));
    } catch (const ParseError& e) {
        throw ParseError(0, e.what());
    }

    std::vector<std::pair<int, int>> e1, e2;
    for (const RawEdge& ed : edges) {
        int i = basis->index_of(ed.src);
        int j = basis->index_of(ed.dst);
        if (i < 0)
            throw ParseError(ed.line, "unknown generator '" + ed.src + "'");
        if (j < 0)
            throw ParseError(ed.line, "unknown generator '" + ed.dst + "'");
        Bidegree di = basis->degree(i), dj = basis->degree(j);
        Bidegree op = ed.op == "sq1" ? kSq1Deg : kSq2Deg;
        if (dj.s != di.s + op.s)
            throw ParseError(ed.line, "edge " + ed.op + " " + ed.src + " -> " + ed.dst +
                                          ": target must have s = " +
                                          std::to_string(di.s + op.s));
        if (di.w + op.w - dj.w < 0)
            throw ParseError(ed.line, "edge " + ed.op + " " + ed.src + " -> " + ed.dst +
                                          ": negative tau valuation");
        auto& bucket = ed.op == "sq1" ? e1 : e2;
        auto key = std::make_pair(i, j);
        if (std::find(bucket.begin(), bucket.end(), key) != bucket.end())
            throw ParseError(ed.line, "duplicate edge " + ed.op + " " + ed.src + " -> " + ed.dst);
        bucket.push_back(key);
    }

    return {name, basis, MonomialMap(basis, basis, kSq1Deg, std::move(e1)),
            MonomialMap(basis, basis, kSq2Deg, std::move(e2))};
}

std::string serialize_module(const A1Module& m)
{
    const GradedBasis& b = *m.basis;
    std::vector<int> order(b.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int c) {
        return std::make_tuple(b.degree(a).s, b.degree(a).w, b.id(a)) <
               std::make_tuple(b.degree(c).s, b.degree(c).w, b.id(c));
    });
    std::vector<int> pos(b.size());
    for (int p = 0; p < (int)order.size(); ++p)
        pos[order[p]] = p;

    std::ostringstream out;
    out << "module " << m.name << "\n";
    for (int i : order)
        out << "gen " << b.id(i) << " " << b.degree(i).s << " " << b.degree(i).w << "\n";

    auto emit = [&](const char* kw, const MonomialMap& f) {
        // Edges sorted by canonical source position, then target position.
        std::vector<std::pair<int, int>> edges;
        for (auto [i, j] : f.entries())
            edges.emplace_back(pos[i], pos[j]);
        std::sort(edges.begin(), edges.end());
        for (size_t a = 0; a < edges.size();) {
            size_t z = a;
            while (z < edges.size() && edges[z].first == edges[a].first)
                ++z;
            out << kw << " " << b.id(order[edges[a].first]);
            for (size_t t = a; t < z; ++t)
                out << " " << b.id(order[edges[t].second]);
            out << "\n";
            a = z;
        }
    };
    emit("sq1", m.sq1);
    emit("sq2", m.sq2);
    return out.str();
}

A1Module read_module_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_module(buf.str());
}

void write_module_file(const A1Module& m, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << serialize_module(m);
}

}  // namespace mota1
