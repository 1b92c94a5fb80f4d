#include "defectlab/sidegraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

#include "defectlab/factor_index.hpp"
#include "defectlab/manacher.hpp"

namespace defectlab {

namespace {

struct ClassIndex {
    std::map<std::vector<Symbol>, std::int32_t> by_canon;

    std::int32_t get(const Word& f, std::vector<ReversalClass>& vertices) {
        Word rev = f.reversed();
        const Word& canon = Word::lex_less(rev, f) ? rev : f;
        std::vector<Symbol> key(canon.symbols().begin(), canon.symbols().end());
        auto it = by_canon.find(key);
        if (it != by_canon.end()) return it->second;
        const auto id = static_cast<std::int32_t>(vertices.size());
        vertices.push_back({canon, canon.is_palindrome()});
        by_canon.emplace(std::move(key), id);
        return id;
    }
};

struct Find {
    std::vector<std::int32_t> parent;
    explicit Find(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::int32_t root(std::int32_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void join(std::int32_t a, std::int32_t b) { parent[static_cast<std::size_t>(root(a))] = root(b); }
};

}  // namespace

SideGraph build_sidegraph(const Word& w, std::int32_t n) {
    if (n < 1) throw error(errc::invalid_argument, "side graph needs n >= 1");
    if (static_cast<std::size_t>(n) + 1 > w.size())
        throw error(errc::out_of_range, "window too short for side graph");

    SideGraph g;
    g.n = n;

    FactorIndex fi(w, n);
    detail::SpanMap<bool> special;
    for (std::size_t id = 0; id < fi.entries(n).size(); ++id) {
        const auto& e = fi.entries(n)[id];
        if (e.left_special() || e.right_special()) {
            const Symbol* base = w.symbols().data() + e.first_pos;
            special.emplace(detail::SpanKey{base, n}, true);
        }
    }
    if (special.empty()) {
        g.no_specials = true;
        g.tree = true;
        g.palindromic_loops = true;
        return g;
    }

    std::vector<std::int32_t> positions;
    const Symbol* base = w.symbols().data();
    for (std::size_t pos = 0; pos + static_cast<std::size_t>(n) <= w.size(); ++pos)
        if (special.count(detail::SpanKey{base + pos, n}))
            positions.push_back(static_cast<std::int32_t>(pos));

    ClassIndex classes;
    Manacher man(w.symbols());
    std::map<std::vector<Symbol>, std::size_t> edge_of;  // canonical path -> edge id
    for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
        const auto p = static_cast<std::size_t>(positions[i]);
        const auto q = static_cast<std::size_t>(positions[i + 1]);
        Word path = w.sub(p, q + static_cast<std::size_t>(n) - p);
        Word rev = path.reversed();
        const Word& canon = Word::lex_less(rev, path) ? rev : path;
        std::vector<Symbol> key(canon.symbols().begin(), canon.symbols().end());
        auto it = edge_of.find(key);
        if (it != edge_of.end()) {
            g.edges[it->second].window_occurrences += 1;
            continue;
        }
        SimplePathEdge e;
        e.u = classes.get(w.sub(p, static_cast<std::size_t>(n)), g.vertices);
        e.v = classes.get(w.sub(q, static_cast<std::size_t>(n)), g.vertices);
        e.loop = e.u == e.v;
        e.palindrome = man.is_palindrome(p, path.size());
        e.window_occurrences = 1;
        e.path = canon;
        edge_of.emplace(std::move(key), g.edges.size());
        g.edges.push_back(std::move(e));
    }
    // specials that never occurred twice still form vertices
    for (std::size_t id = 0; id < fi.entries(n).size(); ++id) {
        const auto& e = fi.entries(n)[id];
        if (e.left_special() || e.right_special())
            classes.get(fi.factor(n, id), g.vertices);
    }

    auto [tree, pal_loops] = lemma_tree_verdict(g);
    g.tree = tree;
    g.palindromic_loops = pal_loops;
    return g;
}

std::pair<bool, bool> lemma_tree_verdict(const SideGraph& g) {
    if (g.vertices.empty()) return {true, true};
    bool pal_loops = true;
    std::int64_t nonloop = 0;
    Find uf(g.vertices.size());
    for (const auto& e : g.edges) {
        if (e.loop) {
            if (!e.palindrome) pal_loops = false;
            continue;
        }
        ++nonloop;
        uf.join(e.u, e.v);
    }
    std::int32_t components = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (uf.root(static_cast<std::int32_t>(v)) == static_cast<std::int32_t>(v)) ++components;
    const bool tree =
        components == 1 && nonloop == static_cast<std::int64_t>(g.vertices.size()) - 1;
    return {tree, pal_loops};
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

void export_dot(const SideGraph& g, std::ostream& os) {
    os << "graph side_graph_n" << g.n << " {\n";
    os << "  node [shape=ellipse];\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        os << "  v" << v << " [label=\"" << dot_escape(g.vertices[v].representative.str())
           << "\"];\n";
    }
    for (const auto& e : g.edges) {
        os << "  v" << e.u << " -- v" << e.v << " [label=\"" << dot_escape(e.path.str()) << "\"";
        if (e.loop) os << ", style=bold, color=" << (e.palindrome ? "blue" : "red");
        os << "];\n";
    }
    if (g.no_specials) os << "  // no special factors at this length\n";
    os << "}\n";
}

}  // namespace defectlab
