#include "fg/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fg {

int LabeledGraph::edge_count() const {
    int e = 0;
    for (int g = 0; g < rank; ++g)
        for (int v = 0; v < vertex_count; ++v)
            if (fwd[g][v] >= 0)
                ++e;
    return e;
}

int LabeledGraph::degree(int v) const {
    int d = 0;
    for (int g = 0; g < rank; ++g) {
        if (fwd[g][v] >= 0)
            ++d;
        if (bwd[g][v] >= 0)
            ++d;
    }
    return d;
}

namespace {

std::vector<EdgeTriple> edge_list(const LabeledGraph& g) {
    std::vector<EdgeTriple> edges;
    for (int gen = 0; gen < g.rank; ++gen)
        for (int v = 0; v < g.vertex_count; ++v)
            if (g.fwd[gen][v] >= 0)
                edges.push_back({gen, v, g.fwd[gen][v]});
    std::sort(edges.begin(), edges.end());
    return edges;
}

LabeledGraph build_graph(int rank, int vertex_count, int basepoint,
                         const std::vector<EdgeTriple>& edges) {
    LabeledGraph g;
    g.rank = rank;
    g.vertex_count = vertex_count;
    g.basepoint = basepoint;
    g.fwd.assign(rank, std::vector<int>(vertex_count, -1));
    g.bwd.assign(rank, std::vector<int>(vertex_count, -1));
    for (const EdgeTriple& e : edges) {
        if (e.gen < 0 || e.gen >= rank || e.src < 0 || e.src >= vertex_count ||
            e.dst < 0 || e.dst >= vertex_count)
            throw std::invalid_argument("graph: edge out of range");
        if (g.fwd[e.gen][e.src] >= 0 || g.bwd[e.gen][e.dst] >= 0)
            throw std::invalid_argument("graph: folded invariant violated");
        g.fwd[e.gen][e.src] = e.dst;
        g.bwd[e.gen][e.dst] = e.src;
    }
    return g;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

LabeledGraph rose(int rank) {
    std::vector<EdgeTriple> edges;
    for (int g = 0; g < rank; ++g)
        edges.push_back({g, 0, 0});
    return build_graph(rank, 1, 0, edges);
}

RawGraph bouquet(int rank, std::span<const Word> words) {
    RawGraph raw;
    raw.rank = rank;
    raw.vertex_count = 1;
    for (const Word& w : words) {
        if (w.rank != rank)
            throw std::invalid_argument("bouquet: word over wrong alphabet");
        if (w.empty())
            continue;
        int cur = 0;
        for (int i = 0; i < w.length(); ++i) {
            int next = (i + 1 == w.length()) ? 0 : raw.vertex_count++;
            Letter l = w.letters[i];
            if (l.sign > 0)
                raw.edges.push_back({l.gen, cur, next});
            else
                raw.edges.push_back({l.gen, next, cur});
            cur = next;
        }
    }
    return raw;
}

LabeledGraph fold(const RawGraph& raw, std::mt19937_64* rng) {
    Dsu dsu(raw.vertex_count);
    for (;;) {
        // collect every mergeable pair under current identifications
        std::vector<std::pair<int, int>> merges;
        std::map<std::pair<int, int>, int> out, in;
        for (const EdgeTriple& e : raw.edges) {
            int s = dsu.find(e.src), d = dsu.find(e.dst);
            auto [ito, inserted_o] = out.try_emplace({s, e.gen}, d);
            if (!inserted_o && dsu.find(ito->second) != d)
                merges.emplace_back(ito->second, d);
            auto [iti, inserted_i] = in.try_emplace({d, e.gen}, s);
            if (!inserted_i && dsu.find(iti->second) != s)
                merges.emplace_back(iti->second, s);
        }
        if (merges.empty())
            break;
        if (rng) {
            std::shuffle(merges.begin(), merges.end(), *rng);
            dsu.unite(merges.front().first, merges.front().second);
        } else {
            for (auto [a, b] : merges)
                dsu.unite(a, b);
        }
    }
    // compact roots and drop duplicate edges
    std::vector<int> id(raw.vertex_count, -1);
    int nv = 0;
    for (int v = 0; v < raw.vertex_count; ++v)
        if (dsu.find(v) == v)
            id[v] = nv++;
    std::vector<EdgeTriple> edges;
    for (const EdgeTriple& e : raw.edges)
        edges.push_back({e.gen, id[dsu.find(e.src)], id[dsu.find(e.dst)]});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return canonicalize(build_graph(raw.rank, nv, id[dsu.find(0)], edges));
}

LabeledGraph core_trim(const LabeledGraph& g) {
    std::vector<bool> alive(g.vertex_count, true);
    std::vector<EdgeTriple> edges = edge_list(g);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> deg(g.vertex_count, 0);
        for (const EdgeTriple& e : edges) {
            ++deg[e.src];
            ++deg[e.dst];
        }
        for (int v = 0; v < g.vertex_count; ++v)
            if (alive[v] && v != g.basepoint && deg[v] <= 1) {
                alive[v] = false;
                changed = true;
            }
        if (changed)
            std::erase_if(edges, [&](const EdgeTriple& e) {
                return !alive[e.src] || !alive[e.dst];
            });
    }
    std::vector<int> id(g.vertex_count, -1);
    int nv = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (alive[v])
            id[v] = nv++;
    for (EdgeTriple& e : edges) {
        e.src = id[e.src];
        e.dst = id[e.dst];
    }
    return canonicalize(build_graph(g.rank, nv, id[g.basepoint], edges));
}

bool is_complete(const LabeledGraph& g) {
    for (int gen = 0; gen < g.rank; ++gen)
        for (int v = 0; v < g.vertex_count; ++v)
            if (g.fwd[gen][v] < 0)
                return false;
    return true;
}

int graph_index(const LabeledGraph& g) {
    return is_complete(g) ? g.vertex_count : kInfiniteIndex;
}

int euler_characteristic(const LabeledGraph& g) {
    return g.vertex_count - g.edge_count();
}

int cycle_rank(const LabeledGraph& g) {
    return g.edge_count() - g.vertex_count + 1;
}

SpanningTree spanning_tree(const LabeledGraph& g) {
    SpanningTree t;
    t.parent.assign(g.vertex_count, TreeEdge{});
    std::vector<bool> visited(g.vertex_count, false);
    std::vector<int> queue;
    size_t head = 0;
    visited[g.basepoint] = true;
    t.order.push_back(g.basepoint);
    queue.push_back(g.basepoint);
    while (static_cast<int>(t.order.size()) < g.vertex_count) {
        while (head < queue.size()) {
            int v = queue[head++];
            for (int gen = 0; gen < g.rank; ++gen) {
                int w = g.fwd[gen][v];
                if (w >= 0 && !visited[w]) {
                    visited[w] = true;
                    t.parent[w] = {gen, true, v};
                    t.order.push_back(w);
                    queue.push_back(w);
                }
            }
        }
        if (static_cast<int>(t.order.size()) == g.vertex_count)
            break;
        // forward sweep exhausted: adopt the first backward edge
        bool found = false;
        for (size_t i = 0; i < t.order.size() && !found; ++i) {
            int v = t.order[i];
            for (int gen = 0; gen < g.rank && !found; ++gen) {
                int u = g.bwd[gen][v];
                if (u >= 0 && !visited[u]) {
                    visited[u] = true;
                    t.parent[u] = {gen, false, v};
                    t.order.push_back(u);
                    queue.push_back(u);
                    found = true;
                }
            }
        }
        if (!found)
            throw std::invalid_argument("graph: not connected");
    }
    return t;
}

Word tree_path(const LabeledGraph& g, const SpanningTree& t, int v) {
    std::vector<Letter> rev;
    while (v != g.basepoint) {
        const TreeEdge& e = t.parent[v];
        rev.push_back({e.gen, e.forward ? 1 : -1});
        v = e.parent;
    }
    std::reverse(rev.begin(), rev.end());
    return reduce(g.rank, rev);
}

std::vector<Word> free_basis(const LabeledGraph& g) {
    SpanningTree t = spanning_tree(g);
    std::set<EdgeTriple> tree_edges;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (v == g.basepoint)
            continue;
        const TreeEdge& e = t.parent[v];
        if (e.forward)
            tree_edges.insert({e.gen, e.parent, v});
        else
            tree_edges.insert({e.gen, v, e.parent});
    }
    std::vector<Word> basis;
    for (const EdgeTriple& e : edge_list(g)) {
        if (tree_edges.contains(e))
            continue;
        Word w = concat(tree_path(g, t, e.src),
                        concat(generator(g.rank, e.gen), invert(tree_path(g, t, e.dst))));
        basis.push_back(std::move(w));
    }
    return basis;
}

bool membership(const LabeledGraph& g, const Word& w) {
    if (w.rank != g.rank)
        throw std::invalid_argument("membership: alphabet rank mismatch");
    int cur = g.basepoint;
    for (Letter l : w.letters) {
        cur = l.sign > 0 ? g.fwd[l.gen][cur] : g.bwd[l.gen][cur];
        if (cur < 0)
            return false;
    }
    return cur == g.basepoint;
}

LabeledGraph canonicalize(const LabeledGraph& g) {
    SpanningTree t = spanning_tree(g);
    std::vector<int> id(g.vertex_count, -1);
    for (int i = 0; i < g.vertex_count; ++i)
        id[t.order[i]] = i;
    std::vector<EdgeTriple> edges;
    for (EdgeTriple e : edge_list(g))
        edges.push_back({e.gen, id[e.src], id[e.dst]});
    std::sort(edges.begin(), edges.end());
    return build_graph(g.rank, g.vertex_count, 0, edges);
}

LabeledGraph rebase(const LabeledGraph& g, int v) {
    if (v < 0 || v >= g.vertex_count)
        throw std::invalid_argument("rebase: vertex out of range");
    LabeledGraph h = g;
    h.basepoint = v;
    return core_trim(h);
}

std::string canonical_form(const LabeledGraph& g) {
    LabeledGraph c = canonicalize(g);
    std::ostringstream os;
    os << "R" << c.rank << "V" << c.vertex_count;
    for (const EdgeTriple& e : edge_list(c))
        os << "|" << e.gen << ":" << e.src << ">" << e.dst;
    return os.str();
}

bool isomorphic_as_covers(const LabeledGraph& g1, const LabeledGraph& g2) {
    if (g1.rank != g2.rank)
        throw std::invalid_argument("isomorphic_as_covers: rank mismatch");
    std::string target = canonical_form(g2);
    for (int v = 0; v < g1.vertex_count; ++v)
        if (canonical_form(rebase(g1, v)) == target)
            return true;
    return false;
}

std::string to_dot(const LabeledGraph& g, const Alphabet& alphabet) {
    if (alphabet.rank() != g.rank)
        throw std::invalid_argument("to_dot: alphabet rank mismatch");
    LabeledGraph c = canonicalize(g);
    std::ostringstream os;
    os << "digraph cover {\n";
    os << "  rankdir=LR;\n";
    for (int v = 0; v < c.vertex_count; ++v)
        os << "  " << v << " [shape=" << (v == c.basepoint ? "doublecircle" : "circle")
           << "];\n";
    for (const EdgeTriple& e : edge_list(c))
        os << "  " << e.src << " -> " << e.dst << " [label=\"" << alphabet.name(e.gen)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

nlohmann::json graph_to_json(const LabeledGraph& g) {
    LabeledGraph c = canonicalize(g);
    nlohmann::json edges = nlohmann::json::array();
    for (const EdgeTriple& e : edge_list(c))
        edges.push_back({e.gen, e.src, e.dst});
    return {{"rank", c.rank},
            {"vertices", c.vertex_count},
            {"basepoint", c.basepoint},
            {"edges", edges}};
}

LabeledGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("vertices") ||
        !j.contains("edges"))
        throw std::invalid_argument("graph_from_json: expected {rank, vertices, basepoint, edges}");
    int rank = j.at("rank").get<int>();
    int vertices = j.at("vertices").get<int>();
    int basepoint = j.value("basepoint", 0);
    if (rank < 0 || vertices < 1 || basepoint < 0 || basepoint >= vertices)
        throw std::invalid_argument("graph_from_json: invalid dimensions");
    std::vector<EdgeTriple> edges;
    for (const auto& entry : j.at("edges")) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::invalid_argument("graph_from_json: edge must be [gen, src, dst]");
        edges.push_back({entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>()});
    }
    LabeledGraph g = build_graph(rank, vertices, basepoint, edges);
    spanning_tree(g);  // connectivity check
    return g;
}

}  // namespace fg
