#include "fg/subgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fg/checked.hpp"

namespace fg {

namespace {

long long factorial(long long n) {
    long long f = 1;
    for (long long i = 2; i <= n; ++i)
        f = checked_mul(f, i);
    return f;
}

long long checked_pow(long long base, long long exp) {
    long long r = 1;
    for (long long i = 0; i < exp; ++i)
        r = checked_mul(r, base);
    return r;
}

}  // namespace

bool PermTuple::is_transitive() const {
    if (degree <= 0)
        return false;
    std::vector<int> parent(degree);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int components = degree;
    for (const auto& p : perms)
        for (int i = 0; i < degree; ++i) {
            int a = find(i), b = find(p[i]);
            if (a != b) {
                parent[b] = a;
                --components;
            }
        }
    return components == 1;
}

Subgroup subgroup_from_graph(const LabeledGraph& g) {
    Subgroup s;
    s.graph = canonicalize(g);
    s.ambient_rank = g.rank;
    s.basis = free_basis(s.graph);
    int idx = graph_index(s.graph);
    s.index = idx == kInfiniteIndex ? std::nullopt : std::optional<int>(idx);
    s.rank = cycle_rank(s.graph);
    return s;
}

Subgroup subgroup_from_generators(int rank, std::span<const Word> generators) {
    return subgroup_from_graph(core_trim(fold(bouquet(rank, generators))));
}

LabeledGraph graph_from_perms(const PermTuple& t) {
    if (t.degree < 1)
        throw std::invalid_argument("graph_from_perms: degree must be positive");
    for (const auto& p : t.perms) {
        if (static_cast<int>(p.size()) != t.degree)
            throw std::invalid_argument("graph_from_perms: permutation of wrong degree");
        std::vector<bool> hit(t.degree, false);
        for (int v : p) {
            if (v < 0 || v >= t.degree || hit[v])
                throw std::invalid_argument("graph_from_perms: not a permutation");
            hit[v] = true;
        }
    }
    if (!t.is_transitive())
        throw std::invalid_argument("graph_from_perms: action is not transitive");
    RawGraph raw;
    raw.rank = static_cast<int>(t.perms.size());
    raw.vertex_count = t.degree;
    for (int g = 0; g < raw.rank; ++g)
        for (int i = 0; i < t.degree; ++i)
            raw.edges.push_back({g, i, t.perms[g][i]});
    return fold(raw);
}

PermTuple perms_from_graph(const LabeledGraph& g) {
    if (!is_complete(g))
        throw std::invalid_argument("perms_from_graph: graph does not cover the rose");
    PermTuple t;
    t.degree = g.vertex_count;
    t.perms = g.fwd;
    return t;
}

long long count_index(int n, int e) {
    if (n < 1 || e < 1)
        throw std::invalid_argument("count_index: requires n >= 1, e >= 1");
    std::vector<long long> counts(e + 1, 0);
    for (int k = 1; k <= e; ++k) {
        long long total = checked_mul(k, checked_pow(factorial(k), n - 1));
        for (int i = 1; i < k; ++i)
            total = checked_sub(total,
                                checked_mul(checked_pow(factorial(k - i), n - 1), counts[i]));
        counts[k] = total;
    }
    return counts[e];
}

std::vector<Subgroup> enumerate_index(int n, int e, long long cap) {
    if (n < 1 || e < 1)
        throw std::invalid_argument("enumerate_index: requires n >= 1, e >= 1");
    long long fact = factorial(e);
    long long candidates = checked_mul(e, checked_pow(fact, n - 1));
    if (candidates > cap)
        throw std::runtime_error("enumerate_index: candidate tuple count " +
                                 std::to_string(candidates) + " exceeds cap " +
                                 std::to_string(cap));
    // all permutations of {0..e-1} in lexicographic order
    std::vector<std::vector<int>> perms;
    std::vector<int> p(e);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::string, LabeledGraph> found;
    std::vector<size_t> odometer(n, 0);
    PermTuple tuple;
    tuple.degree = e;
    tuple.perms.resize(n);
    for (;;) {
        for (int g = 0; g < n; ++g)
            tuple.perms[g] = perms[odometer[g]];
        if (tuple.is_transitive()) {
            LabeledGraph g = graph_from_perms(tuple);
            found.try_emplace(canonical_form(g), g);
        }
        int pos = n - 1;
        while (pos >= 0 && ++odometer[pos] == perms.size())
            odometer[pos--] = 0;
        if (pos < 0)
            break;
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (const auto& [form, graph] : found)
        out.push_back(subgroup_from_graph(graph));
    return out;
}

std::vector<std::vector<int>> conjugacy_classes(std::span<const Subgroup> subs) {
    std::vector<std::vector<int>> classes;
    std::vector<int> assigned(subs.size(), -1);
    // order members inside each class by canonical form; representative first
    std::vector<int> order(subs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return canonical_form(subs[a].graph) < canonical_form(subs[b].graph);
    });
    for (int i : order) {
        if (assigned[i] >= 0)
            continue;
        std::vector<int> members{i};
        assigned[i] = static_cast<int>(classes.size());
        for (int j : order)
            if (assigned[j] < 0 && isomorphic_as_covers(subs[i].graph, subs[j].graph)) {
                assigned[j] = assigned[i];
                members.push_back(j);
            }
        classes.push_back(std::move(members));
    }
    return classes;
}

bool is_normal_rebase(const Subgroup& s) {
    if (!s.index.has_value())
        throw std::invalid_argument("is_normal_rebase: requires finite index");
    std::string form = canonical_form(s.graph);
    for (int v = 1; v < s.graph.vertex_count; ++v)
        if (canonical_form(rebase(s.graph, v)) != form)
            return false;
    return true;
}

bool is_normal_conjugation(const Subgroup& s) {
    std::string form = canonical_form(s.graph);
    for (int g = 0; g < s.ambient_rank; ++g)
        for (int sign : {1, -1}) {
            Word x = generator(s.ambient_rank, g, sign);
            std::vector<Word> conjugated;
            conjugated.reserve(s.basis.size());
            for (const Word& b : s.basis)
                conjugated.push_back(concat(x, concat(b, invert(x))));
            LabeledGraph h = core_trim(fold(bouquet(s.ambient_rank, conjugated)));
            if (canonical_form(h) != form)
                return false;
        }
    return true;
}

bool is_normal(const Subgroup& s) {
    return s.index.has_value() ? is_normal_rebase(s) : is_normal_conjugation(s);
}

Subgroup conjugate_subgroup(const Subgroup& s, const Word& w) {
    if (w.rank != s.ambient_rank)
        throw std::invalid_argument("conjugate_subgroup: alphabet rank mismatch");
    std::vector<Word> conjugated;
    conjugated.reserve(s.basis.size());
    for (const Word& b : s.basis)
        conjugated.push_back(concat(w, concat(b, invert(w))));
    return subgroup_from_generators(s.ambient_rank, conjugated);
}

bool subgroup_exists(long long m, long long n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("subgroup_exists: negative rank");
    if (n == 0)
        return true;
    if (n == 1)
        return m >= 1;
    return m >= 2;
}

bool normal_subgroup_exists(long long m, long long n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("normal_subgroup_exists: negative rank");
    if (m == n)
        return true;
    if (m == 0)
        return true;  // trivial subgroup is always normal
    if (n == 0)
        return false;
    if (n == 1)
        return m <= 1;  // subgroups of Z are trivial or Z itself
    if (m == 1)
        return false;  // a rank-1 normal subgroup of F_n would be infinite
                       // index, hence not finitely generated
    return (m - 1) % (n - 1) == 0;
}

Subgroup cyclic_cover(int n, int k) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("cyclic_cover: requires n >= 1, k >= 1");
    std::vector<EdgeTriple> edges;
    for (int g = 0; g + 1 < n; ++g)
        for (int v = 0; v < k; ++v)
            edges.push_back({g, v, v});
    for (int v = 0; v < k; ++v)
        edges.push_back({n - 1, v, (v + 1) % k});
    RawGraph raw{n, k, edges};
    return subgroup_from_graph(fold(raw));
}

Subgroup embed_in_F2(int m) {
    if (m < 2)
        throw std::invalid_argument("embed_in_F2: requires m >= 2");
    return cyclic_cover(2, m - 1);
}

long long nielsen_schreier_rank(long long n, long long e) {
    if (n < 1 || e < 1)
        throw std::invalid_argument("nielsen_schreier_rank: requires n >= 1, e >= 1");
    return checked_add(1, checked_mul(e, n - 1));
}

Subgroup infinite_index_example(int r) {
    if (r < 1)
        throw std::invalid_argument("infinite_index_example: requires r >= 1");
    Word a = generator(2, 0);
    Word b = generator(2, 1);
    std::vector<Word> gens;
    for (int i = 0; i < r; ++i) {
        Word bi = power(b, i);
        gens.push_back(concat(bi, concat(a, invert(bi))));
    }
    return subgroup_from_generators(2, gens);
}

nlohmann::json subgroup_to_json(const Subgroup& s, const Alphabet& alphabet) {
    nlohmann::json basis = nlohmann::json::array();
    for (const Word& b : s.basis)
        basis.push_back(format_word(b, alphabet));
    nlohmann::json index =
        s.index.has_value() ? nlohmann::json(*s.index) : nlohmann::json("infinite");
    return {{"ambientRank", s.ambient_rank},
            {"graph", graph_to_json(s.graph)},
            {"basis", basis},
            {"index", index},
            {"rank", s.rank},
            {"normal", is_normal(s)}};
}

Subgroup subgroup_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("ambientRank") || !j.contains("graph"))
        throw std::invalid_argument("subgroup_from_json: expected {ambientRank, graph, ...}");
    int n = j.at("ambientRank").get<int>();
    LabeledGraph g = graph_from_json(j.at("graph"));
    if (g.rank != n)
        throw std::invalid_argument("subgroup_from_json: graph rank mismatch");
    Subgroup s = subgroup_from_graph(core_trim(g));
    if (j.contains("basis")) {
        Alphabet alphabet = Alphabet::standard(n);
        std::vector<Word> basis;
        for (const auto& text : j.at("basis"))
            basis.push_back(parse_word(text.get<std::string>(), alphabet));
        Subgroup rebuilt = subgroup_from_generators(n, basis);
        if (canonical_form(rebuilt.graph) != canonical_form(s.graph))
            throw std::invalid_argument("subgroup_from_json: basis does not regenerate graph");
    }
    return s;
}

}  // namespace fg
