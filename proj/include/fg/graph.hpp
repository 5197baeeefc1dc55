#pragma once

#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "fg/word.hpp"

namespace fg {

struct EdgeTriple {
    int gen = 0;
    int src = 0;
    int dst = 0;

    friend bool operator==(const EdgeTriple&, const EdgeTriple&) = default;
    friend auto operator<=>(const EdgeTriple&, const EdgeTriple&) = default;
};

// Unfolded intermediate: a wedge of word-loops before Stallings folding.
// Basepoint is vertex 0.
struct RawGraph {
    int rank = 0;
    int vertex_count = 1;
    std::vector<EdgeTriple> edges;
};

// Folded, connected, basepointed digraph with generator-labeled edges;
// the graph model of a covering/core graph of the n-petal rose. For each
// generator the edge map is a partial injection (folded invariant).
// Basepoint is vertex 0 after canonical renumbering.
struct LabeledGraph {
    int rank = 0;
    int vertex_count = 1;
    int basepoint = 0;
    std::vector<std::vector<int>> fwd;  // [gen][v] -> target, -1 undefined
    std::vector<std::vector<int>> bwd;  // [gen][v] -> source, -1 undefined

    int edge_count() const;
    int degree(int v) const;  // incident edge-ends (a loop counts twice)

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
};

// The rank-n rose: one vertex, one loop per generator.
LabeledGraph rose(int rank);

// One loop per nonempty word, spelled through fresh vertices.
RawGraph bouquet(int rank, std::span<const Word> words);

// Stallings folding: merges vertex pairs reachable from a common vertex
// by equal-label equal-direction edges until the folded invariant holds.
// The represented subgroup (set of accepted loops) is unchanged. When an
// rng is supplied the merge order is randomized; the result is the same
// graph regardless. Output is canonically renumbered.
LabeledGraph fold(const RawGraph& raw, std::mt19937_64* rng = nullptr);

// Iteratively removes degree-1 vertices other than the basepoint.
LabeledGraph core_trim(const LabeledGraph& g);

// True iff every generator's edge map is a total bijection on vertices,
// i.e. the graph covers the rose.
bool is_complete(const LabeledGraph& g);

inline constexpr int kInfiniteIndex = -1;

// Sheets of the cover: vertex_count when complete, kInfiniteIndex otherwise.
int graph_index(const LabeledGraph& g);

int euler_characteristic(const LabeledGraph& g);  // V - E
int cycle_rank(const LabeledGraph& g);            // E - V + 1

// Parent edge of a non-basepoint vertex in the spanning tree.
struct TreeEdge {
    int gen = -1;
    bool forward = true;  // tree edge traversed parent -> child
    int parent = -1;
};

struct SpanningTree {
    std::vector<int> order;        // discovery order, order[0] == basepoint
    std::vector<TreeEdge> parent;  // indexed by vertex; basepoint has gen -1
};

// Deterministic traversal from the basepoint: breadth-first over forward
// edges in generator order; when forward edges are exhausted the first
// backward edge (discovery order, then generator order) is adopted and
// the forward sweep resumes. Defines tree, numbering and basis order.
SpanningTree spanning_tree(const LabeledGraph& g);

// Word spelled by the tree path basepoint -> v.
Word tree_path(const LabeledGraph& g, const SpanningTree& t, int v);

// One word per non-tree edge u --g--> v, emitted in (generator, source)
// order: path(basepoint->u) * g * path(v->basepoint), reduced. Size
// equals cycle_rank(g).
std::vector<Word> free_basis(const LabeledGraph& g);

// True iff w traces a basepoint-to-basepoint path with every step defined.
bool membership(const LabeledGraph& g, const Word& w);

// Same graph with basepoint v, core-trimmed and canonically renumbered;
// represents a conjugate subgroup.
LabeledGraph rebase(const LabeledGraph& g, int v);

// Renumber by the spanning-tree discovery order, basepoint becoming 0.
LabeledGraph canonicalize(const LabeledGraph& g);

// Canonical byte encoding; equal encodings <=> basepoint-preserving
// isomorphism (folded graphs make the traversal numbering canonical).
std::string canonical_form(const LabeledGraph& g);

// Basepoint-free isomorphism of covers: some rebase of g1 matches g2.
bool isomorphic_as_covers(const LabeledGraph& g1, const LabeledGraph& g2);

std::string to_dot(const LabeledGraph& g, const Alphabet& alphabet);
nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

}  // namespace fg
