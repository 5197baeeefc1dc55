#pragma once

#include <optional>
#include <vector>

#include "json.hpp"

#include "fg/graph.hpp"
#include "fg/word.hpp"

namespace fg {

// A finitely generated subgroup of F_ambient_rank, held as its folded
// core graph with cached invariants. index is empty for infinite index.
struct Subgroup {
    int ambient_rank = 0;
    LabeledGraph graph;
    std::vector<Word> basis;
    std::optional<int> index;
    int rank = 0;
};

// One permutation of {0..degree-1} per generator; the monodromy of a
// degree-sheeted cover. Transitive iff the cover is connected.
struct PermTuple {
    int degree = 0;
    std::vector<std::vector<int>> perms;

    bool is_transitive() const;
};

Subgroup subgroup_from_generators(int rank, std::span<const Word> generators);
Subgroup subgroup_from_graph(const LabeledGraph& g);

// Vertices 0..degree-1, generator g edges i -> perms[g](i); complete by
// construction. Throws on a non-transitive tuple.
LabeledGraph graph_from_perms(const PermTuple& t);

// Inverse of graph_from_perms; requires a complete graph.
PermTuple perms_from_graph(const LabeledGraph& g);

inline constexpr long long kDefaultEnumerationCap = 10'000'000;

// All subgroups of index exactly e in F_n, each exactly once, sorted by
// canonical_form of the core graph. Realized by enumerating permutation
// tuples with transitive action, canonicalizing and deduplicating.
// Refuses when e * (e!)^(n-1) exceeds the cap.
std::vector<Subgroup> enumerate_index(int n, int e,
                                      long long cap = kDefaultEnumerationCap);

// Independent counting oracle, the classical recursion
// N_e = e*(e!)^(n-1) - sum_{i<e} ((e-i)!)^(n-1) * N_i.
long long count_index(int n, int e);

// Partition into basepoint-free isomorphism classes (= conjugacy
// classes). Each class lists indices into `subs`; the representative is
// the member with least canonical_form, classes ordered by it.
std::vector<std::vector<int>> conjugacy_classes(std::span<const Subgroup> subs);

// Finite index: deck-transitivity test, every rebase canonical-equal.
bool is_normal_rebase(const Subgroup& s);
// Any index: x H x^-1 == H for every generator x and its inverse,
// decided by folding the conjugated basis.
bool is_normal_conjugation(const Subgroup& s);
// Rebase test when the index is finite, conjugation-fold test otherwise.
bool is_normal(const Subgroup& s);

Subgroup conjugate_subgroup(const Subgroup& s, const Word& w);

// Does F_m contain a subgroup isomorphic to F_n?
bool subgroup_exists(long long m, long long n);

// Does F_n contain a normal subgroup isomorphic to F_m? For m, n >= 2
// this holds iff (n-1) | (m-1).
bool normal_subgroup_exists(long long m, long long n);

// The index-(m-1) cyclic-cover subgroup of F_2, of rank m.
Subgroup embed_in_F2(int m);

// k vertices; the last generator's edges form the k-cycle i -> i+1 mod k,
// every other generator a loop at each vertex. Index k, rank 1+k(n-1),
// normal.
Subgroup cyclic_cover(int n, int k);

long long nielsen_schreier_rank(long long n, long long e);

// <b^i a b^-i : 0 <= i < r> in F_2: rank r, infinite index, not normal.
Subgroup infinite_index_example(int r);

nlohmann::json subgroup_to_json(const Subgroup& s, const Alphabet& alphabet);
Subgroup subgroup_from_json(const nlohmann::json& j);

}  // namespace fg
