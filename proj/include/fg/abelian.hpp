#pragma once

#include <vector>

#include "fg/word.hpp"

namespace fg {

// Exponent-sum vector: image of a word under F_n -> Z^n.
using ExpVector = std::vector<long long>;

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> entries;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

ExpVector abelianize(const Word& w);

// Column j is abelianize(images[j]); the induced map Z^m -> Z^n.
IntMatrix hom_matrix(std::span<const Word> images);

// Rank over Q, by fraction-free (Bareiss) elimination.
int integer_rank(IntMatrix m);

// Diagonal entries (all positive) after gcd-based row/column reduction.
// Pivot is the smallest nonzero absolute value, ties broken by lowest
// row then column index. Not sorted into a divisibility chain.
std::vector<long long> smith_diagonal(IntMatrix m);

// True iff Z^cols -> Z^rows is onto: `rows` diagonal entries, all 1.
bool is_surjective_onto_Zn(const IntMatrix& m);

// F_m has a quotient isomorphic to F_n iff m >= n.
bool quotient_exists(long long m, long long n);

// The m generator images in F_n of the natural surjection F_m -> F_n:
// generator j maps to generator j for j < n, to the identity otherwise.
std::vector<Word> canonical_surjection(int m, int n);

}  // namespace fg
