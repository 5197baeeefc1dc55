#include "fg/abelian.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "fg/checked.hpp"

namespace fg {

ExpVector abelianize(const Word& w) {
    ExpVector v(w.rank, 0);
    for (Letter l : w.letters)
        v[l.gen] = checked_add(v[l.gen], l.sign);
    return v;
}

IntMatrix hom_matrix(std::span<const Word> images) {
    int n = images.empty() ? 0 : images[0].rank;
    for (const Word& w : images)
        if (w.rank != n)
            throw std::invalid_argument("hom_matrix: images over mixed alphabets");
    IntMatrix m(n, static_cast<int>(images.size()));
    for (int j = 0; j < m.cols; ++j) {
        ExpVector col = abelianize(images[j]);
        for (int i = 0; i < n; ++i)
            m.at(i, j) = col[i];
    }
    return m;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    for (int j = 0; j < m.cols; ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
    for (int i = 0; i < m.rows; ++i)
        std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

int integer_rank(IntMatrix m) {
    int r = 0;
    long long prev = 1;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != r)
            swap_rows(m, pivot, r);
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = c + 1; j < m.cols; ++j)
                m.at(i, j) = checked_sub(checked_mul(m.at(i, j), m.at(r, c)),
                                         checked_mul(m.at(r, j), m.at(i, c))) /
                             prev;
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    return r;
}

std::vector<long long> smith_diagonal(IntMatrix m) {
    std::vector<long long> diag;
    int limit = std::min(m.rows, m.cols);
    int t = 0;
    while (t < limit) {
        // pivot: smallest nonzero absolute value, lowest row then column
        int pr = -1, pc = -1;
        long long best = 0;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                long long a = std::llabs(m.at(i, j));
                if (a != 0 && (pr < 0 || a < best)) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0)
            break;
        if (pr != t)
            swap_rows(m, pr, t);
        if (pc != t)
            swap_cols(m, pc, t);
        if (m.at(t, t) < 0)
            for (int j = t; j < m.cols; ++j)
                m.at(t, j) = checked_mul(m.at(t, j), -1);
        long long p = m.at(t, t);
        bool shrunk = false;
        for (int i = t + 1; i < m.rows; ++i)
            if (m.at(i, t) % p != 0) {
                long long q = m.at(i, t) / p;
                for (int j = t; j < m.cols; ++j)
                    m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(t, j)));
                shrunk = true;
            }
        for (int j = t + 1; j < m.cols; ++j)
            if (m.at(t, j) % p != 0) {
                long long q = m.at(t, j) / p;
                for (int i = t; i < m.rows; ++i)
                    m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(i, t)));
                shrunk = true;
            }
        if (shrunk)
            continue;  // a smaller pivot now exists
        for (int i = t + 1; i < m.rows; ++i) {
            long long q = m.at(i, t) / p;
            for (int j = t; j < m.cols; ++j)
                m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(t, j)));
        }
        for (int j = t + 1; j < m.cols; ++j) {
            long long q = m.at(t, j) / p;
            for (int i = t; i < m.rows; ++i)
                m.at(i, j) = checked_sub(m.at(i, j), checked_mul(q, m.at(i, t)));
        }
        diag.push_back(p);
        ++t;
    }
    return diag;
}

bool is_surjective_onto_Zn(const IntMatrix& m) {
    if (m.rows == 0)
        return true;
    std::vector<long long> diag = smith_diagonal(m);
    if (static_cast<int>(diag.size()) != m.rows)
        return false;
    for (long long d : diag)
        if (d != 1)
            return false;
    return true;
}

bool quotient_exists(long long m, long long n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("quotient_exists: negative rank");
    return m >= n;
}

std::vector<Word> canonical_surjection(int m, int n) {
    if (n < 0 || m < n)
        throw std::invalid_argument("canonical_surjection: requires m >= n >= 0");
    std::vector<Word> images;
    images.reserve(m);
    for (int j = 0; j < m; ++j)
        images.push_back(j < n ? generator(n, j) : Word{n, {}});
    return images;
}

}  // namespace fg
