#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vm/graph.hpp"

namespace vm {

// Square 0/1 matrix over GF(2), packed bit rows. Positions double as vertex
// ids when the matrix comes from a graph.
class Gf2Matrix {
public:
    Gf2Matrix() = default;

    explicit Gf2Matrix(int n) {
        if (n < 0 || n > kMaxVertices) throw CapacityError("matrix dimension out of range");
        n_ = n;
        rows_.assign(static_cast<std::size_t>(n), 0);
    }

    int dim() const { return n_; }

    bool get(int i, int j) const {
        check_index(i);
        check_index(j);
        return (rows_[static_cast<std::size_t>(i)] >> j) & 1u;
    }

    void set(int i, int j, bool value) {
        check_index(i);
        check_index(j);
        if (value)
            rows_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        else
            rows_[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
    }

    std::uint64_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (get(i, j) != get(j, i)) return false;
        return true;
    }

    bool has_zero_diagonal() const {
        for (int i = 0; i < n_; ++i)
            if (get(i, i)) return false;
        return true;
    }

    friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

    // 0/1 text grid, one row per line.
    std::string to_text() const;

    void check_index(int i) const {
        if (i < 0 || i >= n_) throw DomainError("matrix index out of range");
    }

    void check_subset(VertexSet s) const {
        if (!s.subset_of(VertexSet::full(n_))) throw DomainError("index set out of matrix range");
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

// A(G): symmetric, zero diagonal, indexed by V(G).
Gf2Matrix adjacency_matrix(const Graph& g);

// Graph whose adjacency matrix is m; m must be symmetric with zero diagonal.
Graph graph_from_matrix(const Gf2Matrix& m);

// Principal submatrix m[S], rows/columns in ascending index order.
Gf2Matrix principal_submatrix(const Gf2Matrix& m, VertexSet s);

// Rank over GF(2) by bit-row elimination.
int gf2_rank(const Gf2Matrix& m);

// m[S] has full rank; the empty principal submatrix counts as non-singular.
bool is_nonsingular(const Gf2Matrix& m, VertexSet s);

// Principal pivot transform m*S: with A = m[S] (non-singular), B, C, D the
// complementary blocks, the result has blocks A^-1, A^-1 B, C A^-1, D + C A^-1 B
// in the original index positions (signs vanish over GF(2)).
Gf2Matrix principal_pivot(const Gf2Matrix& m, VertexSet s);

// Tucker: (m*S)[T] non-singular iff m[S^T] non-singular, for every T.
// Exhaustive over all T; dim <= 12.
bool check_tucker(const Gf2Matrix& m, VertexSet s);

// (m*S)*T == m*(S^T) entrywise; preconditions reported distinctly.
bool check_pivot_composition(const Gf2Matrix& m, VertexSet s, VertexSet t);

// Graph on Y (ascending, densely re-indexed) whose adjacency matrix is
// (A(G)*X)[Y]; requires A(G)[X] non-singular. The restricted matrix is
// checked to be symmetric with zero diagonal.
Graph pivot_minor_by_matrix(const Graph& g, VertexSet x, VertexSet y);

} // namespace vm
