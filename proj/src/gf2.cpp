#include "vm/gf2.hpp"

namespace vm {

std::string Gf2Matrix::to_text() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            out.push_back(get(i, j) ? '1' : '0');
            if (j + 1 < n_) out.push_back(' ');
        }
        out.push_back('\n');
    }
    return out;
}

Gf2Matrix adjacency_matrix(const Graph& g) {
    Gf2Matrix m(g.size());
    for (int v = 0; v < g.size(); ++v)
        for (int u : g.neighbours(v)) m.set(v, u, true);
    return m;
}

Graph graph_from_matrix(const Gf2Matrix& m) {
    if (!m.is_symmetric() || !m.has_zero_diagonal())
        throw DomainError("matrix is not a graph adjacency matrix");
    Graph g(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i + 1; j < m.dim(); ++j)
            if (m.get(i, j)) g.add_edge(i, j);
    return g;
}

Gf2Matrix principal_submatrix(const Gf2Matrix& m, VertexSet s) {
    m.check_subset(s);
    const auto idx = s.to_vector();
    Gf2Matrix out(static_cast<int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            out.set(static_cast<int>(i), static_cast<int>(j), m.get(idx[i], idx[j]));
    return out;
}

int gf2_rank(const Gf2Matrix& m) {
    std::vector<std::uint64_t> rows;
    rows.reserve(static_cast<std::size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i) rows.push_back(m.row(i));
    int rank = 0;
    for (int col = 0; col < m.dim(); ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t pivot = rows.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (rows[r] & bit) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && (rows[r] & bit))
                rows[r] ^= rows[static_cast<std::size_t>(rank)];
        ++rank;
    }
    return rank;
}

bool is_nonsingular(const Gf2Matrix& m, VertexSet s) {
    m.check_subset(s);
    if (s.empty()) return true;
    Gf2Matrix sub = principal_submatrix(m, s);
    return gf2_rank(sub) == sub.dim();
}

namespace {

// Gauss-Jordan inverse of a non-singular matrix.
Gf2Matrix gf2_inverse(const Gf2Matrix& a) {
    const int k = a.dim();
    std::vector<std::uint64_t> left, right;
    for (int i = 0; i < k; ++i) {
        left.push_back(a.row(i));
        right.push_back(std::uint64_t{1} << i);
    }
    for (int col = 0; col < k; ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t pivot = left.size();
        for (std::size_t r = static_cast<std::size_t>(col); r < left.size(); ++r)
            if (left[r] & bit) {
                pivot = r;
                break;
            }
        if (pivot == left.size()) throw DomainError("matrix is singular, cannot invert");
        std::swap(left[static_cast<std::size_t>(col)], left[pivot]);
        std::swap(right[static_cast<std::size_t>(col)], right[pivot]);
        for (std::size_t r = 0; r < left.size(); ++r)
            if (r != static_cast<std::size_t>(col) && (left[r] & bit)) {
                left[r] ^= left[static_cast<std::size_t>(col)];
                right[r] ^= right[static_cast<std::size_t>(col)];
            }
    }
    Gf2Matrix inv(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if ((right[static_cast<std::size_t>(i)] >> j) & 1u) inv.set(i, j, true);
    return inv;
}

// rectangular block extraction / product over GF(2), dense and tiny
using Block = std::vector<std::vector<bool>>;

Block block_of(const Gf2Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Block b(rows.size(), std::vector<bool>(cols.size(), false));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) b[i][j] = m.get(rows[i], cols[j]);
    return b;
}

Block multiply(const Block& p, const Block& q) {
    const std::size_t rows = p.size(), inner = q.size(), cols = inner ? q[0].size() : 0;
    Block out(rows, std::vector<bool>(cols, false));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (p[i][k])
                for (std::size_t j = 0; j < cols; ++j) out[i][j] = out[i][j] ^ q[k][j];
    return out;
}

} // namespace

namespace {

std::string set_to_string(VertexSet s) {
    std::string t = "{";
    for (int v : s) t += (t.size() > 1 ? "," : "") + std::to_string(v);
    return t + "}";
}

} // namespace

Gf2Matrix principal_pivot(const Gf2Matrix& m, VertexSet s) {
    m.check_subset(s);
    if (s.empty()) return m;
    if (!is_nonsingular(m, s))
        throw DomainError("principal submatrix M[S] is singular for S = " + set_to_string(s));

    const auto in = s.to_vector();
    const auto out_idx = (VertexSet::full(m.dim()) - s).to_vector();

    const Gf2Matrix a_inv = gf2_inverse(principal_submatrix(m, s));
    Block ai(in.size(), std::vector<bool>(in.size(), false));
    for (std::size_t i = 0; i < in.size(); ++i)
        for (std::size_t j = 0; j < in.size(); ++j)
            ai[i][j] = a_inv.get(static_cast<int>(i), static_cast<int>(j));

    const Block b = block_of(m, in, out_idx);
    const Block c = block_of(m, out_idx, in);
    const Block d = block_of(m, out_idx, out_idx);

    const Block ai_b = multiply(ai, b);
    const Block c_ai = multiply(c, ai);
    const Block c_ai_b = multiply(c_ai, b);

    Gf2Matrix result(m.dim());
    for (std::size_t i = 0; i < in.size(); ++i)
        for (std::size_t j = 0; j < in.size(); ++j) result.set(in[i], in[j], ai[i][j]);
    for (std::size_t i = 0; i < in.size(); ++i)
        for (std::size_t j = 0; j < out_idx.size(); ++j) result.set(in[i], out_idx[j], ai_b[i][j]);
    for (std::size_t i = 0; i < out_idx.size(); ++i)
        for (std::size_t j = 0; j < in.size(); ++j) result.set(out_idx[i], in[j], c_ai[i][j]);
    for (std::size_t i = 0; i < out_idx.size(); ++i)
        for (std::size_t j = 0; j < out_idx.size(); ++j)
            result.set(out_idx[i], out_idx[j], d[i][j] ^ c_ai_b[i][j]);
    return result;
}

bool check_tucker(const Gf2Matrix& m, VertexSet s) {
    if (m.dim() > 12) throw CapacityError("check_tucker supports dim <= 12");
    if (!is_nonsingular(m, s)) throw DomainError("check_tucker requires non-singular M[S]");
    const Gf2Matrix pivoted = principal_pivot(m, s);
    const std::uint64_t all = VertexSet::full(m.dim()).bits();
    for (std::uint64_t t = 0; t <= all; ++t) {
        VertexSet ts(t);
        if (is_nonsingular(pivoted, ts) != is_nonsingular(m, s ^ ts)) return false;
    }
    return true;
}

bool check_pivot_composition(const Gf2Matrix& m, VertexSet s, VertexSet t) {
    if (!is_nonsingular(m, s)) throw DomainError("check_pivot_composition: M[S] is singular");
    const Gf2Matrix ms = principal_pivot(m, s);
    if (!is_nonsingular(ms, t)) throw DomainError("check_pivot_composition: (M*S)[T] is singular");
    return principal_pivot(ms, t) == principal_pivot(m, s ^ t);
}

Graph pivot_minor_by_matrix(const Graph& g, VertexSet x, VertexSet y) {
    g.check_subset(x);
    g.check_subset(y);
    const Gf2Matrix a = adjacency_matrix(g);
    if (!is_nonsingular(a, x)) throw DomainError("pivot_minor_by_matrix: A(G)[X] is singular");
    const Gf2Matrix restricted = principal_submatrix(principal_pivot(a, x), y);
    if (!restricted.is_symmetric() || !restricted.has_zero_diagonal())
        throw InternalError("pivot of a graph adjacency matrix lost graph shape");
    return graph_from_matrix(restricted);
}

} // namespace vm
