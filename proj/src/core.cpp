#include "molr/core.hpp"

#include <algorithm>
#include <numeric>

namespace molr {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), Symbol{0});
    return p;
}

Perm inverse_perm(const Perm &p) {
    Perm inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<Symbol>(i);
    return inv;
}

Perm compose_perm(const Perm &f, const Perm &g) {
    assert(f.size() == g.size());
    Perm h(f.size());
    for (size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
    return h;
}

bool is_permutation(const Perm &p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (Symbol s : p) {
        if (s >= n || seen[s]) return false;
        seen[s] = true;
    }
    return true;
}

RowNotPermutation::RowNotPermutation(int r)
    : Error("row " + std::to_string(r) + " is not a permutation of the symbol set"), row(r) {}

ColumnRepeat::ColumnRepeat(int c, Symbol s)
    : Error("column " + std::to_string(c) + " repeats symbol " + std::to_string(int(s))),
      column(c), symbol(s) {}

NotOrthogonal::NotOrthogonal(int i, int j, Symbol a, Symbol b)
    : Error("rectangles " + std::to_string(i) + " and " + std::to_string(j) +
            " repeat the pair (" + std::to_string(int(a)) + "," + std::to_string(int(b)) + ")"),
      first(i), second(j), pair_a(a), pair_b(b) {}

LatinRectangle validate_rectangle(int rows, int cols, const std::vector<Symbol> &cells) {
    if (rows < 1 || cols < 1 || rows > cols)
        throw BadDimensions("need 1 <= k <= n, got k=" + std::to_string(rows) +
                            " n=" + std::to_string(cols));
    if (static_cast<int>(cells.size()) != rows * cols)
        throw BadDimensions("cell count does not match k*n");

    std::vector<bool> seen(cols);
    for (int r = 0; r < rows; ++r) {
        std::fill(seen.begin(), seen.end(), false);
        for (int c = 0; c < cols; ++c) {
            Symbol s = cells[r * cols + c];
            if (s >= cols || seen[s]) throw RowNotPermutation(r);
            seen[s] = true;
        }
    }
    for (int c = 0; c < cols; ++c) {
        std::fill(seen.begin(), seen.end(), false);
        for (int r = 0; r < rows; ++r) {
            Symbol s = cells[r * cols + c];
            if (seen[s]) throw ColumnRepeat(c, s);
            seen[s] = true;
        }
    }
    return LatinRectangle(rows, cols, cells);
}

LatinRectangle validate_rectangle(const std::vector<std::vector<int>> &grid) {
    if (grid.empty()) throw BadDimensions("empty grid");
    const size_t cols = grid[0].size();
    std::vector<Symbol> cells;
    cells.reserve(grid.size() * cols);
    for (const auto &row : grid) {
        if (row.size() != cols) throw BadDimensions("ragged grid");
        for (int v : row) {
            if (v < 0 || v >= static_cast<int>(cols))
                throw RowNotPermutation(static_cast<int>(&row - grid.data()));
            cells.push_back(static_cast<Symbol>(v));
        }
    }
    return validate_rectangle(static_cast<int>(grid.size()), static_cast<int>(cols), cells);
}

bool are_orthogonal(const LatinRectangle &a, const LatinRectangle &b) {
    if (a.row_count() != b.row_count() || a.col_count() != b.col_count())
        throw DimensionMismatch("orthogonality needs identical shapes");
    const int n = a.col_count(), k = a.row_count();
    std::vector<std::uint64_t> used((n * n + 63) / 64, 0);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c) {
            const int pair = a.at(r, c) * n + b.at(r, c);
            std::uint64_t &word = used[pair >> 6];
            const std::uint64_t bit = std::uint64_t{1} << (pair & 63);
            if (word & bit) return false;
            word |= bit;
        }
    return true;
}

MolrSet MolrSet::unchecked(int n, int k, std::vector<LatinRectangle> rects) {
    MolrSet m;
    m.n_ = n;
    m.k_ = k;
    m.rects_ = std::move(rects);
#ifndef NDEBUG
    MolrSet checked = validate_molr(m.rects_);
    assert(checked == m);
#endif
    return m;
}

MolrSet validate_molr(const std::vector<LatinRectangle> &rects) {
    if (rects.empty()) throw BadDimensions("a MOLR set needs at least one rectangle");
    const int k = rects[0].row_count(), n = rects[0].col_count();
    for (const auto &r : rects)
        if (r.row_count() != k || r.col_count() != n)
            throw DimensionMismatch("rectangles must share dimensions");
    const int t = static_cast<int>(rects.size());
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            // inline pair scan so the error can carry the repeated pair
            std::vector<std::uint64_t> used((n * n + 63) / 64, 0);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < n; ++c) {
                    const int pair = rects[i].at(r, c) * n + rects[j].at(r, c);
                    std::uint64_t &word = used[pair >> 6];
                    const std::uint64_t bit = std::uint64_t{1} << (pair & 63);
                    if (word & bit)
                        throw NotOrthogonal(i, j, rects[i].at(r, c), rects[j].at(r, c));
                    word |= bit;
                }
        }
    MolrSet m;
    m.n_ = n;
    m.k_ = k;
    m.rects_ = rects;
    return m;
}

Isotopism Isotopism::identity(int t, int k, int n) {
    Isotopism g;
    g.rect_perm = identity_perm(t);
    g.row_perm = identity_perm(k);
    g.col_perm = identity_perm(n);
    g.sym_perms.assign(t, identity_perm(n));
    return g;
}

Isotopism compose(const Isotopism &f, const Isotopism &g) {
    Isotopism h;
    h.rect_perm = compose_perm(f.rect_perm, g.rect_perm);
    h.row_perm = compose_perm(f.row_perm, g.row_perm);
    h.col_perm = compose_perm(f.col_perm, g.col_perm);
    const Perm f_rect_inv = inverse_perm(f.rect_perm);
    h.sym_perms.resize(f.sym_perms.size());
    for (size_t p = 0; p < h.sym_perms.size(); ++p)
        h.sym_perms[p] = compose_perm(f.sym_perms[p], g.sym_perms[f_rect_inv[p]]);
    return h;
}

Isotopism inverse(const Isotopism &g) {
    Isotopism inv;
    inv.rect_perm = inverse_perm(g.rect_perm);
    inv.row_perm = inverse_perm(g.row_perm);
    inv.col_perm = inverse_perm(g.col_perm);
    inv.sym_perms.resize(g.sym_perms.size());
    for (size_t q = 0; q < g.sym_perms.size(); ++q)
        inv.sym_perms[q] = inverse_perm(g.sym_perms[g.rect_perm[q]]);
    return inv;
}

namespace {

// lexicographic compare of two rows, decreasing order helper
bool row_greater(std::span<const Symbol> a, std::span<const Symbol> b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool is_normalized(const MolrSet &m) {
    const int n = m.n(), k = m.k(), t = m.t();
    for (int p = 0; p < t; ++p)
        for (int j = 0; j < n; ++j)
            if (m.at(p, 0, j) != j) return false;
    if (k >= 2)
        for (int p = 0; p + 1 < t; ++p)
            if (!row_greater(m.rect(p).row(1), m.rect(p + 1).row(1))) return false;
    for (int i = 1; i + 1 < k; ++i)
        if (!row_greater(m.rect(0).row(i), m.rect(0).row(i + 1))) return false;
    return true;
}

NormalizedMolr normalize(const MolrSet &m) {
    const int n = m.n(), k = m.k(), t = m.t();

    // S1: shared column permutation makes rectangle 1's first row the
    // identity, then one symbol permutation per rectangle finishes the job.
    const Perm beta = m.rect(0).row_perm(0);
    const Perm beta_inv = inverse_perm(beta);
    std::vector<LatinRectangle> stage;
    std::vector<Perm> gammas(t);
    stage.reserve(t);
    for (int p = 0; p < t; ++p) {
        Perm v(n);
        for (int j = 0; j < n; ++j) v[j] = m.at(p, 0, beta_inv[j]);
        gammas[p] = inverse_perm(v);
        std::vector<Symbol> cells(k * n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j)
                cells[i * n + j] = gammas[p][m.at(p, i, beta_inv[j])];
        stage.emplace_back(k, n, std::move(cells));
    }

    // S2/S3: alternate row and rectangle sorting until stable.  Each pass
    // that changes the leading rectangle strictly increases its second row,
    // so the loop terminates.
    std::vector<int> row_src(k), rect_src(t);
    std::iota(row_src.begin(), row_src.end(), 0);
    std::iota(rect_src.begin(), rect_src.end(), 0);
    if (k >= 2) {
        for (;;) {
            std::stable_sort(row_src.begin() + 1, row_src.end(), [&](int a, int b) {
                return row_greater(stage[rect_src[0]].row(a), stage[rect_src[0]].row(b));
            });
            auto prev = rect_src;
            std::stable_sort(rect_src.begin(), rect_src.end(), [&](int a, int b) {
                return row_greater(stage[a].row(row_src[1]), stage[b].row(row_src[1]));
            });
            if (rect_src == prev) break;
        }
    }

    std::vector<LatinRectangle> out;
    out.reserve(t);
    for (int p = 0; p < t; ++p) {
        std::vector<Symbol> cells(k * n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j)
                cells[i * n + j] = stage[rect_src[p]].at(row_src[i], j);
        out.emplace_back(k, n, std::move(cells));
    }

    NormalizedMolr result;
    result.set = MolrSet::unchecked(n, k, std::move(out));
    assert(is_normalized(result.set));

    Isotopism &w = result.witness;
    w.col_perm = beta;
    w.row_perm.resize(k);
    for (int i = 0; i < k; ++i) w.row_perm[row_src[i]] = static_cast<Symbol>(i);
    w.rect_perm.resize(t);
    for (int p = 0; p < t; ++p) w.rect_perm[rect_src[p]] = static_cast<Symbol>(p);
    w.sym_perms.resize(t);
    for (int p = 0; p < t; ++p) w.sym_perms[p] = gammas[rect_src[p]];
    return result;
}

MolrSet conjugate_swap(const MolrSet &m, int coord) {
    const int n = m.n(), k = m.k(), t = m.t();
    if (coord < 0 || coord >= t)
        throw IndexOutOfRange("conjugate coordinate " + std::to_string(coord) +
                              " out of range for t=" + std::to_string(t));
    std::vector<LatinRectangle> out;
    out.reserve(t);
    for (int q = 0; q < t; ++q) {
        std::vector<Symbol> cells(k * n);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < n; ++j) {
                const Symbol c = m.at(coord, i, j);
                cells[i * n + c] = (q == coord) ? static_cast<Symbol>(j) : m.at(q, i, j);
            }
        }
        out.emplace_back(k, n, std::move(cells));
    }
    return MolrSet::unchecked(n, k, std::move(out));
}

}  // namespace molr
