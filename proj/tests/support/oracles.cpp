#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace molr::testing {

bool scan_valid_rectangle(const std::vector<std::vector<int>> &grid) {
    if (grid.empty() || grid[0].empty()) return false;
    const int k = static_cast<int>(grid.size());
    const int n = static_cast<int>(grid[0].size());
    if (k > n) return false;
    for (const auto &row : grid) {
        if (static_cast<int>(row.size()) != n) return false;
        for (int s = 0; s < n; ++s)
            if (std::count(row.begin(), row.end(), s) != 1) return false;
    }
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < n; ++s) {
            int occurrences = 0;
            for (int r = 0; r < k; ++r)
                if (grid[r][c] == s) ++occurrences;
            if (occurrences > 1) return false;
        }
    return true;
}

bool pairs_distinct(const LatinRectangle &a, const LatinRectangle &b) {
    std::set<std::pair<int, int>> pairs;
    for (int r = 0; r < a.row_count(); ++r)
        for (int c = 0; c < a.col_count(); ++c)
            pairs.insert({a.at(r, c), b.at(r, c)});
    return static_cast<int>(pairs.size()) == a.row_count() * a.col_count();
}

std::uint64_t brute_force_aut_order(const MolrSet &m) {
    const int n = m.n(), k = m.k(), t = m.t();
    std::vector<int> rect_perm(t), row_perm(k), col_perm(n);
    std::iota(rect_perm.begin(), rect_perm.end(), 0);
    std::uint64_t count = 0;
    constexpr int kUnset = -1;
    do {
        std::iota(row_perm.begin(), row_perm.end(), 0);
        do {
            std::iota(col_perm.begin(), col_perm.end(), 0);
            do {
                bool ok = true;
                for (int q = 0; q < t && ok; ++q) {
                    const int p = rect_perm[q];
                    std::vector<int> gamma(n, kUnset), used(n, 0);
                    for (int i = 0; i < k && ok; ++i)
                        for (int j = 0; j < n && ok; ++j) {
                            const int v = m.at(q, i, j);
                            const int w = m.at(p, row_perm[i], col_perm[j]);
                            if (gamma[v] == kUnset) {
                                if (used[w]) ok = false;
                                gamma[v] = w;
                                used[w] = 1;
                            } else if (gamma[v] != w) {
                                ok = false;
                            }
                        }
                }
                if (ok) ++count;
            } while (std::next_permutation(col_perm.begin(), col_perm.end()));
        } while (std::next_permutation(row_perm.begin(), row_perm.end()));
    } while (std::next_permutation(rect_perm.begin(), rect_perm.end()));
    return count;
}

namespace {

struct NaiveCounter {
    int n, t, k;
    std::vector<std::vector<std::vector<int>>> rects;  // [q][row][col]
    std::vector<std::vector<int>> all_perms;
    std::uint64_t count = 0;

    bool row_fits(int q, const std::vector<int> &row) {
        const int filled = static_cast<int>(rects[q].size());
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < filled; ++r)
                if (rects[q][r][c] == row[c]) return false;
        return true;
    }

    void fill(int level, int q) {
        if (q == t) {
            if (level + 1 == k)
                ++count;
            else
                fill(level + 1, 0);
            return;
        }
        for (const auto &row : all_perms) {
            if (!row_fits(q, row)) continue;
            rects[q].push_back(row);
            if (pairs_ok_after_push(q))
                fill(level, q + 1);
            rects[q].pop_back();
        }
    }

    bool pairs_ok_after_push(int q) {
        // check all pairs involving q at the freshly pushed level
        const int level = static_cast<int>(rects[q].size()) - 1;
        for (int q2 = 0; q2 < t; ++q2) {
            if (q2 == q || static_cast<int>(rects[q2].size()) <= level) continue;
            std::set<std::pair<int, int>> pairs;
            for (int r = 0; r <= level; ++r)
                for (int c = 0; c < n; ++c)
                    if (!pairs.insert({rects[q2][r][c], rects[q][r][c]}).second) return false;
        }
        return true;
    }
};

}  // namespace

std::uint64_t count_identity_first_row_molr(int n, int t, int k) {
    NaiveCounter counter;
    counter.n = n;
    counter.t = t;
    counter.k = k;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> identity = perm;
    do {
        counter.all_perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    counter.rects.assign(t, {identity});
    if (k == 1) return 1;
    counter.fill(1, 0);
    return counter.count;
}

Isotopism random_isotopism(std::mt19937 &rng, int t, int k, int n) {
    Isotopism g = Isotopism::identity(t, k, n);
    std::shuffle(g.rect_perm.begin(), g.rect_perm.end(), rng);
    std::shuffle(g.row_perm.begin(), g.row_perm.end(), rng);
    std::shuffle(g.col_perm.begin(), g.col_perm.end(), rng);
    for (auto &perm : g.sym_perms) std::shuffle(perm.begin(), perm.end(), rng);
    return g;
}

MolrSet make_molr(const std::vector<std::vector<std::vector<int>>> &rects) {
    std::vector<LatinRectangle> out;
    for (const auto &grid : rects) out.push_back(validate_rectangle(grid));
    return validate_molr(out);
}

}  // namespace molr::testing
