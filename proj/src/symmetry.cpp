#include "molr/symmetry.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <vector>
#include <numeric>
#include <unordered_set>

namespace molr {

MolrSet apply(const Isotopism &g, const MolrSet &m) {
    const int n = m.n(), k = m.k(), t = m.t();
    if (static_cast<int>(g.rect_perm.size()) != t ||
        static_cast<int>(g.row_perm.size()) != k ||
        static_cast<int>(g.col_perm.size()) != n ||
        static_cast<int>(g.sym_perms.size()) != t)
        throw DimensionMismatch("isotopism components do not match (t,k,n)");
    std::vector<LatinRectangle> out(t);
    for (int q = 0; q < t; ++q) {
        const int p = g.rect_perm[q];
        std::vector<Symbol> cells(k * n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j)
                cells[g.row_perm[i] * n + g.col_perm[j]] = g.sym_perms[p][m.at(q, i, j)];
        out[p] = LatinRectangle(k, n, std::move(cells));
    }
    return MolrSet::unchecked(n, k, std::move(out));
}

std::string molr_stream_key(const MolrSet &m) {
    std::string key;
    key.reserve(3 + m.t() * m.k() * m.n());
    key.push_back(static_cast<char>(m.n()));
    key.push_back(static_cast<char>(m.k()));
    key.push_back(static_cast<char>(m.t()));
    for (const auto &r : m.rects())
        key.append(reinterpret_cast<const char *>(r.cells().data()), r.cells().size());
    return key;
}

namespace {

constexpr Symbol kUnset = 0xFF;
constexpr size_t kNoMismatch = SIZE_MAX;

bool lex_less(const Symbol *a, const Symbol *b, int n) {
    return std::lexicographical_compare(a, a + n, b, b + n);
}

// sorted cycle lengths of a permutation
std::vector<int> cycle_type(const Perm &p) {
    std::vector<int> lengths;
    std::vector<bool> seen(p.size(), false);
    for (size_t start = 0; start < p.size(); ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (size_t x = start; !seen[x]; x = p[x]) {
            seen[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

// lexicographically smallest permutation with the given cycle type: cycles
// laid out in ascending length, each as the block a -> a+1 -> ... -> a
Perm min_perm_of_type(const std::vector<int> &type) {
    int n = 0;
    for (int len : type) n += len;
    Perm p(n);
    int base = 0;
    for (int len : type) {
        for (int i = 0; i + 1 < len; ++i) p[base + i] = static_cast<Symbol>(base + i + 1);
        p[base + len - 1] = static_cast<Symbol>(base);
        base += len;
    }
    return p;
}

struct CanonSearch {
    const MolrSet &m;
    const int n, k, t;
    const bool harvest;

    std::vector<Symbol> best;          // t*k*n stream, 0xFF-filled until first hit
    std::uint64_t ties = 0;
    std::vector<Perm> tie_rect_perms;  // rect component of every tying path
    std::vector<Isotopism> tie_gs;     // full isotopisms when harvesting

    // branch-local state
    int r0 = 0, p0 = 0, i1 = 0;
    Perm row_r0_inv, sigma;
    std::vector<Perm> sigmas;       // per row: row_i o row_r0^-1 of rect p0
    std::vector<Perm> rect_r0_inv;  // per rect: inverse of its row r0
    Perm gamma, gamma_inv;
    std::vector<Symbol> row1;
    size_t mismatch = kNoMismatch;
    // row 1 can never drop below the family floor (the largest minimal
    // conjugate among the rectangles' second-row types); tracked like
    // `mismatch` but in the other direction
    const Perm *floor_row = nullptr;
    size_t floor_break = kNoMismatch;
    // pigeonhole feasibility: every capped symbol still unassigned needs a
    // distinct unused value strictly below row1_head
    int capped_unset = 0;
    int small_free = 0;
    // head-dominance pruning: once gamma^-1(0) is fixed, the head of every
    // other slot-0 row and of every other rectangle's second row is the
    // gamma-image of a known symbol; none may exceed row 1's head, or the
    // leaf ordering checks are doomed
    std::vector<bool> head_target;
    std::vector<Symbol> armed_symbols;
    Symbol row1_head = 0;
    bool heads_armed = false;

    // leaf workspace
    std::vector<int> col_at, row_rest, slot_rest;
    std::vector<Symbol> conj;          // k rows of n (row r0 slot unused)
    std::vector<Perm> gamma_q;
    std::vector<Symbol> second_q;      // t rows of n
    std::vector<Symbol> buf;

    explicit CanonSearch(const MolrSet &set, bool harvest_gens)
        : m(set), n(set.n()), k(set.k()), t(set.t()), harvest(harvest_gens) {
        best.assign(static_cast<size_t>(t) * k * n, 0xFF);
        sigmas.assign(k, Perm());
        gamma.assign(n, kUnset);
        gamma_inv.assign(n, kUnset);
        row1.resize(n);
        head_target.assign(n, false);
        col_at.resize(n);
        conj.resize(static_cast<size_t>(k) * n);
        gamma_q.assign(t, Perm(n));
        second_q.resize(static_cast<size_t>(t) * n);
        buf.resize(best.size());
    }

    void run() {
        // A normalized input is itself a candidate stream; seeding the bound
        // with it makes the first descent a pure pruning pass.
        if (is_normalized(m)) {
            size_t pos = 0;
            for (const auto &r : m.rects())
                for (Symbol s : r.cells()) best[pos++] = s;
        }
        std::map<std::vector<int>, Perm> floor_of_type;
        auto type_floor = [&](const Perm &p) -> const Perm & {
            auto [it, fresh] = floor_of_type.try_emplace(cycle_type(p));
            if (fresh) it->second = min_perm_of_type(it->first);
            return it->second;
        };
        for (r0 = 0; r0 < k; ++r0) {
            rect_r0_inv.clear();
            for (int q = 0; q < t; ++q)
                rect_r0_inv.push_back(inverse_perm(m.rect(q).row_perm(r0)));
            for (i1 = 0; i1 < k; ++i1) {
                if (i1 == r0) continue;
                // the emitted second row dominates every rectangle's second
                // row, and each is conjugate to its own tau, so the largest
                // per-type floor bounds the whole (r0, i1) family
                const Perm *family_floor = nullptr;
                for (int q = 0; q < t; ++q) {
                    const Perm tau =
                        compose_perm(m.rect(q).row_perm(i1), rect_r0_inv[q]);
                    const Perm &fl = type_floor(tau);
                    if (!family_floor ||
                        std::lexicographical_compare(family_floor->begin(), family_floor->end(),
                                                     fl.begin(), fl.end()))
                        family_floor = &fl;
                }
                if (std::lexicographical_compare(best.begin() + n, best.begin() + 2 * n,
                                                 family_floor->begin(), family_floor->end()))
                    continue;
                floor_row = family_floor;
                floor_break = kNoMismatch;
                for (p0 = 0; p0 < t; ++p0) {
                    row_r0_inv = rect_r0_inv[p0];
                    for (int i = 0; i < k; ++i)
                        sigmas[i] = compose_perm(m.rect(p0).row_perm(i), row_r0_inv);
                    sigma = sigmas[i1];
                    const Perm &fl = type_floor(sigma);
                    if (std::lexicographical_compare(best.begin() + n, best.begin() + 2 * n,
                                                     fl.begin(), fl.end()))
                        continue;
                    dfs(0);
                }
            }
        }
        assert(ties > 0);
    }

    void dfs(int j) {
        if (j == n) {
            leaf();
            return;
        }
        const Symbol x = gamma_inv[j];
        if (x != kUnset) {
            emit(j, x);
        } else {
            for (Symbol cand = 0; cand < n; ++cand) {
                if (gamma[cand] != kUnset) continue;
                if (heads_armed && head_target[cand] && j > row1_head) continue;
                if (!bind(cand, static_cast<Symbol>(j))) continue;
                gamma_inv[j] = cand;
                emit(j, cand);
                unbind(cand, static_cast<Symbol>(j));
                gamma_inv[j] = kUnset;
            }
        }
    }

    // gamma assignment with pigeonhole bookkeeping; false = infeasible
    bool bind(Symbol sym, Symbol val) {
        gamma[sym] = val;
        if (heads_armed) {
            if (head_target[sym]) --capped_unset;
            if (val < row1_head) --small_free;
            if (capped_unset > small_free) {
                unbind(sym, val);
                return false;
            }
        }
        return true;
    }

    void unbind(Symbol sym, Symbol val) {
        gamma[sym] = kUnset;
        if (heads_armed) {
            if (head_target[sym]) ++capped_unset;
            if (val < row1_head) ++small_free;
        }
    }

    void emit(int j, Symbol x) {
        const Symbol s = sigma[x];
        const Symbol v = gamma[s];
        if (v != kUnset) {
            advance(j, v);
            return;
        }
        const bool capped = heads_armed && head_target[s];
        for (Symbol cand = 0; cand < n; ++cand) {
            if (gamma_inv[cand] != kUnset) continue;
            if (capped && cand > row1_head) break;
            if (mismatch == kNoMismatch && cand > best[n + j]) break;
            if (!bind(s, cand)) continue;
            gamma_inv[cand] = s;
            advance(j, cand);
            unbind(s, cand);
            gamma_inv[cand] = kUnset;
        }
    }

    void advance(int j, Symbol v) {
        bool floor_broke_here = false;
        if (floor_break == kNoMismatch) {
            const Symbol f = (*floor_row)[j];
            if (v < f) return;
            if (v > f) {
                floor_break = j;
                floor_broke_here = true;
            }
        }
        auto restore_floor = [&] {
            if (floor_broke_here && floor_break == static_cast<size_t>(j))
                floor_break = kNoMismatch;
        };
        bool set_here = false;
        if (mismatch == kNoMismatch) {
            const Symbol b = best[n + j];
            if (v > b) {
                restore_floor();
                return;
            }
            if (v < b) {
                mismatch = n + j;
                set_here = true;
            }
        }
        row1[j] = v;
        bool armed_here = false;
        if (j == 0 && (k > 2 || t > 1)) {
            row1_head = v;
            const Symbol x0 = gamma_inv[0];
            const Symbol c0 = row_r0_inv[x0];
            armed_symbols.clear();
            for (int i = 0; i < k; ++i)
                if (i != r0 && i != i1) armed_symbols.push_back(sigmas[i][x0]);
            for (int q = 0; q < t; ++q) {
                if (q == p0) continue;
                // the other rectangle's second-row head is the gamma-image
                // of slot 0's r0-row symbol over the matching column
                const Symbol s_q = m.rect(q).at(i1, c0);
                armed_symbols.push_back(m.rect(p0).at(r0, rect_r0_inv[q][s_q]));
            }
            capped_unset = 0;
            for (Symbol s : armed_symbols) {
                if (!head_target[s] && gamma[s] == kUnset) ++capped_unset;
                head_target[s] = true;
            }
            // value 0 went to gamma_inv[0]; capped symbols need values
            // strictly below the head, of which row1_head - 1 remain
            small_free = row1_head - 1;
            heads_armed = true;
            armed_here = true;
            if (capped_unset > small_free) {
                for (Symbol s : armed_symbols) head_target[s] = false;
                heads_armed = false;
                if (set_here && mismatch == static_cast<size_t>(n + j)) mismatch = kNoMismatch;
                restore_floor();
                return;
            }
        }
        dfs(j + 1);
        if (armed_here) {
            for (Symbol s : armed_symbols) head_target[s] = false;
            heads_armed = false;
        }
        // A replacement deeper in the subtree resets mismatch to "equal";
        // only restore what this frame itself set.
        if (set_here && mismatch == static_cast<size_t>(n + j)) mismatch = kNoMismatch;
        restore_floor();
    }

    void leaf() {
        const LatinRectangle &a0 = m.rect(p0);
        for (int j = 0; j < n; ++j) col_at[j] = row_r0_inv[gamma_inv[j]];

        // slot-0 images of all non-first rows under the forced symbol map
        for (int i = 0; i < k; ++i) {
            if (i == r0) continue;
            Symbol *row = conj.data() + static_cast<size_t>(i) * n;
            for (int j = 0; j < n; ++j) row[j] = gamma[a0.at(i, col_at[j])];
        }
        assert(std::equal(row1.begin(), row1.end(), conj.data() + static_cast<size_t>(i1) * n));

        // i1's image must be the strict maximum, else the same column
        // permutation is handled by the branch that picks the true maximum.
        const Symbol *r1 = conj.data() + static_cast<size_t>(i1) * n;
        row_rest.clear();
        for (int i = 0; i < k; ++i) {
            if (i == r0 || i == i1) continue;
            if (!lex_less(conj.data() + static_cast<size_t>(i) * n, r1, n)) return;
            row_rest.push_back(i);
        }
        std::sort(row_rest.begin(), row_rest.end(), [&](int a, int b) {
            return lex_less(conj.data() + static_cast<size_t>(b) * n,
                            conj.data() + static_cast<size_t>(a) * n, n);
        });

        // forced symbol maps and second rows of the other rectangles;
        // the chosen first slot must carry the largest second row.
        slot_rest.clear();
        for (int q = 0; q < t; ++q) {
            if (q == p0) continue;
            const LatinRectangle &aq = m.rect(q);
            Perm &gq = gamma_q[q];
            for (int j = 0; j < n; ++j) gq[aq.at(r0, col_at[j])] = static_cast<Symbol>(j);
            Symbol *sec = second_q.data() + static_cast<size_t>(q) * n;
            for (int j = 0; j < n; ++j) sec[j] = gq[aq.at(i1, col_at[j])];
            if (!lex_less(sec, r1, n)) return;
            slot_rest.push_back(q);
        }
        std::sort(slot_rest.begin(), slot_rest.end(), [&](int a, int b) {
            return lex_less(second_q.data() + static_cast<size_t>(b) * n,
                            second_q.data() + static_cast<size_t>(a) * n, n);
        });

        // assemble the full candidate stream
        Symbol *out = buf.data();
        for (int j = 0; j < n; ++j) out[j] = static_cast<Symbol>(j);
        std::memcpy(out + n, r1, n);
        for (int idx = 0; idx < static_cast<int>(row_rest.size()); ++idx)
            std::memcpy(out + (2 + idx) * n,
                        conj.data() + static_cast<size_t>(row_rest[idx]) * n, n);
        for (int s = 0; s < static_cast<int>(slot_rest.size()); ++s) {
            const int q = slot_rest[s];
            const LatinRectangle &aq = m.rect(q);
            const Perm &gq = gamma_q[q];
            Symbol *block = out + static_cast<size_t>(s + 1) * k * n;
            for (int j = 0; j < n; ++j) block[j] = static_cast<Symbol>(j);
            std::memcpy(block + n, second_q.data() + static_cast<size_t>(q) * n, n);
            for (int idx = 0; idx < static_cast<int>(row_rest.size()); ++idx) {
                Symbol *row = block + (2 + idx) * n;
                const int i = row_rest[idx];
                for (int j = 0; j < n; ++j) row[j] = gq[aq.at(i, col_at[j])];
            }
        }

        bool replaces;
        if (mismatch != kNoMismatch) {
            replaces = true;
        } else {
            const int cmp_from = 2 * n;
            const size_t len = buf.size();
            size_t pos = cmp_from;
            while (pos < len && buf[pos] == best[pos]) ++pos;
            if (pos == len) {
                record_tie();
                return;
            }
            if (buf[pos] > best[pos]) return;
            replaces = true;
        }
        if (replaces) {
            best = buf;
            ties = 0;
            tie_rect_perms.clear();
            tie_gs.clear();
            mismatch = kNoMismatch;
            record_tie();
        }
    }

    void record_tie() {
        ++ties;
        Perm rect_dst(t);
        rect_dst[p0] = 0;
        for (int s = 0; s < static_cast<int>(slot_rest.size()); ++s)
            rect_dst[slot_rest[s]] = static_cast<Symbol>(s + 1);
        if (harvest) {
            Isotopism g;
            g.rect_perm = rect_dst;
            g.row_perm.resize(k);
            g.row_perm[r0] = 0;
            g.row_perm[i1] = 1;
            for (int idx = 0; idx < static_cast<int>(row_rest.size()); ++idx)
                g.row_perm[row_rest[idx]] = static_cast<Symbol>(idx + 2);
            g.col_perm.resize(n);
            for (int j = 0; j < n; ++j) g.col_perm[col_at[j]] = static_cast<Symbol>(j);
            g.sym_perms.resize(t);
            g.sym_perms[0] = gamma;
            for (int s = 0; s < static_cast<int>(slot_rest.size()); ++s)
                g.sym_perms[s + 1] = gamma_q[slot_rest[s]];
            tie_gs.push_back(std::move(g));
        }
        tie_rect_perms.push_back(std::move(rect_dst));
    }
};

// Level-major maximization over the same path space as CanonSearch: the
// stream holds levels 1..k-1 only, each level listing every slot's row.
struct GenFormSearch {
    const MolrSet &m;
    const int n, k, t;

    std::vector<Symbol> best;   // (k-1)*t*n bytes, 0x00-filled until first hit
    bool found = false;

    int r0 = 0, p0 = 0, i1 = 0;
    Perm row_r0_inv, sigma;
    std::vector<Perm> sigmas;
    std::vector<Perm> rect_r0_inv;
    Perm gamma, gamma_inv;
    size_t mismatch = kNoMismatch;
    std::vector<Symbol> row1;
    std::vector<bool> head_target;
    std::vector<Symbol> armed_symbols;
    Symbol row1_head = 0;
    bool heads_armed = false;

    std::vector<int> col_at, row_rest, slot_rest;
    std::vector<Symbol> conj;
    std::vector<Perm> gamma_q;
    std::vector<Symbol> second_q;
    std::vector<Symbol> buf;

    explicit GenFormSearch(const MolrSet &set)
        : m(set), n(set.n()), k(set.k()), t(set.t()) {
        best.assign(static_cast<size_t>(k - 1) * t * n, 0x00);
        sigmas.assign(k, Perm());
        gamma.assign(n, kUnset);
        gamma_inv.assign(n, kUnset);
        row1.resize(n);
        head_target.assign(n, false);
        col_at.resize(n);
        conj.resize(static_cast<size_t>(k) * n);
        gamma_q.assign(t, Perm(n));
        second_q.resize(static_cast<size_t>(t) * n);
        buf.resize(best.size());
    }

    void seed_with(const MolrSet &candidate) {
        size_t pos = 0;
        for (int i = 1; i < k; ++i)
            for (int q = 0; q < t; ++q)
                for (int j = 0; j < n; ++j) best[pos++] = candidate.at(q, i, j);
        found = true;
    }

    void run() {
        if (is_normalized(m)) seed_with(m);
        for (r0 = 0; r0 < k; ++r0) {
            rect_r0_inv.clear();
            for (int q = 0; q < t; ++q)
                rect_r0_inv.push_back(inverse_perm(m.rect(q).row_perm(r0)));
            for (p0 = 0; p0 < t; ++p0) {
                row_r0_inv = rect_r0_inv[p0];
                for (int i = 0; i < k; ++i)
                    sigmas[i] = compose_perm(m.rect(p0).row_perm(i), row_r0_inv);
                for (i1 = 0; i1 < k; ++i1) {
                    if (i1 == r0) continue;
                    sigma = sigmas[i1];
                    dfs(0);
                }
            }
        }
        assert(found);
    }

    void dfs(int j) {
        if (j == n) {
            leaf();
            return;
        }
        const Symbol x = gamma_inv[j];
        if (x != kUnset) {
            emit(j, x);
        } else {
            for (Symbol cand = 0; cand < n; ++cand) {
                if (gamma[cand] != kUnset) continue;
                if (heads_armed && head_target[cand] && j > row1_head) continue;
                gamma[cand] = static_cast<Symbol>(j);
                gamma_inv[j] = cand;
                emit(j, cand);
                gamma[cand] = kUnset;
                gamma_inv[j] = kUnset;
            }
        }
    }

    void emit(int j, Symbol x) {
        const Symbol s = sigma[x];
        const Symbol v = gamma[s];
        if (v != kUnset) {
            advance(j, v);
            return;
        }
        const int cap = (heads_armed && head_target[s]) ? row1_head : n - 1;
        for (int cand = cap; cand >= 0; --cand) {
            if (gamma_inv[cand] != kUnset) continue;
            if (mismatch == kNoMismatch && cand < best[j]) break;
            gamma[s] = static_cast<Symbol>(cand);
            gamma_inv[cand] = s;
            advance(j, static_cast<Symbol>(cand));
            gamma[s] = kUnset;
            gamma_inv[cand] = kUnset;
        }
    }

    void advance(int j, Symbol v) {
        bool set_here = false;
        if (mismatch == kNoMismatch) {
            const Symbol b = best[j];
            if (v < b) return;
            if (v > b) {
                mismatch = j;
                set_here = true;
            }
        }
        row1[j] = v;
        bool armed_here = false;
        if (j == 0 && (k > 2 || t > 1)) {
            row1_head = v;
            const Symbol x0 = gamma_inv[0];
            const Symbol c0 = row_r0_inv[x0];
            armed_symbols.clear();
            for (int i = 0; i < k; ++i)
                if (i != r0 && i != i1) armed_symbols.push_back(sigmas[i][x0]);
            for (int q = 0; q < t; ++q) {
                if (q == p0) continue;
                const Symbol s_q = m.rect(q).at(i1, c0);
                armed_symbols.push_back(m.rect(p0).at(r0, rect_r0_inv[q][s_q]));
            }
            for (Symbol s : armed_symbols) head_target[s] = true;
            heads_armed = true;
            armed_here = true;
        }
        dfs(j + 1);
        if (armed_here) {
            for (Symbol s : armed_symbols) head_target[s] = false;
            heads_armed = false;
        }
        if (set_here && mismatch == static_cast<size_t>(j)) mismatch = kNoMismatch;
    }

    void leaf() {
        const LatinRectangle &a0 = m.rect(p0);
        for (int j = 0; j < n; ++j) col_at[j] = row_r0_inv[gamma_inv[j]];
        for (int i = 0; i < k; ++i) {
            if (i == r0) continue;
            Symbol *row = conj.data() + static_cast<size_t>(i) * n;
            for (int j = 0; j < n; ++j) row[j] = gamma[a0.at(i, col_at[j])];
        }
        const Symbol *r1 = conj.data() + static_cast<size_t>(i1) * n;
        row_rest.clear();
        for (int i = 0; i < k; ++i) {
            if (i == r0 || i == i1) continue;
            if (!lex_less(conj.data() + static_cast<size_t>(i) * n, r1, n)) return;
            row_rest.push_back(i);
        }
        std::sort(row_rest.begin(), row_rest.end(), [&](int a, int b) {
            return lex_less(conj.data() + static_cast<size_t>(b) * n,
                            conj.data() + static_cast<size_t>(a) * n, n);
        });
        slot_rest.clear();
        for (int q = 0; q < t; ++q) {
            if (q == p0) continue;
            const LatinRectangle &aq = m.rect(q);
            Perm &gq = gamma_q[q];
            for (int j = 0; j < n; ++j) gq[aq.at(r0, col_at[j])] = static_cast<Symbol>(j);
            Symbol *sec = second_q.data() + static_cast<size_t>(q) * n;
            for (int j = 0; j < n; ++j) sec[j] = gq[aq.at(i1, col_at[j])];
            if (!lex_less(sec, r1, n)) return;
            slot_rest.push_back(q);
        }
        std::sort(slot_rest.begin(), slot_rest.end(), [&](int a, int b) {
            return lex_less(second_q.data() + static_cast<size_t>(b) * n,
                            second_q.data() + static_cast<size_t>(a) * n, n);
        });

        // assemble the level-major stream: per level, every slot's row
        std::vector<int> row_src;
        row_src.push_back(i1);
        row_src.insert(row_src.end(), row_rest.begin(), row_rest.end());
        Symbol *out = buf.data();
        for (int li = 0; li < k - 1; ++li) {
            const int i = row_src[li];
            Symbol *level = out + static_cast<size_t>(li) * t * n;
            std::memcpy(level, conj.data() + static_cast<size_t>(i) * n, n);
            for (int s = 0; s < static_cast<int>(slot_rest.size()); ++s) {
                const int q = slot_rest[s];
                const LatinRectangle &aq = m.rect(q);
                const Perm &gq = gamma_q[q];
                Symbol *row = level + static_cast<size_t>(s + 1) * n;
                for (int j = 0; j < n; ++j) row[j] = gq[aq.at(i, col_at[j])];
            }
        }

        bool replaces;
        if (mismatch != kNoMismatch) {
            replaces = true;
        } else {
            size_t pos = n;
            const size_t len = buf.size();
            while (pos < len && buf[pos] == best[pos]) ++pos;
            if (pos == len) return;   // same form reached again
            if (buf[pos] < best[pos]) return;
            replaces = true;
        }
        if (replaces) {
            best = buf;
            found = true;
            mismatch = kNoMismatch;
        }
    }
};

MolrSet decode_stream(int n, int k, int t, const std::vector<Symbol> &stream) {
    std::vector<LatinRectangle> rects;
    rects.reserve(t);
    for (int p = 0; p < t; ++p)
        rects.emplace_back(k, n,
                           std::vector<Symbol>(stream.begin() + static_cast<size_t>(p) * k * n,
                                               stream.begin() + static_cast<size_t>(p + 1) * k * n));
    return MolrSet::unchecked(n, k, std::move(rects));
}

std::vector<std::vector<int>> orbits_from_unions(int t, const std::vector<Perm> &rect_perms) {
    std::vector<int> parent(t);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    if (!rect_perms.empty()) {
        const Perm base_inv = inverse_perm(rect_perms.front());
        for (const Perm &rp : rect_perms) {
            const Perm h = compose_perm(rp, base_inv);
            for (int q = 0; q < t; ++q) {
                int a = find(q), b = find(h[q]);
                if (a != b) parent[a] = b;
            }
        }
    }
    std::map<int, std::vector<int>> blocks;
    for (int q = 0; q < t; ++q) blocks[find(q)].push_back(q);
    std::vector<std::vector<int>> orbits;
    for (auto &[root, block] : blocks) orbits.push_back(std::move(block));
    return orbits;
}

std::string isotopism_key(const Isotopism &g) {
    std::string key;
    auto put = [&key](const Perm &p) {
        key.append(reinterpret_cast<const char *>(p.data()), p.size());
        key.push_back('|');
    };
    put(g.rect_perm);
    put(g.row_perm);
    put(g.col_perm);
    for (const Perm &s : g.sym_perms) put(s);
    return key;
}

std::vector<Isotopism> closure(const std::vector<Isotopism> &gens, int t, int k, int n,
                               std::uint64_t limit) {
    std::vector<Isotopism> elements{Isotopism::identity(t, k, n)};
    std::unordered_set<std::string> seen{isotopism_key(elements[0])};
    for (size_t head = 0; head < elements.size(); ++head) {
        for (const Isotopism &g : gens) {
            Isotopism h = compose(g, elements[head]);
            std::string key = isotopism_key(h);
            if (seen.insert(std::move(key)).second) {
                elements.push_back(std::move(h));
                if (elements.size() > limit) return elements;
            }
        }
    }
    return elements;
}

// Reduce the full harvested group to a small generating set.
std::vector<Isotopism> reduce_generators(const std::vector<Isotopism> &all,
                                         std::uint64_t order, int t, int k, int n) {
    std::vector<Isotopism> gens;
    std::uint64_t have = 1;
    std::unordered_set<std::string> known{isotopism_key(Isotopism::identity(t, k, n))};
    for (const Isotopism &h : all) {
        if (have == order) break;
        if (known.count(isotopism_key(h))) continue;
        gens.push_back(h);
        auto elems = closure(gens, t, k, n, order);
        known.clear();
        for (const auto &e : elems) known.insert(isotopism_key(e));
        have = elems.size();
    }
    assert(have == order);
    return gens;
}

ClassRecord trivial_single_row_class(const MolrSet &m, bool harvest) {
    const int n = m.n(), t = m.t();
    std::vector<LatinRectangle> rects(t, LatinRectangle(1, n, identity_perm(n)));
    ClassRecord rec;
    rec.representative = MolrSet::unchecked(n, 1, std::move(rects));
    rec.canonical_key = molr_stream_key(rec.representative);
    rec.aut_order = 1;
    for (int i = 2; i <= t; ++i) rec.aut_order *= i;
    for (int i = 2; i <= n; ++i) rec.aut_order *= i;
    rec.rect_orbits = {std::vector<int>(t)};
    std::iota(rec.rect_orbits[0].begin(), rec.rect_orbits[0].end(), 0);
    if (harvest) {
        auto add = [&](Perm rect, Perm col) {
            Isotopism g;
            g.rect_perm = std::move(rect);
            g.row_perm = identity_perm(1);
            g.sym_perms.assign(t, col);
            g.col_perm = std::move(col);
            rec.aut_generators.push_back(std::move(g));
        };
        if (t >= 2) {
            Perm swap01 = identity_perm(t);
            std::swap(swap01[0], swap01[1]);
            add(std::move(swap01), identity_perm(n));
            Perm cyc(t);
            for (int i = 0; i < t; ++i) cyc[i] = static_cast<Symbol>((i + 1) % t);
            add(std::move(cyc), identity_perm(n));
        }
        if (n >= 2) {
            Perm swap01 = identity_perm(n);
            std::swap(swap01[0], swap01[1]);
            add(identity_perm(t), std::move(swap01));
            Perm cyc(n);
            for (int i = 0; i < n; ++i) cyc[i] = static_cast<Symbol>((i + 1) % n);
            add(identity_perm(t), std::move(cyc));
        }
    }
    return rec;
}

}  // namespace

ClassRecord canonical_form(const MolrSet &m, const CanonOptions &opts) {
    if (m.k() == 1) return trivial_single_row_class(m, opts.harvest_generators);

    CanonSearch search(m, opts.harvest_generators);
    search.run();

    ClassRecord rec;
    rec.representative = decode_stream(m.n(), m.k(), m.t(), search.best);
    rec.canonical_key = molr_stream_key(rec.representative);
    rec.aut_order = search.ties;
    rec.rect_orbits = orbits_from_unions(m.t(), search.tie_rect_perms);
    if (opts.harvest_generators) {
        // Aut(representative) = { g_i o g_1^-1 } over the tying paths.
        const Isotopism base_inv = inverse(search.tie_gs.front());
        std::vector<Isotopism> all;
        all.reserve(search.tie_gs.size());
        for (const Isotopism &g : search.tie_gs) all.push_back(compose(g, base_inv));
        rec.aut_generators = reduce_generators(all, rec.aut_order, m.t(), m.k(), m.n());
    }
    return rec;
}

MolrSet generation_form(const MolrSet &m) {
    const int n = m.n(), k = m.k(), t = m.t();
    if (k == 1) {
        std::vector<LatinRectangle> rects(t, LatinRectangle(1, n, identity_perm(n)));
        return MolrSet::unchecked(n, 1, std::move(rects));
    }
    GenFormSearch search(m);
    search.run();
    std::vector<LatinRectangle> rects;
    rects.reserve(t);
    for (int q = 0; q < t; ++q) {
        std::vector<Symbol> cells(static_cast<size_t>(k) * n);
        for (int j = 0; j < n; ++j) cells[j] = static_cast<Symbol>(j);
        for (int i = 1; i < k; ++i)
            std::copy_n(search.best.data() + (static_cast<size_t>(i - 1) * t + q) * n, n,
                        cells.begin() + static_cast<size_t>(i) * n);
        rects.emplace_back(k, n, std::move(cells));
    }
    return MolrSet::unchecked(n, k, std::move(rects));
}

std::string paratopism_key(const MolrSet &m) {
    std::string min_key = canonical_form(m).canonical_key;
    for (int c = 0; c < m.t(); ++c) {
        std::string key = canonical_form(conjugate_swap(m, c)).canonical_key;
        if (key < min_key) min_key = std::move(key);
    }
    return min_key;
}

bool is_homogeneous(const MolrSet &m) {
    if (m.t() <= 1) return true;
    std::string first;
    for (int p = 0; p < m.t(); ++p) {
        MolrSet single = MolrSet::unchecked(m.n(), m.k(), {m.rect(p)});
        std::string key = canonical_form(single).canonical_key;
        if (p == 0)
            first = std::move(key);
        else if (key != first)
            return false;
    }
    return true;
}

bool is_transitive(const ClassRecord &rec) { return rec.rect_orbits.size() == 1; }

MolrSet rect_orbit_of(const ClassRecord &rec, const Isotopism &g, int start) {
    const MolrSet &rep = rec.representative;
    if (start < 0 || start >= rep.t())
        throw IndexOutOfRange("start rectangle " + std::to_string(start));
    if (apply(g, rep) != rep) throw NotAnAutotopism();
    std::vector<LatinRectangle> orbit;
    int idx = start;
    do {
        orbit.push_back(rep.rect(idx));
        idx = g.rect_perm[idx];
    } while (idx != start);
    return validate_molr(orbit);
}

std::vector<Isotopism> aut_group_elements(const ClassRecord &rec) {
    if (rec.aut_generators.empty()) {
        assert(rec.aut_order == 1);
        return {Isotopism::identity(rec.representative.t(), rec.representative.k(),
                                    rec.representative.n())};
    }
    auto elems = closure(rec.aut_generators, rec.representative.t(), rec.representative.k(),
                         rec.representative.n(), rec.aut_order);
    assert(elems.size() == rec.aut_order);
    return elems;
}

bool is_orbit_of(const MolrSet &a, const MolrSet &b) {
    if (a.n() != b.n() || a.k() != b.k())
        throw DimensionMismatch("orbit membership needs matching (k,n)");
    if (a.t() > b.t()) return false;
    const std::string target = canonical_form(a).canonical_key;
    ClassRecord brec = canonical_form(b, {.harvest_generators = true});
    const MolrSet &rep = brec.representative;
    std::unordered_set<std::string> tested;
    for (const Isotopism &h : aut_group_elements(brec)) {
        for (int start = 0; start < rep.t(); ++start) {
            // orbit length = cycle length of start under the rect permutation
            int len = 1;
            for (int idx = h.rect_perm[start]; idx != start; idx = h.rect_perm[idx]) ++len;
            if (len != a.t()) continue;
            std::string subset(rep.t(), '0');
            int idx = start;
            do {
                subset[idx] = '1';
                idx = h.rect_perm[idx];
            } while (idx != start);
            if (!tested.insert(subset).second) continue;
            MolrSet orbit = rect_orbit_of(brec, h, start);
            if (canonical_form(orbit).canonical_key == target) return true;
        }
    }
    return false;
}

}  // namespace molr
