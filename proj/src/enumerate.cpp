#include "molr/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace molr {

namespace {

using Mask = std::uint32_t;

struct ExtensionGenerator {
    const MolrSet &parent;
    const int n, k, t;
    const Mask full;
    std::vector<Mask> col_free;      // t*n: symbols still free in each column
    std::vector<Mask> pair_used;     // (q1*t+q2)*n + a: symbols b with pair (a,b) taken
    std::vector<bool> same_as_prev;  // identical parent content => order new rows
    std::vector<Perm> rows;
    std::vector<Mask> avail;         // t*n scratch: per-rect column masks
    const std::function<void(const std::vector<Perm> &)> *emit = nullptr;

    explicit ExtensionGenerator(const MolrSet &p)
        : parent(p), n(p.n()), k(p.k()), t(p.t()), full((Mask{1} << n) - 1) {
        col_free.assign(static_cast<size_t>(t) * n, full);
        for (int q = 0; q < t; ++q)
            for (int i = 0; i < k; ++i)
                for (int c = 0; c < n; ++c)
                    col_free[q * n + c] &= ~(Mask{1} << parent.at(q, i, c));
        pair_used.assign(static_cast<size_t>(t) * t * n, 0);
        for (int q1 = 0; q1 < t; ++q1)
            for (int q2 = q1 + 1; q2 < t; ++q2)
                for (int i = 0; i < k; ++i)
                    for (int c = 0; c < n; ++c)
                        pair_used[(static_cast<size_t>(q1) * t + q2) * n +
                                  parent.at(q1, i, c)] |= Mask{1} << parent.at(q2, i, c);
        same_as_prev.assign(t, false);
        for (int q = 1; q < t; ++q)
            same_as_prev[q] = parent.rect(q).cells() == parent.rect(q - 1).cells();
        rows.assign(t, Perm(n, 0));
        avail.resize(static_cast<size_t>(t) * n);
    }

    void run(const std::function<void(const std::vector<Perm> &)> &out) {
        emit = &out;
        rect_dfs(0);
    }

    // restart below rectangle 0 with its new row pinned, used to split one
    // parent's work across threads
    void run_with_first(const Perm &w0, const std::function<void(const std::vector<Perm> &)> &out) {
        emit = &out;
        rows[0] = w0;
        rect_dfs(1);
    }

    void rect_dfs(int q) {
        if (q == t) {
            (*emit)(rows);
            return;
        }
        Mask *av = avail.data() + static_cast<size_t>(q) * n;
        for (int c = 0; c < n; ++c) {
            Mask m = col_free[q * n + c];
            for (int q1 = 0; q1 < q; ++q1)
                m &= ~pair_used[(static_cast<size_t>(q1) * t + q) * n + rows[q1][c]];
            if (m == 0) return;
            av[c] = m;
        }
        // identical parent rectangles are interchangeable: order their rows
        if (same_as_prev[q]) {
            av[0] &= (Mask{1} << rows[q - 1][0]) - 1;
            if (av[0] == 0) return;
        }
        row_dfs(q, 0, 0, 0);
    }

    void row_dfs(int q, int placed, Mask cols_done, Mask syms_done) {
        if (placed == n) {
            rect_dfs(q + 1);
            return;
        }
        // most-constrained column first
        const Mask *av = avail.data() + static_cast<size_t>(q) * n;
        int best_c = -1, best_count = n + 1;
        for (int c = 0; c < n; ++c) {
            if (cols_done & (Mask{1} << c)) continue;
            const int cnt = std::popcount(av[c] & ~syms_done);
            if (cnt < best_count) {
                best_count = cnt;
                best_c = c;
                if (cnt <= 1) break;
            }
        }
        if (best_count == 0) return;
        Mask m = av[best_c] & ~syms_done;
        while (m) {
            const int s = std::countr_zero(m);
            m &= m - 1;
            rows[q][best_c] = static_cast<Symbol>(s);
            row_dfs(q, placed + 1, cols_done | (Mask{1} << best_c),
                    syms_done | (Mask{1} << s));
        }
    }
};

using DedupMap = std::unordered_map<std::string, ClassRecord>;

MolrSet drop_last_row(const MolrSet &m) {
    const int n = m.n(), k = m.k();
    std::vector<LatinRectangle> rects;
    rects.reserve(m.t());
    for (const auto &r : m.rects())
        rects.emplace_back(k - 1, n,
                           std::vector<Symbol>(r.cells().begin(),
                                               r.cells().begin() + static_cast<size_t>(k - 1) * n));
    return MolrSet::unchecked(n, k - 1, std::move(rects));
}

// The stepwise classifications follow the canonical construction chain: the
// parent of a class is the bottom-row deletion of its generation form.
std::string construction_parent_key(const MolrSet &rep) {
    return canonical_form(drop_last_row(generation_form(rep))).canonical_key;
}

MolrSet extended_set(const MolrSet &parent, const std::vector<Perm> &new_rows) {
    const int n = parent.n(), k = parent.k(), t = parent.t();
    std::vector<LatinRectangle> rects;
    rects.reserve(t);
    for (int q = 0; q < t; ++q) {
        std::vector<Symbol> cells;
        cells.reserve(static_cast<size_t>(k + 1) * n);
        cells.insert(cells.end(), parent.rect(q).cells().begin(), parent.rect(q).cells().end());
        cells.insert(cells.end(), new_rows[q].begin(), new_rows[q].end());
        rects.emplace_back(k + 1, n, std::move(cells));
    }
    return MolrSet::unchecked(n, k + 1, std::move(rects));
}

// Runs fn(worker_id) on `workers` threads (or inline for one).
void parallel_run(int workers, const std::function<void(int)> &fn) {
    if (workers <= 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(fn, w);
    for (auto &th : threads) th.join();
}

ExtensionFrontier finalize_level(const ExtensionFrontier &parents, int k,
                                 std::vector<DedupMap> worker_maps, RegularityFilter filter,
                                 const EnumerateOptions &opts) {
    DedupMap merged;
    for (auto &map : worker_maps) {
        if (merged.empty())
            merged = std::move(map);
        else
            merged.merge(map);
    }
    worker_maps.clear();
    if (merged.size() > opts.budget) throw BudgetExceeded(k, merged.size());

    // stepwise lookups go against the previous level; an absent key means
    // the construction parent is not stepwise
    std::unordered_map<std::string, std::pair<bool, bool>> stepwise_of_parent;
    stepwise_of_parent.reserve(parents.classes.size());
    for (const ClassRecord &rec : parents.classes)
        stepwise_of_parent.emplace(rec.canonical_key,
                                   std::make_pair(rec.flags.stepwise_homogeneous,
                                                  rec.flags.stepwise_transitive));

    ExtensionFrontier out;
    out.n = parents.n;
    out.k = k;
    out.t = parents.t;
    out.filter = filter;
    out.classes.reserve(merged.size());
    for (auto &[key, rec] : merged) out.classes.push_back(std::move(rec));

    std::atomic<size_t> next{0};
    parallel_run(opts.workers, [&](int) {
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= out.classes.size()) break;
            ClassRecord &rec = out.classes[idx];
            rec.flags.homogeneous = is_homogeneous(rec.representative);
            rec.flags.transitive = is_transitive(rec);
            bool parent_sh = false, parent_st = false;
            if (k == 2) {
                parent_sh = parent_st = true;
            } else if (rec.flags.homogeneous || rec.flags.transitive) {
                auto it = stepwise_of_parent.find(construction_parent_key(rec.representative));
                if (it != stepwise_of_parent.end()) {
                    parent_sh = it->second.first;
                    parent_st = it->second.second;
                }
            }
            rec.flags.stepwise_homogeneous = rec.flags.homogeneous && parent_sh;
            rec.flags.stepwise_transitive = rec.flags.transitive && parent_st;
            rec.flags.classified = true;
        }
    });

    if (filter != RegularityFilter::none) {
        std::erase_if(out.classes, [&](const ClassRecord &rec) {
            return filter == RegularityFilter::stepwise_homogeneous
                       ? !rec.flags.stepwise_homogeneous
                       : !rec.flags.stepwise_transitive;
        });
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const ClassRecord &a, const ClassRecord &b) {
                  return a.canonical_key < b.canonical_key;
              });
    return out;
}

}  // namespace

void for_each_extension(const MolrSet &parent,
                        const std::function<void(const std::vector<Perm> &)> &emit) {
    if (parent.k() >= parent.n()) throw BadDimensions("cannot extend: k = n already");
    ExtensionGenerator gen(parent);
    gen.run(emit);
}

namespace {

// candidate new rows of rectangle 0 alone, for work splitting
std::vector<Perm> first_rect_rows(const MolrSet &parent) {
    std::vector<Perm> rows;
    std::vector<LatinRectangle> one{parent.rect(0)};
    MolrSet view = MolrSet::unchecked(parent.n(), parent.k(), std::move(one));
    ExtensionGenerator single(view);
    single.run([&](const std::vector<Perm> &r) { rows.push_back(r[0]); });
    return rows;
}

}  // namespace

ExtensionFrontier trivial_frontier(int n, int t) {
    std::vector<LatinRectangle> rects(t, LatinRectangle(1, n, identity_perm(n)));
    ClassRecord rec = canonical_form(MolrSet::unchecked(n, 1, std::move(rects)));
    rec.flags = {.homogeneous = true,
                 .transitive = true,
                 .stepwise_homogeneous = true,
                 .stepwise_transitive = true,
                 .classified = true};
    ExtensionFrontier f;
    f.n = n;
    f.k = 1;
    f.t = t;
    f.classes.push_back(std::move(rec));
    return f;
}

ExtensionFrontier extend_frontier(const ExtensionFrontier &f, RegularityFilter filter,
                                  const EnumerateOptions &opts) {
    if (f.k >= f.n) throw BadDimensions("cannot extend: k = n already");
    const int workers = std::max(1, opts.workers);

    // with few parents, split each parent's search by rectangle 0's new row
    struct Task {
        size_t parent;
        int first_row;   // -1: run the whole parent
    };
    std::vector<Task> tasks;
    std::vector<std::vector<Perm>> split_rows(f.classes.size());
    if (workers > 1 && static_cast<int>(f.classes.size()) < 4 * workers) {
        for (size_t p = 0; p < f.classes.size(); ++p) {
            split_rows[p] = first_rect_rows(f.classes[p].representative);
            for (size_t r = 0; r < split_rows[p].size(); ++r)
                tasks.push_back({p, static_cast<int>(r)});
        }
    } else {
        for (size_t p = 0; p < f.classes.size(); ++p) tasks.push_back({p, -1});
    }

    std::vector<DedupMap> maps(workers);
    std::atomic<size_t> next{0};
    std::atomic<std::uint64_t> fresh_total{0};
    std::atomic<bool> over_budget{false};

    parallel_run(workers, [&](int w) {
        DedupMap &map = maps[w];
        for (;;) {
            if (over_budget.load(std::memory_order_relaxed)) break;
            const size_t idx = next.fetch_add(1);
            if (idx >= tasks.size()) break;
            const Task &task = tasks[idx];
            const MolrSet &parent = f.classes[task.parent].representative;
            auto sink = [&](const std::vector<Perm> &rows) {
                ClassRecord rec = canonical_form(extended_set(parent, rows));
                auto [it, is_new] = map.try_emplace(rec.canonical_key);
                if (is_new) {
                    it->second = std::move(rec);
                    if (fresh_total.fetch_add(1) + 1 > opts.budget)
                        over_budget.store(true, std::memory_order_relaxed);
                }
            };
            if (task.first_row < 0) {
                for_each_extension(parent, sink);
            } else {
                ExtensionGenerator gen(parent);
                gen.run_with_first(split_rows[task.parent][task.first_row], sink);
            }
        }
    });
    if (over_budget.load())
        throw BudgetExceeded(f.k + 1, fresh_total.load());
    return finalize_level(f, f.k + 1, std::move(maps), filter, opts);
}

ExtensionFrontier seed_classes(int n, int t, const EnumerateOptions &opts) {
    return extend_frontier(trivial_frontier(n, t), RegularityFilter::none, opts);
}

void classify_frontier(ExtensionFrontier &f, int workers) {
    std::atomic<size_t> next{0};
    parallel_run(std::max(1, workers), [&](int) {
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= f.classes.size()) break;
            ClassRecord &rec = f.classes[idx];
            rec.flags.homogeneous = is_homogeneous(rec.representative);
            rec.flags.transitive = is_transitive(rec);
            rec.flags.classified = true;
        }
    });
}

CellCounts tabulate_frontier(const ExtensionFrontier &f, bool with_paratopism, int workers) {
    CellCounts cell;
    cell.n = f.n;
    cell.t = f.t;
    cell.k = f.k;
    for (const ClassRecord &rec : f.classes) {
        assert(rec.flags.classified);
        auto bump = [&](PopulationStats &pop) {
            ++pop.total;
            ++pop.aut_histogram[rec.aut_order];
        };
        bump(cell.all);
        if (rec.flags.homogeneous) bump(cell.homogeneous);
        if (rec.flags.transitive) bump(cell.transitive);
        if (rec.flags.stepwise_homogeneous) bump(cell.stepwise_homogeneous);
        if (rec.flags.stepwise_transitive) bump(cell.stepwise_transitive);
    }
    if (with_paratopism) {
        std::vector<std::string> keys(f.classes.size());
        std::atomic<size_t> next{0};
        parallel_run(std::max(1, workers), [&](int) {
            for (;;) {
                const size_t idx = next.fetch_add(1);
                if (idx >= f.classes.size()) break;
                keys[idx] = paratopism_key(f.classes[idx].representative);
            }
        });
        std::unordered_set<std::string> distinct(keys.begin(), keys.end());
        cell.paratopism_classes = distinct.size();
    }
    return cell;
}

ColumnRun run_column(int n, int t, int k_max, RegularityFilter filter,
                     const EnumerateOptions &opts, bool with_paratopism,
                     const std::function<void(const ExtensionFrontier &)> &on_level) {
    ColumnRun run;
    run.table.n = n;
    run.table.t = t;
    ExtensionFrontier frontier = (k_max == 1) ? trivial_frontier(n, t)
                                              : seed_classes(n, t, opts);
    for (;;) {
        run.table.per_k.push_back(tabulate_frontier(frontier, with_paratopism, opts.workers));
        if (on_level) on_level(frontier);
        if (frontier.k >= k_max) break;
        frontier = extend_frontier(frontier, filter, opts);
    }
    run.final_frontier = std::move(frontier);
    return run;
}

CellCounts enumerate_cell(int n, int t, int k, RegularityFilter filter,
                          const EnumerateOptions &opts, bool with_paratopism) {
    ColumnRun run = run_column(n, t, k, filter, opts, false);
    CellCounts cell = tabulate_frontier(run.final_frontier, with_paratopism, opts.workers);
    return cell;
}

}  // namespace molr
