#include <doctest.h>

#include <set>

#include "molr/enumerate.hpp"
#include "molr/galois.hpp"
#include "molr/geometry.hpp"
#include "molr/symmetry.hpp"
#include "support/oracles.hpp"

using namespace molr;
using molr::testing::make_molr;

namespace {

// all-pairs incidence oracle: how many lines cover each point pair
std::vector<int> pair_cover_counts(const IncidenceStructure &s) {
    std::vector<int> cover(s.point_count * s.point_count, 0);
    for (const Line &l : s.lines)
        for (size_t a = 0; a < l.points.size(); ++a)
            for (size_t b = a + 1; b < l.points.size(); ++b)
                ++cover[l.points[a] * s.point_count + l.points[b]];
    return cover;
}

}  // namespace

TEST_CASE("partial net of the order-5 MOLS is the affine plane") {
    MolrSet m = galois_mols(5);
    IncidenceStructure net = partial_net(m);
    CHECK(net.point_count == 25);
    CHECK(net.lines.size() == 30);  // 5 rows + 5 columns + 4*5 symbol lines
    auto cover = pair_cover_counts(net);
    for (int a = 0; a < 25; ++a)
        for (int b = a + 1; b < 25; ++b) CHECK(cover[a * 25 + b] == 1);
    PlaneReport rep = check_plane(net);
    CHECK(rep.is_plane);
    CHECK(rep.p2);
    CHECK(rep.kind == PlaneKind::affine);
}

TEST_CASE("k=1 nets drop their singleton lines") {
    IncidenceStructure s = partial_net(make_molr({{{0, 1, 2}}}));
    CHECK(s.lines.size() == 1);
    CHECK(s.lines[0].tag == LineTag::row);
}

TEST_CASE("point collinearity count matches (n-1)+(k-1)+t(k-1)") {
    for (auto [n, t, k] : {std::tuple{5, 2, 3}, {6, 3, 4}, {7, 2, 2}, {4, 3, 4}}) {
        auto run = run_column(n, t, k, RegularityFilter::none, {.workers = 2});
        REQUIRE(!run.final_frontier.classes.empty());
        MolrSet m = run.final_frontier.classes.front().representative;
        IncidenceStructure net = partial_net(m);
        auto cover = pair_cover_counts(net);
        const int expect = (n - 1) + (k - 1) + t * (k - 1);
        for (int p = 0; p < net.point_count; ++p) {
            int collinear = 0;
            for (int q = 0; q < net.point_count; ++q) {
                if (p == q) continue;
                if (cover[std::min(p, q) * net.point_count + std::max(p, q)] > 0) ++collinear;
            }
            CHECK(collinear == expect);
        }
    }
}

TEST_CASE("projective completions for supported orders") {
    for (int n : {3, 4, 5, 7, 8}) {
        IncidenceStructure plane = complete_to_projective(galois_mols(n));
        CHECK(plane.point_count == n * n + n + 1);
        CHECK(static_cast<int>(plane.lines.size()) == n * n + n + 1);
        for (const Line &l : plane.lines) CHECK(static_cast<int>(l.points.size()) == n + 1);
        PlaneReport rep = check_plane(plane);
        CHECK(rep.is_plane);
        CHECK(rep.p1);
        CHECK(rep.kind == PlaneKind::projective);
    }
    CHECK_THROWS_AS(complete_to_projective(make_molr({{{0, 1, 2}, {1, 2, 0}}})),
                    NotAFullMolsSet);
}

TEST_CASE("a structure with an uncovered pair is not a plane") {
    IncidenceStructure s;
    s.point_count = 4;
    s.lines.push_back({LineTag::row, -1, -1, {0, 1}});
    s.lines.push_back({LineTag::row, -1, -1, {2, 3}});
    CHECK_FALSE(check_plane(s).is_plane);
}

TEST_CASE("sandler deletion from the order-4 projective plane is hyperbolic") {
    IncidenceStructure plane = complete_to_projective(galois_mols(4));
    // three lines through no common point
    int a = -1, b = -1, c = -1;
    for (size_t i = 0; i < plane.lines.size() && a < 0; ++i)
        for (size_t j = i + 1; j < plane.lines.size() && a < 0; ++j)
            for (size_t l = j + 1; l < plane.lines.size() && a < 0; ++l) {
                std::set<int> common(plane.lines[i].points.begin(), plane.lines[i].points.end());
                std::set<int> next;
                for (int p : plane.lines[j].points)
                    if (common.count(p)) next.insert(p);
                bool concurrent = false;
                for (int p : plane.lines[l].points)
                    if (next.count(p)) concurrent = true;
                if (!concurrent) {
                    a = i;
                    b = j;
                    c = l;
                }
            }
    REQUIRE(a >= 0);
    SandlerResult res = sandler_delete(plane, {a, b, c});
    CHECK(res.report.p3);
    CHECK(res.report.kind == PlaneKind::hyperbolic);
}

TEST_CASE("sandler: two crossing lines off an affine plane leave a hyperbolic one") {
    // equivalent to deleting three non-concurrent lines from the projective
    // closure: the two affine lines together with the line at infinity
    IncidenceStructure net = partial_net(galois_mols(5));
    int a = -1, b = -1;
    for (size_t i = 0; i < net.lines.size() && a < 0; ++i)
        for (size_t j = i + 1; j < net.lines.size(); ++j) {
            if (net.lines[i].tag == net.lines[j].tag) continue;
            std::set<int> pts(net.lines[i].points.begin(), net.lines[i].points.end());
            int meet = 0;
            for (int p : net.lines[j].points)
                if (pts.count(p)) ++meet;
            if (meet == 1) {
                a = i;
                b = j;
                break;
            }
        }
    REQUIRE(a >= 0);
    SandlerResult res = sandler_delete(net, {a, b});
    CHECK(res.report.p3);
    CHECK(res.report.kind == PlaneKind::hyperbolic);
}

TEST_CASE("two parallel lines off an affine plane leave a rectangle plane, not a classical one") {
    // the residue is the k x n truncation geometry: every pair covered, but a
    // point off a surviving row line has exactly one parallel through it
    IncidenceStructure net = partial_net(galois_mols(5));
    std::vector<int> rows;
    for (size_t i = 0; i < net.lines.size(); ++i)
        if (net.lines[i].tag == LineTag::row) rows.push_back(i);
    SandlerResult res = sandler_delete(net, {rows[0], rows[1]});
    CHECK(res.report.is_plane);
    CHECK(res.report.pair_coverage_ok);
    CHECK_FALSE(res.report.p3);
    CHECK(res.report.kind == PlaneKind::none);
}

TEST_CASE("sandler rejections") {
    IncidenceStructure net = partial_net(galois_mols(4));
    int row_line = -1;
    for (size_t i = 0; i < net.lines.size(); ++i)
        if (net.lines[i].tag == LineTag::row) row_line = i;
    CHECK_THROWS_AS(sandler_delete(net, {row_line}), LineIsARow);

    IncidenceStructure plane = complete_to_projective(galois_mols(4));
    // three lines through one point
    std::vector<int> through;
    for (size_t i = 0; i < plane.lines.size() && through.size() < 3; ++i)
        if (std::count(plane.lines[i].points.begin(), plane.lines[i].points.end(), 0))
            through.push_back(i);
    REQUIRE(through.size() == 3);
    CHECK_THROWS_AS(sandler_delete(plane, through), ConcurrentLines);
}

TEST_CASE("generalized sandler on a full-width rectangle plane reports curvature") {
    // 3x4 3-MOLR: t = n-1, every point pair covered
    auto run = run_column(4, 3, 3, RegularityFilter::none, {});
    REQUIRE(!run.final_frontier.classes.empty());
    MolrSet m = run.final_frontier.classes.front().representative;
    IncidenceStructure net = partial_net(m);
    int non_row = -1;
    for (size_t i = 0; i < net.lines.size(); ++i)
        if (net.lines[i].tag != LineTag::row) non_row = i;
    SandlerResult res = sandler_delete(net, {non_row});
    REQUIRE(res.curvature.has_value());
    CHECK(*res.curvature == m.t() - m.k());
}

TEST_CASE("two-row graph is (t+1)-regular with distinct matchings") {
    auto seeds = seed_classes(5, 3);
    for (const auto &rec : seeds.classes) {
        EdgeColoredBigraph g = two_row_graph(rec.representative);
        CHECK(static_cast<int>(g.matchings.size()) == rec.representative.t() + 1);
        std::set<std::pair<int, int>> edges;
        for (const Perm &match : g.matchings) {
            CHECK(is_permutation(match, g.n));
            for (int i = 0; i < g.n; ++i) CHECK(edges.insert({i, match[i]}).second);
        }
    }
    CHECK_THROWS_AS(two_row_graph(galois_mols(4)), WrongShape);
}

TEST_CASE("latin_square_of produces valid squares for all 2x4 3-MOLR classes") {
    auto seeds = seed_classes(4, 3);
    REQUIRE(seeds.classes.size() == 2);
    for (const auto &rec : seeds.classes) {
        LatinRectangle square = latin_square_of(rec.representative);
        CHECK(square.row_count() == 4);
        CHECK_NOTHROW(validate_rectangle(4, 4, square.cells()));
        for (int i = 0; i < 4; ++i) CHECK(square.at(i, i) == 3);  // reserved symbol
    }
}

TEST_CASE("round trip: square back to the same 2xn class") {
    for (int n : {4, 5}) {
        auto seeds = seed_classes(n, n - 1);
        for (const auto &rec : seeds.classes) {
            LatinRectangle square = latin_square_of(rec.representative);
            MolrSet back = molr_of_latin_square(square);
            CHECK(canonical_form(back).canonical_key == rec.canonical_key);
        }
    }
}

TEST_CASE("autotopisms of the source map to symmetries of the square") {
    auto seeds = seed_classes(4, 3);
    for (const auto &rec : seeds.classes) {
        ClassRecord full = canonical_form(rec.representative, {.harvest_generators = true});
        const MolrSet &m = full.representative;
        LatinRectangle square = latin_square_of(m);
        const int n = m.n();
        for (const Isotopism &g : full.aut_generators) {
            const Perm &beta = g.col_perm;
            // recolor: rectangle r -> its image slot, column color fixed
            auto recolor = [&](Symbol c) {
                return c == n - 1 ? static_cast<Symbol>(n - 1) : g.rect_perm[c];
            };
            if (g.row_perm[0] == 0) {
                // row-preserving: an autotopism of the square fixing n-1
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        CHECK(square.at(beta[i], beta[j]) == recolor(square.at(i, j)));
            } else {
                // row-swapping generators act as transpose-type symmetries
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        CHECK(square.at(beta[j], beta[i]) == recolor(square.at(i, j)));
            }
        }
    }
}
