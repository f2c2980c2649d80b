#include "molr/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace molr {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(int n) { return Bits((n + 63) / 64, 0); }
void bit_set(Bits &b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
bool bits_intersect(const Bits &a, const Bits &b) {
    for (size_t w = 0; w < a.size(); ++w)
        if (a[w] & b[w]) return true;
    return false;
}
bool bits_intersect3(const Bits &a, const Bits &b, const Bits &c) {
    for (size_t w = 0; w < a.size(); ++w)
        if (a[w] & b[w] & c[w]) return true;
    return false;
}

}  // namespace

IncidenceStructure partial_net(const MolrSet &m) {
    const int n = m.n(), k = m.k(), t = m.t();
    IncidenceStructure s;
    s.point_count = k * n;
    s.source_t = t;
    s.source_k = k;
    auto keep = [&](Line line) {
        if (line.points.size() >= 2) s.lines.push_back(std::move(line));
    };
    for (int i = 0; i < k; ++i) {
        Line line{LineTag::row};
        for (int j = 0; j < n; ++j) line.points.push_back(i * n + j);
        keep(std::move(line));
    }
    for (int j = 0; j < n; ++j) {
        Line line{LineTag::column};
        for (int i = 0; i < k; ++i) line.points.push_back(i * n + j);
        keep(std::move(line));
    }
    for (int r = 0; r < t; ++r)
        for (int sym = 0; sym < n; ++sym) {
            Line line{LineTag::symbol, r, sym};
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < n; ++j)
                    if (m.at(r, i, j) == sym) line.points.push_back(i * n + j);
            keep(std::move(line));
        }
    return s;
}

PlaneReport check_plane(const IncidenceStructure &s) {
    PlaneReport rep;
    const int np = s.point_count;
    const int nl = static_cast<int>(s.lines.size());

    rep.line_size_ok = true;
    for (const Line &l : s.lines)
        if (l.points.size() < 2) rep.line_size_ok = false;

    // pair coverage counts
    std::vector<std::uint8_t> cover(static_cast<size_t>(np) * np, 0);
    for (const Line &l : s.lines)
        for (size_t a = 0; a < l.points.size(); ++a)
            for (size_t b = a + 1; b < l.points.size(); ++b) {
                auto &c = cover[static_cast<size_t>(l.points[a]) * np + l.points[b]];
                if (c < 255) ++c;
            }
    rep.pairs_total = static_cast<std::uint64_t>(np) * (np - 1) / 2;
    for (int a = 0; a < np; ++a)
        for (int b = a + 1; b < np; ++b) {
            const auto c = cover[static_cast<size_t>(a) * np + b];
            if (c == 0)
                ++rep.pairs_uncovered;
            else if (c == 1)
                ++rep.pairs_once;
            else
                ++rep.pairs_multi;
        }
    rep.pair_coverage_ok = rep.pairs_uncovered == 0 && rep.pairs_multi == 0;

    std::vector<Bits> line_points(nl, make_bits(np));
    std::vector<Bits> point_lines(np, make_bits(nl));
    for (int li = 0; li < nl; ++li)
        for (int p : s.lines[li].points) {
            bit_set(line_points[li], p);
            bit_set(point_lines[p], li);
        }

    for (const Line &l : s.lines)
        if (static_cast<int>(l.points.size()) < np) rep.has_off_line_point = true;

    // four points with no three collinear
    auto collinear = [&](int a, int b, int c) {
        return bits_intersect3(point_lines[a], point_lines[b], point_lines[c]);
    };
    for (int a = 0; a < np && !rep.has_quadrilateral; ++a)
        for (int b = a + 1; b < np && !rep.has_quadrilateral; ++b)
            for (int c = b + 1; c < np && !rep.has_quadrilateral; ++c) {
                if (collinear(a, b, c)) continue;
                for (int d = c + 1; d < np; ++d)
                    if (!collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d)) {
                        rep.has_quadrilateral = true;
                        break;
                    }
            }

    rep.is_plane = rep.line_size_ok && rep.pair_coverage_ok && rep.has_off_line_point &&
                   rep.has_quadrilateral && np > 0;

    // Parallelity properties
    rep.p1 = nl > 0;
    for (int a = 0; a < nl && rep.p1; ++a)
        for (int b = a + 1; b < nl; ++b)
            if (!bits_intersect(line_points[a], line_points[b])) {
                rep.p1 = false;
                break;
            }
    bool all_exactly_one = true, all_at_least_two = true, any_pair = false;
    for (int li = 0; li < nl; ++li) {
        for (int p = 0; p < np; ++p) {
            if (point_lines[p][li >> 6] & (std::uint64_t{1} << (li & 63))) continue;
            any_pair = true;
            int misses = 0;
            for (int lj = 0; lj < nl; ++lj) {
                if (lj == li) continue;
                if (!(point_lines[p][lj >> 6] & (std::uint64_t{1} << (lj & 63)))) continue;
                if (!bits_intersect(line_points[li], line_points[lj])) ++misses;
            }
            if (misses != 1) all_exactly_one = false;
            if (misses < 2) all_at_least_two = false;
        }
    }
    rep.p2 = any_pair && all_exactly_one;
    rep.p3 = any_pair && all_at_least_two;

    if (rep.is_plane && rep.p1)
        rep.kind = PlaneKind::projective;
    else if (rep.is_plane && rep.p2)
        rep.kind = PlaneKind::affine;
    else if (rep.is_plane && rep.p3)
        rep.kind = PlaneKind::hyperbolic;
    else
        rep.kind = PlaneKind::none;
    return rep;
}

IncidenceStructure complete_to_projective(const MolrSet &m) {
    const int n = m.n();
    if (m.k() != n || m.t() != n - 1) throw NotAFullMolsSet();
    IncidenceStructure s = partial_net(m);
    const int row_pt = n * n, col_pt = n * n + 1, sym_pt0 = n * n + 2;
    for (Line &l : s.lines) {
        switch (l.tag) {
            case LineTag::row: l.points.push_back(row_pt); break;
            case LineTag::column: l.points.push_back(col_pt); break;
            case LineTag::symbol: l.points.push_back(sym_pt0 + l.rect); break;
            case LineTag::infinity: break;
        }
    }
    Line inf{LineTag::infinity};
    for (int p = row_pt; p < n * n + n + 1; ++p) inf.points.push_back(p);
    s.lines.push_back(std::move(inf));
    s.point_count = n * n + n + 1;
    s.source_t = -1;
    s.source_k = -1;
    return s;
}

SandlerResult sandler_delete(const IncidenceStructure &s, const std::vector<int> &selection) {
    for (int idx : selection)
        if (idx < 0 || idx >= static_cast<int>(s.lines.size()))
            throw IndexOutOfRange("line index " + std::to_string(idx));
    if (selection.size() == 1 && s.lines[selection[0]].tag == LineTag::row) throw LineIsARow();
    if (selection.size() == 3) {
        std::set<int> common(s.lines[selection[0]].points.begin(),
                             s.lines[selection[0]].points.end());
        for (int si = 1; si < 3; ++si) {
            std::set<int> next;
            for (int p : s.lines[selection[si]].points)
                if (common.count(p)) next.insert(p);
            common = std::move(next);
        }
        if (!common.empty()) throw ConcurrentLines();
    }

    std::vector<bool> line_deleted(s.lines.size(), false);
    for (int idx : selection) line_deleted[idx] = true;
    std::vector<bool> point_deleted(s.point_count, false);
    for (int idx : selection)
        for (int p : s.lines[idx].points) point_deleted[p] = true;

    std::vector<int> remap(s.point_count, -1);
    int next_id = 0;
    for (int p = 0; p < s.point_count; ++p)
        if (!point_deleted[p]) remap[p] = next_id++;

    SandlerResult result;
    result.residue.point_count = next_id;
    std::set<std::vector<int>> seen;
    for (size_t li = 0; li < s.lines.size(); ++li) {
        if (line_deleted[li]) continue;
        Line line = s.lines[li];
        std::vector<int> pts;
        for (int p : line.points)
            if (!point_deleted[p]) pts.push_back(remap[p]);
        if (pts.size() < 2) continue;
        if (!seen.insert(pts).second) continue;
        line.points = std::move(pts);
        result.residue.lines.push_back(std::move(line));
    }
    result.report = check_plane(result.residue);
    if (s.source_t >= 0 && s.source_k >= 0) result.curvature = s.source_t - s.source_k;
    return result;
}

EdgeColoredBigraph two_row_graph(const MolrSet &m) {
    if (m.k() != 2) throw WrongShape("the two-row graph needs k = 2");
    const int n = m.n(), t = m.t();
    EdgeColoredBigraph g;
    g.n = n;
    for (int r = 0; r < t; ++r) {
        const Perm bottom_inv = inverse_perm(m.rect(r).row_perm(1));
        Perm match(n);
        for (int i = 0; i < n; ++i) match[i] = bottom_inv[m.at(r, 0, i)];
        g.matchings.push_back(std::move(match));
    }
    g.matchings.push_back(identity_perm(n));
    return g;
}

LatinRectangle latin_square_of(const MolrSet &m) {
    const int n = m.n();
    if (m.k() != 2 || m.t() != n - 1)
        throw WrongShape("the square correspondence needs a 2 x n (n-1)-MOLR");
    const EdgeColoredBigraph g = two_row_graph(m);
    std::vector<Symbol> cells(static_cast<size_t>(n) * n, 0);
    for (int color = 0; color < n; ++color)
        for (int i = 0; i < n; ++i) cells[static_cast<size_t>(i) * n + g.matchings[color][i]] =
            static_cast<Symbol>(color);
    return validate_rectangle(n, n, cells);
}

MolrSet molr_of_latin_square(const LatinRectangle &square) {
    const int n = square.col_count();
    if (square.row_count() != n) throw WrongShape("need an n x n square");
    for (int i = 0; i < n; ++i)
        if (square.at(i, i) != n - 1)
            throw WrongShape("the reserved symbol must sit on the diagonal");
    std::vector<LatinRectangle> rects;
    for (int r = 0; r + 1 < n; ++r) {
        std::vector<Symbol> cells(2 * n);
        for (int j = 0; j < n; ++j) cells[j] = static_cast<Symbol>(j);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if (square.at(i, j) == r) cells[n + j] = static_cast<Symbol>(i);
        rects.emplace_back(2, n, std::move(cells));
    }
    return validate_molr(rects);
}

}  // namespace molr
