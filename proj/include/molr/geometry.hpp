// geometry.hpp -- partial nets, plane-axiom checking, projective completion,
// Sandler deletions and the two-row graph correspondence.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "molr/core.hpp"

namespace molr {

struct NotAFullMolsSet : Error {
    NotAFullMolsSet() : Error("projective completion needs an (n-1)-MOLS") {}
};
struct ConcurrentLines : Error {
    ConcurrentLines() : Error("the chosen lines pass through a common point") {}
};
struct LineIsARow : Error {
    LineIsARow() : Error("the chosen line corresponds to a row") {}
};
struct WrongShape : Error {
    explicit WrongShape(const std::string &msg) : Error(msg) {}
};

enum class LineTag { row, column, symbol, infinity };

struct Line {
    LineTag tag;
    int rect = -1;    // for symbol lines
    int symbol = -1;  // for symbol lines
    std::vector<int> points;   // sorted ascending
};

struct IncidenceStructure {
    int point_count = 0;
    std::vector<Line> lines;
    // shape of the generating MOLR, when there is one (used for the
    // curvature report); -1 otherwise
    int source_t = -1;
    int source_k = -1;
};

// The kn cells as points; k row lines, n column lines and t*n symbol lines.
// Lines of size < 2 (the k = 1 column and symbol lines) are dropped.
IncidenceStructure partial_net(const MolrSet &m);

enum class PlaneKind { projective, affine, hyperbolic, none };

struct PlaneReport {
    bool line_size_ok = false;        // every line has >= 2 points
    bool pair_coverage_ok = false;    // every point pair on exactly one line
    bool has_off_line_point = false;  // some point misses some line
    bool has_quadrilateral = false;   // four points, no three collinear
    bool is_plane = false;
    bool p1 = false, p2 = false, p3 = false;
    PlaneKind kind = PlaneKind::none;
    std::uint64_t pairs_total = 0;
    std::uint64_t pairs_once = 0;
    std::uint64_t pairs_uncovered = 0;
    std::uint64_t pairs_multi = 0;
};

PlaneReport check_plane(const IncidenceStructure &s);

// Adds one ideal point per parallel class (rows, columns, each square) and
// the line at infinity through them; the result is a projective plane of
// order n.  Throws NotAFullMolsSet unless t = n-1 and k = n.
IncidenceStructure complete_to_projective(const MolrSet &m);

struct SandlerResult {
    IncidenceStructure residue;
    PlaneReport report;
    std::optional<int> curvature;   // t - k when the input came from a MOLR
};

// Deletes the selected lines together with their points, prunes lines left
// with < 2 points and drops duplicates.  A selection of three lines on a
// projective input must not be concurrent; a single selected line must not
// be a row line.
SandlerResult sandler_delete(const IncidenceStructure &s, const std::vector<int> &selection);

// The two rows of a 2 x n t-MOLR as a (t+1)-regular edge-colored bipartite
// graph: matchings[r][i] = j when rectangle r holds the same symbol at
// (0, i) and (1, j); matchings[t] is the column matching (the identity).
struct EdgeColoredBigraph {
    int n = 0;
    std::vector<Perm> matchings;
};

EdgeColoredBigraph two_row_graph(const MolrSet &m);

// For t = n-1 the matchings properly edge-color K_{n,n}: the resulting Latin
// square holds r where rectangle r's matching runs, and the reserved symbol
// n-1 on the column matching (the diagonal).
LatinRectangle latin_square_of(const MolrSet &m);

// Inverse of latin_square_of on its image: rebuilds the normalized
// 2 x n (n-1)-MOLR from a square whose diagonal carries the reserved symbol.
MolrSet molr_of_latin_square(const LatinRectangle &square);

}  // namespace molr
