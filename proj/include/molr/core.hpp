// core.hpp -- Latin rectangles, MOLR sets, validation and normalization.

#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace molr {

using Symbol = std::uint8_t;

// A permutation of {0..n-1}, stored as the image list: p[i] is the image of i.
using Perm = std::vector<Symbol>;

Perm identity_perm(int n);
Perm inverse_perm(const Perm &p);
// (f o g)(i) = f(g(i))
Perm compose_perm(const Perm &f, const Perm &g);
bool is_permutation(const Perm &p, int n);

struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct BadDimensions : Error {
    explicit BadDimensions(const std::string &msg) : Error(msg) {}
};

struct RowNotPermutation : Error {
    int row;
    explicit RowNotPermutation(int r);
};

struct ColumnRepeat : Error {
    int column;
    Symbol symbol;
    ColumnRepeat(int c, Symbol s);
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string &msg) : Error(msg) {}
};

struct NotOrthogonal : Error {
    int first, second;   // offending rectangle indices
    Symbol pair_a, pair_b;
    NotOrthogonal(int i, int j, Symbol a, Symbol b);
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string &msg) : Error(msg) {}
};

// A k x n array over symbols 0..n-1: every row a permutation, no symbol
// repeated within a column.  k = 1 is allowed.
class LatinRectangle {
  public:
    LatinRectangle() = default;
    LatinRectangle(int rows, int cols, std::vector<Symbol> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
        assert(static_cast<int>(cells_.size()) == rows_ * cols_);
    }

    int row_count() const { return rows_; }
    int col_count() const { return cols_; }

    Symbol at(int r, int c) const { return cells_[r * cols_ + c]; }
    Symbol &at(int r, int c) { return cells_[r * cols_ + c]; }

    std::span<const Symbol> row(int r) const {
        return {cells_.data() + r * cols_, static_cast<size_t>(cols_)};
    }
    Perm row_perm(int r) const {
        return Perm(cells_.begin() + r * cols_, cells_.begin() + (r + 1) * cols_);
    }

    const std::vector<Symbol> &cells() const { return cells_; }

    bool operator==(const LatinRectangle &) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Symbol> cells_;
};

// Checks the grid and returns it as a LatinRectangle.
// Throws BadDimensions, RowNotPermutation or ColumnRepeat.
LatinRectangle validate_rectangle(const std::vector<std::vector<int>> &grid);
LatinRectangle validate_rectangle(int rows, int cols, const std::vector<Symbol> &cells);

// True iff the kn superimposed ordered symbol pairs of a and b are all
// distinct.  Throws DimensionMismatch when shapes differ.
bool are_orthogonal(const LatinRectangle &a, const LatinRectangle &b);

// An ordered list of t pairwise orthogonal Latin rectangles of common shape.
class MolrSet {
  public:
    MolrSet() = default;

    int n() const { return n_; }
    int k() const { return k_; }
    int t() const { return static_cast<int>(rects_.size()); }

    const LatinRectangle &rect(int i) const { return rects_[i]; }
    const std::vector<LatinRectangle> &rects() const { return rects_; }

    Symbol at(int rect, int row, int col) const { return rects_[rect].at(row, col); }

    bool operator==(const MolrSet &) const = default;

    // Trusted constructor for internal code paths that produce sets whose
    // validity is guaranteed by construction; checked in debug builds.
    static MolrSet unchecked(int n, int k, std::vector<LatinRectangle> rects);

  private:
    friend MolrSet validate_molr(const std::vector<LatinRectangle> &);
    int n_ = 0;
    int k_ = 0;
    std::vector<LatinRectangle> rects_;
};

// Checks uniform dimensions and pairwise orthogonality.
// Throws BadDimensions, DimensionMismatch or NotOrthogonal(i, j, pair).
MolrSet validate_molr(const std::vector<LatinRectangle> &rects);

// One element of G_{n,k,t} = S_t x S_k x S_n x (S_n)^t.  rect_perm maps an
// input rectangle index to its output slot; row_perm and col_perm map old
// positions to new ones; sym_perms[p] relabels symbols of the rectangle that
// lands in output slot p.
struct Isotopism {
    Perm rect_perm;
    Perm row_perm;
    Perm col_perm;
    std::vector<Perm> sym_perms;

    static Isotopism identity(int t, int k, int n);
    bool operator==(const Isotopism &) const = default;
};

// Group operations; (f o g) acts as g first, then f.
Isotopism compose(const Isotopism &f, const Isotopism &g);
Isotopism inverse(const Isotopism &g);

struct NormalizedMolr {
    MolrSet set;
    Isotopism witness;   // maps the input onto `set`
};

// Brings a set into the normalized form used to seed the search:
//   (S1) the first row of every rectangle is the identity permutation,
//   (S2) second rows strictly lexicographically decreasing across rectangles,
//   (S3) rows 2..k of rectangle 1 strictly lexicographically decreasing.
// Strictness in S2/S3 is forced by orthogonality and Latinness; asserted.
NormalizedMolr normalize(const MolrSet &m);

bool is_normalized(const MolrSet &m);

// Conjugate in the orthogonal-array view with coordinates
// (row, col, s_1..s_t): exchanges the column coordinate with the symbol
// coordinate of rectangle `coord` (0 <= coord < t).  An involution; Latin
// and orthogonality properties are preserved.
MolrSet conjugate_swap(const MolrSet &m, int coord);

}  // namespace molr
