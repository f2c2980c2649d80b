#include "molr/galois.hpp"

#include "molr/symmetry.hpp"

#include <algorithm>
#include <array>

namespace molr {

namespace {

struct FieldSpec {
    int order, prime, degree;
    // irreducible polynomial as coefficient list c_0..c_degree
    std::array<int, 4> poly;
};

// GF(4): y^2+y+1, GF(8): y^3+y+1, GF(9): y^2+1
const FieldSpec kSpecs[] = {
    {2, 2, 1, {0, 1, 0, 0}},
    {3, 3, 1, {0, 1, 0, 0}},
    {4, 2, 2, {1, 1, 1, 0}},
    {5, 5, 1, {0, 1, 0, 0}},
    {7, 7, 1, {0, 1, 0, 0}},
    {8, 2, 3, {1, 1, 0, 1}},
    {9, 3, 2, {1, 0, 1, 0}},
};

std::vector<int> digits_of(int value, int p, int len) {
    std::vector<int> d(len);
    for (int i = 0; i < len; ++i) {
        d[i] = value % p;
        value /= p;
    }
    return d;
}

int value_of(const std::vector<int> &d, int p) {
    int v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

int poly_mul(int a, int b, const FieldSpec &spec) {
    const int p = spec.prime, r = spec.degree;
    auto da = digits_of(a, p, r), db = digits_of(b, p, r);
    std::vector<int> prod(2 * r - 1, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    // reduce modulo the irreducible polynomial
    for (int deg = 2 * r - 2; deg >= r; --deg) {
        const int coef = prod[deg];
        if (coef == 0) continue;
        prod[deg] = 0;
        for (int i = 0; i < r; ++i)
            prod[deg - r + i] = ((prod[deg - r + i] - coef * spec.poly[i]) % p + p * p) % p;
    }
    prod.resize(r);
    return value_of(prod, p);
}

}  // namespace

FieldTable field(int n) {
    const FieldSpec *spec = nullptr;
    for (const auto &s : kSpecs)
        if (s.order == n) spec = &s;
    if (!spec) throw NotAPrimePower(n);

    FieldTable f;
    f.order = n;
    f.add.resize(n * n);
    f.mul.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto da = digits_of(a, spec->prime, spec->degree);
            auto db = digits_of(b, spec->prime, spec->degree);
            for (int i = 0; i < spec->degree; ++i) da[i] = (da[i] + db[i]) % spec->prime;
            f.add[a * n + b] = static_cast<Symbol>(value_of(da, spec->prime));
            f.mul[a * n + b] = static_cast<Symbol>(poly_mul(a, b, *spec));
        }

    for (int g = 1; g < n; ++g) {
        int e = g, order = 1;
        while (e != 1) {
            e = f.mul_of(e, g);
            ++order;
        }
        if (order == n - 1) {
            f.generator = static_cast<Symbol>(g);
            break;
        }
    }

    f.powers.resize(n);
    f.powers[0] = 0;
    Symbol acc = 1;
    for (int i = 1; i < n; ++i) {
        f.powers[i] = acc;
        acc = f.mul_of(acc, f.generator);
    }
    assert(is_permutation(f.powers, n));
    return f;
}

MolrSet galois_mols(int n) {
    if (n < 3) throw NTooSmall(n);
    const FieldTable f = field(n);
    std::vector<LatinRectangle> squares;
    squares.reserve(n - 1);
    for (int k = 1; k < n; ++k) {
        std::vector<Symbol> cells(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                cells[i * n + j] = f.add_of(f.powers[i], f.mul_of(f.powers[k], f.powers[j]));
        squares.emplace_back(n, n, std::move(cells));
    }
    return validate_molr(squares);
}

Isotopism galois_cyclic_autotopism(int n) {
    if (n < 3) throw NTooSmall(n);
    const int t = n - 1;
    Isotopism g;
    g.row_perm = identity_perm(n);
    g.col_perm.resize(n);
    g.col_perm[0] = 0;
    for (int j = 1; j < n; ++j) g.col_perm[j] = static_cast<Symbol>(j == n - 1 ? 1 : j + 1);
    g.rect_perm.resize(t);
    for (int q = 0; q < t; ++q) g.rect_perm[q] = static_cast<Symbol>((q + t - 1) % t);
    g.sym_perms.assign(t, identity_perm(n));
    return g;
}

std::vector<MolrSet> stepwise_truncation(const MolrSet &m) {
    const int n = m.n(), t = m.t();
    if (m.k() != n || t != n - 1)
        throw NotGaloisConstruction();
    const Isotopism g = galois_cyclic_autotopism(n);
    if (apply(g, m) != m) throw NotGaloisConstruction();

    std::vector<MolrSet> chain;
    for (int k = n; k >= 2; --k) {
        std::vector<LatinRectangle> rects;
        rects.reserve(t);
        for (int q = 0; q < t; ++q) {
            std::vector<Symbol> cells(m.rect(q).cells().begin(),
                                      m.rect(q).cells().begin() + static_cast<size_t>(k) * n);
            rects.emplace_back(k, n, std::move(cells));
        }
        MolrSet member = MolrSet::unchecked(n, k, std::move(rects));
        // the restriction of g (identity on rows) must still cycle the squares
        Isotopism gk = g;
        gk.row_perm = identity_perm(k);
        if (apply(gk, member) != member) throw NotGaloisConstruction();
        chain.push_back(std::move(member));
    }
    return chain;
}

}  // namespace molr
