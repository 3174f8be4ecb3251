#include "stablecoh/poly_model.hpp"

#include <map>

#include "stablecoh/catalog.hpp"
#include "stablecoh/errors.hpp"
#include "stablecoh/stable_limits.hpp"

namespace stablecoh {

namespace {

bool is_elementary_abelian_2(const PermGroup& p) {
    std::size_t n = p.order();
    if (!p.is_prime_power_order(2)) return false;
    for (std::size_t i = 1; i < n; ++i)
        if (p.element(i).order() != 2) return false;
    return true;
}

/* values of the dual homomorphism f_k : P -> F_2 (f_k(gen_j) = delta_jk) on
 * every element, read off the generator words */
std::vector<std::uint8_t> dual_hom_values(const PermGroup& p, std::size_t k) {
    std::vector<std::uint8_t> vals(p.order());
    for (std::size_t i = 0; i < p.order(); ++i) {
        unsigned c = 0;
        for (auto letter : p.words()[i])
            if (letter == k) ++c;
        vals[i] = static_cast<std::uint8_t>(c & 1);
    }
    return vals;
}

}  // namespace

PolynomialModel::PolynomialModel(const PermGroup& p, const Resolution& r, std::size_t max_degree) {
    if (!is_elementary_abelian_2(p))
        throw UsageError("PolynomialModel: the group must be elementary abelian of exponent 2");
    if (!(r.group() == p) || r.prime() != 2)
        throw UsageError("PolynomialModel: resolution does not match the group at p = 2");
    if (max_degree > r.max_degree()) throw UsageError("PolynomialModel: degree exceeds resolution");

    nvars_ = static_cast<unsigned>(p.generators().size());
    if ((std::size_t(1) << nvars_) != p.order())
        throw UsageError("PolynomialModel: generators are not independent");

    /* degree-1 classes for the dual basis of Hom(P, F_2) */
    std::vector<CohomClass> xi(nvars_);
    for (unsigned k = 0; k < nvars_; ++k) xi[k] = degree_one_class(r, dual_hom_values(p, k));

    /* monomial images by iterated cup products, memoized per degree */
    std::map<Monomial, CohomClass> prev;
    prev[Monomial{}] = CohomClass{0, {1}};
    to_cohom_.push_back(FpMatrix::identity(1, 2));
    to_poly_.push_back(FpMatrix::identity(1, 2));

    for (std::size_t d = 1; d <= max_degree; ++d) {
        auto basis = monomial_basis(nvars_, d);
        std::map<Monomial, CohomClass> cur;
        FpMatrix b(r.rank(d), basis.size(), 2);
        for (std::size_t col = 0; col < basis.size(); ++col) {
            Monomial m = basis[col];
            unsigned v = 0;
            while (v < nvars_ && m[v] == 0) ++v;
            Monomial rest = m;
            --rest[v];
            CohomClass img = cup(r, xi[v], prev.at(rest));
            for (std::size_t row = 0; row < img.coeffs.size(); ++row)
                if (img.coeffs[row]) b.set(row, col, img.coeffs[row]);
            cur[m] = std::move(img);
        }
        if (b.rows() != b.cols() || rank(b) != b.rows())
            throw InternalCheckError("PolynomialModel: monomial images do not span degree " +
                                     std::to_string(d));
        auto inv = solve(b, FpMatrix::identity(b.rows(), 2));
        if (!inv) throw InternalCheckError("PolynomialModel: change of basis not invertible");
        to_cohom_.push_back(b);
        to_poly_.push_back(*inv);
        prev = std::move(cur);
    }
}

Poly2 PolynomialModel::to_polynomial(const CohomClass& x) const {
    const FpMatrix& m = cohomology_to_monomials(x.degree);
    return poly_from_coords(nvars_, x.degree, m.apply(x.coeffs));
}

CohomClass PolynomialModel::to_cohomology(const Poly2& f, std::size_t degree) const {
    return CohomClass{degree, monomials_to_cohomology(degree).apply(poly_coords(f, degree))};
}

Subspace PolynomialModel::transport(const Subspace& sub, std::size_t degree) const {
    const FpMatrix& m = cohomology_to_monomials(degree);
    FpMatrix rows(sub.dim(), m.rows(), 2);
    for (std::size_t r = 0; r < sub.dim(); ++r) rows.set_row(r, m.apply(sub.basis().row(r)));
    return Subspace::row_space(rows);
}

GroupHom matrix_to_automorphism(const PermGroup& p, const Mat2& g) {
    std::vector<Perm> images;
    for (unsigned j = 0; j < g.n(); ++j) {
        Perm img = Perm::identity(p.degree());
        for (unsigned i = 0; i < g.n(); ++i)
            if (g.at(j, i)) img = img * p.generators()[i];
        images.push_back(img);
    }
    return GroupHom(p, p, std::move(images));
}

InvariantCompareReport compare_invariants_vs_limit(unsigned n, const MatrixGroup2& h,
                                                   std::size_t max_degree) {
    if (n > 3) throw UsageError("compare_invariants_vs_limit: rank cap 3 exceeded");
    if (max_degree > 8) throw UsageError("compare_invariants_vs_limit: degree cap 8 exceeded");
    if (h.n() != n) throw UsageError("compare_invariants_vs_limit: rank mismatch");

    static const char* names[] = {"z2", "klein4", "z2_3"};
    PermGroup p = catalog_group(names[n - 1]);

    std::vector<CategoryMorphism> morphisms;
    for (const auto& g : h.elements())
        morphisms.push_back(CategoryMorphism{"P", "P", matrix_to_automorphism(p, g)});
    CategorySpec cat(2, CategoryMode::subgroup, {CategoryObject{"P", p}}, std::move(morphisms));

    StableContext ctx(cat, max_degree);
    PolynomialModel model(p, ctx.ambient_resolution(), max_degree);

    InvariantCompareReport rep;
    rep.max_degree = max_degree;
    rep.match = true;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        Subspace lim = model.transport(ctx.limit_basis(d), d);
        Subspace inv = invariant_basis(h, d);
        rep.limit_dims.push_back(lim.dim());
        rep.invariant_dims.push_back(inv.dim());
        if (!(lim == inv)) rep.match = false;
    }
    return rep;
}

}  // namespace stablecoh
