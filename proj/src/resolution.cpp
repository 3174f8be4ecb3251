#include "stablecoh/resolution.hpp"

#include <sstream>

#include "stablecoh/errors.hpp"

namespace stablecoh {

namespace {

/* rows spanning K*J for a kernel subspace K (a submodule of a free right
 * module): k (s - e) over group generators s and basis vectors k */
Subspace radical_multiple(const GroupAlgebra& alg, const Subspace& kernel, std::size_t blocks) {
    const std::size_t n = alg.dim();
    FpMatrix rows(0, blocks * n, alg.prime());
    for (const auto& gen : alg.group().generators()) {
        std::size_t gi = alg.group().index_of(gen);
        FpMatrix part(kernel.dim(), blocks * n, alg.prime());
        for (std::size_t r = 0; r < kernel.dim(); ++r) {
            auto v = kernel.basis().row(r);
            auto tv = alg.act_right(gi, v, blocks);
            for (std::size_t c = 0; c < v.size(); ++c)
                part.set(r, c, (tv[c] + alg.prime() - v[c]) % alg.prime());
        }
        rows = rows.vstack(part);
    }
    return Subspace::row_space(rows);
}

/* kernel basis vectors that project to a basis of K / JK, in echelon order */
std::vector<std::vector<std::uint8_t>> minimal_generators(const Subspace& kernel, const Subspace& jk) {
    std::vector<std::vector<std::uint8_t>> chosen;
    FpMatrix span = jk.basis();
    std::size_t have = rank(span);
    for (std::size_t r = 0; r < kernel.dim(); ++r) {
        auto v = kernel.basis().row(r);
        FpMatrix trial(1, span.cols(), span.modulus());
        trial.set_row(0, v);
        FpMatrix cand = span.vstack(trial);
        std::size_t newrank = rank(cand);
        if (newrank > have) {
            chosen.push_back(v);
            span = cand;
            have = newrank;
        }
    }
    if (chosen.size() != kernel.dim() - jk.dim())
        throw InternalCheckError("minimal_generators: complement size mismatch");
    return chosen;
}

}  // namespace

Resolution minimal_resolution(const PermGroup& g, unsigned p, std::size_t max_degree) {
    if (!g.is_prime_power_order(p))
        throw UsageError("minimal_resolution: group order is not a power of the prime");
    if (g.order() > 16) throw UsageError("minimal_resolution: order cap 16 exceeded");
    if (max_degree > 12) throw UsageError("minimal_resolution: degree cap 12 exceeded");

    auto alg = std::make_shared<const GroupAlgebra>(g, p);
    const std::size_t m = alg->dim();

    Resolution res;
    res.algebra_ = alg;
    res.ranks_.push_back(1);

    /* degree 0 boundary is the augmentation; its kernel is J */
    FpMatrix aug(1, m, p);
    for (std::size_t c = 0; c < m; ++c) aug.set(0, c, 1);

    FpMatrix current = aug;  // expanded d_n (d_0 = augmentation)
    for (std::size_t n = 0; n < max_degree; ++n) {
        Subspace kernel = kernel_basis(current);
        Subspace jk = radical_multiple(*alg, kernel, res.ranks_[n]);
        auto gens = minimal_generators(kernel, jk);

        AlgebraMap d(alg, res.ranks_[n], gens.size());
        for (std::size_t s = 0; s < gens.size(); ++s)
            for (std::size_t t = 0; t < res.ranks_[n]; ++t)
                d.set_entry(t, s, GroupAlgebra::Elt(gens[s].begin() + t * m, gens[s].begin() + (t + 1) * m));

        res.ranks_.push_back(gens.size());
        res.expanded_.push_back(d.expand());
        res.diffs_.push_back(std::move(d));
        current = res.expanded_.back();
    }
    return res;
}

bool Resolution::verify_minimal() const {
    for (const auto& d : diffs_)
        if (!d.entries_in_augmentation_ideal()) return false;
    return true;
}

bool Resolution::verify_exact() const {
    const std::size_t m = algebra_->dim();
    const unsigned p = algebra_->prime();
    FpMatrix aug(1, m, p);
    for (std::size_t c = 0; c < m; ++c) aug.set(0, c, 1);

    FpMatrix prev = aug;
    for (std::size_t n = 1; n <= max_degree(); ++n) {
        const FpMatrix& cur = expanded_diff(n);
        if (!(prev * cur).is_zero()) return false;
        if (stablecoh::rank(cur) != kernel_basis(prev).dim()) return false;
        prev = cur;
    }
    return true;
}

std::string Resolution::report() const {
    std::ostringstream os;
    os << "group order " << group().order() << ", p = " << prime() << "\n";
    os << "ranks:";
    for (auto b : ranks_) os << " " << b;
    os << "\n";
    for (std::size_t n = 1; n <= max_degree(); ++n) {
        os << "d_" << n << ":\n";
        const auto& d = diff(n);
        for (std::size_t t = 0; t < d.target_rank(); ++t)
            for (std::size_t s = 0; s < d.source_rank(); ++s) {
                const auto& e = d.entry(t, s);
                os << "  (" << t << "," << s << "): {";
                bool first = true;
                for (std::size_t g = 0; g < e.size(); ++g)
                    if (e[g]) {
                        if (!first) os << ", ";
                        os << group().element(g).to_cycles();
                        if (e[g] != 1) os << "*" << unsigned(e[g]);
                        first = false;
                    }
                os << "}\n";
            }
    }
    return os.str();
}

namespace {

/* Extend generator columns of a module map to all columns by translating
 * with the group action through `act_of`: column (k, g) = act(g) applied to
 * generator column k. */
FpMatrix translate_columns(const GroupAlgebra& target_alg, const FpMatrix& gen_cols,
                           std::size_t target_blocks, const std::vector<std::size_t>& act_of,
                           std::size_t source_group_order) {
    FpMatrix full(gen_cols.rows(), gen_cols.cols() * source_group_order, target_alg.prime());
    for (std::size_t k = 0; k < gen_cols.cols(); ++k) {
        std::vector<std::uint8_t> col(gen_cols.rows());
        for (std::size_t r = 0; r < gen_cols.rows(); ++r) col[r] = gen_cols.at(r, k);
        for (std::size_t q = 0; q < source_group_order; ++q) {
            auto tcol = target_alg.act_right(act_of[q], col, target_blocks);
            for (std::size_t r = 0; r < full.rows(); ++r)
                if (tcol[r]) full.set(r, k * source_group_order + q, tcol[r]);
        }
    }
    return full;
}

FpMatrix solve_or_die(const FpMatrix& a, const FpMatrix& b, const char* what) {
    auto x = solve(a, b);
    if (!x) throw InternalCheckError(std::string("chain-map lifting failed (") + what +
                                     "): resolution is not exact");
    return *x;
}

/* same solution set, different particular solution: solve with the unknown
 * columns reversed */
FpMatrix solve_styled(const FpMatrix& a, const FpMatrix& b, LiftStyle style, const char* what) {
    if (style == LiftStyle::standard) return solve_or_die(a, b, what);
    FpMatrix ar(a.rows(), a.cols(), a.modulus());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) ar.set(r, a.cols() - 1 - c, a.at(r, c));
    FpMatrix xr = solve_or_die(ar, b, what);
    FpMatrix x(xr.rows(), xr.cols(), xr.modulus());
    for (std::size_t r = 0; r < xr.rows(); ++r)
        for (std::size_t c = 0; c < xr.cols(); ++c) x.set(xr.rows() - 1 - r, c, xr.at(r, c));
    return x;
}

}  // namespace

CohomClass cup(const Resolution& r, const CohomClass& x, const CohomClass& y) {
    const std::size_t a = x.degree, b = y.degree;
    if (a + b > r.max_degree()) throw UsageError("cup: degree overflow");
    if (x.coeffs.size() != r.rank(a) || y.coeffs.size() != r.rank(b))
        throw UsageError("cup: coefficient length mismatch");

    const GroupAlgebra& alg = r.algebra();
    const std::size_t m = alg.dim();
    const unsigned p = alg.prime();
    const std::size_t e = alg.group().identity_index();

    /* element q of G acts by right translation by q */
    std::vector<std::size_t> act(alg.dim());
    for (std::size_t i = 0; i < act.size(); ++i) act[i] = i;

    /* u_0 : R_a -> R_0, e_k |-> x_k * 1 */
    FpMatrix u(1 * m, r.rank(a), p);
    for (std::size_t k = 0; k < r.rank(a); ++k)
        if (x.coeffs[k]) u.set(e, k, x.coeffs[k]);

    for (std::size_t i = 1; i <= b; ++i) {
        FpMatrix u_full = translate_columns(alg, u, r.rank(i - 1), act, m);
        FpMatrix rhs = u_full * r.diff(a + i).identity_columns();
        u = solve_or_die(r.expanded_diff(i), rhs, "cup");
    }

    CohomClass out;
    out.degree = a + b;
    out.coeffs.assign(r.rank(a + b), 0);
    for (std::size_t k = 0; k < r.rank(a + b); ++k) {
        unsigned acc = 0;
        for (std::size_t j = 0; j < r.rank(b); ++j) {
            if (!y.coeffs[j]) continue;
            unsigned aug = 0;
            for (std::size_t g = 0; g < m; ++g) aug += u.at(j * m + g, k);
            acc += y.coeffs[j] * aug;
        }
        out.coeffs[k] = static_cast<std::uint8_t>(acc % p);
    }
    return out;
}

CohomClass degree_one_class(const Resolution& r, const std::vector<std::uint8_t>& hom_values) {
    const GroupAlgebra& alg = r.algebra();
    const std::size_t m = alg.dim();
    if (hom_values.size() != m) throw UsageError("degree_one_class: need one value per group element");
    /* pair the functional (g - e) |-> f(g) on J/J^2 with the entries of d_1 */
    CohomClass out;
    out.degree = 1;
    out.coeffs.assign(r.rank(1), 0);
    for (std::size_t k = 0; k < r.rank(1); ++k) {
        const auto& z = r.diff(1).entry(0, k);
        unsigned acc = 0;
        for (std::size_t g = 0; g < m; ++g) acc += z[g] * hom_values[g];
        out.coeffs[k] = static_cast<std::uint8_t>(acc % alg.prime());
    }
    return out;
}

RestrictionLift::RestrictionLift(const GroupHom& phi, const Resolution& rp, const Resolution& rq,
                                 std::size_t max_degree, LiftStyle style) {
    if (!phi.is_injective()) throw UsageError("RestrictionLift: phi must be injective");
    if (!(phi.domain() == rq.group()) || !(phi.codomain() == rp.group()))
        throw UsageError("RestrictionLift: resolutions do not match phi's groups");
    if (rp.prime() != rq.prime()) throw UsageError("RestrictionLift: prime mismatch");
    if (max_degree > rp.max_degree() || max_degree > rq.max_degree())
        throw UsageError("RestrictionLift: degree exceeds a resolution");

    const GroupAlgebra& ap = rp.algebra();
    const std::size_t mp = ap.dim();
    const std::size_t mq = rq.algebra().dim();
    const unsigned p = rp.prime();

    /* action of q in Q on P-modules: right translation by phi(q) */
    std::vector<std::size_t> act(mq);
    for (std::size_t q = 0; q < mq; ++q)
        act[q] = rp.group().index_of(phi.map_element(q));

    /* w_0 : (F_p[Q]) -> (F_p[P]), 1 |-> 1; lifts the identity over the
     * augmentations */
    FpMatrix w(1 * mp, 1, p);
    w.set(ap.group().identity_index(), 0, 1);

    mats_.reserve(max_degree + 1);
    auto record = [&](std::size_t n, const FpMatrix& w_gen) {
        FpMatrix mat(rq.rank(n), rp.rank(n), p);
        for (std::size_t k = 0; k < rq.rank(n); ++k)
            for (std::size_t i = 0; i < rp.rank(n); ++i) {
                unsigned aug = 0;
                for (std::size_t g = 0; g < mp; ++g) aug += w_gen.at(i * mp + g, k);
                mat.set(k, i, aug % p);
            }
        mats_.push_back(std::move(mat));
    };
    record(0, w);

    for (std::size_t n = 1; n <= max_degree; ++n) {
        FpMatrix w_full = translate_columns(ap, w, rp.rank(n - 1), act, mq);
        FpMatrix rhs = w_full * rq.diff(n).identity_columns();
        w = solve_styled(rp.expanded_diff(n), rhs, style, "restriction");
        record(n, w);
    }
}

FpMatrix induced_map(const GroupHom& phi, const Resolution& rp, const Resolution& rq, std::size_t n) {
    RestrictionLift lift(phi, rp, rq, n);
    return lift.cohomology_matrix(n);
}

}  // namespace stablecoh
