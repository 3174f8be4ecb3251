#ifndef STABLECOH_POLY_MODEL_HPP
#define STABLECOH_POLY_MODEL_HPP

#include "stablecoh/invariants.hpp"
#include "stablecoh/resolution.hpp"

namespace stablecoh {

/* Degreewise change of basis between the resolution presentation of
 * H^*((Z/2)^n; F_2) and the polynomial algebra F_2[x_1..x_n]: degree one is
 * identified through H^1 = Hom(P, F_2) (x_i dual to the i-th generator),
 * higher degrees by iterated cup products of the monomials.  The monomial
 * images must span every degree -- the cohomology ring is polynomial -- and
 * failure to span is an internal error. */
class PolynomialModel {
public:
    PolynomialModel(const PermGroup& p, const Resolution& r, std::size_t max_degree);

    unsigned nvars() const { return nvars_; }
    std::size_t max_degree() const { return to_cohom_.size() - 1; }

    /* monomial coordinates -> dual-basis coordinates of H^d */
    const FpMatrix& monomials_to_cohomology(std::size_t d) const { return to_cohom_[d]; }
    /* dual-basis coordinates of H^d -> monomial coordinates */
    const FpMatrix& cohomology_to_monomials(std::size_t d) const { return to_poly_[d]; }

    Poly2 to_polynomial(const CohomClass& x) const;
    CohomClass to_cohomology(const Poly2& f, std::size_t degree) const;

    /* transport a subspace of H^d to polynomial coordinates */
    Subspace transport(const Subspace& sub, std::size_t degree) const;

private:
    unsigned nvars_;
    std::vector<FpMatrix> to_cohom_, to_poly_;
};

struct InvariantCompareReport {
    std::size_t max_degree = 0;
    bool match = false;
    std::vector<std::size_t> limit_dims;      // via resolutions + stable limit
    std::vector<std::size_t> invariant_dims;  // via polynomial fixed spaces
};

/* Dual-route cross-check: the one-object category on (Z/2)^n with
 * morphism group H (as automorphisms) has limit equal, through the
 * polynomial model, to the invariant ring H^*(P)^H degreewise.
 * n <= 3, max_degree <= 8. */
InvariantCompareReport compare_invariants_vs_limit(unsigned n, const MatrixGroup2& h,
                                                   std::size_t max_degree);

/* the automorphism of the elementary abelian group matching the
 * substitution action of g through the model (generator j maps to the
 * product of the generators i with g(j,i) = 1) */
GroupHom matrix_to_automorphism(const PermGroup& p, const Mat2& g);

}  // namespace stablecoh

#endif
