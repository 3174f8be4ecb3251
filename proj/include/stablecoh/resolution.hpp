#ifndef STABLECOH_RESOLUTION_HPP
#define STABLECOH_RESOLUTION_HPP

#include <memory>
#include <string>
#include <vector>

#include "stablecoh/group_algebra.hpp"

namespace stablecoh {

/* Minimal free resolution of the trivial module over F_p[G], G a p-group,
 * up to a fixed degree.  By minimality the rank of the degree-n module
 * equals dim H^n(G; F_p). */
class Resolution {
public:
    const GroupAlgebra& algebra() const { return *algebra_; }
    std::shared_ptr<const GroupAlgebra> algebra_ptr() const { return algebra_; }
    const PermGroup& group() const { return algebra_->group(); }
    unsigned prime() const { return algebra_->prime(); }

    std::size_t max_degree() const { return ranks_.size() - 1; }
    std::size_t rank(std::size_t n) const { return ranks_[n]; }
    std::vector<std::size_t> betti() const { return ranks_; }

    /* d_n : (rank b_n) -> (rank b_{n-1}), for 1 <= n <= max_degree */
    const AlgebraMap& diff(std::size_t n) const { return diffs_[n - 1]; }
    const FpMatrix& expanded_diff(std::size_t n) const { return expanded_[n - 1]; }

    /* all differential entries lie in the augmentation ideal */
    bool verify_minimal() const;
    /* d d = 0 and rank exactness at every internal degree */
    bool verify_exact() const;

    /* ranks plus the group-element support of every differential entry */
    std::string report() const;

private:
    std::shared_ptr<const GroupAlgebra> algebra_;
    std::vector<std::size_t> ranks_;
    std::vector<AlgebraMap> diffs_;
    std::vector<FpMatrix> expanded_;

    friend Resolution minimal_resolution(const PermGroup&, unsigned, std::size_t);
};

/* Constructs the minimal resolution degree by degree: the next differential
 * is assembled from a basis of ker(d_n) modulo J ker(d_n). */
Resolution minimal_resolution(const PermGroup& g, unsigned p, std::size_t max_degree);

/* A cohomology class as a coefficient vector in the dual basis of the
 * degree-n free module of a resolution. */
struct CohomClass {
    std::size_t degree = 0;
    std::vector<std::uint8_t> coeffs;
};

/* Cup product by chain-map lifting along the resolution. */
CohomClass cup(const Resolution& r, const CohomClass& x, const CohomClass& y);

/* The degree-1 class corresponding to a homomorphism G -> F_p given by its
 * values on the sorted element list (the natural H^1 = Hom(G, F_p)). */
CohomClass degree_one_class(const Resolution& r, const std::vector<std::uint8_t>& hom_values);

/* Chain-map lifts are under-determined; the cohomology-level output must
 * not depend on which solution the solver picks.  The reversed style makes
 * the solver choose a different particular solution (free variables in the
 * opposite column order), which tests exactly that. */
enum class LiftStyle { standard, reversed_columns };

/* Chain-level lift of the identity along an injective homomorphism
 * phi : Q -> P.  Restricting P's resolution along phi gives a free
 * F_p[Q]-resolution; lifting id over it yields the induced maps
 * phi^* : H^n(P) -> H^n(Q) in the dual bases, all degrees at once. */
class RestrictionLift {
public:
    RestrictionLift(const GroupHom& phi, const Resolution& rp, const Resolution& rq,
                    std::size_t max_degree, LiftStyle style = LiftStyle::standard);

    std::size_t max_degree() const { return mats_.size() - 1; }
    const FpMatrix& cohomology_matrix(std::size_t n) const { return mats_[n]; }

private:
    std::vector<FpMatrix> mats_;
};

/* the matrix of phi^* : H^n(P) -> H^n(Q) in the dual bases */
FpMatrix induced_map(const GroupHom& phi, const Resolution& rp, const Resolution& rq, std::size_t n);

}  // namespace stablecoh

#endif
