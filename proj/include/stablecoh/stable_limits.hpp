#ifndef STABLECOH_STABLE_LIMITS_HPP
#define STABLECOH_STABLE_LIMITS_HPP

#include <map>
#include <string>
#include <vector>

#include "stablecoh/category.hpp"
#include "stablecoh/resolution.hpp"

namespace stablecoh {

/* Per-degree data of the limit of H^* over a category: the basis of I^n
 * (inside H^n(P) in subgroup mode, inside the direct sum over objects in
 * abstract mode) and the rank/cokernel bookkeeping of the compatibility
 * map whose kernel it is. */
struct StableReport {
    std::size_t max_degree = 0;
    CategoryMode mode = CategoryMode::subgroup;
    std::size_t edge_count = 0;
    std::vector<Subspace> limit_bases;        // 0..N
    std::vector<std::size_t> ambient_dims;    // dim of the source of the map
    std::vector<std::size_t> condition_ranks;
    std::vector<std::size_t> coker_dims;

    std::vector<std::size_t> limit_dims() const;
};

/* dim H^n of the one-vertex group of the category, via the two-row collapse:
 * dim H^n = dim I^n + dim coker(d_1 at n-1). */
struct GammaReport {
    std::size_t max_degree = 0;
    std::size_t edge_count = 0;
    std::vector<std::size_t> gamma_dims;  // 0..N
    std::vector<std::size_t> limit_dims;  // dim I^n
    std::vector<std::size_t> coker_dims;  // dim coker at n (consumed at n+1)
};

struct ClosureReport {
    bool closed = true;
    std::size_t pairs_checked = 0;
    std::vector<std::string> violations;
};

struct FinitenessReport {
    std::size_t max_degree = 0;
    std::size_t window = 3;
    std::vector<std::size_t> generator_degrees;
    bool stable_in_window = false;  // no new generator in the top `window` degrees
};

/* Shared computation state for one category: resolutions for every object
 * and the chain-map lifts of every morphism (and of the inclusions into the
 * ambient object), cached to the requested degree. */
class StableContext {
public:
    StableContext(CategorySpec spec, std::size_t max_degree);

    const CategorySpec& spec() const { return spec_; }
    std::size_t max_degree() const { return max_degree_; }

    const Resolution& resolution(std::size_t object_index) const { return resolutions_[object_index]; }
    const Resolution& resolution(const std::string& name) const;
    const Resolution& ambient_resolution() const;

    /* the degree-n compatibility map whose kernel is I^n: in subgroup mode
     * H^n(P) -> sum over morphisms of H^n(dom), block Res - phi^*; in
     * abstract mode (sum over objects) -> (sum over morphisms) */
    const FpMatrix& condition_map(std::size_t degree);

    Subspace limit_basis(std::size_t degree);

    StableReport stable_report();
    GammaReport gamma_report();
    ClosureReport ring_closure_check();
    FinitenessReport module_finiteness(std::size_t window = 3);

private:
    CategorySpec spec_;
    std::size_t max_degree_;
    std::vector<Resolution> resolutions_;
    /* per morphism: phi^* matrices for all degrees (the map induced by the
     * composite into P in subgroup mode); inclusions into P per object */
    std::vector<std::vector<FpMatrix>> morphism_stars_;
    std::vector<std::vector<FpMatrix>> inclusion_stars_;
    std::map<std::size_t, FpMatrix> condition_cache_;
    std::map<std::size_t, Subspace> limit_cache_;

    void build_lifts();
    std::size_t sum_object_dim(std::size_t degree) const;

    /* product-ring cup for abstract mode: componentwise over objects */
    std::vector<std::uint8_t> tuple_cup(std::size_t deg_a, const std::vector<std::uint8_t>& a,
                                        std::size_t deg_b, const std::vector<std::uint8_t>& b);
};

}  // namespace stablecoh

#endif
