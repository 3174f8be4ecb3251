#include "stablecoh/conjugator.hpp"

#include <algorithm>

#include "stablecoh/errors.hpp"

namespace stablecoh {

Perm cayley_image(const PermGroup& p, const Perm& x) {
    std::size_t xi = p.index_of(x);
    std::vector<std::uint8_t> im(p.order());
    for (std::size_t g = 0; g < p.order(); ++g)
        im[g] = static_cast<std::uint8_t>(p.mul_index(xi, g));
    return Perm(std::move(im));
}

GroupHom cayley_embedding(const PermGroup& p) {
    if (p.order() > 64) throw UsageError("cayley_embedding: order cap 64 exceeded");
    std::vector<Perm> gen_images;
    gen_images.reserve(p.generators().size());
    for (const auto& g : p.generators()) gen_images.push_back(cayley_image(p, g));
    PermGroup image = PermGroup::close_generators(p.order(), gen_images, p.order());
    return GroupHom(p, image, std::move(gen_images));
}

bool ConjugatorWitness::verify() const {
    const PermGroup& ambient = phi.codomain();
    const PermGroup& q = phi.domain();
    Perm ginv = conjugator.inverse();
    for (std::size_t i = 0; i < q.order(); ++i) {
        Perm lhs = conjugator * cayley_image(ambient, q.element(i)) * ginv;
        Perm rhs = cayley_image(ambient, phi.map_element(i));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

ConjugatorWitness find_conjugator(const GroupHom& phi) {
    const PermGroup& ambient = phi.codomain();
    const PermGroup& q = phi.domain();
    if (!phi.is_injective()) throw UsageError("find_conjugator: phi is not injective");
    if (!q.is_subset_of(ambient))
        throw UsageError("find_conjugator: phi's domain is not a subgroup of its codomain");

    const std::size_t n = ambient.order();
    const std::size_t m = q.order();

    /* the two translation actions of q on the ambient element set */
    std::vector<std::size_t> q_in_ambient(m), phi_in_ambient(m);
    for (std::size_t i = 0; i < m; ++i) {
        q_in_ambient[i] = ambient.index_of(q.element(i));
        phi_in_ambient[i] = ambient.index_of(phi.map_element(i));
    }
    auto act_incl = [&](std::size_t qi, std::size_t x) { return ambient.mul_index(q_in_ambient[qi], x); };
    auto act_phi = [&](std::size_t qi, std::size_t x) { return ambient.mul_index(phi_in_ambient[qi], x); };

    /* orbit representatives, by least unused element index; both actions are
     * free, so every orbit has size m and reps line up one-to-one */
    auto reps_of = [&](auto&& act) {
        std::vector<bool> used(n, false);
        std::vector<std::size_t> reps;
        for (std::size_t x = 0; x < n; ++x) {
            if (used[x]) continue;
            reps.push_back(x);
            for (std::size_t qi = 0; qi < m; ++qi) used[act(qi, x)] = true;
        }
        return reps;
    };
    std::vector<std::size_t> reps1 = reps_of(act_incl);
    std::vector<std::size_t> reps2 = reps_of(act_phi);
    if (reps1.size() != reps2.size())
        throw InternalCheckError("find_conjugator: orbit counts disagree");

    std::vector<std::uint8_t> gmap(n, 0);
    std::vector<bool> assigned(n, false);
    for (std::size_t k = 0; k < reps1.size(); ++k)
        for (std::size_t qi = 0; qi < m; ++qi) {
            std::size_t src = act_incl(qi, reps1[k]);
            std::size_t dst = act_phi(qi, reps2[k]);
            if (assigned[src]) throw InternalCheckError("find_conjugator: action is not free");
            gmap[src] = static_cast<std::uint8_t>(dst);
            assigned[src] = true;
        }

    ConjugatorWitness w{phi, cayley_embedding(ambient), Perm(std::move(gmap))};
    if (!w.verify())
        throw InternalCheckError("find_conjugator: constructed witness failed verification");
    return w;
}

}  // namespace stablecoh
