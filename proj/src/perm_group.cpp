#include "stablecoh/perm_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "stablecoh/errors.hpp"

namespace stablecoh {

namespace {

struct BfsResult {
    std::vector<Perm> elements;                    // sorted
    std::vector<std::vector<std::uint8_t>> words;  // aligned
};

/* Left-multiplication closure with word tracking: word(g*h) = g-letter + word(h). */
BfsResult bfs_closure(std::size_t degree, const std::vector<Perm>& gens, std::size_t order_cap) {
    for (const auto& g : gens)
        if (g.degree() != degree) throw UsageError("close_generators: generator degree mismatch");

    std::map<Perm, std::vector<std::uint8_t>> found;
    std::vector<Perm> queue;
    found.emplace(Perm::identity(degree), std::vector<std::uint8_t>{});
    queue.push_back(Perm::identity(degree));
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Perm cur = queue[qi];
        const auto& cur_word = found.at(cur);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Perm nxt = gens[k] * cur;
            if (found.count(nxt)) continue;
            if (found.size() >= order_cap)
                throw UsageError("close_generators: order cap " + std::to_string(order_cap) + " exceeded");
            std::vector<std::uint8_t> w;
            w.reserve(cur_word.size() + 1);
            w.push_back(static_cast<std::uint8_t>(k));
            w.insert(w.end(), cur_word.begin(), cur_word.end());
            found.emplace(nxt, w);
            queue.push_back(std::move(nxt));
        }
    }

    BfsResult out;
    out.elements.reserve(found.size());
    out.words.reserve(found.size());
    for (auto& kv : found) {  // std::map iterates in sorted (lex) order
        out.elements.push_back(kv.first);
        out.words.push_back(std::move(kv.second));
    }
    return out;
}

/* Full element map from generator images, or nullopt when the assignment is
 * not a homomorphism.  Multiplicativity on (generator, element) pairs
 * suffices: it propagates along generator words. */
std::optional<std::vector<std::size_t>> extend_hom(const PermGroup& dom, const PermGroup& cod,
                                                   const std::vector<Perm>& gen_images) {
    const std::size_t n = dom.order();
    std::vector<std::size_t> emap(n);
    std::vector<Perm> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        Perm img = Perm::identity(cod.degree());
        for (auto k : dom.words()[i]) img = img * gen_images[k];
        if (!cod.contains(img)) return std::nullopt;
        images[i] = img;
        emap[i] = cod.index_of(img);
    }
    for (std::size_t k = 0; k < dom.generators().size(); ++k) {
        std::size_t gi = dom.index_of(dom.generators()[k]);
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t prod = dom.mul_index(gi, j);
            if (!(images[prod] == images[gi] * images[j])) return std::nullopt;
        }
    }
    return emap;
}

}  // namespace

PermGroup PermGroup::close_generators(std::size_t degree, std::vector<Perm> gens, std::size_t order_cap) {
    BfsResult bfs = bfs_closure(degree, gens, order_cap);
    PermGroup g;
    g.degree_ = degree;
    g.generators_ = std::move(gens);
    g.elements_ = std::move(bfs.elements);
    g.words_ = std::move(bfs.words);
    return g;
}

PermGroup PermGroup::from_element_set(std::size_t degree, std::vector<Perm> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<Perm> gens;
    std::set<Perm> closure{Perm::identity(degree)};
    for (const auto& x : elements) {
        if (closure.count(x)) continue;
        gens.push_back(x);
        /* re-close with the enlarged generating set */
        std::vector<Perm> queue(closure.begin(), closure.end());
        queue.push_back(x);
        closure.insert(x);
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (const auto& gen : gens) {
                Perm nxt = gen * queue[qi];
                if (closure.insert(nxt).second) queue.push_back(nxt);
            }
    }
    PermGroup g = close_generators(degree, std::move(gens), elements.size() + 1);
    if (g.elements_ != elements)
        throw UsageError("from_element_set: element list is not closed under the group operations");
    return g;
}

bool PermGroup::contains(const Perm& x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::size_t PermGroup::index_of(const Perm& x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || !(*it == x))
        throw UsageError("index_of: permutation is not an element of the group");
    return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t PermGroup::mul_index(std::size_t i, std::size_t j) const {
    return index_of(elements_[i] * elements_[j]);
}

std::size_t PermGroup::inv_index(std::size_t i) const {
    return index_of(elements_[i].inverse());
}

bool PermGroup::is_prime_power_order(unsigned p) const {
    std::size_t n = order();
    while (n % p == 0) n /= p;
    return n == 1;
}

bool PermGroup::is_subset_of(const PermGroup& g) const {
    if (degree_ != g.degree()) return false;
    return std::all_of(elements_.begin(), elements_.end(), [&](const Perm& x) { return g.contains(x); });
}

GroupHom::GroupHom(PermGroup domain, PermGroup codomain, std::vector<Perm> gen_images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), gen_images_(std::move(gen_images)) {
    if (gen_images_.size() != domain_.generators().size())
        throw UsageError("GroupHom: need one image per domain generator");
    for (const auto& im : gen_images_)
        if (im.degree() != codomain_.degree())
            throw UsageError("GroupHom: generator image degree mismatch");
    auto emap = extend_hom(domain_, codomain_, gen_images_);
    if (!emap)
        throw UsageError("GroupHom: generator images do not extend to a homomorphism");
    element_map_ = std::move(*emap);
    std::vector<std::size_t> sorted = element_map_;
    std::sort(sorted.begin(), sorted.end());
    injective_ = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

GroupHom GroupHom::inclusion(const PermGroup& sub, const PermGroup& big) {
    if (!sub.is_subset_of(big))
        throw UsageError("inclusion: first group is not contained in the second");
    return GroupHom(sub, big, sub.generators());
}

GroupHom GroupHom::identity(const PermGroup& g) {
    return GroupHom(g, g, g.generators());
}

GroupHom GroupHom::with_codomain(const PermGroup& new_codomain) const {
    return GroupHom(domain_, new_codomain, gen_images_);
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    if (!(f.codomain() == g.domain()))
        throw UsageError("compose: codomain/domain mismatch");
    std::vector<Perm> images;
    images.reserve(f.gen_images().size());
    for (const auto& im : f.gen_images()) images.push_back(g.map(im));
    return GroupHom(f.domain(), g.codomain(), std::move(images));
}

std::vector<PermGroup> subgroups(const PermGroup& g) {
    const std::size_t n = g.order();
    if (n > 64) throw UsageError("subgroups: order cap 64 exceeded");

    /* index multiplication table for fast subset closure */
    std::vector<std::vector<std::uint8_t>> mul(n, std::vector<std::uint8_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mul[i][j] = static_cast<std::uint8_t>(g.mul_index(i, j));

    auto close_set = [&](std::vector<std::uint8_t> seed) {
        std::set<std::uint8_t> have(seed.begin(), seed.end());
        have.insert(0);  // identity
        std::vector<std::uint8_t> queue(have.begin(), have.end());
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (auto s : std::vector<std::uint8_t>(have.begin(), have.end())) {
                auto a = mul[queue[qi]][s];
                if (have.insert(a).second) queue.push_back(a);
                auto b = mul[s][queue[qi]];
                if (have.insert(b).second) queue.push_back(b);
            }
        return std::vector<std::uint8_t>(have.begin(), have.end());
    };

    std::set<std::vector<std::uint8_t>> seen;
    std::vector<std::vector<std::uint8_t>> queue;
    auto trivial = close_set({});
    seen.insert(trivial);
    queue.push_back(trivial);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto sub = queue[qi];
        std::set<std::uint8_t> in(sub.begin(), sub.end());
        for (std::size_t x = 0; x < n; ++x) {
            if (in.count(static_cast<std::uint8_t>(x))) continue;
            auto ext = sub;
            ext.push_back(static_cast<std::uint8_t>(x));
            auto closed = close_set(ext);
            if (seen.insert(closed).second) queue.push_back(closed);
        }
    }

    std::vector<PermGroup> out;
    out.reserve(seen.size());
    for (const auto& idxset : seen) {
        std::vector<Perm> elems;
        elems.reserve(idxset.size());
        for (auto i : idxset) elems.push_back(g.element(i));
        out.push_back(PermGroup::from_element_set(g.degree(), std::move(elems)));
    }
    std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

std::vector<GroupHom> injections(const PermGroup& q, const PermGroup& p) {
    if (q.order() > p.order()) return {};
    if (p.order() > 64) throw UsageError("injections: order cap 64 exceeded");

    const auto& gens = q.generators();
    const std::size_t k = gens.size();
    std::vector<std::size_t> gen_orders(k);
    for (std::size_t i = 0; i < k; ++i) gen_orders[i] = gens[i].order();

    /* candidate images per generator: elements of matching order (an
     * injective homomorphism preserves element orders) */
    std::vector<std::vector<Perm>> candidates(k);
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& x : p.elements())
            if (x.order() == gen_orders[i]) candidates[i].push_back(x);

    std::vector<GroupHom> out;
    std::vector<std::size_t> pick(k, 0);
    if (k == 0) {
        out.emplace_back(q, p, std::vector<Perm>{});  // trivial group
        return out;
    }
    for (const auto& c : candidates)
        if (c.empty()) return out;  // some generator order is missing in p
    while (true) {
        std::vector<Perm> images(k);
        for (std::size_t i = 0; i < k; ++i) images[i] = candidates[i][pick[i]];
        auto emap = extend_hom(q, p, images);
        if (emap) {
            auto sorted = *emap;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
                out.emplace_back(q, p, images);
        }
        std::size_t d = 0;
        while (d < k && ++pick[d] == candidates[d].size()) pick[d++] = 0;
        if (d == k) break;
    }
    return out;
}

}  // namespace stablecoh
