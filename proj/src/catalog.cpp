#include "stablecoh/catalog.hpp"

#include <sstream>

#include "stablecoh/errors.hpp"

namespace stablecoh {

namespace {

struct AbstractGroup {
    std::vector<std::vector<std::size_t>> table;  // table[i][j] = i*j, index 0 = identity
    std::vector<std::size_t> gens;
};

AbstractGroup cyclic(std::size_t n) {
    AbstractGroup g;
    g.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
    g.gens = {1};
    return g;
}

AbstractGroup product(const AbstractGroup& a, const AbstractGroup& b) {
    std::size_t na = a.table.size(), nb = b.table.size();
    AbstractGroup g;
    g.table.assign(na * nb, std::vector<std::size_t>(na * nb));
    for (std::size_t x1 = 0; x1 < na; ++x1)
        for (std::size_t y1 = 0; y1 < nb; ++y1)
            for (std::size_t x2 = 0; x2 < na; ++x2)
                for (std::size_t y2 = 0; y2 < nb; ++y2)
                    g.table[x1 * nb + y1][x2 * nb + y2] = a.table[x1][x2] * nb + b.table[y1][y2];
    for (auto ga : a.gens) g.gens.push_back(ga * nb);
    for (auto gb : b.gens) g.gens.push_back(gb);
    return g;
}

AbstractGroup elementary_abelian(std::size_t p, std::size_t rank) {
    AbstractGroup g = cyclic(p);
    for (std::size_t i = 1; i < rank; ++i) g = product(g, cyclic(p));
    return g;
}

AbstractGroup dihedral8() {
    /* elements (k, s), k in Z/4, s in {0,1}; (k1,s1)(k2,s2) = (k1 + (-1)^{s1} k2, s1+s2) */
    AbstractGroup g;
    g.table.assign(8, std::vector<std::size_t>(8));
    auto idx = [](std::size_t k, std::size_t s) { return k * 2 + s; };
    for (std::size_t k1 = 0; k1 < 4; ++k1)
        for (std::size_t s1 = 0; s1 < 2; ++s1)
            for (std::size_t k2 = 0; k2 < 4; ++k2)
                for (std::size_t s2 = 0; s2 < 2; ++s2) {
                    std::size_t k = (k1 + (s1 ? 4 - k2 : k2)) % 4;
                    g.table[idx(k1, s1)][idx(k2, s2)] = idx(k, s1 ^ s2);
                }
    g.gens = {idx(1, 0), idx(0, 1)};
    return g;
}

AbstractGroup quaternion8() {
    /* elements 2*axis + sign, axis in {1,i,j,k}, sign 0 = +, 1 = - */
    auto axis_mul = [](std::size_t a, std::size_t b, std::size_t& axis, std::size_t& sign) {
        /* unit quaternion products on {1,i,j,k} */
        static const std::size_t ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const std::size_t sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        axis = ax[a][b];
        sign = sg[a][b];
    };
    AbstractGroup g;
    g.table.assign(8, std::vector<std::size_t>(8));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t sa = 0; sa < 2; ++sa)
            for (std::size_t b = 0; b < 4; ++b)
                for (std::size_t sb = 0; sb < 2; ++sb) {
                    std::size_t axis, sign;
                    axis_mul(a, b, axis, sign);
                    g.table[2 * a + sa][2 * b + sb] = 2 * axis + (sign ^ sa ^ sb);
                }
    g.gens = {2 * 1 + 0, 2 * 2 + 0};  // i, j
    return g;
}

PermGroup regular_rep(const AbstractGroup& a) {
    std::size_t n = a.table.size();
    std::vector<Perm> gens;
    for (auto gi : a.gens) {
        std::vector<std::uint8_t> im(n);
        for (std::size_t x = 0; x < n; ++x) im[x] = static_cast<std::uint8_t>(a.table[gi][x]);
        gens.emplace_back(std::move(im));
    }
    return PermGroup::close_generators(n, std::move(gens), n);
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;
    auto add = [&](const std::string& name, unsigned p, const AbstractGroup& a) {
        cat.push_back(CatalogEntry{name, p, regular_rep(a)});
    };
    add("z2", 2, cyclic(2));
    add("z4", 2, cyclic(4));
    add("z8", 2, cyclic(8));
    add("z16", 2, cyclic(16));
    add("z3", 3, cyclic(3));
    add("z9", 3, cyclic(9));
    add("z5", 5, cyclic(5));
    add("z7", 7, cyclic(7));
    add("klein4", 2, elementary_abelian(2, 2));
    add("z2_3", 2, elementary_abelian(2, 3));
    add("z2_4", 2, elementary_abelian(2, 4));
    add("z3_2", 3, elementary_abelian(3, 2));
    add("d8", 2, dihedral8());
    add("q8", 2, quaternion8());
    add("z4z2", 2, product(cyclic(4), cyclic(2)));
    return cat;
}

}  // namespace

const std::vector<CatalogEntry>& group_catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

PermGroup catalog_group(const std::string& name) {
    for (const auto& e : group_catalog())
        if (e.name == name) return e.group;
    std::ostringstream os;
    os << "unknown catalog group \"" << name << "\"; known:";
    for (const auto& e : group_catalog()) os << " " << e.name;
    throw UsageError(os.str());
}

unsigned catalog_prime(const std::string& name) {
    for (const auto& e : group_catalog())
        if (e.name == name) return e.natural_prime;
    throw UsageError("unknown catalog group \"" + name + "\"");
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& e : group_catalog()) names.push_back(e.name);
    return names;
}

}  // namespace stablecoh
