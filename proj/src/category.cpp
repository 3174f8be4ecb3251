#include "stablecoh/category.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "stablecoh/errors.hpp"
#include "stablecoh/fp_matrix.hpp"

namespace stablecoh {

CategorySpec::CategorySpec(unsigned prime, CategoryMode mode, std::vector<CategoryObject> objects,
                           std::vector<CategoryMorphism> morphisms)
    : prime_(prime), mode_(mode), objects_(std::move(objects)), morphisms_(std::move(morphisms)) {
    if (!is_supported_prime(prime_)) throw UsageError("CategorySpec: unsupported prime");
    std::set<std::string> names;
    for (const auto& o : objects_)
        if (!names.insert(o.name).second)
            throw UsageError("CategorySpec: duplicate object name \"" + o.name + "\"");
}

std::size_t CategorySpec::object_index(const std::string& name) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i].name == name) return i;
    throw UsageError("CategorySpec: no object named \"" + name + "\"");
}

const CategoryObject& CategorySpec::object(const std::string& name) const {
    return objects_[object_index(name)];
}

std::size_t CategorySpec::ambient_index() const {
    if (mode_ != CategoryMode::subgroup)
        throw UsageError("CategorySpec: ambient object only exists in subgroup mode");
    return object_index("P");
}

ValidationReport CategorySpec::validate() const {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) {
        rep.valid = false;
        rep.issues.push_back(msg);
    };

    for (const auto& o : objects_)
        if (!o.group.is_prime_power_order(prime_))
            fail("object \"" + o.name + "\": order " + std::to_string(o.group.order()) +
                 " is not a power of " + std::to_string(prime_));

    for (std::size_t i = 0; i < morphisms_.size(); ++i) {
        const auto& m = morphisms_[i];
        bool from_ok = std::any_of(objects_.begin(), objects_.end(),
                                   [&](const CategoryObject& o) { return o.name == m.from; });
        bool to_ok = std::any_of(objects_.begin(), objects_.end(),
                                 [&](const CategoryObject& o) { return o.name == m.to; });
        if (!from_ok || !to_ok) {
            fail("morphism " + std::to_string(i) + ": unknown endpoint \"" +
                 (from_ok ? m.to : m.from) + "\"");
            continue;
        }
        if (!(m.hom.domain() == object(m.from).group) || !(m.hom.codomain() == object(m.to).group))
            fail("morphism " + std::to_string(i) + " (" + m.from + " -> " + m.to +
                 "): underlying homomorphism does not match the named objects");
        if (!m.hom.is_injective())
            fail("morphism " + std::to_string(i) + " (" + m.from + " -> " + m.to + "): not injective");
    }

    if (mode_ == CategoryMode::subgroup) {
        bool has_p = std::any_of(objects_.begin(), objects_.end(),
                                 [](const CategoryObject& o) { return o.name == "P"; });
        if (!has_p) {
            fail("subgroup mode: no object named \"P\"");
            return rep;
        }
        const PermGroup& p = object("P").group;
        for (const auto& o : objects_) {
            if (o.group.degree() != p.degree() || !o.group.is_subset_of(p)) {
                fail("object \"" + o.name + "\" is not a subgroup of P");
                continue;
            }
            /* the inclusion of every object into P must be listed */
            bool found = false;
            for (const auto& m : morphisms_) {
                if (m.from != o.name || m.to != "P") continue;
                bool is_incl = true;
                for (std::size_t i = 0; i < o.group.order(); ++i)
                    if (!(m.hom.map_element(i) == o.group.element(i))) {
                        is_incl = false;
                        break;
                    }
                if (is_incl) {
                    found = true;
                    break;
                }
            }
            if (!found) fail("missing inclusion morphism \"" + o.name + "\" -> P");
        }
    } else {
        rep.components = connected_components();
        rep.completion_available = rep.components > 1;
    }
    return rep;
}

std::size_t CategorySpec::connected_components() const {
    std::vector<std::size_t> parent(objects_.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& m : morphisms_) parent[find(object_index(m.from))] = find(object_index(m.to));
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(i));
    return roots.size();
}

CategorySpec CategorySpec::with_initial_object() const {
    if (mode_ != CategoryMode::abstract_groups)
        throw UsageError("with_initial_object: only defined for abstract categories");
    auto objects = objects_;
    auto morphisms = morphisms_;
    PermGroup triv = PermGroup::close_generators(1, {}, 1);
    std::string name = "TRIV";
    while (std::any_of(objects.begin(), objects.end(),
                       [&](const CategoryObject& o) { return o.name == name; }))
        name += "_";
    for (const auto& o : objects)
        morphisms.push_back(CategoryMorphism{name, o.name, GroupHom(triv, o.group, {})});
    objects.push_back(CategoryObject{name, triv});
    return CategorySpec(prime_, mode_, std::move(objects), std::move(morphisms));
}

CategorySpec CategorySpec::restricted_to_ambient_targets() const {
    std::size_t pi = ambient_index();
    std::vector<CategoryMorphism> kept;
    for (const auto& m : morphisms_)
        if (object_index(m.to) == pi) kept.push_back(m);
    return CategorySpec(prime_, mode_, objects_, std::move(kept));
}

namespace {

nlohmann::ordered_json group_to_json(const PermGroup& g, bool with_degree) {
    nlohmann::ordered_json j;
    if (with_degree) j["degree"] = g.degree();
    auto gens = nlohmann::ordered_json::array();
    for (const auto& x : g.generators()) gens.push_back(x.to_cycles());
    j["generators"] = gens;
    return j;
}

PermGroup group_from_json(const nlohmann::json& j, std::size_t default_degree) {
    std::size_t degree = j.contains("degree") ? j.at("degree").get<std::size_t>() : default_degree;
    if (degree == 0) throw UsageError("category file: object needs a degree");
    std::vector<Perm> gens;
    for (const auto& s : j.at("generators")) gens.push_back(Perm::from_cycles(degree, s.get<std::string>()));
    return PermGroup::close_generators(degree, std::move(gens));
}

}  // namespace

std::string CategorySpec::to_json() const {
    nlohmann::ordered_json j;
    j["prime"] = prime_;
    j["mode"] = mode_ == CategoryMode::subgroup ? "subgroup" : "abstract";
    if (mode_ == CategoryMode::subgroup) j["ambient"] = group_to_json(ambient(), true);
    auto objs = nlohmann::ordered_json::array();
    for (const auto& o : objects_) {
        if (mode_ == CategoryMode::subgroup && o.name == "P") continue;
        nlohmann::ordered_json jo;
        jo["name"] = o.name;
        auto jg = group_to_json(o.group, mode_ != CategoryMode::subgroup);
        for (auto& kv : jg.items()) jo[kv.key()] = kv.value();
        objs.push_back(jo);
    }
    j["objects"] = objs;
    auto morphs = nlohmann::ordered_json::array();
    for (const auto& m : morphisms_) {
        nlohmann::ordered_json jm;
        jm["from"] = m.from;
        jm["to"] = m.to;
        auto images = nlohmann::ordered_json::array();
        for (const auto& x : m.hom.gen_images()) images.push_back(x.to_cycles());
        jm["images"] = images;
        morphs.push_back(jm);
    }
    j["morphisms"] = morphs;
    return j.dump(2) + "\n";
}

CategorySpec CategorySpec::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("category file: JSON parse error: ") + e.what());
    }
    try {
        unsigned prime = j.at("prime").get<unsigned>();
        std::string mode_s = j.value("mode", "subgroup");
        CategoryMode mode =
            mode_s == "subgroup" ? CategoryMode::subgroup : CategoryMode::abstract_groups;

        std::vector<CategoryObject> objects;
        std::size_t ambient_degree = 0;
        if (mode == CategoryMode::subgroup) {
            PermGroup p = group_from_json(j.at("ambient"), 0);
            ambient_degree = p.degree();
            objects.push_back(CategoryObject{"P", std::move(p)});
        }
        for (const auto& jo : j.at("objects")) {
            std::string name = jo.at("name").get<std::string>();
            objects.push_back(CategoryObject{name, group_from_json(jo, ambient_degree)});
        }

        auto find_group = [&](const std::string& name) -> const PermGroup& {
            for (const auto& o : objects)
                if (o.name == name) return o.group;
            throw UsageError("category file: morphism endpoint \"" + name + "\" is not an object");
        };
        std::vector<CategoryMorphism> morphisms;
        for (const auto& jm : j.at("morphisms")) {
            std::string from = jm.at("from").get<std::string>();
            std::string to = jm.at("to").get<std::string>();
            const PermGroup& dom = find_group(from);
            const PermGroup& cod = find_group(to);
            std::vector<Perm> images;
            for (const auto& s : jm.at("images"))
                images.push_back(Perm::from_cycles(cod.degree(), s.get<std::string>()));
            morphisms.push_back(CategoryMorphism{from, to, GroupHom(dom, cod, std::move(images))});
        }
        return CategorySpec(prime, mode, std::move(objects), std::move(morphisms));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("category file: missing or malformed field: ") + e.what());
    }
}

CategorySpec CategorySpec::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read category file \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

CategorySpec CategorySpec::identity_preset(const PermGroup& p, unsigned prime) {
    std::vector<CategoryObject> objects{{"P", p}};
    std::vector<CategoryMorphism> morphisms;
    morphisms.push_back(CategoryMorphism{"P", "P", GroupHom::identity(p)});
    return CategorySpec(prime, CategoryMode::subgroup, std::move(objects), std::move(morphisms));
}

CategorySpec CategorySpec::aut_preset(const PermGroup& p, unsigned prime) {
    std::vector<CategoryObject> objects{{"P", p}};
    std::vector<CategoryMorphism> morphisms;
    for (auto& h : injections(p, p)) morphisms.push_back(CategoryMorphism{"P", "P", std::move(h)});
    return CategorySpec(prime, CategoryMode::subgroup, std::move(objects), std::move(morphisms));
}

CategorySpec CategorySpec::cu_preset(const PermGroup& p, unsigned prime) {
    std::vector<CategoryObject> objects;
    std::size_t qcount = 0;
    for (auto& sub : subgroups(p)) {
        if (sub == p) {
            objects.push_back(CategoryObject{"P", sub});
        } else {
            ++qcount;
            objects.push_back(CategoryObject{"Q" + std::to_string(qcount), sub});
        }
    }
    std::vector<CategoryMorphism> morphisms;
    for (const auto& src : objects)
        for (const auto& dst : objects)
            for (auto& h : injections(src.group, dst.group))
                morphisms.push_back(CategoryMorphism{src.name, dst.name, std::move(h)});
    return CategorySpec(prime, CategoryMode::subgroup, std::move(objects), std::move(morphisms));
}

}  // namespace stablecoh
