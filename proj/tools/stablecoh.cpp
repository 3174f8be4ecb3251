/* stablecoh: cohomology of small p-groups via minimal resolutions, stable
 * element subrings over explicit categories of subgroups, one-vertex
 * graph-of-groups dimension bookkeeping, and mod-2 invariant theory. */

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stablecoh/bar_oracle.hpp"
#include "stablecoh/catalog.hpp"
#include "stablecoh/conjugator.hpp"
#include "stablecoh/errors.hpp"
#include "stablecoh/gamma_presentation.hpp"
#include "stablecoh/invariants.hpp"
#include "stablecoh/poly_model.hpp"
#include "stablecoh/stable_limits.hpp"

using nlohmann::ordered_json;
using namespace stablecoh;

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct CommonOpts {
    std::string group;
    std::string preset;
    std::string input;
    std::string format = "text";
    std::string out;
    std::string dump_category;
    unsigned prime = 0;
    std::size_t max_degree = 6;
};

void add_category_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--group", o.group, "catalog group name");
    cmd->add_option("--preset", o.preset, "category preset: identity | aut | cu | dickson-N");
    cmd->add_option("--input", o.input, "CategorySpec JSON file (exclusive with --preset)");
    cmd->add_option("--dump-category", o.dump_category, "also write the category as JSON here");
    cmd->add_option("--prime", o.prime, "coefficient prime (default: the group's natural prime)");
    cmd->add_option("--max-degree", o.max_degree, "top cohomological degree")->check(CLI::Range(0, 12));
}

void add_output_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out, "write the report here instead of stdout");
}

unsigned effective_prime(const CommonOpts& o) {
    if (o.prime) {
        if (!is_supported_prime(o.prime)) throw UsageError("unsupported prime");
        return o.prime;
    }
    if (!o.group.empty()) return catalog_prime(o.group);
    throw UsageError("--prime is required without --group");
}

CategorySpec build_category(const CommonOpts& o) {
    if (!o.input.empty()) {
        if (!o.preset.empty() || !o.group.empty())
            throw UsageError("--input is exclusive with --preset/--group");
        return CategorySpec::load(o.input);
    }
    if (o.preset.empty()) throw UsageError("need --preset or --input");

    if (o.preset.rfind("dickson-", 0) == 0) {
        unsigned n = static_cast<unsigned>(std::stoul(o.preset.substr(8)));
        static const std::map<unsigned, const char*> groups{
            {1, "z2"}, {2, "klein4"}, {3, "z2_3"}, {4, "z2_4"}};
        auto it = groups.find(n);
        if (it == groups.end()) throw UsageError("dickson preset rank must be 1..4");
        return CategorySpec::aut_preset(catalog_group(it->second), 2);
    }

    if (o.group.empty()) throw UsageError("preset \"" + o.preset + "\" needs --group");
    PermGroup p = catalog_group(o.group);
    unsigned prime = effective_prime(o);
    if (o.preset == "identity") return CategorySpec::identity_preset(p, prime);
    if (o.preset == "aut") return CategorySpec::aut_preset(p, prime);
    if (o.preset == "cu") return CategorySpec::cu_preset(p, prime);
    throw UsageError("unknown preset \"" + o.preset + "\"");
}

CategorySpec build_category_and_dump(const CommonOpts& o) {
    CategorySpec cat = build_category(o);
    if (!o.dump_category.empty()) {
        std::ofstream f(o.dump_category);
        if (!f) throw UsageError("cannot write \"" + o.dump_category + "\"");
        f << cat.to_json();
    }
    return cat;
}

ordered_json config_json(const std::string& subcommand, const CommonOpts& o, unsigned prime) {
    ordered_json j;
    j["subcommand"] = subcommand;
    if (!o.group.empty()) j["group"] = o.group;
    if (!o.preset.empty()) j["preset"] = o.preset;
    if (!o.input.empty()) j["input"] = o.input;
    j["prime"] = prime;
    j["max_degree"] = o.max_degree;
    j["deterministic"] = true;
    return j;
}

ordered_json envelope(const std::string& subcommand, const CommonOpts& o, unsigned prime,
                      ordered_json report) {
    ordered_json j;
    j["tool"] = "stablecoh";
    j["version"] = kToolVersion;
    j["config"] = config_json(subcommand, o, prime);
    j["report"] = std::move(report);
    return j;
}

ordered_json subspace_json(const Subspace& s) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < s.ambient_dim(); ++c) row.push_back(int(s.basis().at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

void emit(const CommonOpts& o, const ordered_json& doc, const std::string& text) {
    std::ostringstream body;
    if (o.format == "json")
        body << doc.dump(2) << "\n";
    else
        body << text;
    if (o.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(o.out);
        if (!f) throw UsageError("cannot write output file \"" + o.out + "\"");
        f << body.str();
    }
}

void progress(const std::string& line) { std::cerr << line << "\n"; }

int run_cohomology(const CommonOpts& o, bool oracle, bool cup_table, bool dump_resolution) {
    if (o.group.empty()) throw UsageError("cohomology needs --group");
    PermGroup g = catalog_group(o.group);
    unsigned prime = effective_prime(o);
    Resolution r = minimal_resolution(g, prime, o.max_degree);

    ordered_json rep;
    rep["betti"] = r.betti();
    bool oracle_agrees = true;
    if (oracle) {
        if (g.order() > 8) throw UsageError("--oracle needs |G| <= 8");
        ordered_json checks = ordered_json::array();
        for (std::size_t n = 0; n <= std::min<std::size_t>(4, o.max_degree); ++n) {
            std::size_t bar = bar_betti_oracle(g, prime, n);
            checks.push_back({{"degree", n}, {"resolution", r.rank(n)}, {"bar", bar}});
            if (bar != r.rank(n)) oracle_agrees = false;
            progress("oracle degree " + std::to_string(n) + ": " + std::to_string(bar));
        }
        rep["oracle"] = checks;
        rep["oracle_agrees"] = oracle_agrees;
    }
    if (cup_table) {
        /* products of the degree-1 dual basis, as coefficient vectors */
        ordered_json table = ordered_json::array();
        for (std::size_t i = 0; i < r.rank(1); ++i)
            for (std::size_t j = 0; j < r.rank(1); ++j) {
                CohomClass x{1, std::vector<std::uint8_t>(r.rank(1), 0)};
                CohomClass y{1, std::vector<std::uint8_t>(r.rank(1), 0)};
                x.coeffs[i] = 1;
                y.coeffs[j] = 1;
                CohomClass z = cup(r, x, y);
                ordered_json row = ordered_json::array();
                for (auto v : z.coeffs) row.push_back(int(v));
                table.push_back({{"i", i}, {"j", j}, {"product", row}});
            }
        rep["cup_degree1_table"] = table;
    }
    if (dump_resolution) rep["resolution"] = r.report();

    std::ostringstream text;
    text << "group " << o.group << " (order " << g.order() << "), p = " << prime << "\n";
    text << "dim H^n for n = 0.." << o.max_degree << ":";
    for (auto b : r.betti()) text << " " << b;
    text << "\n";
    if (oracle) text << "bar-complex oracle agreement: " << (oracle_agrees ? "yes" : "NO") << "\n";
    if (dump_resolution) text << r.report();

    emit(o, envelope("cohomology", o, prime, rep), text.str());
    if (oracle && !oracle_agrees)
        throw InternalCheckError("bar-complex oracle disagrees with the minimal resolution");
    return 0;
}

int run_stable(const CommonOpts& o, bool closure) {
    CategorySpec cat = build_category_and_dump(o);
    StableContext ctx(cat, o.max_degree);
    for (std::size_t n = 0; n <= o.max_degree; ++n) {
        ctx.limit_basis(n);
        progress("degree " + std::to_string(n) + " done");
    }
    StableReport rep = ctx.stable_report();

    ordered_json j;
    j["mode"] = cat.mode() == CategoryMode::subgroup ? "subgroup" : "abstract";
    j["objects"] = cat.objects().size();
    j["edge_count"] = rep.edge_count;
    j["limit_dims"] = rep.limit_dims();
    j["ambient_dims"] = rep.ambient_dims;
    j["condition_ranks"] = rep.condition_ranks;
    j["coker_dims"] = rep.coker_dims;
    ordered_json bases = ordered_json::array();
    for (const auto& s : rep.limit_bases) bases.push_back(subspace_json(s));
    j["limit_bases"] = bases;
    if (closure) {
        ClosureReport cr = ctx.ring_closure_check();
        j["closure"] = {{"closed", cr.closed},
                        {"pairs_checked", cr.pairs_checked},
                        {"violations", cr.violations}};
        if (!cr.closed) {
            emit(o, envelope("stable", o, cat.prime(), j), "closure violation\n");
            throw InternalCheckError("limit is not closed under products");
        }
    }

    std::ostringstream text;
    text << "stable limit over " << cat.objects().size() << " object(s), " << rep.edge_count
         << " morphism(s), p = " << cat.prime() << "\n";
    text << "dim I^n for n = 0.." << o.max_degree << ":";
    for (auto d : rep.limit_dims()) text << " " << d;
    text << "\n";
    for (std::size_t n = 0; n <= o.max_degree; ++n)
        text << "  n=" << n << ": dim I=" << rep.limit_bases[n].dim()
             << " rank(d1)=" << rep.condition_ranks[n] << " coker=" << rep.coker_dims[n] << "\n";

    emit(o, envelope("stable", o, cat.prime(), j), text.str());
    return 0;
}

int run_gamma(const CommonOpts& o, const std::string& presentation_out) {
    CategorySpec cat = build_category_and_dump(o);
    StableContext ctx(cat, o.max_degree);
    GammaReport rep = ctx.gamma_report();
    GammaPresentation pres = gamma_presentation(cat);

    ordered_json j;
    j["edge_count"] = rep.edge_count;
    j["gamma_dims"] = rep.gamma_dims;
    j["limit_dims"] = rep.limit_dims;
    j["coker_dims"] = rep.coker_dims;
    j["generators"] = pres.generator_names.size();
    j["relations"] = pres.relations.size();
    std::istringstream pres_lines(pres.to_text());
    ordered_json lines = ordered_json::array();
    std::string line;
    while (std::getline(pres_lines, line)) lines.push_back(line);
    j["presentation"] = lines;

    if (!presentation_out.empty()) {
        std::ofstream f(presentation_out);
        if (!f) throw UsageError("cannot write \"" + presentation_out + "\"");
        f << pres.to_text();
    }

    std::ostringstream text;
    text << "one-vertex group over " << rep.edge_count << " edge(s)\n";
    text << "dim H^n for n = 0.." << o.max_degree << ":";
    for (auto d : rep.gamma_dims) text << " " << d;
    text << "\n";
    for (std::size_t n = 0; n <= o.max_degree; ++n)
        text << "  n=" << n << ": dim I=" << rep.limit_dims[n]
             << " + coker^(n-1)=" << (n ? rep.coker_dims[n - 1] : 0) << "\n";
    text << pres.to_text();

    emit(o, envelope("gamma", o, cat.prime(), j), text.str());
    return 0;
}

int run_quotient(const CommonOpts& o, std::size_t closure_cap) {
    CategorySpec cat = build_category_and_dump(o);
    FiniteQuotientReport rep = finite_quotient(cat, closure_cap);

    ordered_json j;
    ordered_json imgs = ordered_json::array();
    for (std::size_t i = 0; i < rep.generator_images.size(); ++i)
        imgs.push_back({{"generator", rep.presentation.generator_names[i]},
                        {"image", rep.generator_images[i].to_cycles()}});
    j["images"] = imgs;
    j["image_order"] = rep.image_order;
    j["order_bound"] = rep.order_bound;
    j["relations"] = rep.presentation.relations.size();
    j["relations_hold"] = rep.relations_hold;
    j["restriction_injective"] = rep.restriction_injective;
    j["order_divides_bound"] = rep.order_divides_bound;

    std::ostringstream text;
    text << "finite quotient in Sym(" << cat.ambient().order() << ")\n";
    for (std::size_t i = 0; i < rep.generator_images.size(); ++i)
        text << "  " << rep.presentation.generator_names[i] << " -> "
             << rep.generator_images[i].to_cycles() << "\n";
    text << "image order " << rep.image_order << ", divides " << rep.order_bound << ": "
         << (rep.order_divides_bound ? "yes" : "NO") << "\n";
    text << "all " << rep.presentation.relations.size()
         << " relations hold: " << (rep.relations_hold ? "yes" : "NO") << "\n";
    text << "restriction to the vertex group injective: "
         << (rep.restriction_injective ? "yes" : "NO") << "\n";

    emit(o, envelope("quotient", o, cat.prime(), j), text.str());
    if (!rep.all_checks_pass()) throw InternalCheckError("finite quotient checks failed");
    return 0;
}

int run_conjugator(const CommonOpts& o, const std::string& phi_text) {
    if (o.group.empty()) throw UsageError("conjugator needs --group");
    PermGroup p = catalog_group(o.group);
    if (p.generators().size() > 26) throw UsageError("too many generators for letter names");

    /* parse "a:b,b:a": generator letter -> word in generator letters */
    auto letter_index = [&](char ch) -> std::size_t {
        std::size_t idx = static_cast<std::size_t>(ch - 'a');
        if (ch < 'a' || idx >= p.generators().size())
            throw UsageError(std::string("unknown generator letter '") + ch + "'");
        return idx;
    };
    std::vector<Perm> images(p.generators().size());
    std::vector<bool> seen(p.generators().size(), false);
    std::istringstream ss(phi_text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto colon = part.find(':');
        if (colon == std::string::npos || colon == 0)
            throw UsageError("--phi wants entries like a:b or b:ab");
        std::string src_txt = part.substr(0, colon);
        if (src_txt.size() != 1) throw UsageError("--phi source must be one letter");
        std::size_t src = letter_index(src_txt[0]);
        Perm img = Perm::identity(p.degree());
        for (std::size_t i = colon + 1; i < part.size(); ++i) {
            if (std::isspace(static_cast<unsigned char>(part[i]))) continue;
            img = img * p.generators()[letter_index(part[i])];
        }
        images[src] = img;
        seen[src] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw UsageError("--phi is missing generator '" + std::string(1, char('a' + i)) + "'");

    GroupHom phi(p, p, images);
    if (!phi.is_injective()) throw UsageError("--phi does not define an injective homomorphism");
    ConjugatorWitness w = find_conjugator(phi);

    ordered_json j;
    j["witness"] = w.conjugator.to_cycles();
    j["verified"] = w.verify();
    ordered_json checks = ordered_json::array();
    for (std::size_t i = 0; i < p.order(); ++i) {
        Perm lhs = w.conjugator * cayley_image(p, p.element(i)) * w.conjugator.inverse();
        checks.push_back({{"q", p.element(i).to_cycles()},
                          {"conjugated", lhs.to_cycles()},
                          {"image", cayley_image(p, phi.map_element(i)).to_cycles()}});
    }
    j["conjugation_checks"] = checks;

    std::ostringstream text;
    text << "witness " << w.conjugator.to_cycles() << " (verified: " << (w.verify() ? "yes" : "NO")
         << ")\n";
    for (std::size_t i = 0; i < p.order(); ++i)
        text << "  g cay(" << p.element(i).to_cycles() << ") g^-1 = cay("
             << phi.map_element(i).to_cycles() << ")\n";

    emit(o, envelope("conjugator", o, effective_prime(o), j), text.str());
    if (!w.verify()) throw InternalCheckError("conjugator witness failed verification");
    return 0;
}

int run_invariants(const CommonOpts& o, unsigned nvars, const std::string& mgroup, bool compare) {
    if (nvars == 0 || nvars > 4) throw UsageError("--rank must be 1..4");
    MatrixGroup2 h = MatrixGroup2::trivial(nvars);
    if (mgroup == "gl") {
        h = MatrixGroup2::general_linear(nvars);
    } else if (mgroup == "swap") {
        if (nvars < 2) throw UsageError("swap needs rank >= 2");
        Mat2 s(nvars);
        for (unsigned i = 2; i < nvars; ++i) s.set(i, i, 1);
        s.set(0, 1, 1);
        s.set(1, 0, 1);
        h = MatrixGroup2::from_generators(nvars, {s});
    } else if (mgroup != "trivial") {
        throw UsageError("--matrix-group must be gl | swap | trivial");
    }

    ordered_json j;
    j["rank"] = nvars;
    j["matrix_group"] = mgroup;
    j["group_order"] = h.order();
    ordered_json dims = ordered_json::array();
    for (std::size_t d = 0; d <= o.max_degree; ++d) dims.push_back(invariant_basis(h, d).dim());
    j["invariant_dims"] = dims;
    ordered_json dickson = ordered_json::array();
    for (const auto& g : dickson_generators(nvars))
        dickson.push_back({{"degree", g.degree}, {"polynomial", g.poly.to_string()}});
    j["dickson_generators"] = dickson;
    bool compare_match = true;
    if (compare) {
        auto rep = compare_invariants_vs_limit(nvars, h, o.max_degree);
        compare_match = rep.match;
        j["compare"] = {{"match", rep.match},
                        {"limit_dims", rep.limit_dims},
                        {"invariant_dims", rep.invariant_dims}};
    }

    std::ostringstream text;
    text << "invariants of a rank-" << nvars << " matrix group of order " << h.order() << "\n";
    text << "fixed-space dims for d = 0.." << o.max_degree << ":";
    for (std::size_t d = 0; d <= o.max_degree; ++d) text << " " << invariant_basis(h, d).dim();
    text << "\ndickson generators:\n";
    for (const auto& g : dickson_generators(nvars))
        text << "  degree " << g.degree << ": " << g.poly.to_string() << "\n";
    if (compare) text << "limit comparison: " << (compare_match ? "match" : "MISMATCH") << "\n";

    emit(o, envelope("invariants", o, 2, j), text.str());
    if (!compare_match)
        throw InternalCheckError("invariant ring disagrees with the one-object limit");
    return 0;
}

int run_finiteness(const CommonOpts& o, std::size_t window) {
    CategorySpec cat = build_category_and_dump(o);
    StableContext ctx(cat, o.max_degree);
    FinitenessReport rep = ctx.module_finiteness(window);

    ordered_json j;
    j["generator_degrees"] = rep.generator_degrees;
    j["generator_count"] = rep.generator_degrees.size();
    j["window"] = rep.window;
    j["stable_in_window"] = rep.stable_in_window;

    std::ostringstream text;
    text << "module generators over the stable subring (degrees): ";
    for (auto d : rep.generator_degrees) text << d << " ";
    text << "\nno new generators in the top " << window
         << " degrees: " << (rep.stable_in_window ? "yes" : "no") << "\n";

    emit(o, envelope("finiteness", o, cat.prime(), j), text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohomology of small p-groups, stable-element subrings, and their one-vertex groups"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    CommonOpts o;
    bool oracle = false, cup_table = false, dump_resolution = false, closure = false,
         compare = false;
    unsigned nvars = 2;
    std::string phi_text, presentation_out, mgroup = "gl";
    std::size_t closure_cap = 500000, window = 3;

    auto* c_coh = app.add_subcommand("cohomology", "Betti numbers of a catalog group");
    add_category_options(c_coh, o);
    add_output_options(c_coh, o);
    c_coh->add_flag("--oracle", oracle, "cross-check against the bar complex (|G| <= 8, n <= 4)");
    c_coh->add_flag("--cup-table", cup_table, "emit the degree-1 cup table");
    c_coh->add_flag("--dump-resolution", dump_resolution, "emit the resolution report");

    auto* c_st = app.add_subcommand("stable", "limit of H^* over a category");
    add_category_options(c_st, o);
    add_output_options(c_st, o);
    c_st->add_flag("--closure-check", closure, "verify the limit is closed under products");

    auto* c_ga = app.add_subcommand("gamma", "one-vertex group dimensions and presentation");
    add_category_options(c_ga, o);
    add_output_options(c_ga, o);
    c_ga->add_option("--presentation-out", presentation_out, "write the presentation text here");

    auto* c_qu = app.add_subcommand("quotient", "finite symmetric-group quotient");
    add_category_options(c_qu, o);
    add_output_options(c_qu, o);
    c_qu->add_option("--closure-cap", closure_cap, "image closure size cap");

    auto* c_cj = app.add_subcommand("conjugator", "conjugating witness for one injection");
    add_category_options(c_cj, o);
    add_output_options(c_cj, o);
    c_cj->add_option("--phi", phi_text, "generator images, e.g. \"a:b,b:a\"")->required();

    auto* c_in = app.add_subcommand("invariants", "fixed spaces and Dickson generators");
    add_output_options(c_in, o);
    c_in->add_option("--rank", nvars, "number of variables (1..4)")->required();
    c_in->add_option("--max-degree", o.max_degree, "top degree")->check(CLI::Range(0, 12));
    c_in->add_option("--matrix-group", mgroup, "gl | swap | trivial");
    c_in->add_flag("--compare", compare, "cross-check against the one-object limit (rank <= 3)");

    auto* c_fi = app.add_subcommand("finiteness", "module generators over the stable subring");
    add_category_options(c_fi, o);
    add_output_options(c_fi, o);
    c_fi->add_option("--window", window, "top degrees that must stay generator-free");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_coh->parsed()) return run_cohomology(o, oracle, cup_table, dump_resolution);
        if (c_st->parsed()) return run_stable(o, closure);
        if (c_ga->parsed()) return run_gamma(o, presentation_out);
        if (c_qu->parsed()) return run_quotient(o, closure_cap);
        if (c_cj->parsed()) return run_conjugator(o, phi_text);
        if (c_in->parsed()) return run_invariants(o, nvars, mgroup, compare);
        if (c_fi->parsed()) return run_finiteness(o, window);
    } catch (const InternalCheckError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
