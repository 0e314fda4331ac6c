#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "momaps/acceptance.hpp"
#include "momaps/catalog.hpp"
#include "momaps/enumerate.hpp"
#include "momaps/json_io.hpp"
#include "momaps/melon.hpp"
#include "momaps/series.hpp"

namespace momaps {

namespace {

struct Config {
    std::string input;
    std::string out;
    std::string format;
    int max_vertices = -1;
    int two_delta = -1;
    int order = 400;
    bool planar = false;
    bool melon_free = false;
    bool ratios = false;
    int delta_one_max = 16;
};

class Output {
  public:
    Output(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw ParseError("cannot open output file " + path);
            os_ = file_.get();
        }
    }
    std::ostream& operator*() { return *os_; }

  private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_;
};

json analyze_graph(const MOGraph& g) {
    require_valid(g);
    DegreeReport d = degree(g);
    json j;
    j["V"] = d.V;
    j["E"] = d.E;
    j["components"] = d.c;
    j["F"] = d.F;
    j["F_l"] = d.F_l;
    j["F_r"] = d.F_r;
    j["F_s"] = d.F_s;
    j["g_lr"] = d.g_lr;
    j["two_g_ls"] = d.two_g_ls;
    j["two_g_rs"] = d.two_g_rs;
    j["two_delta"] = d.two_delta;
    j["lambda"] = d.lambda;
    j["planar"] = d.planar();
    json lengths = json::object();
    for (auto [len, n] : d.F_s_by_length) lengths[std::to_string(len)] = n;
    j["straight_face_lengths"] = lengths;
    j["melons"] = find_melons(g).size();
    json dip = {{"L", 0}, {"R", 0}, {"S", 0}};
    for (const Dipole& dp : find_dipoles(g)) dip[to_string(dp.type)] = dip[to_string(dp.type)].get<int>() + 1;
    j["dipoles"] = dip;
    MOGraph core = melon_free_core(g);
    j["core_vertices"] = core.vertex_count();
    if (component_count(core) == 1 && core.rooted()) {
        ExtractedScheme ex = extract_scheme(core);
        ChainAnalysis an = find_maximal_chains(core);
        json chains = json::array();
        for (const Chain& c : an.chains) {
            std::string seq;
            for (DipoleType t : c.dipole_types) seq += to_string(t);
            chains.push_back({{"type", to_string(c.type)}, {"dipoles", seq}});
        }
        j["chains"] = chains;
        SchemeParams p = scheme_params(ex.scheme);
        j["scheme"] = {{"code", canonical_code(ex.scheme).hex()},
                       {"two_p", p.two_p},
                       {"L_R", p.a},
                       {"broken", p.b},
                       {"S_e", p.s_e},
                       {"S_o", p.s_o},
                       {"elements", element_count(ex.scheme)}};
    } else {
        j["scheme"] = nullptr;
    }
    return j;
}

int cmd_analyze(const Config& c, std::ostream& out) {
    MOGraph g = load_graph_file(c.input);
    json j = analyze_graph(g);
    if (c.format == "text") {
        for (auto& [k, v] : j.items()) out << k << ": " << v.dump() << '\n';
    } else {
        out << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_enumerate(const Config& c, std::ostream& out, std::ostream&) {
    if (c.max_vertices < 0) throw CLI::ValidationError("--max-vertices", "required");
    if (c.format == "json") {
        GeneratorOptions o;
        o.max_vertices = c.max_vertices;
        o.max_two_delta = c.two_delta;
        o.melon_free = c.melon_free;
        RootedGenerator gen(o);
        gen.run([&](const MOGraph& g) {
            DegreeReport d = degree(g);
            if (c.two_delta >= 0 && d.two_delta != c.two_delta) return;
            if (c.planar && !d.planar()) return;
            out << graph_to_json(g).dump() << '\n';
        });
        return 0;
    }
    CountFilters f;
    f.planar = c.planar;
    f.melon_free = c.melon_free;
    f.max_two_delta = c.two_delta;
    CountTable t = count_by_degree(c.max_vertices, f);
    if (c.two_delta >= 0)
        for (auto it = t.rows.begin(); it != t.rows.end();)
            it = it->first.second == c.two_delta ? std::next(it) : t.rows.erase(it);
    out << count_table_csv(t);
    return 0;
}

int cmd_catalog(const Config& c, std::ostream& out, std::ostream& err) {
    if (c.two_delta < 0) throw CLI::ValidationError("--two-delta", "required");
    int maxv = c.max_vertices >= 0 ? c.max_vertices : 10;
    SchemeCatalog cat = build_scheme_catalog(c.two_delta, maxv);
    if (c.format == "json") {
        for (const CatalogEntry& e : cat.entries) {
            json j = scheme_to_json(e.scheme);
            j["code"] = e.code.hex();
            j["first_seen"] = e.first_seen;
            j["broken"] = e.params.b;
            j["elements"] = e.elements;
            out << j.dump() << '\n';
        }
    } else {
        out << "code,two_p,L_R,broken,S_e,S_o,elements,first_seen,planar\n";
        for (const CatalogEntry& e : cat.entries)
            out << e.code.hex() << ',' << e.params.two_p << ',' << e.params.a << ',' << e.params.b << ','
                << e.params.s_e << ',' << e.params.s_o << ',' << e.elements << ',' << e.first_seen << ','
                << (e.planar ? 1 : 0) << '\n';
    }
    err << "two_delta=" << c.two_delta << " schemes=" << cat.entries.size() << " scanned=" << cat.graphs_scanned
        << " max_vertices=" << maxv << " last_growth=" << cat.last_growth
        << " stabilized=" << (cat.stabilized ? "yes" : "no") << " violations=" << cat.violations.size() << '\n';
    return cat.violations.empty() ? 0 : 1;
}

int cmd_series(const Config& c, std::ostream& out, std::ostream& err) {
    if (c.two_delta < 0) throw CLI::ValidationError("--two-delta", "required");
    int maxv = c.max_vertices >= 0 ? c.max_vertices : 10;
    SchemeCatalog cat = build_scheme_catalog(c.two_delta, maxv);
    DegreeSeries ds = degree_gf(cat, c.order);
    if (ds.unstabilized) err << "warning: " << ds.warning << '\n';
    if (c.ratios) {
        RatioReport r = asymptotic_check(c.two_delta, ds.series);
        if (!r.estimate_defined) err << "note: the estimate is defined for delta > 0 only; growth rate "
                                     << static_cast<double>(r.fitted_rate) << '\n';
        out << ratio_csv(r);
    } else {
        out << series_csv(ds.series);
    }
    return 0;
}

int cmd_dominant(const Config& c, std::ostream& out, std::ostream& err) {
    if (c.two_delta <= 0) throw CLI::ValidationError("--two-delta", "must be positive");
    auto schemes = gen_dominant_schemes(c.two_delta);
    std::set<CanonicalCode> codes;
    for (const SchemeGraph& s : schemes) {
        if (!codes.insert(canonical_code(s)).second) continue;
        if (c.format == "csv") continue;
        json j = scheme_to_json(s);
        j["code"] = canonical_code(s).hex();
        out << j.dump() << '\n';
    }
    if (c.format == "csv") out << "two_delta,schemes\n" << c.two_delta << ',' << codes.size() << '\n';
    err << codes.size() << " dominant schemes\n";
    return 0;
}

int cmd_verify(const Config& c, std::ostream& out) {
    AcceptanceOptions o;
    if (c.max_vertices >= 0) o.full_max_vertices = c.max_vertices;
    o.series_order = c.order;
    o.delta_one_catalog_max = c.delta_one_max;
    auto results = run_acceptance(o, out);
    json failed = json::array();
    for (const CriterionResult& r : results)
        if (!r.pass) failed.push_back(r.id);
    out << "failed: " << failed.dump() << '\n';
    return failed.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"multi-orientable tensor graph toolkit", "momaps"};
    app.require_subcommand(1);
    Config c;
    auto add_common = [&](CLI::App* s) {
        s->add_option("--out", c.out, "output path (default stdout)");
        s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto* analyze = app.add_subcommand("analyze", "report faces, degree and reduction data of a graph file");
    analyze->add_option("graph", c.input, "JSON graph file")->required();
    add_common(analyze);

    auto* enumerate = app.add_subcommand("enumerate", "rooted graphs: count table (csv) or graphs (json lines)");
    enumerate->add_option("--max-vertices", c.max_vertices)->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--two-delta", c.two_delta, "keep only this doubled degree");
    enumerate->add_flag("--planar", c.planar);
    enumerate->add_flag("--melon-free", c.melon_free);
    add_common(enumerate);

    auto* catalog = app.add_subcommand("catalog", "reduced schemes of one degree");
    catalog->add_option("--two-delta", c.two_delta)->required()->check(CLI::NonNegativeNumber);
    catalog->add_option("--max-vertices", c.max_vertices)->check(CLI::NonNegativeNumber);
    add_common(catalog);

    auto* series = app.add_subcommand("series", "generating function of one degree");
    series->add_option("--two-delta", c.two_delta)->required()->check(CLI::NonNegativeNumber);
    series->add_option("--order", c.order, "truncation order in vertices")->check(CLI::NonNegativeNumber);
    series->add_option("--max-vertices", c.max_vertices, "catalog scan size")->check(CLI::NonNegativeNumber);
    series->add_flag("--ratios", c.ratios, "print the asymptotic ratio report instead");
    add_common(series);

    auto* dominant = app.add_subcommand("dominant", "dominant schemes from binary trees");
    dominant->add_option("--two-delta", c.two_delta)->required()->check(CLI::PositiveNumber);
    add_common(dominant);

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--max-vertices", c.max_vertices, "size of the full enumeration")->check(CLI::NonNegativeNumber);
    verify->add_option("--order", c.order)->check(CLI::NonNegativeNumber);
    verify->add_option("--delta-one-max", c.delta_one_max, "catalog scan size for dominant schemes of degree 1")
        ->check(CLI::NonNegativeNumber);
    add_common(verify);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? 0 : 2;
    }
    try {
        Output o(c.out, out);
        if (*analyze) return cmd_analyze(c, *o);
        if (*enumerate) return cmd_enumerate(c, *o, err);
        if (*catalog) return cmd_catalog(c, *o, err);
        if (*series) return cmd_series(c, *o, err);
        if (*dominant) return cmd_dominant(c, *o, err);
        if (*verify) return cmd_verify(c, *o);
    } catch (const ValidationError& e) {
        err << "ValidationError: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "ParseError: " << e.what() << '\n';
        return 2;
    } catch (const CLI::Error& e) {
        err << e.get_name() << ": " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        err << "ParseError: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace momaps
