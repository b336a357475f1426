// Command-line front end: loads a graph (edge list, raw distance matrix, or
// family generator), runs the requested analysis, prints deterministic JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "granular/granular.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

struct loaded_input {
    granular::information_table table;
    std::vector<std::string> labels;
    std::vector<std::string> warnings;
    std::optional<granular::graph> g;
    std::optional<granular::zn_graph_meta> zn;
    std::optional<granular::boolean_ring_meta> boolean_ring;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw granular::error("io", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

loaded_input load_family(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw granular::error("bad family", "expected NAME:PARAMS, got " + spec);
    const std::string name = spec.substr(0, colon);
    std::vector<int> params;
    std::stringstream ps(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ps, tok, ','))
        try {
            params.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw granular::error("bad family", "non-numeric parameter '" + tok + "'");
        }
    if (params.empty()) throw granular::error("bad family", "missing parameters in " + spec);

    loaded_input out;
    if (name == "path") out.g = granular::make_family(granular::family::path, params);
    else if (name == "cycle") out.g = granular::make_family(granular::family::cycle, params);
    else if (name == "complete") out.g = granular::make_family(granular::family::complete, params);
    else if (name == "kmn") {
        if (params.size() != 2) throw granular::error("bad family", "kmn needs two parameters");
        out.g = granular::make_family(granular::family::complete_bipartite, params);
    } else if (name == "zmod") {
        auto [g, meta] = granular::gamma_zn(params[0]);
        out.g = std::move(g);
        out.zn = std::move(meta);
    } else if (name == "bool") {
        auto [g, meta] = granular::gamma_boolean(params[0]);
        out.g = std::move(g);
        out.boolean_ring = std::move(meta);
    } else
        throw granular::error("bad family", "unknown family '" + name + "'");

    out.labels = out.g->labels;
    out.table = granular::make_table(*out.g);
    return out;
}

loaded_input load(const std::string& edges, const std::string& matrix, const std::string& fam) {
    const int sources = !edges.empty() + !matrix.empty() + !fam.empty();
    if (sources != 1)
        throw granular::error("bad arguments", "exactly one of --edges/--matrix/--family required");
    if (!fam.empty()) return load_family(fam);
    if (!edges.empty()) {
        loaded_input out;
        out.g = granular::parse_edge_list(read_file(edges));
        out.labels = out.g->labels;
        out.table = granular::make_table(*out.g);
        return out;
    }
    auto lt = granular::load_matrix(read_file(matrix));
    loaded_input out;
    out.table = std::move(lt.table);
    out.labels = std::move(lt.labels);
    out.warnings = std::move(lt.warnings);
    return out;
}

int enumeration_cap(int fallback) {
    if (const char* env = std::getenv("GRANULAR_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw granular::error("bad arguments", "GRANULAR_CAP must be an integer");
        }
    }
    return fallback;
}

ordered_json subset_json(const granular::vertex_subset& s, const std::vector<std::string>& labels) {
    ordered_json out = ordered_json::array();
    for (granular::vertex v : s) out.push_back(labels[v]);
    return out;
}

ordered_json subsets_json(const std::vector<granular::vertex_subset>& ss,
                          const std::vector<std::string>& labels) {
    ordered_json out = ordered_json::array();
    for (const auto& s : ss) out.push_back(subset_json(s, labels));
    return out;
}

granular::vertex_subset parse_labels(const std::string& csv, const std::vector<std::string>& labels) {
    granular::vertex_subset out;
    std::stringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto it = std::find(labels.begin(), labels.end(), tok);
        if (it == labels.end()) throw granular::error("unknown label", "no vertex labeled '" + tok + "'");
        out.push_back(static_cast<granular::vertex>(it - labels.begin()));
    }
    return granular::make_subset(std::move(out));
}

ordered_json reducts_json(const loaded_input& in, const std::string& method) {
    const int cap = enumeration_cap(20);
    std::optional<granular::reduct_report> brute;
    std::optional<std::vector<granular::vertex_subset>> transversal;

    if (method == "bruteforce" || method == "both")
        brute = granular::enumerate_reducts(in.table, cap);
    if (method == "transversal" || method == "both") {
        if (in.table.n() > cap)
            throw granular::error("enumeration cap", "n exceeds cap " + std::to_string(cap));
        const auto dm = granular::discernibility_matrix(in.table);
        transversal = granular::enumerate_reducts_transversal(granular::distinct_entries(dm),
                                                              in.table.n());
    }

    granular::reduct_report report;
    if (brute) report = *brute;
    else {
        report.reducts = *transversal;
        report.metric_dimension = static_cast<int>(report.reducts.front().size());
        granular::vertex_subset everything = granular::full_subset(in.table.n());
        report.core = everything;
        granular::vertex_subset covered;
        for (const auto& r : report.reducts) {
            report.upper_dimension = std::max(report.upper_dimension, static_cast<int>(r.size()));
            report.core = granular::subset_intersection(report.core, r);
            covered = granular::subset_union(covered, r);
        }
        report.void_set = granular::subset_difference(everything, covered);
    }

    ordered_json out;
    out["metric_dimension"] = report.metric_dimension;
    out["upper_dimension"] = report.upper_dimension;
    out["reducts"] = subsets_json(report.reducts, in.labels);
    out["core"] = subset_json(report.core, in.labels);
    out["void"] = subset_json(report.void_set, in.labels);
    if (method == "both") out["methods_agree"] = brute->reducts == *transversal;
    return out;
}

ordered_json analyze_json(const loaded_input& in) {
    ordered_json out;
    out["n"] = in.table.n();
    out["diameter"] = in.table.dm.diameter();
    if (in.g) {
        out["edges"] = in.g->edge_count();
        out["max_degree"] = granular::max_degree(*in.g);
    }
    const auto classes = granular::distance_similar_classes(in.table.dm);
    out["distance_similar_classes"] = subsets_json(classes.blocks, in.labels);
    out["twin_free"] = std::all_of(classes.blocks.begin(), classes.blocks.end(),
                                   [](const auto& b) { return b.size() == 1; });
    const auto ess = granular::essential_sets(granular::discernibility_matrix(in.table));
    out["essential_dimension"] = ess.essential_dimension;
    const auto reducts = granular::enumerate_reducts(in.table, classes, enumeration_cap(20));
    out["metric_dimension"] = reducts.metric_dimension;
    out["upper_dimension"] = reducts.upper_dimension;
    out["core"] = subset_json(reducts.core, in.labels);
    out["void"] = subset_json(reducts.void_set, in.labels);
    if (!in.warnings.empty()) out["warnings"] = in.warnings;
    return out;
}

ordered_json partitions_json(const loaded_input& in, const std::string& subset) {
    ordered_json out;
    if (subset == "all") {
        out["mode"] = "distance-similar";
        out["blocks"] = subsets_json(granular::distance_similar_classes(in.table.dm).blocks, in.labels);
    } else {
        const auto attrs = parse_labels(subset, in.labels);
        const auto pi = granular::partition(in.table, attrs);
        out["mode"] = "indiscernibility";
        out["attributes"] = subset_json(attrs, in.labels);
        out["blocks"] = subsets_json(pi.blocks, in.labels);
        out["discrete"] = pi.is_discrete();
    }
    return out;
}

ordered_json essential_json(const loaded_input& in) {
    const auto report = granular::essential_sets(granular::discernibility_matrix(in.table));
    ordered_json out;
    out["essential_sets"] = subsets_json(report.essential_sets, in.labels);
    out["essential_dimension"] = report.essential_dimension;
    ordered_json counts;
    for (const auto& [size, count] : report.counts_by_size) counts[std::to_string(size)] = count;
    out["counts_by_size"] = counts;
    return out;
}

ordered_json rough_json(const loaded_input& in, const std::string& attrs_csv,
                        const std::string& target_csv) {
    const auto attrs = parse_labels(attrs_csv, in.labels);
    const auto target = parse_labels(target_csv, in.labels);
    const auto approx = granular::approximate(in.table, attrs, target);
    const auto pos = granular::positive_region(in.table, attrs, granular::full_subset(in.table.n()));
    const auto kappa = granular::dependency(in.table, attrs, granular::full_subset(in.table.n()));
    ordered_json out;
    out["attributes"] = subset_json(attrs, in.labels);
    out["target"] = subset_json(target, in.labels);
    out["lower"] = subset_json(approx.lower, in.labels);
    out["upper"] = subset_json(approx.upper, in.labels);
    out["exact"] = approx.exact;
    out["positive_region"] = subset_json(pos, in.labels);
    out["dependency"] = std::to_string(kappa.num) + "/" + std::to_string(kappa.den);
    return out;
}

ordered_json discern_json(const loaded_input& in, bool closed_form) {
    const auto dm = granular::discernibility_matrix(in.table);
    ordered_json out;
    ordered_json entries = ordered_json::array();
    for (const auto& [key, entry] : dm.entries) {
        ordered_json row;
        row["pair"] = ordered_json::array({in.labels[key.first], in.labels[key.second]});
        row["entry"] = subset_json(entry, in.labels);
        row["size"] = entry.size();
        entries.push_back(std::move(row));
    }
    out["entries"] = entries;
    out["distinct"] = subsets_json(granular::distinct_entries(dm), in.labels);

    if (closed_form) {
        if (!in.zn && !in.boolean_ring)
            throw granular::error("bad family",
                                  "--closed-form requires a zmod:N or bool:K family source");
        bool agrees = true;
        for (const auto& [key, entry] : dm.entries) {
            std::vector<int> cf;
            granular::vertex_subset mapped;
            if (in.zn) {
                cf = granular::closed_form_delta_zn(in.zn->n, in.zn->ring_element(key.first),
                                                    in.zn->ring_element(key.second));
                for (int e : cf) mapped.push_back(in.zn->index_of(e));
            } else {
                cf = granular::closed_form_delta_boolean(
                    in.boolean_ring->k, in.boolean_ring->bits(key.first),
                    in.boolean_ring->bits(key.second));
                for (int e : cf) mapped.push_back(in.boolean_ring->index_of(static_cast<unsigned>(e)));
            }
            if (granular::make_subset(std::move(mapped)) != entry) {
                agrees = false;
                break;
            }
        }
        out["closed_form_agrees"] = agrees;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rough-set analysis of graph distance matrices"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --edges/--matrix/--family after the subcommand

    std::string edges, matrix, fam;
    app.add_option("--edges", edges, "edge list file (LABEL LABEL per line)");
    app.add_option("--matrix", matrix, "distance matrix CSV file");
    app.add_option("--family", fam,
                   "family spec: path:N cycle:N complete:N kmn:M,N zmod:N bool:K");

    auto* cmd_analyze = app.add_subcommand("analyze", "summary report");
    auto* cmd_partitions = app.add_subcommand("partitions", "indiscernibility partition");
    std::string subset = "all";
    cmd_partitions->add_option("--subset", subset, "comma-separated labels, or 'all'");
    auto* cmd_reducts = app.add_subcommand("reducts", "all minimal resolving sets");
    std::string method = "both";
    cmd_reducts->add_option("--method", method, "bruteforce | transversal | both")
        ->check(CLI::IsMember({"bruteforce", "transversal", "both"}));
    auto* cmd_essential = app.add_subcommand("essential", "essential sets");
    auto* cmd_rough = app.add_subcommand("rough", "rough approximation of a target set");
    std::string attrs_csv, target_csv;
    cmd_rough->add_option("--attrs", attrs_csv, "attribute labels")->required();
    cmd_rough->add_option("--target", target_csv, "target labels")->required();
    auto* cmd_discern = app.add_subcommand("discern", "discernibility matrix");
    bool closed_form = false;
    cmd_discern->add_flag("--closed-form", closed_form, "cross-check family closed forms");

    CLI11_PARSE(app, argc, argv);

    try {
        const loaded_input in = load(edges, matrix, fam);
        ordered_json out;
        if (cmd_analyze->parsed()) out = analyze_json(in);
        else if (cmd_partitions->parsed()) out = partitions_json(in, subset);
        else if (cmd_reducts->parsed()) out = reducts_json(in, method);
        else if (cmd_essential->parsed()) out = essential_json(in);
        else if (cmd_rough->parsed()) out = rough_json(in, attrs_csv, target_csv);
        else if (cmd_discern->parsed()) out = discern_json(in, closed_form);
        std::cout << out.dump(2) << "\n";
        return 0;
    } catch (const granular::error& e) {
        ordered_json err;
        err["error"] = e.code();
        err["detail"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        ordered_json err;
        err["error"] = "internal";
        err["detail"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 2;
    }
}
