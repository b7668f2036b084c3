#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "staruniv/connectivity.hpp"
#include "staruniv/containment.hpp"
#include "staruniv/decomposition.hpp"
#include "staruniv/gadgets.hpp"
#include "staruniv/graph.hpp"
#include "staruniv/longpath.hpp"
#include "staruniv/reduction.hpp"
#include "staruniv/serialize.hpp"
#include "staruniv/skfree.hpp"
#include "staruniv/staruniversal.hpp"
#include "staruniv/validate.hpp"

using namespace staruniv;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& doc, const std::string& path) {
    std::string bytes = doc.dump() + "\n";
    if (path == "-" || path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw error("cannot open output file: " + path);
    out << bytes;
}

void emit_raw(const std::string& bytes, const std::string& path) {
    if (path == "-" || path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw error("cannot open output file: " + path);
    out << bytes;
}

json parse_json(const std::string& bytes) {
    try {
        return json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("JSON parse error: ") + e.what(), e.byte);
    }
}

StarPattern parse_star(const std::string& spec) {
    std::vector<int> legs;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            legs.push_back(std::stoi(item));
    return StarPattern(legs);
}

json error_doc(const std::string& type, const std::string& message, json extra = nullptr) {
    json doc;
    doc["error"] = {{"type", type}, {"message", message}};
    if (!extra.is_null())
        doc["error"]["certificate"] = extra;
    return doc;
}

json decomposition_to_json(const Decomposition& d) {
    json parts = json::array();
    for (const auto& [v, vertices] : d.parts)
        parts.push_back(json{{"v", v}, {"vertices", vertices}});
    json out;
    out["core"] = d.core;
    out["parts"] = std::move(parts);
    return out;
}

Decomposition decomposition_from_json(const json& j) {
    Decomposition d;
    d.core = j.at("core").get<std::vector<int>>();
    for (const auto& part : j.at("parts"))
        d.parts[part.at("v").get<int>()] = part.at("vertices").get<std::vector<int>>();
    return d;
}

json report_to_json(const Report& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back(json{{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
    return entries;
}

struct VerifyOutcome {
    bool ok;
    std::string detail;
};

// The verify path re-checks certificates against the definitions only; it
// never invokes the searches.
VerifyOutcome verify_one(const json& doc) {
    std::string kind = doc.at("kind").get<std::string>();
    auto fail_list = [](const std::vector<std::string>& problems) -> VerifyOutcome {
        if (problems.empty())
            return {true, ""};
        return {false, problems.front()};
    };
    if (kind == "star") {
        StarPattern pattern(doc.at("pattern").get<std::vector<int>>());
        Graph host = graph_from_json(doc.at("host")).graph;
        StarWitness w = star_witness_from_json(doc.at("certificate"));
        return fail_list(check_star_witness(pattern, host, w));
    }
    if (kind == "subgraph") {
        DecodedGraph pattern = graph_from_json(doc.at("pattern"));
        DecodedGraph host = graph_from_json(doc.at("host"));
        Embedding e = embedding_from_json(doc.at("certificate"), pattern.graph.vertex_count());
        if (pattern.colors && host.colors)
            return fail_list(check_embedding(pattern.colored(), host.colored(), e));
        return fail_list(check_embedding(pattern.graph, host.graph, e));
    }
    if (kind == "topological") {
        DecodedGraph pattern = graph_from_json(doc.at("pattern"));
        DecodedGraph host = graph_from_json(doc.at("host"));
        TopologicalEmbedding e = topological_from_json(
            doc.at("certificate"), pattern.graph.edges(), pattern.graph.vertex_count());
        if (pattern.colors && host.colors)
            return fail_list(check_topological(pattern.colored(), host.colored(), e));
        return fail_list(check_topological(pattern.graph, host.graph, e));
    }
    if (kind == "minor") {
        Graph pattern = graph_from_json(doc.at("pattern")).graph;
        Graph host = graph_from_json(doc.at("host")).graph;
        MinorModel m = minor_model_from_json(doc.at("certificate"));
        return fail_list(check_minor_model(pattern, host, m));
    }
    if (kind == "pruned_model") {
        Graph pattern = graph_from_json(doc.at("pattern")).graph;
        Graph host = graph_from_json(doc.at("host")).graph;
        MinorModel m = minor_model_from_json(doc.at("certificate"));
        std::vector<Edge> carrier;
        for (const auto& e : doc.at("carrier_edges"))
            carrier.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        return fail_list(check_pruned_model(pattern, host, m, carrier));
    }
    if (kind == "path_family") {
        Graph host = graph_from_json(doc.at("host")).graph;
        PathFamily fam;
        fam.u = doc.at("u").get<int>();
        fam.v = doc.at("v").get<int>();
        for (const auto& p : doc.at("certificate").at("paths"))
            fam.paths.push_back(p.get<std::vector<int>>());
        auto problems = check_path_family(host, fam);
        if (doc.contains("count") &&
            static_cast<int>(fam.paths.size()) != doc.at("count").get<int>())
            problems.push_back("path count mismatch");
        return fail_list(problems);
    }
    if (kind == "cycle") {
        Graph host = graph_from_json(doc.at("host")).graph;
        std::vector<int> cycle = doc.at("certificate").at("cycle").get<std::vector<int>>();
        return fail_list(check_cycle(host, cycle, doc.at("min_length").get<int>()));
    }
    if (kind == "decomposition") {
        StarPattern pattern(doc.at("pattern").get<std::vector<int>>());
        Graph host = graph_from_json(doc.at("host")).graph;
        DecompositionParams params =
            doc.contains("relaxed_m") && !doc.at("relaxed_m").is_null()
                ? DecompositionParams::relaxed_m(pattern, doc.at("relaxed_m").get<long long>())
                : DecompositionParams::from(pattern);
        Decomposition d = decomposition_from_json(doc.at("certificate"));
        Report rep = verify_decomposition(host, pattern, params, d);
        if (rep.all_pass())
            return {true, ""};
        for (const auto& e : rep.entries)
            if (!e.pass)
                return {false, e.name};
        return {false, "report failed"};
    }
    return {false, "unknown certificate kind: " + kind};
}

json registry_dir_load(const std::string& dir) {
    std::ifstream in(dir + "/index.json", std::ios::binary);
    if (!in)
        return nullptr;
    std::ostringstream ss;
    ss << in.rdbuf();
    return json::parse(ss.str());
}

void registry_dir_store(const std::string& dir, const StarPattern& pattern,
                        const json& relaxed_m, const ComponentRegistry& reg) {
    json doc;
    doc["pattern"] = pattern.legs();
    doc["relaxed_m"] = relaxed_m;
    doc["buckets"] = reg.to_json();
    std::ofstream out(dir + "/index.json", std::ios::binary);
    if (!out)
        throw error("cannot write registry index in " + dir);
    out << doc.dump(2) << "\n";
}

void registry_replay(ComponentRegistry& reg, const json& stored) {
    if (stored.is_null() || !stored.contains("buckets"))
        return;
    for (const auto& [n, list] : stored.at("buckets").items())
        for (const auto& comp : list)
            reg.admit(graph_from_json(comp).colored());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifiable constructions around forbidden subdivided stars"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output = "-";
    bool dot_output = false;
    app.add_option("--input,-i", input, "input file or - for stdin")->capture_default_str();
    app.add_option("--output,-o", output, "output file or - for stdout")
        ->capture_default_str();
    app.add_flag("--dot", dot_output, "emit graphs in DOT instead of JSON");

    auto* check = app.add_subcommand("check", "decide a containment relation");
    std::string check_star, check_pattern, check_host;
    bool check_sub = false, check_topo = false, check_minor = false, check_colored = false;
    check->add_option("--star", check_star, "star legs p1,p2,...");
    check->add_option("--pattern", check_pattern, "pattern graph file");
    check->add_option("--host", check_host, "host graph file");
    check->add_flag("--sub", check_sub, "subgraph relation");
    check->add_flag("--topo", check_topo, "topological minor relation");
    check->add_flag("--minor", check_minor, "minor relation");
    check->add_flag("--colored", check_colored, "preserve colors");

    auto* verify = app.add_subcommand("verify", "re-validate certificates");

    auto* decomp = app.add_subcommand("decompose", "structural decomposition");
    std::string decomp_star;
    long long decomp_relaxed = -1;
    decomp->add_option("--star", decomp_star, "star legs")->required();
    decomp->add_option("--relaxed-m", decomp_relaxed, "substitute a smaller m (non-theorem)");

    auto* derive = app.add_subcommand("derive", "threshold derived graph");
    int derive_t = 1;
    derive->add_option("--t", derive_t, "independent path threshold")->required();

    auto* blow = app.add_subcommand("blowup", "replace edges by parallel length-2 paths");
    int blow_n = 1;
    blow->add_option("--n", blow_n, "copies per edge")->required();

    auto* suppress_cmd = app.add_subcommand("suppress", "suppress degree-2 vertices");

    auto* gstar = app.add_subcommand("gamma-star", "degree-bounded universal prefix");
    int gs_k = 4, gs_rays = 3, gs_len = 5;
    bool gs_fig = false, gs_locally_finite = false;
    gstar->add_option("--k", gs_k)->required();
    gstar->add_option("--rays", gs_rays)->required();
    gstar->add_option("--len", gs_len)->required();
    gstar->add_flag("--figure1", gs_fig, "use the drawn enumeration");
    gstar->add_flag("--locally-finite", gs_locally_finite, "lift the ray-set bound");

    auto* eskf = app.add_subcommand("embed-skfree", "degree-preserving prefix embedding");
    int eskf_k = 4;
    bool eskf_noextend = false;
    eskf->add_option("--k", eskf_k)->required();
    eskf->add_flag("--no-extend", eskf_noextend, "fail instead of growing the prefix");

    auto* embed = app.add_subcommand("embed", "universal embedding pipeline");
    std::string embed_star, embed_registry;
    long long embed_relaxed = -1;
    bool embed_short_flag = false, embed_allow_k3 = false;
    embed->add_option("--star", embed_star)->required();
    embed->add_option("--relaxed-m", embed_relaxed);
    embed->add_option("--registry", embed_registry, "registry directory for stable indices");
    embed->add_flag("--short", embed_short_flag, "force the long-path-free branch");
    embed->add_flag("--allow-k3", embed_allow_k3, "permit k = 3 cores (caveat recorded)");

    auto* gadget = app.add_subcommand("gadget", "adversarial composite graphs");
    std::string gadget_star, gadget_alpha, gadget_check;
    int gadget_depth = 2, gadget_copies = 5;
    unsigned gadget_seed = 1;
    int gadget_sample = -1;
    bool gadget_small_n = false;
    gadget->add_option("--star", gadget_star)->required();
    gadget->add_option("--alpha", gadget_alpha)->required();
    gadget->add_option("--depth", gadget_depth)->required();
    gadget->add_option("--N", gadget_copies)->required();
    gadget->add_option("--check", gadget_check, "claim1 or claim2");
    gadget->add_option("--seed", gadget_seed, "sampling seed");
    gadget->add_option("--sample", gadget_sample, "edges to sample for claim2 (-1: all)");
    gadget->add_flag("--allow-small-N", gadget_small_n, "permit N below the leg count");

    auto* trivial = app.add_subcommand("trivial-universal", "subdivided clique prefix");
    std::string trivial_kind = "cycle_girth";
    int trivial_k = 1, trivial_n = 3;
    trivial->add_option("--kind", trivial_kind, "cycle_girth or branch_distance");
    trivial->add_option("--k", trivial_k)->required();
    trivial->add_option("--n", trivial_n)->required();

    auto* registry = app.add_subcommand("registry", "component registry maintenance");
    std::string reg_action, reg_dir, reg_star;
    long long reg_relaxed = -1;
    registry->add_option("action", reg_action, "list or admit")->required();
    registry->add_option("--dir", reg_dir, "registry directory")->required();
    registry->add_option("--star", reg_star, "star legs");
    registry->add_option("--relaxed-m", reg_relaxed);

    // parent-level --input/--output may appear after the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            json host_json = parse_json(read_input(check_host));
            DecodedGraph host_full = graph_from_json(host_json);
            if (!check_star.empty()) {
                StarPattern t = parse_star(check_star);
                auto w = find_star(t, host_full.graph);
                json doc;
                doc["kind"] = "star";
                doc["pattern"] = t.legs();
                doc["host"] = host_json;
                doc["found"] = w.has_value();
                if (w)
                    doc["certificate"] = star_witness_to_json(*w);
                emit(doc, output);
                return w ? 0 : 1;
            }
            json pattern_json = parse_json(read_input(check_pattern));
            DecodedGraph pattern = graph_from_json(pattern_json);
            json doc;
            doc["pattern"] = pattern_json;
            doc["host"] = host_json;
            bool found = false;
            if (check_sub) {
                doc["kind"] = "subgraph";
                std::optional<Embedding> e =
                    check_colored ? find_subgraph(pattern.colored(), host_full.colored())
                                  : find_subgraph(pattern.graph, host_full.graph);
                found = e.has_value();
                if (e)
                    doc["certificate"] = embedding_to_json(*e);
            } else if (check_topo) {
                doc["kind"] = "topological";
                std::optional<TopologicalEmbedding> e =
                    check_colored ? find_topological(pattern.colored(), host_full.colored())
                                  : find_topological(pattern.graph, host_full.graph);
                found = e.has_value();
                if (e)
                    doc["certificate"] = topological_to_json(*e, pattern.graph.edges());
            } else if (check_minor) {
                doc["kind"] = "minor";
                auto m = find_minor(pattern.graph, host_full.graph);
                found = m.has_value();
                if (m)
                    doc["certificate"] = minor_model_to_json(*m);
            } else {
                throw precondition_error("choose one of --star/--sub/--topo/--minor");
            }
            doc["found"] = found;
            emit(doc, output);
            return found ? 0 : 1;
        }

        if (*verify) {
            json docs = parse_json(read_input(input));
            if (!docs.is_array())
                docs = json::array({docs});
            json failures = json::array();
            int verified = 0;
            for (std::size_t i = 0; i < docs.size(); ++i) {
                VerifyOutcome out = verify_one(docs[i]);
                if (out.ok)
                    ++verified;
                else
                    failures.push_back(json{{"index", i}, {"detail", out.detail}});
            }
            json doc;
            doc["verified"] = verified;
            doc["failed"] = failures.size();
            doc["failures"] = failures;
            emit(doc, output);
            return failures.empty() ? 0 : 1;
        }

        if (*decomp) {
            StarPattern t = parse_star(decomp_star);
            DecompositionParams params = decomp_relaxed > 0
                                             ? DecompositionParams::relaxed_m(t, decomp_relaxed)
                                             : DecompositionParams::from(t);
            json host_json = parse_json(read_input(input));
            Graph host = graph_from_json(host_json).graph;
            Decomposition d = decompose(host, t, params);
            Report rep = verify_decomposition(host, t, params, d);
            json doc;
            doc["kind"] = "decomposition";
            doc["pattern"] = t.legs();
            if (params.relaxed) {
                doc["relaxed_m"] = params.m_bound;
                doc["non_theorem"] = true;
            }
            doc["host"] = host_json;
            doc["certificate"] = decomposition_to_json(d);
            doc["report"] = report_to_json(rep);
            emit(doc, output);
            return rep.all_pass() ? 0 : 1;
        }

        if (*derive) {
            Graph g = graph_from_json(parse_json(read_input(input))).graph;
            Graph derived = derive_gamma_star(g, derive_t);
            if (dot_output)
                emit_raw(encode_dot(derived), output);
            else
                emit(graph_to_json(derived), output);
            return 0;
        }

        if (*blow) {
            Graph g = graph_from_json(parse_json(read_input(input))).graph;
            Graph blown = blowup(g, blow_n).graph;
            if (dot_output)
                emit_raw(encode_dot(blown), output);
            else
                emit(graph_to_json(blown), output);
            return 0;
        }

        if (*suppress_cmd) {
            Graph g = graph_from_json(parse_json(read_input(input))).graph;
            Graph suppressed = suppress_degree_two(g);
            if (dot_output)
                emit_raw(encode_dot(suppressed), output);
            else
                emit(graph_to_json(suppressed), output);
            return 0;
        }

        if (*gstar) {
            IncidenceEnumeration fig = IncidenceEnumeration::figure1();
            SkFreePrefix prefix = build_prefix(gs_k, gs_rays, gs_len,
                                               gs_fig ? &fig : nullptr, gs_locally_finite);
            ColoredGraph realized = prefix.realize();
            if (dot_output) {
                emit_raw(encode_dot(realized), output);
                return 0;
            }
            json doc = graph_to_json(realized);
            json attachments = json::object();
            for (int j = 1; j <= prefix.table.size(); ++j)
                attachments[std::to_string(j)] = prefix.table.entry(j).rays;
            doc["attachments"] = std::move(attachments);
            emit(doc, output);
            return 0;
        }

        if (*eskf) {
            DecodedGraph in = graph_from_json(parse_json(read_input(input)));
            ColoredGraph g = in.colored();
            SkFreeEmbedding result =
                embed_skfree(g, build_prefix(eskf_k, 1, 1), !eskf_noextend);
            TouchedPrefix touched = materialize_touched(result.prefix, result.embedding);
            json doc;
            doc["kind"] = "topological";
            doc["pattern"] = graph_to_json(g);
            doc["host"] = graph_to_json(touched.graph);
            doc["certificate"] = topological_to_json(touched.embedding, g.graph().edges());
            auto [rays, len] = required_prefix(g);
            doc["required"] = {{"rays", rays}, {"len", len}};
            emit(doc, output);
            return 0;
        }

        if (*embed) {
            StarPattern t = parse_star(embed_star);
            DecompositionParams params = embed_relaxed > 0
                                             ? DecompositionParams::relaxed_m(t, embed_relaxed)
                                             : DecompositionParams::from(t);
            json host_json = parse_json(read_input(input));
            Graph host = graph_from_json(host_json).graph;
            if (embed_short_flag ||
                !find_path_at_least(host, static_cast<int>(params.long_path_threshold))) {
                PlainRegistry plain(t, params.long_path_threshold);
                ShortEmbedding result = embed_short(host, plain);
                json doc;
                doc["kind"] = "subgraph";
                doc["branch"] = "short";
                doc["pattern"] = host_json;
                doc["host"] = graph_to_json(result.universe);
                doc["certificate"] = embedding_to_json(result.embedding);
                emit(doc, output);
                return 0;
            }
            auto sets = std::make_shared<ForbiddenSets>(t, params);
            ComponentRegistry reg(sets);
            json stored = nullptr;
            if (!embed_registry.empty()) {
                stored = registry_dir_load(embed_registry);
                registry_replay(reg, stored);
            }
            if (t.leg_count() == 3 && !embed_allow_k3)
                throw precondition_error(
                    "k = 3 cores are only assembled behind --allow-k3 (prefix rays can reach "
                    "the degree bound)");
            UniversalEmbedding result = embed_universal(host, t, params, reg);
            if (!embed_registry.empty())
                registry_dir_store(embed_registry, t,
                                   params.relaxed ? json(params.m_bound) : json(nullptr), reg);
            json doc;
            doc["kind"] = "topological";
            doc["branch"] = "long-path";
            doc["pattern"] = host_json;
            doc["host"] = graph_to_json(result.prefix.realized);
            doc["certificate"] = topological_to_json(result.embedding, host.edges());
            if (params.relaxed)
                doc["non_theorem"] = true;
            if (result.prefix.k3_caveat)
                doc["k3_caveat"] = true;
            json consistency = json::array();
            for (const auto& [v, c] : result.c_prime)
                consistency.push_back(json{{"v", v}, {"c", c}, {"n", result.n_prime.at(v)}});
            doc["registry_consistency"] = std::move(consistency);
            emit(doc, output);
            return 0;
        }

        if (*gadget) {
            StarPattern t = parse_star(gadget_star);
            if (!gadget_small_n && gadget_copies < t.leg_count())
                throw precondition_error(
                    "N below the leg count weakens the spare-path argument; pass "
                    "--allow-small-N to proceed");
            GadgetGraph g = build_G_alpha(t, gadget_alpha, gadget_depth, gadget_copies);
            if (gadget_check.empty()) {
                json doc = graph_to_json(g.realized);
                json tags = json::array();
                for (const auto& tag : g.gadgets)
                    tags.push_back(json{{"edge", json::array({tag.tree_u, tag.tree_v})},
                                        {"type", tag.type},
                                        {"level", tag.level}});
                doc["gadgets"] = std::move(tags);
                doc["N"] = gadget_copies;
                emit(doc, output);
                return 0;
            }
            if (gadget_check != "claim1" && gadget_check != "claim2")
                throw precondition_error("--check must be claim1 or claim2");
            ClaimReport report = gadget_check == "claim1"
                                     ? check_claim1(g)
                                     : check_claim2(g, gadget_sample, gadget_seed);
            json doc;
            doc["claim"] = gadget_check;
            doc["N"] = gadget_copies;
            doc["pass"] = report.pass;
            doc["checked"] = report.checked;
            doc["skipped"] = report.skipped;
            doc["failures"] = report.failures;
            emit(doc, output);
            return report.pass ? 0 : 1;
        }

        if (*trivial) {
            if (trivial_kind != "cycle_girth" && trivial_kind != "branch_distance")
                throw precondition_error("kind must be cycle_girth or branch_distance");
            Graph prefix_graph = trivial_universal_prefix(trivial_k, trivial_n);
            if (dot_output)
                emit_raw(encode_dot(prefix_graph), output);
            else
                emit(graph_to_json(prefix_graph), output);
            return 0;
        }

        if (*registry) {
            StarPattern t = parse_star(reg_star);
            DecompositionParams params = reg_relaxed > 0
                                             ? DecompositionParams::relaxed_m(t, reg_relaxed)
                                             : DecompositionParams::from(t);
            auto sets = std::make_shared<ForbiddenSets>(t, params);
            ComponentRegistry reg(sets);
            registry_replay(reg, registry_dir_load(reg_dir));
            if (reg_action == "list") {
                json doc;
                doc["pattern"] = t.legs();
                doc["buckets"] = reg.to_json();
                emit(doc, output);
                return 0;
            }
            if (reg_action == "admit") {
                ColoredGraph comp = graph_from_json(parse_json(read_input(input))).colored();
                auto adm = reg.admit(comp);
                registry_dir_store(reg_dir, t,
                                   params.relaxed ? json(params.m_bound) : json(nullptr), reg);
                json doc;
                doc["n"] = adm.n;
                doc["index"] = adm.index;
                emit(doc, output);
                return 0;
            }
            throw precondition_error("registry action must be list or admit");
        }
    } catch (const parse_error& e) {
        emit(error_doc("parse", e.what(), json{{"byte_offset", e.byte_offset}}), output);
        return 2;
    } catch (const precondition_error& e) {
        emit(error_doc("precondition", e.what(), e.certificate), output);
        return 2;
    } catch (const structural_error& e) {
        emit(error_doc("structural", e.what(), json{{"vertices", e.vertices}}), output);
        return 2;
    } catch (const resource_error& e) {
        emit(error_doc("resource", e.what()), output);
        return 2;
    } catch (const std::exception& e) {
        emit(error_doc("internal", e.what()), output);
        return 2;
    }
    return 2;
}
