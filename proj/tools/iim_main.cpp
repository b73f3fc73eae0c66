#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "iim/canonical.hpp"
#include "iim/clique.hpp"
#include "iim/coloring.hpp"
#include "iim/distance.hpp"
#include "iim/domination.hpp"
#include "iim/generator.hpp"
#include "iim/graph.hpp"
#include "iim/report.hpp"
#include "iim/seeds.hpp"
#include "iim/spectral.hpp"
#include "iim/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

iim::Graph load_seed(const std::string& name, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open seed file: " + file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return iim::Graph::from_edge_list(text);
    }
    auto g = iim::named_seed(name);
    if (!g)
        throw std::runtime_error("unknown seed \"" + name + "\" (built in: " +
                                 iim::named_seed_list() + ")");
    return *g;
}

int default_budget_bits() {
    if (const char* env = std::getenv("IIM_BUDGET_BITS")) return std::atoi(env);
    return iim::kDefaultBitBudget;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int run_generate(const std::string& seed_name, const std::string& seed_file, int steps,
                 const std::string& choices, std::optional<double> random_p,
                 std::optional<std::uint64_t> rng, const std::string& out_dir,
                 const std::string& name) {
    iim::Graph seed = load_seed(seed_name, seed_file);
    iim::ChoiceSequence seq;
    if (!choices.empty()) {
        seq = iim::ChoiceSequence::parse(choices);
        if (static_cast<int>(seq.levels.size()) != steps)
            throw std::runtime_error("--choices covers " + std::to_string(seq.levels.size()) +
                                     " levels but --steps is " + std::to_string(steps));
    } else if (random_p) {
        if (!rng) throw std::runtime_error("--random requires an explicit --rng seed");
        seq = iim::sample_iim(seed, steps, *random_p, *rng).sequence;
    } else if (steps > 0) {
        throw std::runtime_error("need --choices or --random to pick a member of IIM_l");
    }
    iim::IIMGraph h = iim::iim_generate(seed, seq);
    std::string base = out_dir.empty() ? name : out_dir + "/" + name;
    write_file(base + ".edges", h.graph().to_edge_list());
    write_file(base + ".dot", h.graph().to_dot());
    write_file(base + ".json", h.to_json());
    std::cout << "generated " << h.vertex_count() << " vertices, " << h.graph().edge_count()
              << " edges; choices " << (seq.levels.empty() ? "(none)" : seq.to_string()) << '\n'
              << "wrote " << base << ".edges, .dot, .json\n";
    return kExitPass;
}

int run_verify(const std::string& theorem, const std::string& seed_name,
               const std::string& seed_file, int steps, int samples, double probability,
               std::optional<std::uint64_t> rng, int workers, int budget, int graphs,
               int subsets, const std::string& out_path) {
    iim::VerificationReport rep;
    auto need_rng = [&]() -> std::uint64_t {
        if (!rng) throw std::runtime_error("this verification mode requires an explicit --rng seed");
        return *rng;
    };

    if (theorem == "spectral-gap") {
        rep = iim::verify_spectral_gap(load_seed(seed_name, seed_file), seed_name, steps, workers,
                                       budget);
    } else if (theorem == "diameter") {
        if (samples > 0)
            rep = iim::verify_diameter_corollary(load_seed(seed_name, seed_file), seed_name, steps,
                                                 samples, probability, need_rng());
        else
            rep = iim::verify_diameter(load_seed(seed_name, seed_file), seed_name, steps, budget);
    } else if (theorem == "domination-kn") {
        rep = iim::verify_domination_kn(load_seed(seed_name, seed_file), seed_name, steps, budget);
    } else if (theorem == "domination-general") {
        rep = iim::verify_domination_general(load_seed(seed_name, seed_file), seed_name, steps,
                                             budget);
    } else if (theorem == "clique-bound") {
        if (samples > 0)
            rep = iim::verify_clique_bound_sampled(steps, samples, probability, need_rng());
        else
            rep = iim::verify_clique_bound(steps, budget);
    } else if (theorem == "triple-exists") {
        rep = iim::verify_triple_exists(steps, budget);
    } else if (theorem == "coloring-extension") {
        rep = iim::verify_coloring_extension(steps, samples > 0 ? samples : 100,
                                             rng.value_or(1));
    } else if (theorem == "mixing-lemma") {
        rep = iim::verify_mixing(load_seed(seed_name, seed_file), seed_name, steps, graphs,
                                 subsets, need_rng(), budget);
    } else if (theorem == "ham-partition") {
        rep = iim::verify_ham_partition(samples > 0 ? samples : 50, need_rng());
    } else {
        throw std::runtime_error(
            "unknown theorem id \"" + theorem +
            "\"; expected one of spectral-gap, diameter, domination-kn, domination-general, "
            "clique-bound, triple-exists, coloring-extension, mixing-lemma, ham-partition");
    }

    std::string text = rep.to_string();
    if (!out_path.empty()) write_file(out_path, text + "\n");
    std::cout << text << '\n';
    std::cout << (rep.passed() ? "PASS" : "FAIL") << ' ' << rep.theorem_id << " checked="
              << rep.checked << " skipped=" << rep.skipped << '\n';
    return rep.passed() ? kExitPass : kExitViolation;
}

int run_census(const std::string& seed_name, const std::string& seed_file, int steps, int budget) {
    iim::CensusResult census = iim::isomorphism_census(load_seed(seed_name, seed_file), steps, budget);
    std::cout << census.sequences << " sequences, " << census.classes.size()
              << " isomorphism classes\n";
    for (const auto& [witness, count] : census.classes)
        std::cout << count << "  " << (witness.empty() ? "(seed)" : witness) << '\n';
    return kExitPass;
}

int run_analyze(const std::string& graph_file, bool csv, bool spectrum_csv) {
    std::ifstream in(graph_file);
    if (!in) throw std::runtime_error("cannot open graph file: " + graph_file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    iim::Graph g = iim::Graph::from_edge_list(text);

    if (spectrum_csv) {
        iim::VertexSet iso = g.isolated_vertices();
        iim::Graph core = iso.empty() ? g : g.induced_subgraph(iso.complement()).graph;
        if (core.vertex_count() < 2) throw std::runtime_error("spectrum needs >= 2 non-isolated vertices");
        iim::Spectrum s = iim::eigenvalues_symmetric(iim::normalized_laplacian(core));
        std::cout << iim::spectrum_csv_row(graph_file, s) << '\n';
        return kExitPass;
    }

    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["isolated"] = g.isolated_vertices().count();
    auto d = iim::diameter(g);
    j["diameter"] = d ? nlohmann::json(*d) : nlohmann::json("infinite");

    auto guarded = [&](const std::string& key, auto compute) {
        try {
            j[key] = compute();
        } catch (const std::invalid_argument&) {
            j[key] = "skipped(limit)";
        }
    };
    guarded("dom", [&] { return iim::domination_number(g).size; });
    guarded("omega", [&] { return iim::clique_number(g).size; });
    guarded("chi", [&] { return iim::chromatic_number(g).first; });
    if (g.isolated_vertices().count() == g.vertex_count() ||
        g.vertex_count() - g.isolated_vertices().count() < 2) {
        j["spectral_gap"] = "skipped(isolated)";
    } else if (!g.isolated_vertices().empty()) {
        iim::Graph core = g.induced_subgraph(g.isolated_vertices().complement()).graph;
        j["spectral_gap"] = iim::spectral_gap(core);
        j["spectral_gap_note"] = "computed on non-isolated core";
    } else {
        j["spectral_gap"] = iim::spectral_gap(g);
    }

    if (csv) {
        std::string header, row;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!header.empty()) {
                header += ',';
                row += ',';
            }
            header += it.key();
            row += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        }
        std::cout << header << '\n' << row << '\n';
    } else {
        std::cout << j.dump(2) << '\n';
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"iim - iterated independent model graphs: generation, exact analysis, and "
                 "theorem verification"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "grow a graph from a seed and write it out");
    std::string g_seed = "K1", g_seed_file, g_choices, g_out, g_name = "iim";
    int g_steps = 1;
    std::optional<double> g_p;
    std::optional<std::uint64_t> g_rng;
    gen->add_option("--seed", g_seed, "named seed (" + iim::named_seed_list() + ")");
    gen->add_option("--seed-file", g_seed_file, "edge-list file to use as the seed");
    gen->add_option("--steps", g_steps, "number of model steps")->required();
    gen->add_option("--choices", g_choices, "explicit choices, e.g. L1=0x1;L2=0x3");
    gen->add_option("--random", g_p, "clone probability for a random member");
    gen->add_option("--rng", g_rng, "random seed (required with --random)");
    gen->add_option("--out", g_out, "output directory (default: current)");
    gen->add_option("--name", g_name, "output file prefix");

    // verify
    auto* ver = app.add_subcommand("verify", "run a theorem check and emit a report");
    std::string v_theorem, v_seed = "K1", v_seed_file, v_out;
    int v_steps = 1, v_samples = 0, v_workers = 1, v_graphs = 50, v_subsets = 100;
    int v_budget = default_budget_bits();
    double v_prob = 0.5;
    std::optional<std::uint64_t> v_rng;
    ver->add_option("theorem", v_theorem, "theorem id")->required();
    ver->add_option("--seed", v_seed, "named seed");
    ver->add_option("--seed-file", v_seed_file, "edge-list seed file");
    ver->add_option("--steps", v_steps, "model steps");
    ver->add_option("--samples", v_samples, "sample count (switches sampled mode where relevant)");
    ver->add_option("--probability", v_prob, "clone probability for sampled modes");
    ver->add_option("--rng", v_rng, "random seed for sampled modes");
    ver->add_option("--workers", v_workers, "worker threads for enumeration");
    ver->add_option("--budget-bits", v_budget, "enumeration budget in choice bits");
    ver->add_option("--graphs", v_graphs, "graphs to test (mixing-lemma)");
    ver->add_option("--subsets", v_subsets, "subsets per graph (mixing-lemma)");
    ver->add_option("--out", v_out, "write the JSON report here");

    // analyze
    auto* ana = app.add_subcommand("analyze", "exact property table for a graph file");
    std::string a_file;
    bool a_csv = false, a_spectrum = false;
    ana->add_option("graph", a_file, "edge-list graph file")->required();
    ana->add_flag("--csv", a_csv, "emit CSV instead of JSON");
    ana->add_flag("--spectrum", a_spectrum, "emit the spectrum CSV row instead of the table");

    // census
    auto* cen = app.add_subcommand("census", "isomorphism classes of an enumerated family");
    std::string c_seed = "K1", c_seed_file;
    int c_steps = 1, c_budget = default_budget_bits();
    cen->add_option("--seed", c_seed, "named seed");
    cen->add_option("--seed-file", c_seed_file, "edge-list seed file");
    cen->add_option("--steps", c_steps, "model steps")->required();
    cen->add_option("--budget-bits", c_budget, "enumeration budget in choice bits");

    try {
        app.parse(argc, argv);
        if (gen->parsed())
            return run_generate(g_seed, g_seed_file, g_steps, g_choices, g_p, g_rng, g_out, g_name);
        if (ver->parsed())
            return run_verify(v_theorem, v_seed, v_seed_file, v_steps, v_samples, v_prob, v_rng,
                              v_workers, v_budget, v_graphs, v_subsets, v_out);
        if (ana->parsed()) return run_analyze(a_file, a_csv, a_spectrum);
        if (cen->parsed()) return run_census(c_seed, c_seed_file, c_steps, c_budget);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
