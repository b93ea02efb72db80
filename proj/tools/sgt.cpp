// Command-line frontend: enumerate, invariant, check, decompose.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sgt/enumerate.hpp"
#include "sgt/errors.hpp"
#include "sgt/yamada.hpp"

namespace fs = std::filesystem;
using namespace sgt;

namespace {

std::string read_input(const std::string& path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

struct EnumerateConfig {
    std::string arch_path;
    int max_crossings = 0;
    std::string mode;
    std::string generator = "exhaustive";
    std::vector<std::string> order;
    std::string out = "-";
    std::string csv;
    std::string dot_dir;
    bool cap_pairs = false;
    int workers = 1;
    std::size_t limit = 0;
    bool verbose = false;
};

int cmd_enumerate(const EnumerateConfig& cfg) {
    SystemArchitecture arch = parse_architecture(read_input(cfg.arch_path));
    if (!cfg.mode.empty()) {
        arch.model = parse_mode(cfg.mode);
        validate(arch);
    }
    int max_valence = 0;
    bool leaf = false;
    for (const ArchNode& n : arch.nodes) {
        max_valence = std::max(max_valence, static_cast<int>(n.ports.size()));
        leaf = leaf || n.ports.size() == 1;
    }
    if (arch.model == EquivalenceMode::Pliable && max_valence >= 4)
        std::cerr << "warning: pliable vertices of valence " << max_valence
                  << " are not invariant under R6; classes may split\n";
    if (leaf) std::cerr << "warning: a node of valence 1 forces a cut edge; all diagrams are degenerate\n";

    PipelineOptions opts;
    opts.generator = parse_generator(cfg.generator);
    opts.workers = cfg.workers;
    opts.cap_pair_crossings = cfg.cap_pairs;
    opts.limit_diagrams = cfg.limit;
    if (!cfg.order.empty()) opts.circular_order = cfg.order;
    ClassReport report = pipeline(arch, cfg.max_crossings, opts);

    for (const KCount& k : report.per_k)
        std::cerr << "k=" << k.k << ": " << k.shadows << " shadows, " << k.diagrams << " diagrams\n";
    std::cerr << report.classes.size() << " classes from " << report.diagrams << " diagrams in " << report.seconds
              << " s\n";
    if (report.degenerate_members())
        std::cerr << "warning: " << report.degenerate_members() << " diagrams have a zero polynomial (degenerate)\n";
    if (cfg.verbose)
        for (const YamadaClass& c : report.classes)
            std::cerr << "  " << c.min_crossings << "  " << c.members.size() << "  " << c.key.to_string() << "\n";

    write_output(cfg.out, report_to_json(report));
    std::string csv = cfg.csv;
    if (csv.empty() && cfg.out != "-") csv = fs::path(cfg.out).replace_extension(".csv").string();
    if (!csv.empty()) write_output(csv, report_to_csv(report));
    if (!cfg.dot_dir.empty()) {
        fs::create_directories(cfg.dot_dir);
        int id = 0;
        for (const YamadaClass& c : report.classes) {
            std::string name = "class_" + std::to_string(++id);
            write_output((fs::path(cfg.dot_dir) / (name + ".dot")).string(), to_dot(parse_pd(c.representative_pd), name));
        }
    }
    return 0;
}

int cmd_invariant(const std::string& path, const std::string& mode_name, bool oracle) {
    Diagram d = parse_pd(read_input(path));
    EquivalenceMode mode = parse_mode(mode_name);
    LaurentPoly r = yamada(d);
    std::cout << r.to_string() << "\n";
    std::cout << "canonical (" << to_string(mode) << "): " << canonicalize(r, mode).to_string() << "\n";
    if (oracle) {
        LaurentPoly s;
        try {
            s = yamada_statesum(d);
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("state-sum oracle: ") + e.what());
        }
        if (s != r) throw InvariantViolation("state sum disagrees: " + s.to_string());
        std::cout << "oracle: agrees\n";
    }
    return 0;
}

int cmd_check(const std::vector<std::string>& paths, bool oracle) {
    for (const std::string& path : paths) {
        Diagram d = parse_pd(read_input(path));
        bool planar = is_planar(d);
        if (oracle) {
            auto genera = component_genera(d);
            bool euler = std::all_of(genera.begin(), genera.end(), [](int g) { return g == 0; });
            if (euler != planar) throw InvariantViolation(path + ": contraction and Euler genus disagree");
        }
        if (paths.size() > 1) std::cout << path << ": ";
        std::cout << (planar ? "planar" : "nonplanar") << "\n";
    }
    return 0;
}

int cmd_decompose(const std::string& arch_path, const std::vector<std::string>& subset, const std::string& outer_path,
                  const std::string& inner_path) {
    SystemArchitecture arch = parse_architecture(read_input(arch_path));
    auto [outer, inner] = condense(arch, {subset.begin(), subset.end()});
    write_output(outer_path, architecture_to_json(outer));
    write_output(inner_path, architecture_to_json(inner));
    std::cerr << "boundary edges: " << outer.nodes.back().ports.size() << "; outer " << outer.nodes.size()
              << " nodes, inner " << inner.nodes.size() << " nodes\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spatial graph topology enumeration and Yamada invariants"};
    app.require_subcommand(1);

    EnumerateConfig ecfg;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate and classify the diagrams of an architecture");
    enumerate->add_option("--arch", ecfg.arch_path, "Architecture JSON ('-' for stdin)")->required();
    enumerate->add_option("--max-crossings", ecfg.max_crossings, "Largest crossing number")->required();
    enumerate->add_option("--mode", ecfg.mode, "pliable, flat or ribbon (default: the architecture's model)");
    enumerate->add_option("--generator", ecfg.generator, "exhaustive or circular");
    enumerate->add_option("--order", ecfg.order, "Node order for the circular generator")->delimiter(',');
    enumerate->add_option("--out", ecfg.out, "Report JSON ('-' for stdout)");
    enumerate->add_option("--csv", ecfg.csv, "CSV summary (default: next to --out)");
    enumerate->add_option("--dot-dir", ecfg.dot_dir, "Write one DOT file per class representative");
    enumerate->add_flag("--cap-pair-crossings", ecfg.cap_pairs, "At most one crossing between any two edges");
    enumerate->add_option("--workers", ecfg.workers, "Worker threads")->envname("SGT_WORKERS")->check(CLI::PositiveNumber);
    enumerate->add_option("--limit-diagrams", ecfg.limit, "Abort when more diagrams would be generated");
    enumerate->add_flag("-v,--verbose", ecfg.verbose, "List classes on stderr");

    std::string pd_path, mode = "pliable";
    bool inv_oracle = false;
    auto* invariant = app.add_subcommand("invariant", "Print the Yamada polynomial of a PD file");
    invariant->add_option("pd", pd_path, "PD file ('-' for stdin)")->required();
    invariant->add_option("--mode", mode, "Canonicalization mode");
    invariant->add_flag("--oracle", inv_oracle, "Cross-check with the state sum");

    std::vector<std::string> check_paths;
    bool check_oracle = false;
    auto* check = app.add_subcommand("check", "Planarity of PD files");
    check->add_option("pd", check_paths, "PD files")->required();
    check->add_flag("--oracle", check_oracle, "Cross-check with the Euler genus");

    std::string dec_arch, outer = "outer.json", inner = "inner.json";
    std::vector<std::string> subset;
    auto* decompose = app.add_subcommand("decompose", "Condense a node subset into a super-node");
    decompose->add_option("--arch", dec_arch, "Architecture JSON")->required();
    decompose->add_option("--subset", subset, "Node ids, comma separated")->required()->delimiter(',');
    decompose->add_option("--outer", outer, "Outer architecture output");
    decompose->add_option("--inner", inner, "Inner architecture output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*enumerate) return cmd_enumerate(ecfg);
        if (*invariant) return cmd_invariant(pd_path, mode, inv_oracle);
        if (*check) return cmd_check(check_paths, check_oracle);
        if (*decompose) return cmd_decompose(dec_arch, subset, outer, inner);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
