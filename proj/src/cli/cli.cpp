#include "abcdoo/cli.hpp"

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "abcdoo/errors.hpp"
#include "abcdoo/generator.hpp"
#include "abcdoo/io.hpp"
#include "abcdoo/parallel.hpp"

namespace abcdoo::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Tables print large counts with digit-group commas, e.g. 52,675.
std::string strip_digit_groups(const std::string& value) {
    static const std::regex grouped(R"(\d{1,3}(,\d{3})+)");
    if (!std::regex_match(value, grouped)) return value;
    std::string out;
    for (char c : value)
        if (c != ',') out += c;
    return out;
}

std::vector<std::int64_t> read_integers(const std::filesystem::path& path) {
    std::istringstream in(read_text(path));
    std::vector<std::int64_t> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(line, &used));
            if (used != line.size()) throw std::invalid_argument(line);
        } catch (const std::exception&) {
            throw ValidationError(path.string() + ": line " + std::to_string(number) + ": expected an integer");
        }
    }
    return out;
}

void add_parameter_flags(CLI::App& app, Parameters& p) {
    app.add_option("--n", p.n, "number of nodes")->required();
    app.add_option("--s0", p.s0, "number of outliers (default 0)");
    app.add_option("--eta", p.eta, "mean communities per non-outlier")->required();
    app.add_option("--d", p.dim, "reference layer dimension (default 2)");
    app.add_option("--rho", p.rho, "target degree/membership correlation")->required();
    app.add_option("--gamma", p.gamma, "degree exponent")->required();
    app.add_option("--delta", p.delta, "min degree")->required();
    app.add_option("--Delta", p.Delta, "max degree")->required();
    app.add_option("--beta", p.beta, "community size exponent")->required();
    app.add_option("--s", p.s, "min community size")->required();
    app.add_option("--S", p.S, "max community size")->required();
    app.add_option("--xi", p.xi, "noise level")->required();
    app.add_option("--seed", p.seed, "master seed (default 1)");
}

std::optional<std::string> config_path_in(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
    }
    return std::nullopt;
}

void write_stream(const std::filesystem::path& path, auto&& writer) {
    std::ostringstream out;
    writer(out);
    io::write_file(path, out.str());
}

} // namespace

std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line " + std::to_string(number) + ": expected key = value");
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        if (key.empty()) throw UsageError("config line " + std::to_string(number) + ": empty key");
        out.emplace_back(std::move(key), strip_digit_groups(value));
    }
    return out;
}

RunConfig parse_config(const std::vector<std::string>& args, std::optional<std::string> config_text) {
    if (args.empty()) throw UsageError("expected a subcommand: generate, measure or ckb");

    RunConfig cfg;
    CLI::App app{"ABCD+o2 benchmark graph generator", "abcdoo"};
    app.require_subcommand(1);
    std::string config_file;

    auto* generate = app.add_subcommand("generate", "generate a graph");
    add_parameter_flags(*generate, cfg.params);
    generate->add_option("--out", cfg.out_dir, "output directory");
    generate->add_option("--degrees", cfg.degree_file, "explicit degree sequence file");
    generate->add_option("--sizes", cfg.size_file, "explicit primary community size file");
    generate->add_flag("--coordinates", cfg.emit_coordinates, "write reference layer coordinates");
    generate->add_flag("--provenance", cfg.emit_provenance, "write edge provenance tags");
    generate->add_flag("--stats", cfg.emit_stats, "write metrics CSVs to OUT/stats");

    auto* measure = app.add_subcommand("measure", "compute metrics CSVs for a labeled network");
    measure->add_option("--edges", cfg.input_edges, "edge or provenance file")->required();
    measure->add_option("--memberships", cfg.input_memberships, "membership file")->required();
    measure->add_option("--out", cfg.out_dir, "output directory");

    auto* ckb = app.add_subcommand("ckb", "sample CKB baseline memberships");
    ckb->add_option("--n", cfg.ckb.n, "number of nodes")->required();
    ckb->add_option("--omega", cfg.ckb.membership_law.exponent, "membership count exponent")->required();
    ckb->add_option("--xmin", cfg.ckb.membership_law.lo, "min memberships per node")->required();
    ckb->add_option("--xmax", cfg.ckb.membership_law.hi, "max memberships per node")->required();
    ckb->add_option("--beta", cfg.ckb.size_law.exponent, "community size exponent")->required();
    ckb->add_option("--s", cfg.ckb.size_law.lo, "min community size")->required();
    ckb->add_option("--S", cfg.ckb.size_law.hi, "max community size")->required();
    ckb->add_option("--seed", cfg.ckb.seed, "seed (default 1)");
    ckb->add_option("--out", cfg.out_dir, "output directory");
    ckb->add_flag("--stats", cfg.emit_stats, "write metrics CSVs to OUT/stats");
    cfg.ckb.seed = 1;

    for (auto* sub : {generate, measure, ckb}) {
        sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        sub->add_option("--config", config_file, "file of key = value lines");
        for (auto* opt : sub->get_options()) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }

    CLI::App* chosen = nullptr;
    if (args[0] == "generate") chosen = generate;
    if (args[0] == "measure") chosen = measure;
    if (args[0] == "ckb") chosen = ckb;

    std::vector<std::string> merged{args[0]};
    if (!config_text)
        if (auto path = config_path_in(args)) config_text = read_text(*path);
    if (config_text && chosen) {
        for (const auto& [key, value] : parse_config_text(*config_text)) {
            if (key == "config" || key == "help" || !chosen->get_option_no_throw("--" + key))
                throw UsageError("unknown config key '" + key + "'");
            merged.push_back("--" + key + "=" + value);
        }
    }
    merged.insert(merged.end(), args.begin() + 1, args.end());

    // CLI11 consumes its argument vector back to front.
    std::vector<std::string> reversed(merged.rbegin(), merged.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{chosen ? chosen->help() : app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (chosen == generate) {
        cfg.command = Command::generate;
        cfg.params.validate();
    } else if (chosen == measure) {
        cfg.command = Command::measure;
    } else {
        cfg.command = Command::ckb;
        cfg.ckb.validate();
    }
    return cfg;
}

int run_generate(const RunConfig& cfg) {
    GeneratorOptions options;
    options.threads = default_thread_count();
    if (cfg.degree_file) options.degrees = read_integers(*cfg.degree_file);
    if (cfg.size_file) options.primary_sizes = read_integers(*cfg.size_file);

    const auto net = generate(cfg.params, options);
    std::filesystem::create_directories(cfg.out_dir);
    write_stream(cfg.out_dir / "edges.tsv", [&](std::ostream& o) { io::write_edges(o, net.edges); });
    write_stream(cfg.out_dir / "communities.tsv", [&](std::ostream& o) { io::write_memberships(o, net.node_communities); });
    io::write_file(cfg.out_dir / "summary.json", io::summary_json(net));
    io::write_file(cfg.out_dir / "timings.json", io::timings_json(net.timings));
    if (cfg.emit_coordinates)
        write_stream(cfg.out_dir / "coordinates.tsv", [&](std::ostream& o) { io::write_coordinates(o, net); });
    if (cfg.emit_provenance)
        write_stream(cfg.out_dir / "provenance.tsv", [&](std::ostream& o) { io::write_provenance(o, net.edges); });
    if (cfg.emit_stats) io::write_metric_csvs(io::to_labeled(net), cfg.out_dir / "stats");
    for (const auto& w : net.summary.warnings) std::cerr << "warning: " << w << '\n';
    return 0;
}

int run_measure(const RunConfig& cfg) {
    const auto net = io::load_labeled_network(cfg.input_edges, cfg.input_memberships);
    io::write_metric_csvs(net, cfg.out_dir);
    return 0;
}

int run_ckb(const RunConfig& cfg) {
    const auto result = generate_ckb(cfg.ckb);
    std::filesystem::create_directories(cfg.out_dir);
    write_stream(cfg.out_dir / "communities.tsv",
                 [&](std::ostream& o) { io::write_memberships(o, result.network.node_communities); });
    io::write_file(cfg.out_dir / "ckb_summary.json", io::ckb_summary_json(cfg.ckb, result));
    if (cfg.emit_stats) io::write_metric_csvs(result.network, cfg.out_dir / "stats");
    return 0;
}

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
    try {
        const auto cfg = parse_config(args);
        switch (cfg.command) {
        case Command::generate: return run_generate(cfg);
        case Command::measure: return run_measure(cfg);
        case Command::ckb: return run_ckb(cfg);
        }
    } catch (const HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const GenerationError& e) {
        std::cerr << "generation failed in phase " << e.phase() << ": " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace abcdoo::cli
