#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "scx/boundary.hpp"
#include "scx/generators.hpp"
#include "scx/io.hpp"
#include "scx/report.hpp"
#include "scx/search.hpp"
#include "scx/spectral.hpp"
#include "scx/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct AnalyzeOptions {
    std::string input;
    std::string format = "auto";
    double tol = scx::kDefaultSpectralTol;
    bool json = false;
};

struct GenerateOptions {
    std::string family;
    std::string out;
    std::string format = "text";
    int n = 0;
    int r = 0;
    double p = 0.5;
    long long seed = 0;
};

struct SearchOptions {
    int n = 0;
    int r = 0;
    std::string mode = "exhaustive";
    double budget = 600.0;
    std::string out;
    std::string format = "text";
    bool json = false;
};

struct DumpOptions {
    std::string input;
    std::string format = "auto";
    std::string matrix = "q_up";
    int i = 0;
};

int run_analyze(const AnalyzeOptions& opt) {
    scx::Complex k = scx::read_complex_file(opt.input, scx::parse_facet_format(opt.format));
    scx::AnalysisReport report = scx::analyze_complex(k, opt.tol);
    std::cout << (opt.json ? scx::report_to_json(report) : scx::report_to_text(report));
    return 0;
}

int run_generate(const GenerateOptions& opt) {
    scx::Complex k = [&] {
        if (opt.family == "tented") {
            return scx::tented_complex(opt.n, opt.r);
        }
        if (opt.family == "rhombic") {
            return scx::rhombic_complex(opt.r);
        }
        if (opt.family == "complete") {
            return scx::complete_complex(opt.n, opt.r);
        }
        if (opt.family == "k1") {
            return scx::k1_complex();
        }
        if (opt.family == "k2") {
            return scx::k2_complex();
        }
        if (opt.family == "random") {
            std::mt19937_64 rng(static_cast<std::uint64_t>(opt.seed));
            return scx::random_pure_complex(opt.n, opt.r, opt.p, rng);
        }
        throw scx::validation_error("unknown family '" + opt.family + "'");
    }();
    scx::FacetFormat format = scx::parse_facet_format(opt.format);
    if (format == scx::FacetFormat::auto_detect) {
        format = scx::FacetFormat::text;
    }
    if (opt.out.empty() || opt.out == "-") {
        std::cout << (format == scx::FacetFormat::structured ? scx::to_facet_structured(k)
                                                             : scx::to_facet_text(k));
    } else {
        scx::write_complex_file(opt.out, k, format);
        std::cout << "wrote " << k.facet_count() << " facets to " << opt.out << "\n";
    }
    return 0;
}

int run_search(const SearchOptions& opt) {
    scx::SearchMode mode = scx::parse_search_mode(opt.mode);
    scx::SearchOutcome outcome = scx::search_equality_complexes(opt.n, opt.r, mode, opt.budget);

    scx::FacetFormat format = scx::parse_facet_format(opt.format);
    if (format == scx::FacetFormat::auto_detect) {
        format = scx::FacetFormat::text;
    }
    const char* extension = format == scx::FacetFormat::structured ? ".json" : ".txt";

    std::vector<std::string> class_files;
    if (!opt.out.empty()) {
        std::filesystem::create_directories(opt.out);
        for (std::size_t c = 0; c < outcome.classes.size(); ++c) {
            std::ostringstream name;
            name << "class_" << (c + 1 < 10 ? "0" : "") << (c + 1) << extension;
            std::string path = (std::filesystem::path(opt.out) / name.str()).string();
            scx::write_complex_file(path, outcome.classes[c], format);
            class_files.push_back(name.str());
        }
    }

    ordered_json summary;
    summary["schema_version"] = "1";
    summary["n"] = opt.n;
    summary["r"] = opt.r;
    summary["mode"] = scx::search_mode_name(mode);
    summary["budget_seconds"] = opt.budget;
    summary["class_count"] = outcome.classes.size();
    summary["labeled_solutions"] = outcome.labeled_solutions;
    summary["nodes_explored"] = outcome.nodes_explored;
    summary["exhaustive"] = outcome.exhaustive;
    summary["wall_time_seconds"] = outcome.wall_time_seconds;
    auto classes = ordered_json::array();
    for (std::size_t c = 0; c < outcome.classes.size(); ++c) {
        ordered_json entry;
        if (c < class_files.size()) {
            entry["file"] = class_files[c];
        }
        entry["facet_count"] = outcome.classes[c].facet_count();
        auto facets = ordered_json::array();
        for (const scx::Face& f : outcome.classes[c].facets()) {
            facets.push_back(f.vertices());
        }
        entry["facets"] = std::move(facets);
        classes.push_back(std::move(entry));
    }
    summary["classes"] = std::move(classes);

    if (!opt.out.empty()) {
        std::string path = (std::filesystem::path(opt.out) / "summary.json").string();
        std::ofstream out(path);
        if (!out) {
            throw scx::validation_error("cannot write '" + path + "'");
        }
        out << summary.dump(2) << "\n";
    }

    if (opt.json) {
        std::cout << summary.dump(2) << "\n";
    } else {
        std::cout << "search n=" << opt.n << " r=" << opt.r << " mode=" << scx::search_mode_name(mode)
                  << ": " << outcome.classes.size() << " classes, " << outcome.labeled_solutions
                  << " labeled solutions, " << outcome.nodes_explored << " nodes, "
                  << (outcome.exhaustive ? "exhaustive" : "budget hit (INCOMPLETE)") << ", "
                  << outcome.wall_time_seconds << " s\n";
        for (std::size_t c = 0; c < outcome.classes.size(); ++c) {
            std::cout << "class " << (c + 1) << " (" << outcome.classes[c].facet_count()
                      << " facets):";
            for (const scx::Face& f : outcome.classes[c].facets()) {
                std::cout << " " << f.to_string();
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_verify() {
    scx::VerificationReport report = scx::verify_known_cases();
    int passed = 0;
    for (const auto& check : report.checks) {
        std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.detail
                  << "\n";
        if (check.passed) {
            ++passed;
        }
    }
    std::cout << passed << "/" << report.checks.size() << " checks passed\n";
    return report.all_passed() ? 0 : 1;
}

int run_dump(const DumpOptions& opt) {
    scx::Complex k = scx::read_complex_file(opt.input, scx::parse_facet_format(opt.format));
    scx::LabeledSparseMatrix m = [&] {
        if (opt.matrix == "boundary_signed") {
            return scx::signed_boundary(k, opt.i);
        }
        if (opt.matrix == "boundary_signless") {
            return scx::signless_boundary(k, opt.i);
        }
        if (opt.matrix == "q_up") {
            return scx::q_up(k, opt.i);
        }
        if (opt.matrix == "q_down") {
            return scx::q_down(k, opt.i);
        }
        if (opt.matrix == "laplacian_up") {
            return scx::laplacian_signed(k, opt.i, scx::LaplacianKind::up);
        }
        if (opt.matrix == "laplacian_down") {
            return scx::laplacian_signed(k, opt.i, scx::LaplacianKind::down);
        }
        if (opt.matrix == "laplacian_full") {
            return scx::laplacian_signed(k, opt.i, scx::LaplacianKind::full);
        }
        throw scx::validation_error("unknown matrix kind '" + opt.matrix + "'");
    }();
    for (const scx::MatrixEntry& e : m.entries) {
        std::cout << m.row_labels[static_cast<std::size_t>(e.row)].to_string() << " "
                  << m.col_labels[static_cast<std::size_t>(e.col)].to_string() << " " << e.value
                  << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral and homological analysis of simplicial complexes"};
    app.require_subcommand(1);

    AnalyzeOptions analyze_opt;
    auto* analyze = app.add_subcommand("analyze", "Full report for a facet file");
    analyze->add_option("--input", analyze_opt.input, "facet file path")->required();
    analyze->add_option("--format", analyze_opt.format, "auto|text|structured");
    analyze->add_option("--tol", analyze_opt.tol, "spectral tolerance");
    analyze->add_flag("--json", analyze_opt.json, "structured report output");

    GenerateOptions generate_opt;
    auto* generate = app.add_subcommand("generate", "Write a built-in complex as a facet file");
    generate->add_option("family", generate_opt.family, "tented|rhombic|complete|k1|k2|random")
        ->required();
    generate->add_option("--out", generate_opt.out, "output path (default stdout)");
    generate->add_option("--format", generate_opt.format, "text|structured");
    generate->add_option("--n", generate_opt.n, "vertex count");
    generate->add_option("--r", generate_opt.r, "family parameter r");
    generate->add_option("--p", generate_opt.p, "facet keep probability (random family)");
    generate->add_option("--seed", generate_opt.seed, "random seed (random family)");

    SearchOptions search_opt;
    auto* search = app.add_subcommand("search", "Enumerate exact-extension complexes");
    search->add_option("--n", search_opt.n, "vertex count")->required();
    search->add_option("--r", search_opt.r, "facet dimension")->required();
    search->add_option("--mode", search_opt.mode, "exhaustive|backtracking");
    search->add_option("--budget", search_opt.budget, "wall-clock budget in seconds");
    search->add_option("--out", search_opt.out, "directory for class files and summary.json");
    search->add_option("--format", search_opt.format, "class file format: text|structured");
    search->add_flag("--json", search_opt.json, "print the summary as JSON");

    auto* verify = app.add_subcommand("verify", "Recheck the built-in reference values");

    DumpOptions dump_opt;
    auto* dump = app.add_subcommand("dump", "Print a labeled operator as coordinate triplets");
    dump->add_option("--input", dump_opt.input, "facet file path")->required();
    dump->add_option("--format", dump_opt.format, "auto|text|structured");
    dump->add_option("--matrix", dump_opt.matrix,
                     "boundary_signed|boundary_signless|q_up|q_down|laplacian_up|laplacian_down|"
                     "laplacian_full");
    dump->add_option("--i", dump_opt.i, "operator dimension index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) {
            return run_analyze(analyze_opt);
        }
        if (generate->parsed()) {
            return run_generate(generate_opt);
        }
        if (search->parsed()) {
            return run_search(search_opt);
        }
        if (verify->parsed()) {
            return run_verify();
        }
        if (dump->parsed()) {
            return run_dump(dump_opt);
        }
    } catch (const scx::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
