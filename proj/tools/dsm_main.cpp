// dsm: exact construction, checking, and decomposition of doubly stochastic
// matrices with uniform marginals.
//
// Exit codes: 0 = success / claim holds, 1 = claim refuted, 2 = usage or
// input error, 3 = over a documented capacity limit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsm/constructions.hpp"
#include "dsm/errors.hpp"
#include "dsm/extremality.hpp"
#include "dsm/matrix.hpp"
#include "dsm/matrix_io.hpp"
#include "dsm/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct ConstructArgs {
    std::string kind;
    std::vector<std::string> params;
    std::string out;
    std::string format = "json";
};

struct CheckArgs {
    std::string predicate;
    std::string path;
    bool oracle = false;
};

struct DecomposeArgs {
    std::string path;
    std::string out_dir = "decomposition";
};

struct TableArgs {
    long long max_n = 0;
    long long max_m = 0;
    std::string mode = "formula";
    std::string out;
};

struct CensusArgs {
    long long n = 0;
    long long m = 0;
    std::string out;
    std::string hist;
};

struct GraphArgs {
    std::string path;
    std::string out;
};

struct EquivalentArgs {
    std::string path_a;
    std::string path_b;
};

long long parse_positive(const std::string& text, const std::string& what) {
    try {
        size_t used = 0;
        const long long value = std::stoll(text, &used);
        if (used != text.size() || value < 1) throw std::invalid_argument(what);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(what + " must be a positive integer, got '" + text + "'");
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

int run_construct(const ConstructArgs& args) {
    const dsm::MatrixFormat format = dsm::matrix_format_from_string(args.format);
    const std::string ext = args.format;

    std::optional<dsm::UMatrix> built;
    std::string label, default_name;
    if (args.kind == "E") {
        if (args.params.size() != 2) {
            throw std::invalid_argument("construct E wants <n> <k>");
        }
        const long long n = parse_positive(args.params[0], "n");
        const long long k = parse_positive(args.params[1], "k");
        built = dsm::build_E(n, k);
        label = "E(" + std::to_string(n) + "," + std::to_string(k * n) + ")";
        default_name = "E_" + std::to_string(n) + "x" + std::to_string(k * n);
    } else if (args.kind == "F" || args.kind == "Y") {
        if (args.params.size() != 2) {
            throw std::invalid_argument("construct " + args.kind + " wants <n> <m>");
        }
        const long long n = parse_positive(args.params[0], "n");
        const long long m = parse_positive(args.params[1], "m");
        built = args.kind == "F" ? dsm::build_F(n, m) : dsm::build_Y(n, m);
        label = args.kind + "(" + std::to_string(n) + "," + std::to_string(m) + ")";
        default_name = args.kind + "_" + std::to_string(n) + "x" + std::to_string(m);
    } else if (args.kind == "gallery") {
        if (args.params.size() != 1) {
            throw std::invalid_argument("construct gallery wants <tag>");
        }
        const dsm::GalleryId id = dsm::gallery_id_from_string(args.params[0]);
        built = dsm::gallery(id);
        label = args.params[0];
        default_name = args.params[0];
    } else {
        throw std::invalid_argument("unknown construct kind '" + args.kind +
                                    "' (want E, F, Y, or gallery)");
    }

    const std::string out_path = args.out.empty() ? default_name + "." + ext : args.out;
    dsm::write_matrix_file(out_path, *built, format);
    std::cout << label << ": " << built->rows() << " x " << built->cols() << ", support "
              << dsm::support(*built).size() << ", S(" << built->rows() << ","
              << built->cols() << ") = " << dsm::s_formula(built->rows(), built->cols())
              << " -> " << out_path << "\n";
    return kExitOk;
}

int run_check(const CheckArgs& args) {
    const dsm::UMatrix M = dsm::read_matrix_file(args.path);
    const dsm::MarginalReport report = dsm::validate(M);

    if (args.predicate == "member") {
        std::cout << report.summary() << "\n";
        return report.is_member ? kExitOk : kExitRefuted;
    }
    if (args.predicate == "tiling") {
        const bool ok = dsm::verify_tiling(M);
        std::cout << (ok ? "tiles simultaneously with both subgroup translates"
                         : "tiling conditions fail")
                  << "\n";
        return ok ? kExitOk : kExitRefuted;
    }
    if (args.predicate == "extremal") {
        const auto cycle = dsm::find_cycle(dsm::support_graph(M));
        if (!report.is_member) {
            throw std::invalid_argument("extremality is defined for members only; " +
                                        report.summary());
        }
        if (cycle) {
            std::cout << "not extremal; support cycle: " << cycle->str() << "\n";
            return kExitRefuted;
        }
        std::cout << "extremal (support graph is a forest)\n";
        return kExitOk;
    }
    if (args.predicate == "minimum") {
        if (!report.is_member) {
            throw std::invalid_argument("minimality is defined for members only; " +
                                        report.summary());
        }
        const long long size = static_cast<long long>(dsm::support(M).size());
        const long long target = dsm::s_formula(M.rows(), M.cols());
        std::cout << "support " << size << ", S(" << M.rows() << "," << M.cols()
                  << ") = " << target << "\n";
        if (args.oracle) {
            const long long nm = static_cast<long long>(M.rows()) * M.cols();
            long long oracle_value;
            if (nm <= 24) {
                oracle_value =
                    dsm::min_support_bruteforce(M.rows(), M.cols(), dsm::MinSupportMethod::subset);
            } else if (M.rows() + M.cols() <= 16) {
                oracle_value =
                    dsm::min_support_bruteforce(M.rows(), M.cols(), dsm::MinSupportMethod::forest);
            } else {
                throw dsm::capacity_error("oracle verification limited to n*m <= 24 or n+m <= 16");
            }
            std::cout << "oracle minimum " << oracle_value << "\n";
            if (oracle_value != target) {
                std::cout << "formula and oracle disagree\n";
                return kExitRefuted;
            }
        }
        return size == target ? kExitOk : kExitRefuted;
    }
    if (args.predicate == "birkhoff") {
        const bool ok = dsm::scale_check_birkhoff(M);
        std::cout << (ok ? "1/n scaling is a permutation matrix"
                         : "1/n scaling is not a permutation matrix")
                  << "\n";
        return ok ? kExitOk : kExitRefuted;
    }
    throw std::invalid_argument("unknown predicate '" + args.predicate +
                                "' (want member, extremal, minimum, tiling, or birkhoff)");
}

int run_decompose(const DecomposeArgs& args) {
    const dsm::UMatrix M = dsm::read_matrix_file(args.path);
    const dsm::MarginalReport report = dsm::validate(M);
    if (!report.is_member) {
        throw std::invalid_argument("decomposition is defined for members only; " +
                                    report.summary());
    }
    const dsm::ConvexDecomposition result = dsm::decompose(M);

    // Re-verify the recombination before reporting anything.
    dsm::Rational coefficient_sum(0);
    dsm::UMatrix mixed(M.rows(), M.cols());
    for (const auto& [coeff, term] : result.terms) {
        coefficient_sum += coeff;
        for (int i = 0; i < M.rows(); ++i) {
            for (int j = 0; j < M.cols(); ++j) {
                mixed.at(i, j) += coeff * term.at(i, j);
            }
        }
    }
    if (coefficient_sum != dsm::Rational(1) || mixed != M) {
        throw std::logic_error("decomposition failed recombination check");
    }

    std::filesystem::create_directories(args.out_dir);
    std::string manifest = "{\"source\":\"" + args.path + "\",\"terms\":[";
    for (size_t k = 0; k < result.terms.size(); ++k) {
        char name[32];
        std::snprintf(name, sizeof(name), "term_%03zu.json", k + 1);
        dsm::write_matrix_file(args.out_dir + "/" + name, result.terms[k].second,
                               dsm::MatrixFormat::json);
        if (k) manifest += ",";
        manifest += "{\"coefficient\":\"" + result.terms[k].first.str() + "\",\"file\":\"" +
                    name + "\"}";
    }
    manifest += "]}\n";
    write_text_file(args.out_dir + "/manifest.json", manifest);

    std::cout << result.terms.size() << " extremal term(s), coefficients sum to 1 -> "
              << args.out_dir << "\n";
    return kExitOk;
}

int run_table(const TableArgs& args) {
    if (args.mode != "formula" && args.mode != "oracle" && args.mode != "both") {
        throw std::invalid_argument("table mode must be formula, oracle, or both");
    }
    if (args.max_n < 2 || args.max_m < 2) {
        throw std::invalid_argument("table wants max_n >= 2 and max_m >= 2");
    }
    const bool with_oracle = args.mode != "formula";
    const bool with_formula = args.mode != "oracle";

    std::ostringstream csv;
    csv << "n,m";
    if (with_formula) csv << ",S_formula";
    if (with_oracle) csv << ",S_oracle";
    csv << "\n";

    bool disagreement = false;
    for (long long n = 2; n <= args.max_n; ++n) {
        for (long long m = n; m <= args.max_m; ++m) {
            csv << n << "," << m;
            long long formula = 0, oracle = 0;
            if (with_formula) {
                formula = dsm::s_formula(n, m);
                csv << "," << formula;
            }
            if (with_oracle) {
                if (n * m <= 24) {
                    oracle = dsm::min_support_bruteforce(n, m, dsm::MinSupportMethod::subset);
                } else if (n + m <= 16) {
                    oracle = dsm::min_support_bruteforce(n, m, dsm::MinSupportMethod::forest);
                } else {
                    throw dsm::capacity_error(
                        "table oracle modes limited to n*m <= 24 or n+m <= 16 per pair");
                }
                csv << "," << oracle;
            }
            csv << "\n";
            if (args.mode == "both" && formula != oracle) disagreement = true;
        }
    }

    if (args.out.empty()) {
        std::cout << csv.str();
    } else {
        write_text_file(args.out, csv.str());
        std::cout << "table -> " << args.out << "\n";
    }
    if (disagreement) {
        std::cout << "formula and oracle disagree\n";
        return kExitRefuted;
    }
    return kExitOk;
}

int run_census(const CensusArgs& args) {
    if (args.n < 1 || args.m < 1) {
        throw std::invalid_argument("census wants positive n and m");
    }
    if (args.n + args.m > 14) {
        throw dsm::capacity_error("census limited to n + m <= 14");
    }
    const dsm::ExtremalCensus census =
        dsm::enumerate_extremal(static_cast<int>(args.n), static_cast<int>(args.m));
    const dsm::CensusStatistics stats = dsm::census_statistics(census);

    const std::string out_path = args.out.empty()
                                     ? "census_" + std::to_string(args.n) + "x" +
                                           std::to_string(args.m) + ".jsonl"
                                     : args.out;
    std::string hist_path = args.hist;
    if (hist_path.empty()) {
        hist_path = out_path;
        if (const size_t dot = hist_path.rfind(".jsonl"); dot != std::string::npos) {
            hist_path.erase(dot);
        }
        hist_path += "_hist.csv";
    }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    dsm::write_census_jsonl(census, out);
    std::ofstream hist(hist_path, std::ios::binary);
    if (!hist) throw std::runtime_error("cannot open '" + hist_path + "' for writing");
    dsm::write_histogram_csv(stats, hist);

    std::cout << census.size() << " extremal support(s), sizes " << stats.min_size << ".."
              << stats.max_size << ", " << stats.equivalence_classes
              << " equivalence class(es) -> " << out_path << ", " << hist_path << "\n";
    return kExitOk;
}

int run_graph(const GraphArgs& args) {
    const dsm::UMatrix M = dsm::read_matrix_file(args.path);
    const std::string out_path = args.out.empty() ? args.path + ".dot" : args.out;
    write_text_file(out_path, dsm::to_dot(M));
    const auto cycle = dsm::find_cycle(dsm::support_graph(M));
    std::cout << "support graph: " << M.rows() + M.cols() << " nodes, "
              << dsm::support(M).size() << " edges"
              << (cycle ? ", cycle marked: " + cycle->str() : "") << " -> " << out_path
              << "\n";
    return kExitOk;
}

int run_equivalent(const EquivalentArgs& args) {
    const dsm::UMatrix A = dsm::read_matrix_file(args.path_a);
    const dsm::UMatrix B = dsm::read_matrix_file(args.path_b);
    const bool same = dsm::are_equivalent(A, B);
    std::cout << (same ? "equivalent under row/column permutation"
                       : "not equivalent under row/column permutation")
              << "\n";
    return same ? kExitOk : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for doubly stochastic matrices with uniform marginals"};
    app.require_subcommand(1);
    long long seed = 0;
    app.add_option("--seed", seed, "reserved for future randomized commands");

    ConstructArgs construct_args;
    CLI::App* construct = app.add_subcommand(
        "construct", "build E/F/Y matrices or gallery examples and write them to a file");
    construct->add_option("kind", construct_args.kind, "E, F, Y, or gallery")->required();
    construct->add_option("params", construct_args.params,
                          "E: n k; F/Y: n m; gallery: tag (T_4x6, F_3x4_nonextremal, "
                          "MIN_4x5_A, MIN_4x5_B, F_8x27)");
    construct->add_option("-o,--out", construct_args.out, "output path (default derived)");
    construct->add_option("--format", construct_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "test a predicate on a matrix file");
    check->add_option("predicate", check_args.predicate,
                      "member, extremal, minimum, tiling, or birkhoff")
        ->required();
    check->add_option("file", check_args.path, "matrix file (json or csv)")->required();
    check->add_flag("--oracle", check_args.oracle,
                    "for minimum: also verify against the brute-force oracle");

    DecomposeArgs decompose_args;
    CLI::App* decomp = app.add_subcommand(
        "decompose", "write a member as a convex combination of extremal members");
    decomp->add_option("file", decompose_args.path, "matrix file")->required();
    decomp->add_option("--out-dir", decompose_args.out_dir,
                       "directory for terms and manifest (default decomposition/)");

    TableArgs table_args;
    CLI::App* table = app.add_subcommand("table", "emit an S(n,m) table as CSV");
    table->add_option("max_n", table_args.max_n, "largest n")->required();
    table->add_option("max_m", table_args.max_m, "largest m")->required();
    table->add_option("--mode", table_args.mode, "formula, oracle, or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    table->add_option("-o,--out", table_args.out, "output path (default stdout)");

    CensusArgs census_args;
    CLI::App* census = app.add_subcommand(
        "census", "enumerate every extremal support of M(n,m) (n+m <= 14)");
    census->add_option("n", census_args.n, "row count")->required();
    census->add_option("m", census_args.m, "column count")->required();
    census->add_option("-o,--out", census_args.out, "JSON-lines output path");
    census->add_option("--hist", census_args.hist, "histogram CSV path");

    GraphArgs graph_args;
    CLI::App* graph = app.add_subcommand("graph", "export the support graph as DOT");
    graph->add_option("file", graph_args.path, "matrix file")->required();
    graph->add_option("-o,--out", graph_args.out, "output path (default <file>.dot)");

    EquivalentArgs equivalent_args;
    CLI::App* equivalent = app.add_subcommand(
        "equivalent", "test two matrices for row/column permutation equivalence");
    equivalent->add_option("file_a", equivalent_args.path_a, "first matrix file")->required();
    equivalent->add_option("file_b", equivalent_args.path_b, "second matrix file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(construct_args);
        if (check->parsed()) return run_check(check_args);
        if (decomp->parsed()) return run_decompose(decompose_args);
        if (table->parsed()) return run_table(table_args);
        if (census->parsed()) return run_census(census_args);
        if (graph->parsed()) return run_graph(graph_args);
        if (equivalent->parsed()) return run_equivalent(equivalent_args);
    } catch (const dsm::capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
