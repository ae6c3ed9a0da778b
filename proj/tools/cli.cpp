#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "dodgson/condense.hpp"
#include "dodgson/huckel.hpp"
#include "dodgson/matrix_io.hpp"
#include "dodgson/oracle.hpp"

namespace dodgson::cli {

namespace {

struct DetOptions {
    std::string file;
    std::string method = "auto";
    bool trace = false;
    bool count_ops = false;
};

struct BenchOptions {
    std::string sizes = "3..6";
    std::size_t trials = 20;
    std::uint64_t seed = 42;
};

struct HuckelOptions {
    std::optional<std::size_t> chain;
    std::string edges;
    double alpha = 0.0;
    double beta = -1.0;
    bool show_poly = false;
    double tol = 1e-10;
};

void print_ops(std::ostream& out, const OpCount& ops) {
    out << "mults: " << ops.mults << "\n"
        << "divs: " << ops.divs << "\n"
        << "adds: " << ops.adds << "\n";
}

int cmd_det(const DetOptions& opt, std::ostream& out, std::ostream& err) {
    const Matrix a = read_matrix_file(opt.file);
    if (!a.is_square()) {
        err << "error: matrix is " << a.rows() << "x" << a.cols() << ", not square\n";
        return kNotSquare;
    }

    if (opt.method == "cofactor" || opt.method == "bareiss") {
        OpCount ops;
        const Scalar det = opt.method == "cofactor" ? cofactor_det(a, ops) : bareiss_det(a, ops);
        out << to_string(det) << "\n";
        if (opt.trace) err << "note: --trace applies to condensation only\n";
        if (opt.count_ops) print_ops(out, ops);
        return kOk;
    }

    std::optional<CondensationResult> result;
    std::string fallback_reason;
    try {
        result = condensation_det(a);
    } catch (const FallbackRequired& e) {
        if (opt.method == "condense") {
            err << "error: " << e.what() << "\n";
            return kFallbackRequired;
        }
        fallback_reason = e.reason();
    }

    if (!result) {
        OpCount ops;
        const Scalar det = bareiss_det(a, ops);
        out << to_string(det) << "\n";
        out << "method: bareiss (fallback: " << fallback_reason << ")\n";
        if (opt.count_ops) print_ops(out, ops);
        return kOk;
    }

    out << to_string(result->det) << "\n";
    if (opt.method == "auto") out << "method: condense\n";
    if (opt.count_ops) print_ops(out, result->trace.ops);
    if (opt.trace) out << format_trace(result->trace);
    if (result->trace.precision_warning) err << "warning: condensation divided by a value near zero\n";
    return kOk;
}

std::optional<std::pair<std::size_t, std::size_t>> parse_range(const std::string& s) {
    static const std::regex pattern(R"(^(\d{1,3})(?:\.\.(\d{1,3}))?$)");
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) return std::nullopt;
    const std::size_t lo = std::stoul(m[1]);
    const std::size_t hi = m[2].matched ? std::stoul(m[2]) : lo;
    return std::pair{lo, hi};
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    const auto range = parse_range(opt.sizes);
    if (!range || range->first < 3 || range->second > 10 || range->first > range->second) {
        err << "error: --sizes must be a..b with 3 <= a <= b <= 10, got '" << opt.sizes << "'\n";
        return kUsage;
    }
    if (opt.trials == 0) {
        err << "error: --trials must be positive\n";
        return kUsage;
    }
    std::vector<RatioReport> rows;
    for (std::size_t n = range->first; n <= range->second; ++n) rows.push_back(count_ratio(n, opt.trials, opt.seed));
    out << "# seed " << opt.seed << "; condensation_ops = mean mults + divs, cofactor_ops = mean mults\n";
    out << format_ratio_table(rows);
    return kOk;
}

std::string format_energy(double e) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", e);
    return buf;
}

int cmd_huckel(const HuckelOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.beta == 0.0) {
        err << "error: --beta must be nonzero\n";
        return kUsage;
    }
    if (!(opt.tol > 0.0)) {
        err << "error: --tol must be positive\n";
        return kUsage;
    }
    if (opt.chain && *opt.chain == 0) {
        err << "error: --chain needs at least one atom\n";
        return kUsage;
    }
    if (opt.alpha > 0.0 || opt.beta > 0.0) {
        err << "warning: Coulomb and resonance integrals are physically negative (alpha=" << opt.alpha
            << ", beta=" << opt.beta << ")\n";
    }

    const huckel::PiSystem system = opt.chain ? huckel::PiSystem::chain(*opt.chain)
                                              : huckel::read_pi_system_file(opt.edges);
    const auto secular = huckel::secular_polynomial(system);
    std::vector<double> energies;
    for (double x : huckel::real_roots(secular.poly, opt.tol)) energies.push_back(opt.alpha - opt.beta * x);
    std::sort(energies.begin(), energies.end());

    out << "atoms: " << system.n_atoms() << "\n";
    out << "method: " << (secular.method == huckel::DetMethod::Condensation ? "condense" : "bareiss") << "\n";
    out << "polynomial: " << to_string(secular.poly) << "\n";
    out << "coefficients:";
    for (const auto& c : secular.poly.coefficients()) out << " " << c.get_str();
    out << "\n";
    if (opt.show_poly) out << "symbolic: " << huckel::symbolic_form(secular.poly) << "\n";
    out << "energies:\n";
    for (double e : energies) out << format_energy(e) << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact determinants by condensation, with reference oracles and Hückel energy levels", "dodgson"};
    app.require_subcommand(1);

    DetOptions det;
    auto* det_cmd = app.add_subcommand("det", "determinant of a matrix file");
    det_cmd->add_option("file", det.file, "matrix file")->required();
    det_cmd->add_option("--method", det.method, "condense | cofactor | bareiss | auto")
        ->check(CLI::IsMember({"condense", "cofactor", "bareiss", "auto"}));
    det_cmd->add_flag("--trace", det.trace, "print every condensation stage");
    det_cmd->add_flag("--count-ops", det.count_ops, "print arithmetic tallies");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "operation counts: condensation vs cofactor expansion");
    bench_cmd->add_option("--sizes", bench.sizes, "matrix sizes a..b within 3..10");
    bench_cmd->add_option("--trials", bench.trials, "random matrices per size");
    bench_cmd->add_option("--seed", bench.seed, "random seed");

    HuckelOptions huck;
    auto* huckel_cmd = app.add_subcommand("huckel", "Hückel energy levels from the secular determinant");
    auto* chain_opt = huckel_cmd->add_option("--chain", huck.chain, "linear chain of n atoms");
    auto* edges_opt = huckel_cmd->add_option("--edges", huck.edges, "pi-system file (atoms N / edge i j)");
    chain_opt->excludes(edges_opt);
    huckel_cmd->add_option("--alpha", huck.alpha, "Coulomb integral");
    huckel_cmd->add_option("--beta", huck.beta, "resonance integral (nonzero)");
    huckel_cmd->add_flag("--show-poly", huck.show_poly, "print the secular determinant in alpha, beta, E");
    huckel_cmd->add_option("--tol", huck.tol, "root tolerance");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (huckel_cmd->parsed() && chain_opt->count() + edges_opt->count() == 0) {
            throw CLI::ValidationError("huckel", "one of --chain or --edges is required");
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (det_cmd->parsed()) return cmd_det(det, out, err);
        if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
        return cmd_huckel(huck, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what();
        if (!e.token().empty()) err << " (token '" << e.token() << "')";
        err << "\n";
        return kUsage;
    } catch (const NoConvergence& e) {
        err << "error: " << e.what() << "\n";
        return kNoConvergence;
    }
}

}  // namespace dodgson::cli
