#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bohrlab/extremal.hpp"
#include "bohrlab/majorants.hpp"
#include "bohrlab/radius.hpp"
#include "bohrlab/report.hpp"

namespace {

using namespace bohrlab;

TableFormat parse_format(const std::string& token) {
    if (token == "csv") return TableFormat::Csv;
    if (token == "json") return TableFormat::Json;
    throw std::invalid_argument("unknown format '" + token + "' (expected csv or json)");
}

RadiusProblem parse_radius_problem(const std::string& token, double gamma, double beta,
                                   int m) {
    if (token == "cesaro-th1") return RadiusProblem::cesaro();
    if (token == "cesaro-omega") return RadiusProblem::cesaro_omega(gamma);
    if (token == "bernardi-th2") return RadiusProblem::bernardi(beta);
    if (token == "bernardi-thc") return RadiusProblem::bernardi_truncated(beta, m);
    if (token == "bernardi-omega") return RadiusProblem::bernardi_omega(gamma, beta);
    if (token == "dft") return RadiusProblem::dft();
    throw std::invalid_argument("unknown radius problem '" + token + "'");
}

BoundKind parse_operator(const std::string& token, double beta) {
    if (token == "bohr") return BoundKind::plain_bohr();
    if (token == "cesaro-th1") return BoundKind::cesaro();
    if (token == "bernardi-th2") return BoundKind::bernardi(beta);
    if (token == "dft") return BoundKind::dft();
    throw std::invalid_argument("problem '" + token +
                                "' does not name an operator majorant");
}

// "lo:hi:n" -> n equally spaced points from lo to hi inclusive.
std::vector<double> parse_grid(const std::string& text) {
    std::istringstream in(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(in, part, ':')) parts.push_back(part);
    if (parts.size() != 3) {
        throw std::invalid_argument("grid '" + text + "' is not of the form lo:hi:n");
    }
    double lo = 0.0;
    double hi = 0.0;
    long n = 0;
    std::size_t used = 0;
    try {
        lo = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
        hi = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
        n = std::stol(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    } catch (const std::exception&) {
        throw std::invalid_argument("grid '" + text + "' is not of the form lo:hi:n");
    }
    if (n < 1) throw std::invalid_argument("grid point count must be at least 1");
    if (n > 1 && !(hi > lo)) {
        throw std::invalid_argument("grid needs hi > lo when n > 1");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        grid.push_back(lo);
        return grid;
    }
    for (long i = 0; i < n; ++i) {
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    return grid;
}

template <typename Emit>
void write_output(const std::string& path, const Emit& emit) {
    if (path.empty()) {
        emit(std::cout);
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("failed writing to standard output");
        return;
    }
    std::ofstream out(path);
    if (!out.is_open()) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    emit(out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

struct Options {
    std::string problem;
    double gamma = 0.0;
    double beta = 1.0;
    int m = 0;
    double a = 0.0;
    double rho = 0.0;
    std::string a_grid;
    std::string rho_grid;
    std::uint64_t seed = 42;
    double tol = 1e-12;
    std::string format = "csv";
    std::string out;
};

int run_radius(const Options& opt) {
    RadiusProblem problem = parse_radius_problem(opt.problem, opt.gamma, opt.beta, opt.m);
    RootCertificate cert = radius_for(problem);
    TableFormat f = parse_format(opt.format);
    write_output(opt.out, [&](std::ostream& s) { emit_table(cert, f, s); });
    return 0;
}

int run_majorant(const Options& opt) {
    BoundKind op = parse_operator(opt.problem, opt.beta);
    TableFormat f = parse_format(opt.format);
    int order = suggested_order(op, opt.gamma, opt.rho, opt.tol);
    CoefficientSeries s = extremal_coeffs({opt.a, opt.gamma}, order);
    MajorantValue v = majorant(op, s, opt.rho, opt.tol);
    write_output(opt.out, [&](std::ostream& out) { emit_table(v, f, out); });
    return 0;
}

int run_sweep(const Options& opt) {
    BoundKind op = parse_operator(opt.problem, opt.beta);
    TableFormat f = parse_format(opt.format);
    MarginTable table =
        sweep_margins(op, opt.gamma, parse_grid(opt.a_grid), parse_grid(opt.rho_grid));
    write_output(opt.out, [&](std::ostream& out) { emit_table(table, f, out); });
    return 0;
}

int run_verify(const Options& opt) {
    VerifyReport report = run_verify_suite(opt.seed);
    TableFormat f = parse_format(opt.format);
    write_output(opt.out, [&](std::ostream& out) { emit_table(report, f, out); });
    return report.all_pass() ? 0 : 3;
}

int run_figures(const Options& opt) {
    TableFormat f = parse_format(opt.format);
    const char* ext = f == TableFormat::Csv ? ".csv" : ".json";
    std::string dir = opt.out.empty() ? "." : opt.out;
    struct Figure {
        const char* stem;
        void (*emit)(TableFormat, std::ostream&);
    };
    const Figure figures[] = {
        {"boundary_circles", emit_boundary_circles},
        {"cesaro_concavity", emit_cesaro_concavity},
        {"cesaro_radius_equation", emit_cesaro_radius_equation},
    };
    for (const Figure& fig : figures) {
        std::string path = dir + "/" + fig.stem + ext;
        write_output(path, [&](std::ostream& out) { fig.emit(f, out); });
        std::cerr << "wrote " << path << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp majorant bounds for operators on shifted disks"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* radius = app.add_subcommand("radius", "Solve a radius equation");
    radius->add_option("--problem", opt.problem,
                       "cesaro-th1|cesaro-omega|bernardi-th2|bernardi-thc|"
                       "bernardi-omega|dft")
        ->required();
    radius->add_option("--gamma", opt.gamma, "Disk shift in [0,1)");
    radius->add_option("--beta", opt.beta, "Integral-operator weight");
    radius->add_option("--m", opt.m, "Vanishing order for bernardi-thc");

    CLI::App* majorant = app.add_subcommand(
        "majorant", "Evaluate an operator majorant of the extremal family");
    majorant->add_option("--problem", opt.problem, "bohr|cesaro-th1|bernardi-th2|dft")
        ->required();
    majorant->add_option("--a", opt.a, "Extremal parameter in (0,1]")->required();
    majorant->add_option("--rho", opt.rho, "Evaluation radius in [0,1)")->required();
    majorant->add_option("--gamma", opt.gamma, "Disk shift in [0,1)");
    majorant->add_option("--beta", opt.beta, "Integral-operator weight");
    majorant->add_option("--tol", opt.tol, "Truncation tolerance");

    CLI::App* sweep =
        app.add_subcommand("sweep", "Sharpness margins of the extremal family on a grid");
    sweep->add_option("--problem", opt.problem, "bohr|cesaro-th1|bernardi-th2|dft")
        ->required();
    sweep->add_option("--a-grid", opt.a_grid, "lo:hi:n")->required();
    sweep->add_option("--rho-grid", opt.rho_grid, "lo:hi:n")->required();
    sweep->add_option("--gamma", opt.gamma, "Disk shift in [0,1)");
    sweep->add_option("--beta", opt.beta, "Integral-operator weight");

    CLI::App* verify = app.add_subcommand("verify", "Run the seeded property suites");
    verify->add_option("--seed", opt.seed, "Generator seed");

    CLI::App* figures = app.add_subcommand("figures", "Write plot data files");
    figures->add_option("--out", opt.out, "Output directory (default .)");

    for (CLI::App* sub : {radius, majorant, sweep, verify}) {
        sub->add_option("--format", opt.format, "csv|json");
        sub->add_option("--out", opt.out, "Output file (default stdout)");
    }
    figures->add_option("--format", opt.format, "csv|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (radius->parsed()) return run_radius(opt);
        if (majorant->parsed()) return run_majorant(opt);
        if (sweep->parsed()) return run_sweep(opt);
        if (verify->parsed()) return run_verify(opt);
        if (figures->parsed()) return run_figures(opt);
        std::cerr << "no command given\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
