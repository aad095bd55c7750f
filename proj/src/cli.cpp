#include "symhorn/cli.hpp"

#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "symhorn/io.hpp"
#include "symhorn/sampling.hpp"
#include "symhorn/schurhorn.hpp"
#include "symhorn/williamson.hpp"

namespace symhorn::cli {

namespace {

struct Options {
    std::string input, x, y, values, out;
    std::string mean = "geometric";
    std::string relation = "super";
    std::string format = "text";
    std::uint64_t seed = 0;
    double spread = 1.0;
    std::optional<double> tol;
    std::optional<double> slack;
};

io::Format output_format(const Options& o) {
    return o.format == "structured" ? io::Format::structured : io::Format::text;
}

// A literal list such as "2,3" or, failing that, a vector file path.
std::vector<double> resolve_vector(const std::string& arg, const char* name) {
    if (arg.empty()) throw io::ParseError(std::string("missing ") + name);
    if (auto literal = io::parse_number_list(arg)) return *literal;
    return io::read_vector(arg);
}

DiagonalMean parse_mean(const std::string& s) {
    return s == "arithmetic" ? DiagonalMean::arithmetic : DiagonalMean::geometric;
}

// Artifact to --out (report on `out`), or artifact on `out` (report on `err`).
struct Sinks {
    std::ostream& report;
    std::function<void(const io::Document&)> emit;
};

Sinks make_sinks(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.out.empty()) {
        return {err, [&out, fmt = output_format(o)](const io::Document& d) { out << io::render(d, fmt); }};
    }
    return {out, [path = o.out, fmt = output_format(o)](const io::Document& d) { io::write_document(path, d, fmt); }};
}

void print_verdict(std::ostream& os, const std::string& label, const MajorisationVerdict& v) {
    os << label << ": ";
    if (v.holds) {
        os << "holds";
    } else {
        os << "fails at k=" << *v.first_violation_index << " (lhs " << io::format_number(v.lhs_partial_sum)
           << ", rhs " << io::format_number(v.rhs_partial_sum) << ")";
    }
    os << "\n";
}

int cmd_eigs(const Options& o, std::ostream& out) {
    const PositiveVector d = symplectic_eigenvalues(io::read_matrix(o.input));
    if (output_format(o) == io::Format::structured)
        out << io::render(io::Document{std::nullopt, d.values()}, io::Format::structured);
    else
        out << io::join_numbers(d.values()) << "\n";
    return kOk;
}

int cmd_williamson(const Options& o, std::ostream& out, std::ostream& err) {
    const Matrix a = io::read_matrix(o.input);
    const Sinks sinks = make_sinks(o, out, err);
    auto report = [&](const WilliamsonDecomposition& w) {
        const double mf = w.m.frobenius_norm();
        sinks.report << "d: " << io::join_numbers(w.d.values()) << "\n"
                     << "congruence_residual: " << io::format_number(w.congruence_residual) << " (bound "
                     << io::format_number(kWilliamsonTol * a.frobenius_norm()) << ")\n"
                     << "symplectic_residual: " << io::format_number(w.symplectic_residual) << " (bound "
                     << io::format_number(kWilliamsonTol * (1.0 + mf * mf)) << ")\n";
        if (w.ill_conditioned) sinks.report << "warning: d_max/d_min exceeds 1e8, residuals may be unreliable\n";
    };
    try {
        const WilliamsonDecomposition w = williamson_decomposition(a);
        sinks.emit(io::Document{w.m, w.d.values()});
        report(w);
        return kOk;
    } catch (const WilliamsonResidualError& e) {
        sinks.emit(io::Document{e.result().m, e.result().d.values()});
        report(e.result());
        err << "error: " << e.what() << "\n";
        return kNegative;
    }
}

int cmd_majorize(const Options& o, std::ostream& out) {
    const PositiveVector x(resolve_vector(o.x, "--x"));
    const PositiveVector y(resolve_vector(o.y, "--y"));
    const double slack = o.slack.value_or(default_slack(y));
    MajorisationVerdict v;
    if (o.relation == "sub")
        v = is_weakly_submajorized(x, y, slack);
    else if (o.relation == "exact")
        v = is_majorized(x, y, slack);
    else
        v = is_weakly_supermajorized(x, y, slack);
    print_verdict(out, o.relation, v);
    return v.holds ? kOk : kNegative;
}

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
    const PositiveVector x(resolve_vector(o.x, "--x"));
    const PositiveVector y(resolve_vector(o.y, "--y"));
    const DiagonalMean mean = parse_mean(o.mean);
    const double tol = o.tol.value_or(kConstructionTol);
    const ConstructionReport r = mean == DiagonalMean::geometric ? construct_geometric(x, y) : construct_arithmetic(x, y);

    const Sinks sinks = make_sinks(o, out, err);
    sinks.emit(io::Document{r.a, std::nullopt});
    sinks.report << "mean: " << to_string(mean) << "\n"
                 << "z: " << io::join_numbers(r.intermediate_z->values()) << "\n"
                 << "spectrum: " << io::join_numbers(r.achieved_spectrum.values()) << "\n"
                 << "diagonal: " << io::join_numbers(r.achieved_diagonal.values()) << "\n"
                 << "spectrum_residual: " << io::format_number(r.spectrum_residual) << "\n"
                 << "diagonal_residual: " << io::format_number(r.diagonal_residual) << "\n";
    return r.spectrum_residual <= tol && r.diagonal_residual <= tol ? kOk : kNegative;
}

int cmd_sample(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<double> raw;
    if (!o.values.empty())
        raw = resolve_vector(o.values, "--values");
    else
        raw = resolve_vector(o.input, "--values or --input");
    const PositiveVector d(std::move(raw));
    SeededGenerator g(o.seed);
    const Matrix a = random_pd_with_symplectic_spectrum(d, o.spread, g);

    const Sinks sinks = make_sinks(o, out, err);
    sinks.emit(io::Document{a, std::nullopt});
    sinks.report << "seed: " << o.seed << "\n"
                 << "recovered: " << io::join_numbers(symplectic_eigenvalues(a).values()) << "\n";
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Matrix a = io::read_matrix(o.input);
    const PositiveVector x(resolve_vector(o.x, "--x"));
    const PositiveVector y(resolve_vector(o.y, "--y"));
    const DiagonalMean mean = parse_mean(o.mean);
    const double tol = o.tol.value_or(1e-6);
    const ConstructionReport r = verify_construction(a, x, y, mean);

    out << "mean: " << to_string(mean) << "\n"
        << "spectrum: " << io::join_numbers(r.achieved_spectrum.values()) << "\n"
        << "diagonal: " << io::join_numbers(r.achieved_diagonal.values()) << "\n"
        << "spectrum_residual: " << io::format_number(r.spectrum_residual) << "\n"
        << "diagonal_residual: " << io::format_number(r.diagonal_residual) << "\n";
    for (DiagonalNotion which : {DiagonalNotion::geometric, DiagonalNotion::arithmetic, DiagonalNotion::symplectic_diag})
        print_verdict(out, "forward " + to_string(which), check_forward(a, which));
    const bool ok = r.spectrum_residual <= tol && r.diagonal_residual <= tol;
    out << "verdict: " << (ok ? "pass" : "fail") << "\n";
    return ok ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symplectic spectra, Williamson normal forms and symplectic Schur-Horn constructions", "symhorn"};
    app.require_subcommand(1, 1);
    Options o;

    const std::vector<std::string> formats{"text", "structured"};
    const std::vector<std::string> means{"geometric", "arithmetic"};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output file format")->check(CLI::IsMember(formats));
    };

    auto* eigs = app.add_subcommand("eigs", "Print the ascending symplectic eigenvalues of a PD matrix");
    eigs->add_option("--input", o.input, "Matrix file")->required();
    add_format(eigs);

    auto* will = app.add_subcommand("williamson", "Williamson decomposition M^T A M = D (+) D");
    will->add_option("--input", o.input, "Matrix file")->required();
    will->add_option("--out", o.out, "Write M and d here");
    add_format(will);

    auto* maj = app.add_subcommand("majorize", "Decide a majorisation relation between x and y");
    maj->add_option("--x", o.x, "Vector file or literal list")->required();
    maj->add_option("--y", o.y, "Vector file or literal list")->required();
    maj->add_option("--relation", o.relation, "sub, super or exact")
        ->check(CLI::IsMember({"sub", "super", "exact"}));
    maj->add_option("--slack", o.slack, "Partial-sum slack (default 1e-12 max(1, sum y))");

    auto* cons = app.add_subcommand("construct", "Build A with symplectic spectrum y and diagonal mean x");
    cons->add_option("--x", o.x, "Target diagonal (file or literal)")->required();
    cons->add_option("--y", o.y, "Target symplectic spectrum (file or literal)")->required();
    cons->add_option("--mean", o.mean, "geometric or arithmetic")->check(CLI::IsMember(means));
    cons->add_option("--tol", o.tol, "Verification tolerance (default 1e-7)");
    cons->add_option("--out", o.out, "Write A here");
    add_format(cons);

    auto* samp = app.add_subcommand("sample", "Random PD matrix with prescribed symplectic spectrum");
    samp->add_option("--values", o.values, "Spectrum as a literal list");
    samp->add_option("--input", o.input, "Spectrum vector file");
    samp->add_option("--seed", o.seed, "Generator seed");
    samp->add_option("--spread", o.spread, "Squeeze range of the symplectic factor")->check(CLI::NonNegativeNumber);
    samp->add_option("--out", o.out, "Write the matrix here");
    add_format(samp);

    auto* ver = app.add_subcommand("verify", "Check a matrix against target spectrum and diagonal");
    ver->add_option("--input", o.input, "Matrix file")->required();
    ver->add_option("--x", o.x, "Target diagonal (file or literal)")->required();
    ver->add_option("--y", o.y, "Target symplectic spectrum (file or literal)")->required();
    ver->add_option("--mean", o.mean, "geometric or arithmetic")->check(CLI::IsMember(means));
    ver->add_option("--tol", o.tol, "Residual tolerance (default 1e-6)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kError;
    }

    try {
        if (eigs->parsed()) return cmd_eigs(o, out);
        if (will->parsed()) return cmd_williamson(o, out, err);
        if (maj->parsed()) return cmd_majorize(o, out);
        if (cons->parsed()) return cmd_construct(o, out, err);
        if (samp->parsed()) return cmd_sample(o, out, err);
        if (ver->parsed()) return cmd_verify(o, out);
    } catch (const ConstraintError& e) {
        err << "error: " << e.what() << " [violation index " << e.violation_index() << "]\n";
        return kNegative;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

}  // namespace symhorn::cli
