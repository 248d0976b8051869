#include "logsym/cli.hpp"

#include "logsym/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace logsym {

namespace {

struct RunConfig {
    std::string structure_path;
    std::string matrix_path;
    std::string output_path;
    std::string piece;
    int t = 0;
    int max_degree = 2;
    int weight_cap = 4;
};

void emit(const RunConfig& cfg, const Json& report, std::ostream& out)
{
    if (cfg.output_path.empty())
        out << dump(report);
    else
        save_json_file(cfg.output_path, report);
}

IndexSet parse_piece(const std::string& text, int n)
{
    std::vector<int> sorted;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        int i = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("--I expects comma-separated indices, got '" + text + "'");
        }
        if (i < 1 || i > n)
            throw InputError("--I index " + std::to_string(i) + " out of range");
        sorted.push_back(i - 1);
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return IndexSet::from_list(sorted);
}

int cmd_jacobi(const RunConfig& cfg, std::ostream& out)
{
    const PoissonStructure p = structure_from_json(load_json_file(cfg.structure_path));
    const MultiVector bracket = schouten(p.bivector(), p.bivector());
    const bool holds = bracket.is_zero();
    out << "jacobi: " << (holds ? "holds" : "fails") << "\n";
    Json report = {{"jacobi", holds}};
    if (!holds)
        report["bracket"] = field_to_json(bracket);
    emit(cfg, report, out);
    return holds ? kExitOk : kExitFalse;
}

int cmd_pfaffian(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.matrix_path.empty() && cfg.structure_path.empty())
        throw InputError("pfaffian needs --matrix or --structure");
    Json report;
    if (!cfg.matrix_path.empty()) {
        const RationalMatrix a = matrix_from_json(load_json_file(cfg.matrix_path));
        if (a.rows() != a.cols())
            throw InputError("Pfaffian needs a square matrix");
        const Rational pf = a.rows() % 2 ? throw InputError("Pfaffian of an odd-sized matrix") : pfaffian(a);
        report = {{"source", "matrix"}, {"pfaffian", to_string(pf)}};
        out << "pfaffian: " << to_string(pf) << "\n";
    } else {
        const PoissonStructure p = structure_from_json(load_json_file(cfg.structure_path));
        const LaurentPoly pf = pfaffian(log_matrix(p));
        const TopPower top = top_power(p);
        report = {{"source", "structure"},
                  {"pfaffian", to_string(pf)},
                  {"top_power", to_string(top.coefficient)},
                  {"unit", is_unit_local(pf)}};
        out << "pfaffian of the log matrix: " << to_string(pf) << "\n";
    }
    emit(cfg, report, out);
    return kExitOk;
}

int cmd_genpos(const RunConfig& cfg, std::ostream& out)
{
    const PoissonStructure p = structure_from_json(load_json_file(cfg.structure_path));
    const int size = p.spec().total_vars();
    if (cfg.t < 1 || cfg.t > size)
        throw InputError("--t must lie in [1, " + std::to_string(size) + "]");
    const GenPosCertificate cert = poisson_t_general(p, cfg.t);
    out << cfg.t << "-general position: " << (cert.verdict ? "yes" : "no");
    if (cert.failure) {
        out << " (columns";
        for (int c : *cert.failure)
            out << " " << c + 1;
        out << " have no unit minor)";
    }
    out << "\n";
    emit(cfg, certificate_to_json(cert), out);
    return cert.verdict ? kExitOk : kExitFalse;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const PoissonStructure p = structure_from_json(load_json_file(cfg.structure_path));
    const int n = p.spec().total_vars();
    if (cfg.weight_cap < 0)
        throw InputError("--weight-cap must be nonnegative");
    if (cfg.max_degree < 0)
        throw InputError("--max-degree must be nonnegative");
    const IndexSet piece = parse_piece(cfg.piece, n);
    std::optional<LogDuality> duality;
    try {
        duality.emplace(p);
    } catch (const AlgebraError& e) {
        throw InputError(std::string("structure is not log-symplectic: ") + e.what());
    }
    const int top = std::min(n, std::max(cfg.max_degree + 1, piece.size()));
    GradedPieceQI q = [&] {
        try {
            return build_QI(*duality, piece, cfg.weight_cap, top);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }();
    const ExactnessReport report = verify_exactness(q.complex, piece.size(), cfg.max_degree, cfg.weight_cap);
    out << report.complex_id << ": " << (report.exact ? "exact" : "not exact") << " in degrees <= "
        << cfg.max_degree << ", weights <= " << cfg.weight_cap << "\n";
    for (const auto& e : report.table)
        if (e.dim_cohomology != 0)
            out << "  H^" << e.degree << " weight " << e.weight << ": " << e.dim_cohomology << "\n";
    emit(cfg, exactness_to_json(report), out);
    return report.exact ? kExitOk : kExitFalse;
}

int cmd_toric(const RunConfig& cfg, std::ostream& out)
{
    const RationalMatrix a = matrix_from_json(load_json_file(cfg.matrix_path));
    const ToricStructure t = [&] {
        try {
            return make_toric(a);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }();
    const ToricReport report = certify(t);
    out << "Pf(A) = " << to_string(report.pfaffian) << (report.nonsingular ? "" : " (singular)") << "\n";
    for (const auto& g : report.general_position)
        out << g.certificate.t << "-general position: " << (g.certificate.verdict ? "yes" : "no") << "\n";
    emit(cfg, toric_report_to_json(t, report), out);
    return report.nonsingular ? kExitOk : kExitFalse;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app("Log-symplectic Poisson structures: certification and exact complex computations", "logsym");
    app.require_subcommand(1);
    RunConfig cfg;

    auto* jacobi = app.add_subcommand("jacobi", "Check [Pi, Pi] = 0");
    jacobi->add_option("--structure", cfg.structure_path, "Structure JSON")->required();

    auto* pf = app.add_subcommand("pfaffian", "Pfaffian of a skew matrix or of a structure's log matrix");
    auto* pf_matrix = pf->add_option("--matrix", cfg.matrix_path, "Matrix JSON");
    auto* pf_structure = pf->add_option("--structure", cfg.structure_path, "Structure JSON");
    pf_matrix->excludes(pf_structure);

    auto* genpos = app.add_subcommand("genpos", "t-general position with certificate");
    genpos->add_option("--structure", cfg.structure_path, "Structure JSON")->required();
    genpos->add_option("--t", cfg.t, "Size of the column sets")->required();

    auto* verify = app.add_subcommand("verify-exactness", "Cohomology of a graded piece Q_I");
    verify->add_option("--structure", cfg.structure_path, "Structure JSON")->required();
    verify->add_option("--I", cfg.piece, "Comma-separated 1-based indices")->required();
    verify->add_option("--max-degree", cfg.max_degree, "Highest degree checked")->capture_default_str();
    verify->add_option("--weight-cap", cfg.weight_cap, "Highest weight checked")->capture_default_str();

    auto* toric = app.add_subcommand("toric-report", "Certify a toric structure Pi_A");
    toric->add_option("--matrix", cfg.matrix_path, "Matrix JSON")->required();

    for (auto* sub : {jacobi, pf, genpos, verify, toric})
        sub->add_option("--output", cfg.output_path, "Write the JSON report here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (jacobi->parsed())
            return cmd_jacobi(cfg, out);
        if (pf->parsed())
            return cmd_pfaffian(cfg, out);
        if (genpos->parsed())
            return cmd_genpos(cfg, out);
        if (verify->parsed())
            return cmd_verify(cfg, out);
        return cmd_toric(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

} // namespace logsym
