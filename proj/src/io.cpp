#include "logsym/io.hpp"

#include <fstream>
#include <sstream>

namespace logsym {

namespace {

template <class F>
auto guarded(const char* what, F&& body) -> decltype(body())
{
    try {
        return body();
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

Rational rational_from_json(const Json& v)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long>());
    throw InputError("expected an integer or a rational string");
}

Json indices_to_json(const std::vector<int>& zero_based)
{
    Json out = Json::array();
    for (int i : zero_based)
        out.push_back(i + 1);
    return out;
}

IndexSet indices_from_json(const Json& v, int n)
{
    std::vector<int> sorted;
    for (const auto& x : v) {
        int i = x.get<int>();
        if (i < 1 || i > n)
            throw InputError("index " + std::to_string(i) + " out of range");
        sorted.push_back(i - 1);
    }
    for (std::size_t k = 1; k < sorted.size(); ++k)
        if (sorted[k - 1] >= sorted[k])
            throw InputError("indices must be strictly increasing");
    return IndexSet::from_list(sorted);
}

template <class G>
Json graded_to_json(const G& g)
{
    Json terms = Json::array();
    for (const auto& [k, c] : g.terms())
        terms.push_back({{"indices", indices_to_json(k.indices())}, {"coeff", to_string(c)}});
    return {{"frame", to_string(g.frame().kind())}, {"degree", g.degree()}, {"terms", terms}};
}

template <class G>
G graded_from_json(VarSpec spec, const Json& doc)
{
    return guarded("graded element", [&] {
        const std::string name = doc.at("frame").get<std::string>();
        Frame frame = name == "coordinate" ? Frame::coordinate(spec)
                      : name == "log"      ? Frame::log(spec)
                                           : throw InputError("unsupported frame '" + name + "'");
        G out(frame, doc.at("degree").get<int>());
        for (const auto& t : doc.at("terms"))
            out.add_term(indices_from_json(t.at("indices"), spec.total_vars()),
                         parse_poly(spec, t.at("coeff").get<std::string>()));
        return out;
    });
}

} // namespace

Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& doc)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << dump(doc);
}

std::string dump(const Json& doc)
{
    return doc.dump(2) + "\n";
}

PoissonStructure structure_from_json(const Json& doc)
{
    return guarded("structure", [&] {
        const VarSpec spec(doc.at("dimension").get<int>(), doc.at("divisor_vars").get<int>());
        const int n = spec.total_vars();
        MultiVector pi(Frame::coordinate(spec), 2);
        for (const auto& t : doc.at("terms")) {
            int i = t.at("i").get<int>();
            int j = t.at("j").get<int>();
            if (i < 1 || j < 1 || i > n || j > n || i == j)
                throw InputError("bad term indices (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            const Json& c = t.at("coeff");
            LaurentPoly f = c.is_string() ? parse_poly(spec, c.get<std::string>())
                                          : LaurentPoly::constant(spec, rational_from_json(c));
            if (i > j) {
                std::swap(i, j);
                f = -f;
            }
            pi.add_term(IndexSet::single(i - 1).with(j - 1), f);
        }
        return PoissonStructure(std::move(pi));
    });
}

Json structure_to_json(const PoissonStructure& p)
{
    Json terms = Json::array();
    for (const auto& [k, c] : p.bivector().terms()) {
        auto idx = k.indices();
        terms.push_back({{"i", idx[0] + 1}, {"j", idx[1] + 1}, {"coeff", to_string(c)}});
    }
    return {{"dimension", p.spec().total_vars()}, {"divisor_vars", p.spec().divisor_vars()}, {"terms", terms}};
}

RationalMatrix matrix_from_json(const Json& doc)
{
    return guarded("matrix", [&] {
        const Json& rows = doc.is_object() ? doc.at("matrix") : doc;
        if (!rows.is_array() || rows.empty())
            throw InputError("matrix must be a nonempty array of rows");
        const int r = static_cast<int>(rows.size());
        const int c = static_cast<int>(rows[0].size());
        RationalMatrix m(r, c, Rational(0));
        for (int i = 0; i < r; ++i) {
            if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != c)
                throw InputError("matrix rows must be arrays of equal length");
            for (int j = 0; j < c; ++j)
                m(i, j) = rational_from_json(rows[i][j]);
        }
        return m;
    });
}

Json matrix_to_json(const RationalMatrix& m)
{
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return {{"matrix", rows}};
}

Json form_to_json(const DiffForm& w) { return graded_to_json(w); }
Json field_to_json(const MultiVector& v) { return graded_to_json(v); }
DiffForm form_from_json(VarSpec spec, const Json& doc) { return graded_from_json<DiffForm>(spec, doc); }
MultiVector field_from_json(VarSpec spec, const Json& doc) { return graded_from_json<MultiVector>(spec, doc); }

Json certificate_to_json(const GenPosCertificate& cert)
{
    Json failures = Json::array();
    if (cert.failure)
        failures.push_back(indices_to_json(*cert.failure));
    Json witnesses = Json::array();
    for (const auto& w : cert.witnesses)
        witnesses.push_back({{"columns", indices_to_json(w.columns)}, {"rows", indices_to_json(w.rows)}});
    return {{"verdict", cert.verdict}, {"t", cert.t}, {"failures", failures}, {"witnesses", witnesses}};
}

Json exactness_to_json(const ExactnessReport& report)
{
    Json table = Json::array();
    for (const auto& e : report.table)
        table.push_back({{"degree", e.degree}, {"weight", e.weight}, {"dim_cohomology", e.dim_cohomology}});
    return {{"complex_id", report.complex_id},
            {"weight_cap", report.weight_cap},
            {"table", table},
            {"verdict", report.exact ? "exact" : "not exact"}};
}

Json toric_report_to_json(const ToricStructure& t, const ToricReport& report)
{
    Json doc;
    doc["n"] = t.n;
    doc["matrix"] = matrix_to_json(t.a)["matrix"];
    doc["pfaffian"] = to_string(report.pfaffian);
    doc["nonsingular"] = report.nonsingular;
    doc["jacobi"] = report.jacobi;
    if (report.divisor) {
        Json comps = Json::array();
        for (const auto& [var, mult] : report.divisor->components)
            comps.push_back({{"variable", var + 1}, {"multiplicity", mult}});
        doc["divisor"] = {{"components", comps},
                          {"unit_part", to_string(report.divisor->unit_part)},
                          {"simple_normal_crossings", report.divisor->simple_normal_crossings}};
    } else {
        doc["divisor"] = {{"error", report.divisor_error}};
    }
    Json gp = Json::array();
    for (const auto& entry : report.general_position) {
        Json c = certificate_to_json(entry.certificate);
        c["certificate_verified"] = entry.certificate_verified;
        gp.push_back(c);
    }
    doc["general_position"] = gp;

    const int d = 2 * t.n;
    Json betti = Json::array();
    Json hodge = Json::array();
    for (int i = 0; i <= d; ++i) {
        betti.push_back(betti_torus(d, i));
        Json row = Json::array();
        for (int j = 0; j <= d; ++j)
            row.push_back(log_hodge_numbers(d, i, j));
        hodge.push_back(row);
    }
    Json dims = {{"betti_torus", betti}, {"log_hodge_numbers", hodge}};
    if (t.n >= 2)
        dims["deformation_tangent_dim"] = deformation_tangent_dim(t.n);
    doc["dimensions"] = dims;
    return doc;
}

} // namespace logsym
