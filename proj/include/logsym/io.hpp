// JSON fixtures and reports. Variable and column indices are 1-based in
// every document; rationals and polynomials are strings.
#ifndef LOGSYM_IO_HPP
#define LOGSYM_IO_HPP

#include "logsym/complexes.hpp"
#include "logsym/genpos.hpp"
#include "logsym/toric.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace logsym {

using Json = nlohmann::ordered_json;

/// Malformed input: unreadable file, bad JSON, or a document of the wrong shape.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& doc);
std::string dump(const Json& doc);

/// {dimension, divisor_vars, terms: [{i, j, coeff}]}; a term with i > j
/// contributes -coeff to d_j ^ d_i.
PoissonStructure structure_from_json(const Json& doc);
Json structure_to_json(const PoissonStructure& p);

/// A bare array of rows, or {"matrix": rows}; entries are numbers or strings.
RationalMatrix matrix_from_json(const Json& doc);
Json matrix_to_json(const RationalMatrix& m);

/// {frame, degree, terms: [{indices, coeff}]}
Json form_to_json(const DiffForm& w);
Json field_to_json(const MultiVector& v);
DiffForm form_from_json(VarSpec spec, const Json& doc);
MultiVector field_from_json(VarSpec spec, const Json& doc);

Json certificate_to_json(const GenPosCertificate& cert);
Json exactness_to_json(const ExactnessReport& report);
Json toric_report_to_json(const ToricStructure& t, const ToricReport& report);

} // namespace logsym

#endif
