#ifndef ARFCALC_JSON_IO_HPP
#define ARFCALC_JSON_IO_HPP

#include "arfcalc/forms.hpp"
#include "arfcalc/linkforms.hpp"
#include "arfcalc/qnormal.hpp"

#include <json.hpp>

namespace arfcalc::io {

using nlohmann::json;

/// Polynomials serialize as integer arrays in ascending degree,
/// e.g. [1,0,2] for 1 + 2x^2. Coefficients outside the int64 range are
/// emitted as decimal strings; both encodings are accepted on input.
json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const json& j);

json respoly_to_json(const ResPoly& p);
ResPoly respoly_from_json(const json& j, int modulus);

/// Matrices serialize as arrays of rows, each row an array of
/// polynomial arrays.
json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

json form_to_json(const EpsForm& f);
EpsForm form_from_json(const json& j);

json witness_to_json(const LagrangianWitness& w);
LagrangianWitness witness_from_json(const json& j);

json resolution_to_json(const LinkingResolution& r);
LinkingResolution resolution_from_json(const json& j);

json formation_to_json(const SFormation& s);

json q0class_to_json(const Q0ClassZx& c);
json q3class_to_json(const Q3ClassZx& c);

json dyadic_to_json(const Dyadic& d);

/// Parse error reported with a distinct type so the CLI maps it to the
/// parse-failure exit code.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int int_from_json(const json& j);

} // namespace arfcalc::io

#endif
