#pragma once

#include <string>

#include <json.hpp>

#include "comdec/algebra.hpp"
#include "comdec/freepoly.hpp"
#include "comdec/linalg.hpp"
#include "comdec/quaternion.hpp"
#include "comdec/twisted.hpp"

namespace comdec {

using Json = nlohmann::json;

/** JSON forms. Scalars are strings ("-2/3"); plain integers are accepted on
 *  input. Structures that cannot carry a field reference are parsed against
 *  an explicitly supplied one. All shape problems throw SchemaError with the
 *  JSON path of the offending value; semantic violations (non-associative
 *  tables, bad cocycles, non-groups) are forwarded from the owning module. */

Json field_to_json(const Field& f);
Field parse_field(const Json& j, const std::string& path = "$");

Json scalar_to_json(const Scalar& s);
Scalar parse_scalar(const Field& f, const Json& j, const std::string& path = "$");

Json matrix_to_json(const Mat& m);
Mat parse_matrix(const Field& f, const Json& j, const std::string& path = "$");

Json subspace_to_json(const Subspace& s);
Subspace parse_subspace(const Field& f, const Json& j, const std::string& path = "$");

Json group_to_json(const FiniteGroup& g);
FiniteGroup parse_group(const Json& j, const std::string& path = "$");

Json cocycle_to_json(const TwistingFunction& t);
TwistingFunction parse_cocycle(const FiniteGroup& g, const Field& f, const Json& j,
                               const std::string& path = "$");

Json poly_to_json(const NcPoly& p);
NcPoly parse_poly(const Json& j, const std::string& path = "$");

Json element_to_json(const Element& x);
Element parse_element(const AlgebraPtr& a, const Json& j, const std::string& path = "$");

/** Raw structure-constant form: {"field", "dim", "basis", "unit", "mul"}
 *  with mul a list of [i, j, k, coeff] quadruples: b_i * b_j has coefficient
 *  coeff on b_k; absent triples are zero. */
Json algebra_to_json(const Algebra& a);

/** Algebra spec files: exactly one of the raw form above or a builder
 *    {"matrix": {"n", "over"?}}         (sibling "field" when "over" absent)
 *    {"quaternion": {"a", "b", "char2"?}} with sibling "field"
 *    {"twisted_group": {"group", "tau"}} with sibling "field"
 *    {"group_algebra": {"group"}}        with sibling "field"
 *    {"product": [spec, ...]}
 *  The result is resolved and validated. */
AlgebraPtr parse_algebra_spec(const Json& j);
AlgebraPtr parse_algebra_spec_text(const std::string& text);

/** Whole-file convenience used by the CLI; throws SchemaError when the file
 *  cannot be read or is not JSON. */
Json load_json_file(const std::string& filename);

}  // namespace comdec
