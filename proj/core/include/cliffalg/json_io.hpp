#pragma once

#include <cliffalg/algebra_tensor.hpp>
#include <cliffalg/degeneration.hpp>
#include <cliffalg/lipschitz.hpp>
#include <cliffalg/local_models.hpp>
#include <cliffalg/plethysm.hpp>
#include <cliffalg/rational_function.hpp>
#include <cliffalg/weights.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace cliffalg::json_io {

using json = nlohmann::json;

/// Parses text, turning syntax errors into ParseError with the byte offset.
json parse(const std::string& text);

// Rationals are "p/q" strings; integers (JSON numbers) are accepted on input.
json to_json(const Rational& x);
Rational rational_from_json(const json& j);

/// Ascending coefficients.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// {"num": [...], "den": [...]}; a bare coefficient array or a single rational is a polynomial.
json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const json& j);

json to_json(const SpaceQ& V);
SpaceQ space_from_json(const json& j);
json to_json(const QuadraticFamily& F);
QuadraticFamily family_from_json(const json& j);

/// {"[1,3]": "2/3", "[]": "1"}.
json to_json(const MultivectorQ& x);
MultivectorQ multivector_from_json(const json& j);

/// {"dim": d, "identity": i, "c": [[i, j, k, coef], ...]}.
json to_json(const AlgebraTensor<Rational>& T);
AlgebraTensor<Rational> tensor_from_json(const json& j);

json to_json(const Weight& w);
/// [{"weight": [...], "multiplicity": k}, ...] in weight order.
json to_json(const WeightMultiset& W);
WeightMultiset weights_from_json(const json& j);

json to_json(const MatrixQ& m);
MatrixQ matrix_from_json(const json& j);
json to_json(const MatrixTuple& T);
MatrixTuple tuple_from_json(const json& j);
json to_json(const TraceFingerprint& fp);

json to_json(const LipschitzVerdict& v);
json to_json(const RadicalReport& r);
json to_json(const SpecializationWitness& w);
json to_json(const Decomposition& d);

}  // namespace cliffalg::json_io
