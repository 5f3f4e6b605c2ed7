#pragma once

// JSON interchange documents. Scalars are {"re": "p/q", "im": "p/q"};
// matrices list their coefficients in ascending powers of the document's
// variable. Internally everything is in omega; lambda = i*omega documents
// are converted on load and on print.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "jumat/group.hpp"
#include "jumat/linalg.hpp"
#include "jumat/poly.hpp"

namespace jumat {

using Json = nlohmann::ordered_json;

enum class Var { Omega, Lambda };

std::string_view to_string(Var var);
/// "omega" or "lambda"; throws ParseError otherwise.
Var parse_var(std::string_view text);

struct MatrixDocument {
  Var var = Var::Omega;
  Mode mode = Mode::Complex;
  MatrixPolynomial u;
};

struct WordDocument {
  Var var = Var::Omega;
  Mode mode = Mode::Complex;
  Word word;
  /// Constant right factor; absent means identity.
  std::optional<Matrix> tail;
};

/// "3/4", "-2i", "1/2-3/5i", "i".
GaussianRational parse_gaussian(std::string_view text);

/// Accepts the object form or a string in the parse_gaussian syntax.
GaussianRational scalar_from_json(const Json& j);
Json scalar_json(const GaussianRational& x);

Matrix constant_from_json(const Json& j, std::size_t nu);
Json constant_json(const Matrix& m);

/// lambda^k coefficient to omega^k coefficient and back.
MatrixPolynomial from_lambda(const MatrixPolynomial& u);
MatrixPolynomial to_lambda(const MatrixPolynomial& u);

/// In lambda documents phi lists lambda coefficients and g lists lambda
/// coefficient vectors; otherwise phi lists rho_k and g the omega terms.
Json factor_json(const GeneratorParams& p, Var var);
GeneratorParams factor_from_json(const Json& j, std::size_t nu, Var var,
                                 Mode mode);

Json to_json(const MatrixDocument& doc);
Json to_json(const WordDocument& doc);

/// Validate shape, then the mode and alternation of word documents.
/// Malformed input throws ParseError or DimensionError; words that fail
/// validation throw ValidationError.
MatrixDocument matrix_from_json(const Json& j);
WordDocument word_from_json(const Json& j);

/// "matrix", "word" or "report"; throws ParseError for anything else.
std::string kind_of(const Json& j);

/// Every top-level JSON value in the stream, in order.
std::vector<Json> read_documents(std::istream& in);
std::vector<Json> read_documents(std::string_view text);

/// Compact canonical form followed by a newline.
std::string print(const Json& j);

/// word * tail for word documents, u for matrix documents.
MatrixPolynomial document_matrix(const Json& j);

}  // namespace jumat
