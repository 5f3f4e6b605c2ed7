#include "jumat/document.hpp"

#include <cctype>
#include <istream>
#include <sstream>

#include "jumat/errors.hpp"
#include "jumat/factorization.hpp"

namespace jumat {

namespace {

const GaussianRational kI = GaussianRational::i();

// i^k for any integer k.
GaussianRational i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GaussianRational(1);
    case 1: return kI;
    case 2: return GaussianRational(-1);
    default: return -kI;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return a;
}

std::size_t read_nu(const Json& j) {
  const Json& n = field(j, "nu");
  if (!n.is_number_integer()) throw ParseError("'nu' must be an integer");
  const auto nu = n.get<long long>();
  if (nu < 2) throw DimensionError("'nu' must be at least 2");
  return static_cast<std::size_t>(nu);
}

std::string read_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

struct Header {
  std::size_t nu;
  Var var;
  Mode mode;
};

Header read_header(const Json& j, std::string_view kind) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (kind_of(j) != kind) {
    throw ParseError("expected a " + std::string(kind) + " document, got " + kind_of(j));
  }
  Header h{read_nu(j), Var::Omega, Mode::Complex};
  if (j.contains("var")) h.var = parse_var(read_string(j.at("var"), "'var'"));
  if (j.contains("mode")) {
    h.mode = parse_mode(read_string(j.at("mode"), "'mode'"));
  } else if (h.var == Var::Lambda) {
    h.mode = Mode::RealLambda;
  }
  if (h.var == Var::Lambda && h.mode != Mode::RealLambda) {
    throw ParseError("lambda documents require mode real_lambda");
  }
  return h;
}

Vector vector_from_json(const Json& j, std::size_t nu) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  if (j.size() != nu) throw DimensionError("vector length differs from nu");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_json(x));
  return out;
}

}  // namespace

std::string_view to_string(Var var) {
  return var == Var::Lambda ? "lambda" : "omega";
}

Var parse_var(std::string_view text) {
  if (text == "omega") return Var::Omega;
  if (text == "lambda") return Var::Lambda;
  throw ParseError("unknown variable '" + std::string(text) + "'");
}

GaussianRational parse_gaussian(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return GaussianRational(Rational::parse(s));
  s.remove_suffix(1);
  // The imaginary part starts at the last sign that is not leading.
  std::size_t split = 0;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  const std::string_view re = s.substr(0, split);
  std::string_view im = s.substr(split);
  Rational im_value;
  if (im.empty() || im == "+") im_value = Rational(1);
  else if (im == "-") im_value = Rational(-1);
  else {
    if (im.front() == '+') im.remove_prefix(1);
    im_value = Rational::parse(im);
  }
  return {re.empty() ? Rational(0) : Rational::parse(re), im_value};
}

GaussianRational scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_gaussian(j.get<std::string>());
  if (j.is_number_integer()) return GaussianRational(Rational(j.get<long>()));
  if (!j.is_object()) throw ParseError("scalar must be an object or a string");
  Rational re, im;
  if (j.contains("re")) re = Rational::parse(read_string(j.at("re"), "'re'"));
  if (j.contains("im")) im = Rational::parse(read_string(j.at("im"), "'im'"));
  return {re, im};
}

Json scalar_json(const GaussianRational& x) {
  Json out = Json::object();
  out["re"] = x.re().str();
  out["im"] = x.im().str();
  return out;
}

Matrix constant_from_json(const Json& j, std::size_t nu) {
  if (!j.is_array() || j.size() != nu) {
    throw DimensionError("matrix must have nu rows");
  }
  Matrix m(nu, nu);
  for (std::size_t r = 0; r < nu; ++r) {
    const Vector row = vector_from_json(j[r], nu);
    for (std::size_t c = 0; c < nu; ++c) m(r, c) = row[c];
  }
  return m;
}

Json constant_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

MatrixPolynomial from_lambda(const MatrixPolynomial& u) {
  std::vector<Matrix> coeffs;
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    coeffs.push_back(i_power(static_cast<long>(k)) * u.coeffs()[k]);
  }
  return MatrixPolynomial(u.rows(), u.cols(), std::move(coeffs));
}

MatrixPolynomial to_lambda(const MatrixPolynomial& u) {
  std::vector<Matrix> coeffs;
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
    coeffs.push_back(i_power(-static_cast<long>(k)) * u.coeffs()[k]);
  }
  return MatrixPolynomial(u.rows(), u.cols(), std::move(coeffs));
}

Json factor_json(const GeneratorParams& p, Var var) {
  Json out = Json::object();
  out["z"] = vector_json(p.z.vector());
  Json phi = Json::array();
  const auto& rhos = p.phi.rhos();
  for (std::size_t k = 0; k < rhos.size(); ++k) {
    if (var == Var::Omega) {
      phi.push_back(rhos[k].str());
      continue;
    }
    // i rho omega^p = rho i^(1-p) lambda^p.
    const long power = static_cast<long>(k) + 1;
    const GaussianRational c = GaussianRational(rhos[k]) * i_power(1 - power);
    if (!c.is_real()) throw ValidationError("phase is not lambda-real");
    phi.push_back(c.re().str());
  }
  out["phi"] = std::move(phi);
  Json g = Json::array();
  const auto terms = p.g.terms();
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const GaussianRational unit =
        var == Var::Omega ? GaussianRational(1) : i_power(-static_cast<long>(k) - 1);
    g.push_back(vector_json(unit * terms[k]));
  }
  out["g"] = std::move(g);
  return out;
}

GeneratorParams factor_from_json(const Json& j, std::size_t nu, Var var, Mode mode) {
  if (!j.is_object()) throw ParseError("factor must be an object");
  IsotropicDirection z = validate_xi(vector_from_json(field(j, "z"), nu), mode);
  std::vector<Rational> rhos;
  if (j.contains("phi")) {
    const Json& phi = array_field(j, "phi");
    for (std::size_t k = 0; k < phi.size(); ++k) {
      const Rational c = Rational::parse(read_string(phi[k], "phase coefficient"));
      if (var == Var::Omega) {
        rhos.push_back(c);
        continue;
      }
      const long power = static_cast<long>(k) + 1;
      const GaussianRational rho = GaussianRational(c) / i_power(1 - power);
      if (!rho.is_real()) {
        throw ValidationError("lambda phase has a real coefficient at an even power");
      }
      rhos.push_back(rho.re());
    }
  }
  std::vector<Vector> terms;
  if (j.contains("g")) {
    const Json& g = array_field(j, "g");
    for (std::size_t k = 0; k < g.size(); ++k) {
      const GaussianRational unit =
          var == Var::Omega ? GaussianRational(1) : i_power(static_cast<long>(k) + 1);
      terms.push_back(unit * vector_from_json(g[k], nu));
    }
  }
  GeneratorParams p{std::move(z), PhasePoly(std::move(rhos)),
                    TangentPoly(nu, std::move(terms))};
  validate_params(p, mode);
  return p;
}

Json to_json(const MatrixDocument& doc) {
  Json out = Json::object();
  out["kind"] = "matrix";
  out["var"] = to_string(doc.var);
  out["nu"] = doc.u.rows();
  out["mode"] = to_string(doc.mode);
  const MatrixPolynomial u = doc.var == Var::Lambda ? to_lambda(doc.u) : doc.u;
  Json coeffs = Json::array();
  for (const auto& c : u.coeffs()) coeffs.push_back(constant_json(c));
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json to_json(const WordDocument& doc) {
  Json out = Json::object();
  out["kind"] = "word";
  out["var"] = to_string(doc.var);
  out["nu"] = doc.word.nu;
  out["mode"] = to_string(doc.mode);
  Json factors = Json::array();
  for (const auto& f : doc.word.factors) factors.push_back(factor_json(f, doc.var));
  out["factors"] = std::move(factors);
  if (doc.tail) out["tail"] = constant_json(*doc.tail);
  return out;
}

MatrixDocument matrix_from_json(const Json& j) {
  const Header h = read_header(j, "matrix");
  std::vector<Matrix> coeffs;
  for (const auto& c : array_field(j, "coeffs")) coeffs.push_back(constant_from_json(c, h.nu));
  MatrixPolynomial u(h.nu, h.nu, std::move(coeffs));
  if (h.var == Var::Lambda) u = from_lambda(u);
  return {h.var, h.mode, std::move(u)};
}

WordDocument word_from_json(const Json& j) {
  const Header h = read_header(j, "word");
  WordDocument doc{h.var, h.mode, Word{h.nu, {}}, std::nullopt};
  for (const auto& f : array_field(j, "factors")) {
    doc.word.factors.push_back(factor_from_json(f, h.nu, h.var, h.mode));
  }
  validate_word(doc.word, h.mode);
  if (j.contains("tail")) {
    Matrix tail = constant_from_json(j.at("tail"), h.nu);
    if (h.mode != Mode::Complex && !tail.is_real()) {
      throw ValidationError("tail is not real");
    }
    try {
      validate_constant_j_unitary(tail);
    } catch (const NotMemberError& e) {
      throw ValidationError(std::string("tail: ") + e.what());
    }
    doc.tail = std::move(tail);
  }
  return doc;
}

std::string kind_of(const Json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  const std::string kind = read_string(field(j, "kind"), "'kind'");
  if (kind != "matrix" && kind != "word" && kind != "report") {
    throw ParseError("unknown document kind '" + kind + "'");
  }
  return kind;
}

std::vector<Json> read_documents(std::istream& in) {
  std::vector<Json> docs;
  while (true) {
    in >> std::ws;
    if (in.peek() == std::char_traits<char>::eof()) break;
    Json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
    docs.push_back(std::move(j));
  }
  return docs;
}

std::vector<Json> read_documents(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_documents(in);
}

std::string print(const Json& j) { return j.dump() + "\n"; }

MatrixPolynomial document_matrix(const Json& j) {
  if (kind_of(j) == "matrix") return matrix_from_json(j).u;
  const WordDocument w = word_from_json(j);
  MatrixPolynomial u = word_to_matrix(w.word);
  if (w.tail) u = u * MatrixPolynomial(*w.tail);
  return u;
}

}  // namespace jumat
