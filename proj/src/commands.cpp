#include "jumat/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <future>
#include <string_view>

#include "jumat/errors.hpp"
#include "jumat/factorization.hpp"
#include "jumat/sampling.hpp"

namespace jumat {

namespace {

using Job = std::function<CommandResult()>;

CommandResult fail(int code, const std::string& what) {
  return {code, "", "error: " + what + "\n"};
}

CommandResult guarded(const Job& job) {
  try {
    return job();
  } catch (const ParseError& e) {
    return fail(kExitUsage, e.what());
  } catch (const DimensionError& e) {
    return fail(kExitUsage, e.what());
  } catch (const PreconditionError& e) {
    return fail(kExitUsage, e.what());
  } catch (const Error& e) {
    return fail(kExitNegative, e.what());
  } catch (const std::exception& e) {
    return fail(kExitNegative, std::string("internal error: ") + e.what());
  }
}

void append(CommandResult& total, const CommandResult& part) {
  total.out += part.out;
  total.err += part.err;
  total.exit_code = std::max(total.exit_code, part.exit_code);
}

// One job per document, run on up to `jobs` threads, output kept in order.
CommandResult run_batch(const std::vector<Json>& docs, unsigned jobs,
                        const std::function<CommandResult(const Json&)>& each) {
  if (docs.empty()) return fail(kExitUsage, "no input documents");
  std::vector<CommandResult> results(docs.size());
  const auto run = [&](std::size_t k) {
    results[k] = guarded([&] { return each(docs[k]); });
    if (!results[k].err.empty() && docs.size() > 1) {
      results[k].err = "document " + std::to_string(k + 1) + ": " + results[k].err;
    }
  };
  const std::size_t workers = std::max(1u, std::min<unsigned>(jobs, docs.size()));
  if (workers == 1) {
    for (std::size_t k = 0; k < docs.size(); ++k) run(k);
  } else {
    std::vector<std::future<void>> pending;
    for (std::size_t w = 0; w < workers; ++w) {
      pending.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t k = w; k < docs.size(); k += workers) run(k);
      }));
    }
    for (auto& f : pending) f.get();
  }
  CommandResult total;
  for (const auto& r : results) append(total, r);
  return total;
}

struct Loaded {
  Var var;
  Mode mode;
  MatrixPolynomial u;
};

Loaded load(const Json& doc, const CommandOptions& opt) {
  const std::string kind = kind_of(doc);
  if (kind == "report") throw ParseError("expected a matrix or word document");
  Loaded l{Var::Omega, Mode::Complex, document_matrix(doc)};
  if (kind == "matrix") {
    const auto m = matrix_from_json(doc);
    l.var = m.var;
    l.mode = m.mode;
  } else {
    const auto w = word_from_json(doc);
    l.var = w.var;
    l.mode = w.mode;
  }
  if (opt.mode) l.mode = *opt.mode;
  return l;
}

Var output_var(Var input, Mode mode, const CommandOptions& opt) {
  const Var var = opt.var.value_or(input);
  if (var == Var::Lambda && mode != Mode::RealLambda) {
    throw ParseError("lambda output requires mode real_lambda");
  }
  return var;
}

CommandResult emit(const Json& j) { return {kExitOk, print(j), ""}; }

Json report(std::string_view command) {
  Json r = Json::object();
  r["kind"] = "report";
  r["command"] = command;
  return r;
}

Json step_json(const ReductionStep& s) {
  Json out = Json::object();
  out["side"] = to_string(s.side);
  out["branch"] = to_string(s.branch);
  out["tau"] = s.indices.tau;
  out["mu"] = s.indices.mu;
  out["xi"] = s.indices.xi;
  out["degree_before"] = s.degree_before;
  out["degree_after"] = s.degree_after;
  out["factor"] = factor_json(s.params, Var::Omega);
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  if (text.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    parts.emplace_back(text.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

Json scalar_list(std::string_view text) {
  Json out = Json::array();
  for (const auto& s : split(text, ',')) out.push_back(scalar_json(parse_gaussian(s)));
  return out;
}

Mode default_mode(const CommandOptions& opt) {
  if (opt.mode) return *opt.mode;
  return opt.var == Var::Lambda ? Mode::RealLambda : Mode::Complex;
}

}  // namespace

CommandResult cmd_check(const std::vector<Json>& docs, const CommandOptions& opt) {
  return run_batch(docs, opt.jobs, [&](const Json& doc) {
    const Loaded l = load(doc, opt);
    const bool unitary = is_j_unitary(l.u);
    const bool normalized = unitary && l.u.eval(0) == Matrix::identity(l.u.rows());
    const bool in_mode = matrix_in_mode(l.u, l.mode);
    const bool member = unitary && in_mode && (normalized || !opt.normalized);
    Json r = report("check");
    r["nu"] = l.u.rows();
    r["degree"] = l.u.degree().value_or(0);
    r["mode"] = to_string(l.mode);
    r["j_unitary"] = unitary;
    r["normalized"] = normalized;
    r["in_mode"] = in_mode;
    r["member"] = member;
    CommandResult out = emit(r);
    if (!member) out.exit_code = kExitNegative;
    return out;
  });
}

CommandResult cmd_factor(const std::vector<Json>& docs, const CommandOptions& opt) {
  return run_batch(docs, opt.jobs, [&](const Json& doc) {
    const Loaded l = load(doc, opt);
    const Var var = output_var(l.var, l.mode, opt);
    const std::size_t degree = l.u.degree().value_or(0);
    if (opt.max_degree && degree > *opt.max_degree) {
      throw PreconditionError("degree " + std::to_string(degree) +
                              " exceeds --max-degree");
    }
    const FactorizationResult f = factor(l.u, l.mode, opt.verify);
    WordDocument w{var, l.mode, f.word, std::nullopt};
    if (f.tail.matrix() != Matrix::identity(l.u.rows())) w.tail = f.tail.matrix();
    CommandResult out = emit(to_json(w));
    if (opt.trace) {
      Json r = report("factor");
      r["var"] = "omega";
      Json steps = Json::array();
      for (const auto& s : f.trace) steps.push_back(step_json(s));
      r["trace"] = std::move(steps);
      out.out += print(r);
    }
    return out;
  });
}

CommandResult cmd_mul(const std::vector<Json>& docs, const CommandOptions& opt) {
  if (docs.empty()) return fail(kExitUsage, "no input documents");
  return guarded([&] {
    const Loaded first = load(docs.front(), opt);
    MatrixPolynomial product = first.u;
    Mode mode = first.mode;
    for (std::size_t k = 1; k < docs.size(); ++k) {
      const Loaded next = load(docs[k], opt);
      if (next.mode != mode) mode = Mode::Complex;
      product = product * next.u;
    }
    const Var var = output_var(first.var, mode, opt);
    return emit(to_json(MatrixDocument{var, mode, std::move(product)}));
  });
}

CommandResult cmd_inv(const std::vector<Json>& docs, const CommandOptions& opt) {
  return run_batch(docs, opt.jobs, [&](const Json& doc) {
    if (kind_of(doc) == "word") {
      const WordDocument w = word_from_json(doc);
      const Mode mode = opt.mode.value_or(w.mode);
      const Var var = output_var(w.var, mode, opt);
      if (!w.tail) return emit(to_json(WordDocument{var, mode, word_inverse(w.word), std::nullopt}));
    }
    const Loaded l = load(doc, opt);
    if (!is_j_unitary(l.u)) throw NotMemberError("matrix is not J-unitary");
    const Var var = output_var(l.var, l.mode, opt);
    return emit(to_json(MatrixDocument{var, l.mode, j_inverse(l.u)}));
  });
}

CommandResult cmd_gen(const GenSpec& spec, const CommandOptions& opt) {
  return guarded([&] {
    const Var var = opt.var.value_or(Var::Omega);
    const Mode mode = default_mode(opt);
    output_var(var, mode, opt);
    Json f = Json::object();
    f["z"] = scalar_list(spec.z);
    Json phi = Json::array();
    for (const auto& s : split(spec.phi, ',')) phi.push_back(Rational::parse(s).str());
    f["phi"] = std::move(phi);
    Json g = Json::array();
    for (const auto& v : split(spec.g, ';')) g.push_back(scalar_list(v));
    f["g"] = std::move(g);
    const std::size_t nu = f["z"].size();
    if (nu < 2) throw DimensionError("z needs at least 2 entries");
    const GeneratorParams p = factor_from_json(f, nu, var, mode);
    if (spec.as_word) {
      Word w{nu, {}};
      if (!p.is_identity()) w.factors.push_back(p);
      return emit(to_json(WordDocument{var, mode, std::move(w), std::nullopt}));
    }
    return emit(to_json(MatrixDocument{var, mode, build_generator(p)}));
  });
}

CommandResult cmd_rand(const RandSpec& spec, const CommandOptions& opt) {
  return guarded([&] {
    if (spec.nu < 2) throw DimensionError("nu must be at least 2");
    if (spec.height < 1) throw PreconditionError("height must be positive");
    SampleConfig cfg;
    cfg.nu = spec.nu;
    cfg.mode = default_mode(opt);
    cfg.seed = opt.seed;
    cfg.height = spec.height;
    cfg.max_factors = spec.max_factors;
    if (opt.max_degree) {
      cfg.max_phase_degree = *opt.max_degree;
      cfg.max_tangent_degree = *opt.max_degree;
    }
    const Var var = output_var(opt.var.value_or(Var::Omega), cfg.mode, opt);
    Sampler sampler(cfg);
    Word w = spec.factors ? sampler.sample_word(*spec.factors) : sampler.sample_word();
    if (spec.as_matrix) {
      return emit(to_json(MatrixDocument{var, cfg.mode, word_to_matrix(w)}));
    }
    return emit(to_json(WordDocument{var, cfg.mode, std::move(w), std::nullopt}));
  });
}

CommandResult cmd_conj(const Json& w, const std::vector<Json>& docs,
                       const CommandOptions& opt) {
  std::optional<ConstantUnitary> loaded;
  const CommandResult bad = guarded([&] {
    const MatrixDocument m = matrix_from_json(w);
    if (m.u.degree().value_or(0) > 0) throw ParseError("W must be a constant matrix");
    loaded = validate_upsilon(m.u.eval(0));
    return CommandResult{};
  });
  if (bad.exit_code != kExitOk) return bad;
  const ConstantUnitary& upsilon = *loaded;
  const Matrix& wm = upsilon.matrix();
  const Matrix w_inv = upsilon.inverse().matrix();
  return run_batch(docs, opt.jobs, [&](const Json& doc) {
    if (kind_of(doc) == "word") {
      const WordDocument in = word_from_json(doc);
      const Mode mode = opt.mode.value_or(in.mode);
      WordDocument out{output_var(in.var, mode, opt), mode,
                       conjugate_word(upsilon, in.word), std::nullopt};
      validate_word(out.word, mode);
      if (in.tail) out.tail = wm * *in.tail * w_inv;
      return emit(to_json(out));
    }
    const Loaded l = load(doc, opt);
    const MatrixPolynomial image = wm * l.u * w_inv;
    if (!matrix_in_mode(image, l.mode)) {
      throw ValidationError("conjugated matrix leaves mode " + std::string(to_string(l.mode)));
    }
    return emit(to_json(MatrixDocument{output_var(l.var, l.mode, opt), l.mode, image}));
  });
}

CommandResult cmd_selftest(const CommandOptions& opt) {
  return guarded([&] {
    Json r = report("selftest");
    r["seed"] = opt.seed;
    Json checks = Json::array();
    std::size_t cases = 0, failures = 0;
    for (Mode mode : {Mode::Complex, Mode::RealOmega, Mode::RealLambda}) {
      for (std::size_t nu : {2, 3, 4}) {
        SampleConfig cfg;
        cfg.nu = nu;
        cfg.mode = mode;
        cfg.seed = opt.seed + 31 * nu + static_cast<std::uint64_t>(mode);
        cfg.height = 100;
        Sampler sampler(cfg);
        std::size_t passed = 0;
        const std::size_t trials = 5;
        for (std::size_t k = 0; k < trials; ++k) {
          const Word w = sampler.sample_word();
          const MatrixPolynomial u = word_to_matrix(w);
          bool ok = is_j_unitary(u) && matrix_in_mode(u, mode);
          if (ok) {
            try {
              const auto f = factor(u, mode);
              ok = f.word == w && f.tail.matrix() == Matrix::identity(nu);
            } catch (const Error&) {
              ok = false;
            }
          }
          passed += ok ? 1 : 0;
        }
        Json c = Json::object();
        c["mode"] = to_string(mode);
        c["nu"] = nu;
        c["cases"] = trials;
        c["passed"] = passed;
        checks.push_back(std::move(c));
        cases += trials;
        failures += trials - passed;
      }
    }
    r["cases"] = cases;
    r["failures"] = failures;
    r["checks"] = std::move(checks);
    CommandResult out = emit(r);
    if (failures > 0) out.exit_code = kExitNegative;
    return out;
  });
}

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv("JUMAT_SEED");
  if (env == nullptr) return fallback;
  const std::string_view text(env);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) return fallback;
  return value;
}

}  // namespace jumat
