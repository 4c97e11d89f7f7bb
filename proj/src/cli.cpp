#include "schemeforge/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "schemeforge/errors.hpp"
#include "schemeforge/matrix_io.hpp"
#include "schemeforge/minpoly.hpp"
#include "schemeforge/predistance.hpp"
#include "schemeforge/report.hpp"
#include "schemeforge/scheme.hpp"
#include "schemeforge/spectral.hpp"
#include "schemeforge/stochastic.hpp"

namespace schemeforge {
namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct Options {
  std::string file;
  bool json = false;
  double tol = kRootTolerance;
  double invariant_tol = kInvariantTolerance;
  std::size_t max_iter = 500;
  std::size_t n = 6;
  std::size_t k = 3;
  std::uint64_t seed = kDefaultSeed;
  std::string lambda = "1";
  bool normal = false;
  std::string output;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

std::string format_complex(const std::complex<double>& z) {
  std::ostringstream s;
  s << std::setprecision(15) << z.real();
  if (z.imag() != 0) s << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << 'i';
  return s.str();
}

int cmd_analyze(const Matrix& b, const Options& o, std::ostream& out) {
  const auto c = classify(b);
  if (o.json) {
    AnalysisReport r;
    r.classification = c;
    emit(out, to_json(r));
  } else {
    out << "order: " << c.order << '\n'
        << "nonnegative: " << yes_no(c.nonnegative) << '\n'
        << "lambda: " << (c.lambda ? to_string(*c.lambda) : "none") << '\n'
        << "doubly stochastic: " << yes_no(c.doubly_stochastic()) << '\n'
        << "irreducible: " << yes_no(c.irreducible) << '\n'
        << "normal: " << yes_no(c.normal) << '\n';
  }
  return c.doubly_stochastic() && c.irreducible ? kExitOk : kExitRejected;
}

int cmd_hoffman(const Matrix& b, const Options& o, std::ostream& out) {
  const auto h = hoffman_polynomial(b);
  if (o.json) {
    AnalysisReport r;
    r.hoffman = h;
    emit(out, to_json(r));
  } else {
    out << "lambda: " << to_string(h.lambda) << '\n'
        << "q(t) = " << to_human_string(h.q) << '\n'
        << "h(t) = " << to_human_string(h.h) << '\n'
        << "h coefficients (ascending): " << to_ascending_string(h.h) << '\n'
        << "h(B) = J: verified\n";
  }
  return kExitOk;
}

int cmd_predistance(const Matrix& b, const Options& o, std::ostream& out) {
  const auto basis = predistance_basis(b);
  const bool sum_ok = verify_hoffman_sum(basis, b);
  if (o.json) {
    Json j = to_json(basis);
    j["hoffman_sum"] = sum_ok;
    AnalysisReport r;
    r.predistance = std::move(j);
    emit(out, to_json(r));
  } else {
    out << "lambda: " << to_string(basis.lambda) << '\n' << "d: " << basis.d() << '\n';
    for (std::size_t i = 0; i < basis.polys.size(); ++i) {
      out << "p_" << i << "(t) = " << to_human_string(basis.polys[i]) << "    p_" << i
          << "(lambda) = " << to_string(basis.norms_sq[i]) << '\n';
    }
    out << "sum p_i(B) = J: " << (sum_ok ? "verified" : "FAILED") << '\n';
  }
  return sum_ok ? kExitOk : kExitRejected;
}

void print_certificate(const SchemeCertificate& c, std::ostream& out) {
  out << "verdict: " << (c.accepted ? "accepted" : "rejected") << '\n';
  if (c.reason) out << "reason: " << c.reason->describe() << '\n';
  if (c.lambda) out << "lambda: " << to_string(*c.lambda) << '\n';
  if (c.d) out << "d: " << *c.d << '\n';
  if (c.diameter) out << "D: " << *c.diameter << '\n';
  if (c.hoffman) out << "h(t) = " << to_human_string(*c.hoffman) << '\n';
  for (std::size_t i = 0; i < c.predistance.size(); ++i) {
    out << "p_" << i << "(t) = " << to_human_string(c.predistance[i]) << '\n';
  }
  if (!c.accepted) return;
  for (std::size_t h = 0; h < c.intersection_numbers.size(); ++h) {
    out << "p^" << h << ":\n";
    for (const auto& row : c.intersection_numbers[h]) {
      out << ' ';
      for (const auto& v : row) out << ' ' << to_string(v);
      out << '\n';
    }
  }
  out << "transpose map:";
  for (auto t : c.transpose_map) out << ' ' << t;
  out << '\n';
}

int cmd_scheme(const Matrix& b, const Options& o, std::ostream& out) {
  const auto cert = detect_scheme(b);
  if (o.json) {
    emit(out, to_json(cert));
  } else {
    print_certificate(cert, out);
  }
  return cert.accepted ? kExitOk : kExitRejected;
}

int cmd_decompose(const Matrix& b, const Options& o, std::ostream& out) {
  const auto d = entry_decomposition(b);
  if (o.json) {
    AnalysisReport r;
    r.decomposition = to_json(d);
    emit(out, to_json(r));
    return kExitOk;
  }
  for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
    out << "c_" << i + 1 << " = " << to_string(d.coefficients[i]) << " at";
    const auto& f = d.indicators[i];
    for (std::size_t x = 0; x < f.order(); ++x) {
      for (std::size_t y = 0; y < f.order(); ++y) {
        if (f(x, y) != 0) out << " (" << x << ',' << y << ')';
      }
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_spectrum(const Matrix& b, const Options& o, std::ostream& out, std::ostream& err) {
  const auto c = classify(b);
  SpectrumReport rep;
  try {
    rep.spectrum = spectrum_of(b, o.tol, o.max_iter);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitRejected;
  }
  bool ok = true;
  std::string note;
  if (c.doubly_stochastic() && c.irreducible) {
    rep.perron = perron_check(b, *c.lambda, rep.spectrum, o.invariant_tol);
    ok = ok && rep.perron->ok();
  }
  if (c.normal) {
    try {
      rep.idempotents = idempotents(b, rep.spectrum, o.invariant_tol);
      ok = ok && rep.idempotents->worst() <= o.invariant_tol;
    } catch (const PreconditionError& e) {
      note = e.what();
      ok = false;
    }
  }

  if (o.json) {
    Json j = to_json(rep);
    j["within_tolerance"] = ok;
    if (!note.empty()) j["note"] = note;
    AnalysisReport r;
    r.spectrum = std::move(j);
    emit(out, to_json(r));
  } else {
    out << "eigenvalues (distinct), with relative residuals:\n";
    for (std::size_t i = 0; i < rep.spectrum.eigenvalues.size(); ++i) {
      out << "  " << format_complex(rep.spectrum.eigenvalues[i]) << "    " << format_double(rep.spectrum.residuals[i])
          << '\n';
    }
    out << "iterations: " << rep.spectrum.iterations << '\n';
    if (rep.perron) {
      const auto& p = *rep.perron;
      out << "perron: lambda error " << format_double(p.lambda_error) << ", spectral radius "
          << format_double(p.max_modulus) << ", simple " << yes_no(p.lambda_simple) << ", dominant "
          << yes_no(p.lambda_dominates) << '\n';
    }
    if (rep.idempotents) {
      const auto& f = *rep.idempotents;
      out << "idempotents: orthogonality " << format_double(f.orthogonality_residual) << ", sum "
          << format_double(f.sum_residual) << ", decomposition " << format_double(f.decomposition_residual)
          << ", hermitian " << format_double(f.hermitian_residual) << '\n';
    }
    if (!note.empty()) out << "note: " << note << '\n';
    out << "within tolerance: " << yes_no(ok) << '\n';
  }
  return ok ? kExitOk : kExitRejected;
}

std::uint64_t parse_seed(std::string_view text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw PreconditionError("SCHEMEFORGE_SEED must be an unsigned 64-bit integer, got '" + std::string(text) + "'");
  }
  return v;
}

int cmd_gen(const Options& o, bool seed_given, std::ostream& out) {
  std::uint64_t seed = o.seed;
  if (!seed_given) {
    if (const char* env = std::getenv("SCHEMEFORGE_SEED")) seed = parse_seed(env);
  }
  Rational lambda;
  if (!try_parse_rational(o.lambda, lambda) || lambda <= 0) {
    throw PreconditionError("--lambda must be a positive exact number, got '" + o.lambda + "'");
  }
  const Matrix b = o.normal ? random_normal_lambda_ds(o.n, o.k, seed, lambda) : random_lambda_ds(o.n, o.k, seed, lambda);
  const std::string text = "# seed " + std::to_string(seed) + "\n" + serialize_matrix(b);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw PreconditionError("cannot write " + o.output);
    f << text;
    if (!f) throw PreconditionError("write failed for " + o.output);
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of doubly stochastic matrices and association schemes", "schemeforge"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&o](CLI::App* sub) {
    sub->add_option("file", o.file, "matrix file")->required();
    sub->add_flag("--json", o.json, "emit a JSON report");
  };
  auto* analyze = app.add_subcommand("analyze", "classify: nonnegative, lambda-doubly stochastic, irreducible, normal");
  auto* hoffman = app.add_subcommand("hoffman", "Hoffman polynomial h with h(B) = J");
  auto* predistance = app.add_subcommand("predistance", "predistance polynomial basis");
  auto* scheme = app.add_subcommand("scheme", "association scheme certificate");
  auto* decompose = app.add_subcommand("decompose", "split B into distinct-value 0/1 indicator matrices");
  auto* spectrum = app.add_subcommand("spectrum", "numeric eigenvalues, Perron and idempotent checks");
  auto* gen = app.add_subcommand("gen", "random lambda-doubly stochastic matrix");
  for (auto* sub : {analyze, hoffman, predistance, scheme, decompose, spectrum}) add_file(sub);
  spectrum->add_option("--tol", o.tol, "root iteration tolerance")->check(CLI::PositiveNumber);
  spectrum->add_option("--invariant-tol", o.invariant_tol, "tolerance for invariant checks")->check(CLI::PositiveNumber);
  spectrum->add_option("--max-iter", o.max_iter, "maximum root iteration sweeps")->check(CLI::PositiveNumber);
  gen->add_option("--n", o.n, "order")->check(CLI::PositiveNumber);
  gen->add_option("--k", o.k, "number of permutations")->check(CLI::PositiveNumber);
  auto* seed_opt = gen->add_option("--seed", o.seed, "64-bit seed (default: $SCHEMEFORGE_SEED, else 1)");
  gen->add_option("--lambda", o.lambda, "common row and column sum");
  gen->add_flag("--normal", o.normal, "draw from commuting permutations so B is normal");
  gen->add_option("-o,--output", o.output, "output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, seed_opt->count() > 0, out);
    const Matrix b = load_matrix(o.file);
    if (analyze->parsed()) return cmd_analyze(b, o, out);
    if (decompose->parsed()) return cmd_decompose(b, o, out);
    if (scheme->parsed()) return cmd_scheme(b, o, out);
    if (spectrum->parsed()) return cmd_spectrum(b, o, out, err);
    try {
      if (hoffman->parsed()) return cmd_hoffman(b, o, out);
      if (predistance->parsed()) return cmd_predistance(b, o, out);
    } catch (const HypothesisError& e) {
      err << "rejected: " << e.what() << '\n';
      return kExitRejected;
    }
  } catch (const ParseError& e) {
    err << o.file;
    if (e.line() > 0) err << ':' << e.line() << ':' << e.column();
    err << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace schemeforge
