#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "relsig/convert.hpp"
#include "relsig/dependent.hpp"
#include "relsig/dual.hpp"
#include "relsig/errors.hpp"
#include "relsig/io.hpp"
#include "relsig/oracle.hpp"
#include "relsig/polyroute.hpp"
#include "relsig/structure.hpp"

namespace relsig::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitCap = 4;
inline constexpr int kExitInternal = 70;

inline constexpr int kDefaultVerifyCap = 8;

inline Route parse_route(const std::string& name) {
  if (name == "table") return Route::table;
  if (name == "closed") return Route::closed;
  if (name == "reflect") return Route::reflect;
  if (name == "integral") return Route::integral;
  throw ParseError("unknown route \"" + name + "\" (expected closed|table|reflect|integral)");
}

// The value kinds the convert verb moves between.
enum class Representation { signature, tail, domination, polynomial, phi, dual_domination };

inline Representation parse_representation(const std::string& name) {
  if (name == "signature") return Representation::signature;
  if (name == "tail") return Representation::tail;
  if (name == "domination") return Representation::domination;
  if (name == "polynomial") return Representation::polynomial;
  if (name == "phi") return Representation::phi;
  if (name == "dual-domination") return Representation::dual_domination;
  throw ParseError("unknown representation \"" + name +
                   "\" (expected signature|tail|domination|polynomial|phi|dual-domination)");
}

inline const char* representation_name(Representation rep) {
  switch (rep) {
    case Representation::signature: return "signature";
    case Representation::tail: return "tail";
    case Representation::domination: return "domination";
    case Representation::polynomial: return "polynomial";
    case Representation::phi: return "phi";
    case Representation::dual_domination: return "dual-domination";
  }
  return "?";
}

namespace detail {

inline Route pick(Route requested, std::initializer_list<Route> supported, Route fallback) {
  for (Route r : supported)
    if (r == requested) return r;
  return fallback;
}

// The canonical conversion hub: any representation reduces to the domination
// vector, and every representation is reachable from it.
struct ConversionState {
  int n = 0;
  Representation kind = Representation::domination;
  std::optional<SignatureVector> s;
  std::optional<TailSignature> tail;
  std::optional<DominationVector> d;
  std::optional<DominationVector> dual_d;
  std::optional<Polynomial> h;
  std::optional<std::vector<Rational>> phi;
};

inline PhiVector phi_vector_from_rationals(const std::vector<Rational>& values) {
  std::vector<Int> counts;
  counts.reserve(values.size());
  for (const auto& v : values) {
    if (denominator(v) != 1)
      throw ValidationError(ValidationError::Kind::precondition,
                            "path-set counts must be integers, got " + to_string(v));
    counts.push_back(numerator(v));
  }
  return PhiVector(std::move(counts));
}

inline Polynomial polynomial_from_values(int n, const std::vector<Rational>& values) {
  if (static_cast<int>(values.size()) > n + 1)
    throw ValidationError(ValidationError::Kind::precondition,
                          "polynomial has more than n + 1 coefficients");
  std::vector<Rational> coeffs(values);
  coeffs.resize(static_cast<std::size_t>(n) + 1);
  return Polynomial(std::move(coeffs));
}

inline ConversionState load_state(Representation from, const VectorDocument& doc) {
  ConversionState state;
  state.n = doc.n;
  state.kind = from;
  switch (from) {
    case Representation::signature:
      state.s = SignatureVector(doc.n, doc.values);
      break;
    case Representation::tail:
      state.tail = TailSignature(doc.n, doc.values);
      break;
    case Representation::domination:
      state.d = DominationVector(doc.n, doc.values);
      break;
    case Representation::polynomial:
      state.h = polynomial_from_values(doc.n, doc.values);
      break;
    case Representation::phi:
      state.phi = doc.values;
      phi_vector_from_rationals(doc.values);  // boundary validation
      break;
    case Representation::dual_domination:
      state.dual_d = DominationVector(doc.n, doc.values, Role::dual);
      break;
  }
  return state;
}

// Reduce whatever we were given to the primal domination vector.
inline const DominationVector& to_domination(ConversionState& state, Route route) {
  if (state.d) return *state.d;
  switch (state.kind) {
    case Representation::signature:
      state.d = domination_from_signature(*state.s, pick(route, {Route::table, Route::closed},
                                                         Route::table));
      break;
    case Representation::tail:
      state.d = domination_from_tail(*state.tail, pick(route, {Route::table, Route::closed},
                                                       Route::table));
      break;
    case Representation::polynomial: {
      std::vector<Rational> d(state.h->coefficients());
      d.resize(static_cast<std::size_t>(state.n) + 1);
      state.d = DominationVector(state.n, std::move(d));
      break;
    }
    case Representation::phi:
      state.d = domination_from_phi(phi_vector_from_rationals(*state.phi));
      break;
    case Representation::dual_domination:
      state.d = dual_domination(*state.dual_d);
      break;
    case Representation::domination:
      break;
  }
  return *state.d;
}

inline std::vector<Rational> run_conversion(Representation from, Representation to,
                                            const VectorDocument& doc, Route route) {
  ConversionState state = load_state(from, doc);
  const int n = state.n;

  if (from == to) {
    switch (to) {  // round through the validated type, then back out
      case Representation::signature: return state.s->values();
      case Representation::tail: return state.tail->values();
      case Representation::domination: return state.d->values();
      case Representation::polynomial: return state.h->coefficients();
      case Representation::phi: return *state.phi;
      case Representation::dual_domination: return state.dual_d->values();
    }
  }

  // Direct formulas that bypass the domination hub.
  if (from == Representation::signature && to == Representation::tail)
    return tail_from_signature(*state.s).values();
  if (from == Representation::tail && to == Representation::signature)
    return signature_from_tail(*state.tail).values();
  if (from == Representation::signature && to == Representation::polynomial) {
    if (route == Route::closed) return polynomial_from_signature(*state.s).coefficients();
    return poly_antiderivative_from_zero(derivative_from_signature(*state.s, Route::table))
        .with_degree_bound(n)
        .coefficients();
  }
  if (from == Representation::tail && to == Representation::polynomial)
    return polynomial_from_tail(*state.tail,
                                pick(route, {Route::table, Route::closed}, Route::table))
        .coefficients();
  if (from == Representation::signature && to == Representation::dual_domination &&
      route == Route::closed)
    return dual_domination_from_signature(*state.s).values();
  if (from == Representation::tail && to == Representation::dual_domination &&
      route == Route::closed)
    return dual_domination_from_tail(*state.tail).values();
  if (from == Representation::tail && to == Representation::phi) {
    // phi_{n-k} = C(n,k) S_k
    std::vector<Rational> phi(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      phi[static_cast<std::size_t>(n - k)] = Rational(binomial(n, k)) * state.tail->at(k);
    return phi;
  }
  if (from == Representation::polynomial) {
    const Polynomial h = state.h->with_degree_bound(n);
    if (to == Representation::tail) {
      if (route == Route::reflect) return tail_from_polynomial(h, n).values();
      if (route == Route::integral)
        return tail_from_gf(tail_gf_via_integral(h, n), n).values();
    }
    if (to == Representation::signature) {
      if (route == Route::reflect) return signature_from_polynomial(h, n).values();
      if (route == Route::integral)
        return signature_from_gf(signature_gf_via_integral(h, n), n).values();
    }
    if (to == Representation::phi) {
      const Polynomial gf = route == Route::closed
                                ? pathcount_generating_function_via_dual(h, n)
                                : pathcount_generating_function(h, n);
      return gf.with_degree_bound(n).coefficients();
    }
  }
  if (from == Representation::dual_domination) {
    if (to == Representation::tail) return tail_from_dual_domination(*state.dual_d).values();
    if (to == Representation::signature)
      return signature_from_dual_domination(*state.dual_d).values();
  }

  // Everything else goes through the domination vector.
  const DominationVector& d = to_domination(state, route);
  switch (to) {
    case Representation::signature:
      return signature_from_domination(d, pick(route, {Route::table, Route::closed}, Route::table))
          .values();
    case Representation::tail:
      return tail_from_domination(d, pick(route, {Route::table, Route::closed}, Route::table))
          .values();
    case Representation::domination:
      return d.values();
    case Representation::polynomial:
      return polynomial_from_values(state.n, d.values()).coefficients();
    case Representation::phi:
      return phi_from_domination(d);
    case Representation::dual_domination:
      return dual_domination(d).values();
  }
  throw ValidationError(ValidationError::Kind::bad_argument, "unsupported conversion");
}

}  // namespace detail

// Full report for one system: every representation reachable from the
// structure function.
inline ordered_json cmd_analyze(const SystemDocument& doc) {
  const StructureFunction& structure = doc.structure;
  validate_semicoherent(structure);
  const int n = structure.n();

  const PhiVector phi = phi_vector(structure);
  const DominationVector d = domination_from_phi(phi);
  const Polynomial h(std::vector<Rational>(d.values()));
  const TailSignature tail = tail_from_domination(d);
  const SignatureVector s = signature_from_domination(d);
  const DominationVector dual_d = dual_domination(d);
  const Polynomial phi_gf = pathcount_generating_function(h, n);

  ordered_json report;
  report["n"] = n;
  report["signature"] = rational_strings(s.values());
  report["tail"] = rational_strings(tail.values());
  report["domination"] = rational_strings(d.values());
  report["phi"] = rational_strings(phi.values());
  report["polynomial"] = rational_strings(h.coefficients());
  report["dual_domination"] = rational_strings(dual_d.values());
  report["full_degree"] = is_full_degree(s);
  report["pathcount_gf"] = rational_strings(phi_gf.with_degree_bound(n).coefficients());
  return report;
}

inline ordered_json cmd_convert(const std::string& from_name, const std::string& to_name,
                                const VectorDocument& doc, Route route = Route::table) {
  const Representation from = parse_representation(from_name);
  const Representation to = parse_representation(to_name);
  const std::vector<Rational> values = detail::run_conversion(from, to, doc, route);
  ordered_json out;
  out["kind"] = representation_name(to);
  out["n"] = doc.n;
  out["values"] = rational_strings(values);
  return out;
}

inline ordered_json cmd_dependent(const SystemDocument& sys, const QualityInput& quality) {
  const StructureFunction& structure = sys.structure;
  validate_semicoherent(structure);
  const RelativeQuality q = std::holds_alternative<RelativeQuality>(quality)
                                ? std::get<RelativeQuality>(quality)
                                : quality_from_order_distribution(
                                      std::get<OrderDistribution>(quality));
  const QStructure psi = q_structure(structure, q);
  const std::vector<Rational> psi_levels = psi_level_sums(psi);
  const Polynomial g = g_polynomial(psi);
  const TailSignature p_tail = probability_tail(psi);
  const SignatureVector p = probability_signature(psi);

  ordered_json report;
  report["n"] = structure.n();
  report["psi_levels"] = rational_strings(psi_levels);
  report["c_levels"] = rational_strings(g.coefficients());
  report["probability_tail"] = rational_strings(p_tail.values());
  report["probability_signature"] = rational_strings(p.values());
  report["g_polynomial"] = rational_strings(g.coefficients());
  return report;
}

struct VerifyOutcome {
  bool all_pass = true;
  ordered_json report;
};

// Cross-checks every implemented formula on one system and reports each
// identity separately. Exact arithmetic: any mismatch is a bug, not noise.
inline VerifyOutcome cmd_verify(const SystemDocument& doc, int verify_cap = kDefaultVerifyCap) {
  const StructureFunction& structure = doc.structure;
  validate_semicoherent(structure);
  const int n = structure.n();
  if (n > verify_cap)
    throw CapError("verification capped at " + std::to_string(verify_cap) +
                   " components (see --verify-caps)");

  VerifyOutcome outcome;
  outcome.report["n"] = n;
  ordered_json checks = ordered_json::array();

  auto record = [&](const std::string& name, bool pass, ordered_json details = {}) {
    ordered_json entry;
    entry["name"] = name;
    entry["pass"] = pass;
    if (!pass) {
      outcome.all_pass = false;
      if (!details.is_null()) entry["counterexample"] = details;
    }
    checks.push_back(std::move(entry));
  };
  auto mismatch = [&](const std::vector<Rational>& expected, const std::vector<Rational>& got) {
    ordered_json details;
    details["expected"] = rational_strings(expected);
    details["got"] = rational_strings(got);
    return details;
  };

  // Ground values straight from the truth table.
  const PhiVector phi = phi_vector(structure);
  const MultilinearForm form = mobius_transform(structure);
  const Polynomial h = diagonal_section(form).with_degree_bound(n);
  const DominationVector d = domination_from_phi(phi);
  const TailSignature tail = tail_from_phi(phi);
  const SignatureVector s = signature_from_tail(tail);

  {
    const ZetaResult back = zeta_transform(form);
    record("mobius-zeta-inverse", back.is_boolean && back.to_structure() == structure);
    record("diagonal-matches-level-sums",
           Polynomial(std::vector<Rational>(d.values())) == h,
           mismatch(d.values(), h.coefficients()));
  }

  record("signature-tail-generating-identity", check_generating_identity(s, tail));

  {
    const TailSignature got = tail_from_polynomial(h, n);
    record("tail-by-reflection", got == tail, mismatch(tail.values(), got.values()));
  }
  {
    const SignatureVector got = signature_from_polynomial(h, n);
    record("signature-by-reflection", got == s, mismatch(s.values(), got.values()));
  }
  {
    // Coefficient k-1 of (R^(n-1) h')(x+1) must be k C(n,k) s_k.
    const Polynomial a = poly_shift_plus_one(poly_reflect(poly_derivative(h), n - 1));
    bool pass = true;
    for (int k = 1; k <= n; ++k)
      if (a.coeff(k - 1) != Rational(k) * Rational(binomial(n, k)) * s.at(k)) pass = false;
    record("reflected-derivative-coefficients", pass);
  }
  {
    Polynomial expected = Polynomial::zero(n);
    for (int k = 1; k <= n; ++k) expected.set_coeff(k, Rational(binomial(n, k)) * s.at(k));
    const Polynomial got = binomial_signature_gf(h, n);
    record("binomial-weighted-signature-integral", got == expected,
           mismatch(expected.coefficients(), got.with_degree_bound(n).coefficients()));
  }
  {
    const Polynomial got = tail_gf_via_integral(h, n);
    const Polynomial expected = tail_generating_polynomial(tail);
    record("tail-generating-function-integral", got == expected,
           mismatch(expected.coefficients(), got.with_degree_bound(n).coefficients()));
  }
  {
    const Polynomial got = signature_gf_via_integral(h, n);
    const Polynomial expected = signature_generating_polynomial(s);
    record("signature-generating-function-integral", got == expected,
           mismatch(expected.coefficients(), got.with_degree_bound(n).coefficients()));
  }

  {
    const DominationVector via_table = domination_from_tail(tail, Route::table);
    const DominationVector via_closed = domination_from_tail(tail, Route::closed);
    record("domination-from-tail-table", via_table == d, mismatch(d.values(), via_table.values()));
    record("domination-from-tail-closed", via_closed == d,
           mismatch(d.values(), via_closed.values()));
    const TailSignature back_table = tail_from_domination(d, Route::table);
    const TailSignature back_closed = tail_from_domination(d, Route::closed);
    record("tail-from-domination-table", back_table == tail,
           mismatch(tail.values(), back_table.values()));
    record("tail-from-domination-closed", back_closed == tail,
           mismatch(tail.values(), back_closed.values()));
    const DominationVector sd_table = domination_from_signature(s, Route::table);
    const DominationVector sd_closed = domination_from_signature(s, Route::closed);
    record("domination-from-signature-table", sd_table == d,
           mismatch(d.values(), sd_table.values()));
    record("domination-from-signature-closed", sd_closed == d,
           mismatch(d.values(), sd_closed.values()));
    const SignatureVector ds_table = signature_from_domination(d, Route::table);
    const SignatureVector ds_closed = signature_from_domination(d, Route::closed);
    record("signature-from-domination-table", ds_table == s,
           mismatch(s.values(), ds_table.values()));
    record("signature-from-domination-closed", ds_closed == s,
           mismatch(s.values(), ds_closed.values()));
  }

  {
    const Polynomial hp = poly_derivative(h);
    const Polynomial closed = derivative_from_signature(s, Route::closed);
    const Polynomial table = derivative_from_signature(s, Route::table);
    record("derivative-from-signature-closed", closed == hp,
           mismatch(hp.coefficients(), closed.coefficients()));
    record("derivative-from-signature-table", table == hp,
           mismatch(hp.coefficients(), table.coefficients()));
    const Polynomial h_closed = polynomial_from_tail(tail, Route::closed);
    const Polynomial h_table = polynomial_from_tail(tail, Route::table);
    record("polynomial-from-tail-closed", h_closed == h,
           mismatch(h.coefficients(), h_closed.coefficients()));
    record("polynomial-from-tail-table", h_table == h,
           mismatch(h.coefficients(), h_table.coefficients()));
    const Polynomial h_beta = polynomial_from_signature(s);
    record("polynomial-from-signature-beta", h_beta == h,
           mismatch(h.coefficients(), h_beta.coefficients()));
  }

  {
    const DominationVector dual_d = dual_domination(d);
    const DominationVector back = dual_domination(dual_d);
    record("dual-domination-involution", back == d, mismatch(d.values(), back.values()));
    const StructureFunction dual_phi = dual_structure(structure);
    const DominationVector dual_direct = domination_from_phi(phi_vector(dual_phi), Role::dual);
    record("dual-structure-domination", dual_direct == dual_d,
           mismatch(dual_d.values(), dual_direct.values()));
    const TailSignature tail_via_dual = tail_from_dual_domination(dual_d);
    record("tail-via-dual-domination", tail_via_dual == tail,
           mismatch(tail.values(), tail_via_dual.values()));
    const SignatureVector s_via_dual = signature_from_dual_domination(dual_d);
    record("signature-via-dual-domination", s_via_dual == s,
           mismatch(s.values(), s_via_dual.values()));
    const DominationVector dd_tail = dual_domination_from_tail(tail);
    record("dual-domination-from-tail", dd_tail == dual_d,
           mismatch(dual_d.values(), dd_tail.values()));
    const DominationVector dd_sig = dual_domination_from_signature(s);
    record("dual-domination-from-signature", dd_sig == dual_d,
           mismatch(dual_d.values(), dd_sig.values()));
    // Signature reversal: the dual system's signature is the primal one read
    // backwards.
    const SignatureVector s_dual =
        signature_from_tail(tail_from_phi(phi_vector(dual_phi)));
    std::vector<Rational> reversed(s.values().rbegin(), s.values().rend());
    record("dual-signature-reversal", s_dual.values() == reversed,
           mismatch(reversed, s_dual.values()));
  }

  {
    const Polynomial gf = pathcount_generating_function(h, n);
    const Polynomial gf_dual = pathcount_generating_function_via_dual(h, n);
    const Polynomial expected(phi.as_rationals());
    record("pathcount-generating-function", gf == expected,
           mismatch(expected.coefficients(), gf.with_degree_bound(n).coefficients()));
    record("pathcount-generating-function-via-dual", gf_dual == expected,
           mismatch(expected.coefficients(), gf_dual.with_degree_bound(n).coefficients()));
  }

  record("full-degree-criterion", is_full_degree(s) == (d.at(n) != 0));

  if (n <= oracle::kMaxBolandComponents) {
    const SignatureVector reference = oracle::boland_signature(structure);
    record("oracle-boland-signature", reference == s, mismatch(s.values(), reference.values()));
  }
  if (n <= kMaxUniformOrderComponents) {
    const SignatureVector reference =
        oracle::permutation_signature(structure, OrderDistribution::uniform(n));
    record("oracle-uniform-permutations", reference.values() == s.values(),
           mismatch(s.values(), reference.values()));
    const SignatureVector reduced =
        probability_signature(q_structure(structure, RelativeQuality::exchangeable(n)));
    record("exchangeable-reduction", reduced.values() == s.values(),
           mismatch(s.values(), reduced.values()));
  }

  outcome.report["checks"] = std::move(checks);
  outcome.report["all_pass"] = outcome.all_pass;
  return outcome;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void emit(const ordered_json& doc, const std::string& output) {
  const std::string text = doc.dump(2) + "\n";
  if (output.empty() || output == "stdout" || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw ParseError("cannot open output file \"" + output + "\"");
  out << text;
}

inline const char* validation_kind_name(ValidationError::Kind kind) {
  switch (kind) {
    case ValidationError::Kind::empty_set_nonzero: return "empty-set-nonzero";
    case ValidationError::Kind::full_set_not_one: return "full-set-not-one";
    case ValidationError::Kind::not_monotone: return "not-monotone";
    case ValidationError::Kind::precondition: return "precondition";
    case ValidationError::Kind::level_sum: return "level-sum";
    case ValidationError::Kind::dimension_mismatch: return "dimension-mismatch";
    case ValidationError::Kind::role_mismatch: return "role-mismatch";
    case ValidationError::Kind::bad_argument: return "bad-argument";
  }
  return "?";
}

inline void emit_error(const char* kind, const std::string& message,
                       const ordered_json& extra = {}) {
  ordered_json err;
  err["error"]["kind"] = kind;
  err["error"]["message"] = message;
  if (extra.is_object())
    for (const auto& [key, value] : extra.items()) err["error"][key] = value;
  std::cerr << err.dump(2) << "\n";
}

}  // namespace detail

// Command-line entry point; returns the process exit code.
inline int run(int argc, const char* const* argv) {
  CLI::App app{"Exact conversions between system signatures, reliability polynomials, "
               "dominations, and their dependent-lifetime counterparts"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string route_name = "table";
  std::string output;
  int verify_cap = kDefaultVerifyCap;
  app.add_option("--route", route_name, "Formula family: closed|table|reflect|integral")
      ->capture_default_str();
  app.add_option("--output", output, "Write the report to a file instead of stdout");
  app.add_option("--verify-caps", verify_cap, "Largest system the verify command accepts")
      ->capture_default_str();

  std::string system_path, vector_path, quality_path, from_name, to_name;

  CLI::App* analyze = app.add_subcommand("analyze", "All representations of one system");
  analyze->add_option("system", system_path, "System-definition JSON document")->required();

  CLI::App* convert = app.add_subcommand("convert", "Convert one representation into another");
  convert->add_option("--from", from_name, "Input representation")->required();
  convert->add_option("--to", to_name, "Output representation")->required();
  convert->add_option("vector", vector_path, "Vector JSON document")->required();

  CLI::App* dependent = app.add_subcommand("dependent", "Dependent-lifetimes analysis");
  dependent->add_option("system", system_path, "System-definition JSON document")->required();
  dependent->add_option("quality", quality_path, "Relative-quality JSON document")->required();

  CLI::App* verify = app.add_subcommand("verify", "Cross-check every conversion formula");
  verify->add_option("system", system_path, "System-definition JSON document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    const Route route = parse_route(route_name);
    if (analyze->parsed()) {
      detail::emit(cmd_analyze(parse_system_document(detail::read_file(system_path))), output);
      return kExitOk;
    }
    if (convert->parsed()) {
      const VectorDocument doc = parse_vector_document(detail::read_file(vector_path));
      if (doc.kind && *doc.kind != from_name)
        throw ValidationError(ValidationError::Kind::bad_argument,
                              "document kind \"" + *doc.kind + "\" does not match --from " +
                                  from_name);
      detail::emit(cmd_convert(from_name, to_name, doc, route), output);
      return kExitOk;
    }
    if (dependent->parsed()) {
      const SystemDocument sys = parse_system_document(detail::read_file(system_path));
      const QualityInput quality = parse_quality_document(detail::read_file(quality_path));
      detail::emit(cmd_dependent(sys, quality), output);
      return kExitOk;
    }
    if (verify->parsed()) {
      const VerifyOutcome outcome =
          cmd_verify(parse_system_document(detail::read_file(system_path)), verify_cap);
      detail::emit(outcome.report, output);
      return outcome.all_pass ? kExitOk : kExitMismatch;
    }
    return kExitParse;
  } catch (const ParseError& e) {
    detail::emit_error("parse", e.what());
    return kExitParse;
  } catch (const ValidationError& e) {
    ordered_json extra;
    extra["validation"] = detail::validation_kind_name(e.kind());
    if (e.kind() == ValidationError::Kind::not_monotone) {
      extra["witness_set"] = subset_key(e.witness_mask());
      extra["witness_component"] = e.witness_component();
    }
    detail::emit_error("validation", e.what(), extra);
    return kExitValidation;
  } catch (const CapError& e) {
    detail::emit_error("cap", e.what());
    return kExitCap;
  } catch (const std::exception& e) {
    detail::emit_error("internal", e.what());
    return kExitInternal;
  }
}

}  // namespace relsig::cli
