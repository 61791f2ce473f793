#include "report.hpp"

#include <chrono>

#include "spec_io.hpp"
#include "yang_baxter.hpp"

namespace nfrob {

using nlohmann::json;

namespace {

json bool_verdict(const std::string& name, bool pass, bool certified = true) {
  json v;
  v["name"] = name;
  v["pass"] = pass;
  v["certified"] = certified;
  return v;
}

json count_verdict(const std::string& name, std::size_t value) {
  json v;
  v["name"] = name;
  v["value"] = value;
  v["certified"] = true;
  return v;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const Scalar& s : v) a.push_back(s.str());
  return a;
}

FrobeniusSearchConfig search_config(const CommandOptions& opts) {
  FrobeniusSearchConfig cfg;
  cfg.trials = opts.trials;
  cfg.seed = opts.seed;
  cfg.height = opts.height;
  cfg.deterministic = opts.deterministic;
  return cfg;
}

// Epsilon for the commands that need a Frobenius structure: either the
// supplied --epsilon (verified) or a certified search witness.
Vec resolve_epsilon(const Algebra& a, const CommandOptions& opts) {
  if (opts.epsilon) {
    Vec eps = parse_coeff_list(a.ring(), *opts.epsilon, a.dim());
    if (!check_frobenius_form(a, eps))
      throw Error(a.ring().kind() == RingKind::Integers
                      ? ErrorCode::NotUnimodular
                      : ErrorCode::Singular,
                  "supplied epsilon gives a degenerate bilinear form");
    return eps;
  }
  if (a.ring().kind() == RingKind::Integers)
    throw Error(ErrorCode::InvalidArgument, "--epsilon is mandatory over Z");
  FrobeniusSearchResult res = find_frobenius_form(a, search_config(opts));
  if (res.verdict != FrobeniusVerdict::CertifiedFrobenius)
    throw Error(ErrorCode::Singular,
                res.verdict == FrobeniusVerdict::CertifiedNotFrobenius
                    ? "algebra is certified not Frobenius"
                    : "no nondegenerate trace found (probably not Frobenius)");
  return *res.epsilon;
}

struct TensorSelection {
  std::vector<std::pair<std::string, Tensor2>> items;
};

// ybe/ar operate either on canonical central generators or on the Frobenius
// coproduct q0 of a resolved epsilon. Without flags, ybe defaults to all
// generators and ar to q0.
TensorSelection select_tensors(const Algebra& a, const CommandOptions& opts,
                               bool default_all_generators) {
  TensorSelection sel;
  if (opts.generator) {
    FrobeniusSpace space = central_basis(a);
    if (*opts.generator >= space.generators.size())
      throw Error(ErrorCode::InvalidArgument,
                  "generator index out of range (frobdim = " +
                      std::to_string(space.generators.size()) + ")");
    sel.items.emplace_back("generator_" + std::to_string(*opts.generator),
                           space.generators[*opts.generator]);
    return sel;
  }
  if (opts.all_generators || (!opts.epsilon && default_all_generators)) {
    FrobeniusSpace space = central_basis(a);
    for (std::size_t k = 0; k < space.generators.size(); ++k)
      sel.items.emplace_back("generator_" + std::to_string(k),
                             space.generators[k]);
    return sel;
  }
  Vec eps = resolve_epsilon(a, opts);
  sel.items.emplace_back("q0", frobenius_data(a, eps).q0);
  return sel;
}

json cmd_validate(const std::string& spec_text) {
  Algebra a = parse_spec(spec_text, /*check_table=*/false);
  ValidationReport rep = validate(a);
  json data;
  json assoc = json::array();
  for (const auto& f : rep.associativity_failures)
    assoc.push_back({f[0], f[1], f[2], f[3]});
  data["associativity_failures"] = std::move(assoc);
  data["left_unit_failures"] = rep.left_unit_failures;
  data["right_unit_failures"] = rep.right_unit_failures;
  json verdicts = json::array();
  verdicts.push_back(bool_verdict("algebra_valid", rep.ok()));
  json out;
  out["dim"] = a.dim();
  out["ring"] = a.ring().name();
  out["data"] = std::move(data);
  out["verdicts"] = std::move(verdicts);
  return out;
}

json cmd_central_basis(const Algebra& a, const CommandOptions& opts) {
  FrobeniusSpace space = central_basis(a);
  json data;
  data["count"] = space.generators.size();
  json gens = json::array();
  for (const Tensor2& g : space.generators) gens.push_back(matrix_json(g.coeffs));
  data["generators"] = std::move(gens);
  if (a.ring().kind() == RingKind::Integers) {
    json divisors = json::array();
    for (const mpz_class& d : space.snf_diagonal) divisors.push_back(d.get_str());
    data["snf_diagonal"] = std::move(divisors);
  }
  json verdicts = json::array();
  verdicts.push_back(count_verdict(
      a.ring().kind() == RingKind::Integers ? "central_rank" : "frobdim",
      space.generators.size()));
  if (opts.check_central) {
    bool all_ok = true;
    for (const Tensor2& g : space.generators) {
      // serialize and re-ingest before checking: the round-trip is the point
      Tensor2 back = parse_tensor2(a.ring(), render_matrix(g.coeffs));
      if (back != g || !is_central(a, back)) all_ok = false;
    }
    verdicts.push_back(bool_verdict("generators_central_after_roundtrip", all_ok));
  }
  json out;
  out["data"] = std::move(data);
  out["verdicts"] = std::move(verdicts);
  return out;
}

json cmd_frobdim(const Algebra& a) {
  json out;
  json verdicts = json::array();
  if (a.ring().kind() == RingKind::Integers) {
    // over a ring the space is reported as a lattice: rank plus elementary
    // divisors, not a vector-space dimension
    FrobeniusSpace space = central_basis(a);
    out["data"]["central_rank"] = space.generators.size();
    json divisors = json::array();
    for (const mpz_class& d : space.snf_diagonal) divisors.push_back(d.get_str());
    out["data"]["snf_diagonal"] = std::move(divisors);
    verdicts.push_back(count_verdict("central_rank", space.generators.size()));
  } else {
    std::size_t fd = frobdim(a);
    out["data"]["frobdim"] = fd;
    verdicts.push_back(count_verdict("frobdim", fd));
  }
  out["data"]["dim"] = a.dim();
  verdicts.push_back(count_verdict("dim", a.dim()));
  out["verdicts"] = std::move(verdicts);
  return out;
}

json cmd_frobenius_check(const Algebra& a, const CommandOptions& opts) {
  json out;
  json verdicts = json::array();
  if (opts.epsilon) {
    Vec eps = parse_coeff_list(a.ring(), *opts.epsilon, a.dim());
    Scalar det = determinant(gram_matrix(a, eps));
    bool ok = check_frobenius_form(a, eps);
    const char* name = a.ring().kind() == RingKind::Integers
                           ? "epsilon_unimodular"
                           : "epsilon_nondegenerate";
    verdicts.push_back(bool_verdict(name, ok));
    out["data"]["mode"] = "check";
    out["data"]["epsilon"] = vec_json(eps);
    out["data"]["det_gram"] = det.str();
  } else {
    if (a.ring().kind() == RingKind::Integers)
      throw Error(ErrorCode::InvalidArgument,
                  "over Z frobenius-check needs --epsilon (check mode)");
    FrobeniusSearchResult res = find_frobenius_form(a, search_config(opts));
    bool is_frob = res.verdict == FrobeniusVerdict::CertifiedFrobenius;
    bool certified = res.verdict != FrobeniusVerdict::ProbablyNotFrobenius;
    json v = bool_verdict("is_frobenius", is_frob, certified);
    if (!certified) {
      mpq_class b = res.failure_bound;
      v["failure_bound"] = b.get_str();
    }
    verdicts.push_back(std::move(v));
    out["data"]["mode"] = "search";
    out["data"]["verdict"] =
        res.verdict == FrobeniusVerdict::CertifiedFrobenius
            ? "CertifiedFrobenius"
            : (res.verdict == FrobeniusVerdict::CertifiedNotFrobenius
                   ? "CertifiedNotFrobenius"
                   : "ProbablyNotFrobenius");
    if (res.epsilon) out["data"]["epsilon"] = vec_json(*res.epsilon);
  }
  out["verdicts"] = std::move(verdicts);
  return out;
}

json cmd_frobenius_data(const Algebra& a, const CommandOptions& opts) {
  Vec eps = resolve_epsilon(a, opts);
  FrobeniusData frob = frobenius_data(a, eps);
  json out;
  out["data"]["epsilon"] = vec_json(frob.epsilon);
  out["data"]["gram"] = matrix_json(frob.gram);
  out["data"]["dual"] = matrix_json(frob.dual);
  out["data"]["q0"] = matrix_json(frob.q0.coeffs);
  out["data"]["nakayama"] = matrix_json(frob.nakayama);
  json verdicts = json::array();
  verdicts.push_back(bool_verdict(
      "dual_inverts_gram",
      frob.dual * frob.gram == Matrix::identity(a.ring(), a.dim())));
  verdicts.push_back(bool_verdict("q0_central", is_central(a, frob.q0)));
  verdicts.push_back(bool_verdict("counit", counit_check(a, eps, frob.q0)));
  verdicts.push_back(bool_verdict(
      "nakayama_defining_relation",
      frob.gram.transpose() == frob.gram * frob.nakayama));
  bool symmetric = frob.nakayama == Matrix::identity(a.ring(), a.dim());
  out["data"]["symmetric"] = symmetric;
  out["verdicts"] = std::move(verdicts);
  return out;
}

json cmd_theorem_a(const Algebra& a, const CommandOptions& opts) {
  Vec eps = resolve_epsilon(a, opts);
  FrobeniusData frob = frobenius_data(a, eps);
  TheoremAReport rep = verify_theorem_a(a, frob);
  json out;
  out["data"]["dim"] = rep.dim;
  out["data"]["frobdim"] = rep.frobenius_dim;
  out["data"]["epsilon"] = vec_json(eps);
  json verdicts = json::array();
  verdicts.push_back(bool_verdict("frobdim_equals_dim", rep.frobdim_equals_dim));
  verdicts.push_back(
      bool_verdict("star_orbit_independent", rep.star_orbit_independent));
  verdicts.push_back(
      bool_verdict("all_generators_reached", rep.all_generators_reached));
  out["verdicts"] = std::move(verdicts);
  return out;
}

json cmd_ybe(const Algebra& a, const CommandOptions& opts) {
  if (opts.which != "mult" && opts.which != "twist")
    throw Error(ErrorCode::InvalidArgument, "--which must be mult or twist");
  TensorSelection sel = select_tensors(a, opts, /*default_all_generators=*/true);
  json out;
  json items = json::array();
  json verdicts = json::array();
  for (const auto& [label, q] : sel.items) {
    bool central = is_central(a, q);
    json item;
    item["label"] = label;
    item["central"] = central;
    item["tensor"] = matrix_json(q.coeffs);
    if (opts.which == "twist") {
      ROperator r = r_from_q_twist(a, q);
      verdicts.push_back(bool_verdict("qybe[" + label + "]",
                                      verify_qybe(r, a.dim())));
    } else {
      ROperator r = r_from_q_mult(a, q);
      verdicts.push_back(bool_verdict("eq2[" + label + "]",
                                      verify_eq2(r, a.dim())));
    }
    if (central) {
      QIdentityReport qrep = verify_q_identities(a, q);
      verdicts.push_back(bool_verdict("q_identities[" + label + "]", qrep.ok()));
    }
    items.push_back(std::move(item));
  }
  out["data"]["which"] = opts.which;
  out["data"]["items"] = std::move(items);
  out["verdicts"] = std::move(verdicts);
  return out;
}

json cmd_ar(const Algebra& a, const CommandOptions& opts) {
  TensorSelection sel = select_tensors(a, opts, /*default_all_generators=*/false);
  if (sel.items.size() != 1)
    throw Error(ErrorCode::InvalidArgument,
                "ar needs one tensor: pass --epsilon (q0) or --generator K");
  const auto& [label, q] = sel.items.front();
  ROperator r = r_from_q_mult(a, q);
  AROperatorAlgebra ar = ar_algebra(a, r);
  MonomorphismReport mono = check_monomorphism(a, r);
  json out;
  out["data"]["source"] = label;
  out["data"]["source_central"] = is_central(a, q);
  out["data"]["ar_dim"] = ar.basis.size();
  json basis = json::array();
  for (const Matrix& f : ar.basis) basis.push_back(matrix_json(f));
  out["data"]["ar_basis"] = std::move(basis);
  json verdicts = json::array();
  verdicts.push_back(bool_verdict("contains_identity", ar.contains_identity));
  verdicts.push_back(bool_verdict("image_in_ar", mono.image_in_ar));
  verdicts.push_back(bool_verdict("i_injective", mono.injective));
  verdicts.push_back(bool_verdict("roundtrip_central", mono.roundtrip_central));
  // closure under composition, over Z via the rational span of the lattice
  bool rational = !a.ring().is_field();
  SpanBasis span(rational ? Ring::rationals() : a.ring(), a.dim() * a.dim());
  for (const Matrix& f : ar.basis)
    span.insert(rational ? to_rationals(f.entries()) : f.entries());
  bool closed = true;
  for (const Matrix& f : ar.basis)
    for (const Matrix& g : ar.basis) {
      Matrix fg = f * g;
      if (!span.contains(rational ? to_rationals(fg.entries()) : fg.entries())) {
        closed = false;
        break;
      }
    }
  verdicts.push_back(bool_verdict("closed_under_composition", closed));
  if (a.ring().is_field())
    verdicts.push_back(
        bool_verdict("r_in_ar_tensor_ar", check_r_in_ar_tensor_ar(a, q, ar)));
  out["verdicts"] = std::move(verdicts);
  return out;
}

}  // namespace

CommandOptions options_from_json(const std::string& flags_json) {
  CommandOptions opts;
  if (flags_json.empty()) return opts;
  json j = json::parse(flags_json, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw Error(ErrorCode::ParseError, "flags must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "trials") opts.trials = value.get<unsigned>();
    else if (key == "seed") opts.seed = value.get<std::uint64_t>();
    else if (key == "height") opts.height = value.get<std::uint64_t>();
    else if (key == "deterministic") opts.deterministic = value.get<bool>();
    else if (key == "epsilon") opts.epsilon = value.get<std::string>();
    else if (key == "which") opts.which = value.get<std::string>();
    else if (key == "all_generators") opts.all_generators = value.get<bool>();
    else if (key == "generator") opts.generator = value.get<std::size_t>();
    else if (key == "check_central") opts.check_central = value.get<bool>();
    else
      throw Error(ErrorCode::InvalidArgument, "unknown flag '" + key + "'");
  }
  return opts;
}

json options_to_json(const CommandOptions& opts) {
  json j;
  j["trials"] = opts.trials;
  j["seed"] = opts.seed;
  j["height"] = opts.height;
  j["deterministic"] = opts.deterministic;
  if (opts.epsilon) j["epsilon"] = *opts.epsilon;
  j["which"] = opts.which;
  j["all_generators"] = opts.all_generators;
  if (opts.generator) j["generator"] = *opts.generator;
  j["check_central"] = opts.check_central;
  return j;
}

json run_command(const std::string& command, const std::string& spec_text,
                 const CommandOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  json out;
  if (command == "validate") {
    out = cmd_validate(spec_text);
  } else {
    Algebra a = parse_spec(spec_text);
    if (command == "central-basis") out = cmd_central_basis(a, opts);
    else if (command == "frobdim") out = cmd_frobdim(a);
    else if (command == "frobenius-check") out = cmd_frobenius_check(a, opts);
    else if (command == "frobenius-data") out = cmd_frobenius_data(a, opts);
    else if (command == "theorem-a") out = cmd_theorem_a(a, opts);
    else if (command == "ybe") out = cmd_ybe(a, opts);
    else if (command == "ar") out = cmd_ar(a, opts);
    else
      throw Error(ErrorCode::InvalidArgument,
                  "unknown command '" + command + "'");
    out["dim"] = a.dim();
    out["ring"] = a.ring().name();
  }
  out["schema"] = "nfrob-report/1";
  out["command"] = command;
  out["input_digest"] = "fnv1a64:" + fnv1a64_hex(spec_text);
  out["flags"] = options_to_json(opts);
  bool all_pass = true;
  for (const json& v : out["verdicts"])
    if (v.contains("pass") && !v["pass"].get<bool>()) all_pass = false;
  out["all_pass"] = all_pass;
  auto stop = std::chrono::steady_clock::now();
  out["timing_ms"] =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return out;
}

json error_report(const std::string& command, const std::string& code,
                  const std::string& message) {
  json out;
  out["schema"] = "nfrob-report/1";
  out["command"] = command;
  out["error"]["code"] = code;
  out["error"]["message"] = message;
  out["all_pass"] = false;
  return out;
}

}  // namespace nfrob
