#include "qrep/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/field.hpp"
#include "qrep/laurent.hpp"
#include "qrep/ncalgebra.hpp"
#include "qrep/parser.hpp"
#include "qrep/qplane_reps.hpp"
#include "qrep/qweyl_reps.hpp"

namespace qrep {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::CategoryError: return 2;
    case ErrorCode::RootOfUnity: return 4;
    default: return 3;
  }
}

namespace {

using json = nlohmann::ordered_json;

constexpr std::int64_t kDefaultWindow = 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field;
  std::string q;
  bool json = false;
  std::int64_t window = 0;

  std::string algebra;
  std::string strategy = "leftmost";
  std::string rep;
  std::string via;
  std::string map;
  std::string elem;
  std::string kind;
  std::string value;
  std::vector<std::string> operands;
  std::int64_t bound = 4;
  std::int64_t depth = 10;
  std::int64_t k = 0;
  std::int64_t from = 0;
  std::int64_t to = 1;
  std::int64_t index = 0;
};

std::string text_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    if (v.empty()) return "none";
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ", ") + text_of(e);
    return s;
  }
  return v.dump();
}

class Output {
 public:
  void set(std::string key, json value) { fields_.emplace_back(std::move(key), std::move(value)); }

  void write(std::ostream& out, bool as_json) const {
    if (as_json) {
      json j = json::object();
      for (const auto& [k, v] : fields_) j[k] = v;
      out << j.dump() << '\n';
      return;
    }
    if (fields_.size() == 1 && fields_.front().first == "result") {
      out << text_of(fields_.front().second) << '\n';
      return;
    }
    for (const auto& [k, v] : fields_) out << k << ": " << text_of(v) << '\n';
  }

 private:
  std::vector<std::pair<std::string, json>> fields_;
};

FieldConfig make_field(const Options& o) {
  std::string kind = o.field;
  if (kind.empty()) kind = o.q.empty() ? "Qq" : "Q";
  if (kind == "Qq") {
    if (!o.q.empty()) throw UsageError("--q selects a numeric q; it needs --field Q");
    return FieldConfig::generic();
  }
  if (o.q.empty()) throw UsageError("--field Q needs --q <rational>");
  mpq_class q;
  if (o.q.find_first_not_of("-0123456789/") != std::string::npos || q.set_str(o.q, 10) != 0 ||
      q.get_den() == 0) {
    throw UsageError("--q expects a rational number, got '" + o.q + "'");
  }
  q.canonicalize();
  return FieldConfig::rationals(q);
}

std::int64_t resolve_window(const Options& o) {
  if (o.window > 0) return o.window;
  if (const char* env = std::getenv("QREP_WINDOW")) {
    char* end = nullptr;
    const long long w = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || w <= 0) {
      throw Error(ErrorCode::InvalidParam, "QREP_WINDOW must be a positive integer");
    }
    return w;
  }
  return kDefaultWindow;
}

bool is_v_rep(std::string_view s) {
  const auto p = s.find_first_not_of(" \t");
  return p != std::string_view::npos && s[p] == 'V';
}

bool is_w_rep(std::string_view s) {
  const auto p = s.find_first_not_of(" \t");
  return p != std::string_view::npos && s[p] == 'W';
}

void require_rep(const Options& o) {
  if (o.rep.empty()) throw UsageError("--rep is required");
  if (!is_v_rep(o.rep) && !is_w_rep(o.rep)) {
    throw Error(ErrorCode::SyntaxError, "expected V[m,n; ...] or W[n; ...], got '" + o.rep + "'");
  }
}

FWeight require_fweight(const FieldConfig& cfg, const Options& o) {
  require_rep(o);
  if (!is_v_rep(o.rep)) throw Error(ErrorCode::CategoryError, "this command needs a V[...] rep");
  return parse_fweight(cfg, o.rep);
}

std::string monomial_text(const Monomial& m) {
  return to_string(QPlaneElement::monomial(m.a, m.b));
}

std::string embedding_text(const BasisEmbedding& e) {
  return "t^(" + std::to_string(e.offset) + " + " + std::to_string(e.stride) + "*i)";
}

std::string normal_form(const FieldConfig& cfg, const std::string& algebra,
                        const std::string& text) {
  if (algebra == "qplane") return to_string(parse_qplane(cfg, text));
  if (algebra == "qweyl") return to_string(parse_qweyl(cfg, text));
  if (algebra == "localized") return to_string(parse_localized(cfg, text));
  if (algebra == "laurent") return to_string(parse_laurent(cfg, text));
  if (algebra == "poly") return to_string(parse_poly(cfg, text));
  return parse_scalar(cfg, text).to_string();
}

void run_nf(const FieldConfig& cfg, const Options& o, Output& res) {
  res.set("result", normal_form(cfg, o.algebra.empty() ? "qplane" : o.algebra, o.operands.at(0)));
}

void run_mul(const FieldConfig& cfg, const Options& o, Output& res) {
  const std::string alg = o.algebra.empty() ? "qplane" : o.algebra;
  const auto& lhs = o.operands.at(0);
  const auto& rhs = o.operands.at(1);
  if (alg == "qplane") {
    res.set("result", to_string(qp_multiply(cfg, parse_qplane(cfg, lhs), parse_qplane(cfg, rhs))));
  } else if (alg == "qweyl") {
    const auto strategy = o.strategy == "rightmost" ? RewriteStrategy::RightmostFirst
                                                    : RewriteStrategy::LeftmostFirst;
    res.set("result",
            to_string(qw_multiply(cfg, parse_qweyl(cfg, lhs), parse_qweyl(cfg, rhs), strategy)));
  } else {
    res.set("result",
            to_string(loc_multiply(cfg, parse_localized(cfg, lhs), parse_localized(cfg, rhs))));
  }
}

void run_act(const FieldConfig& cfg, const Options& o, Output& res) {
  require_rep(o);
  const auto& elem = o.operands.at(0);
  const LaurentVector vec = parse_laurent(cfg, o.operands.at(1));
  if (is_v_rep(o.rep)) {
    if (!o.via.empty()) throw UsageError("--via applies to W[...] reps only");
    const FWeight f = parse_fweight(cfg, o.rep);
    const std::string alg = o.algebra.empty() ? "qplane" : o.algebra;
    if (alg == "qplane") {
      res.set("result", to_string(act_qp(cfg, parse_qplane(cfg, elem), vec, f)));
    } else if (alg == "qweyl") {
      res.set("result", to_string(extend_action_qweyl(cfg, parse_qweyl(cfg, elem), vec, f)));
    } else {
      res.set("result", to_string(act_localized(cfg, parse_localized(cfg, elem), vec, f)));
    }
    return;
  }
  const GWeight g = parse_gweight(cfg, o.rep);
  if (!o.via.empty()) {
    if (!o.algebra.empty() && o.algebra != "qplane") {
      throw Error(ErrorCode::CategoryError, "--via restricts to the quantum plane");
    }
    const auto act = o.via == "sigma" ? restrict_sigma(cfg, g) : restrict_tau(cfg, g);
    res.set("result", to_string(act(parse_qplane(cfg, elem), vec)));
    return;
  }
  if (!o.algebra.empty() && o.algebra != "qweyl") {
    throw Error(ErrorCode::CategoryError, "W[...] reps are acted on by qweyl elements");
  }
  res.set("result", to_string(act_w(cfg, parse_qweyl(cfg, elem), vec, g)));
}

std::string_view witness_name(ReducibilityWitness w) {
  switch (w) {
    case ReducibilityWitness::None: return "none";
    case ReducibilityWitness::PolynomialTail: return "polynomial-tail";
    case ReducibilityWitness::ConstantG: return "constant-g";
  }
  return "none";
}

void run_classify(const FieldConfig& cfg, const Options& o, Output& res) {
  require_rep(o);
  if (is_v_rep(o.rep)) {
    const FWeight f = parse_fweight(cfg, o.rep);
    const bool irreducible = is_irreducible(f);
    res.set("irreducible", irreducible);
    if (irreducible) {
      res.set("invariant", pi_f(cfg, f, 0).to_string());
    } else {
      json invariants = json::array();
      for (const auto& s : decompose(cfg, f)) {
        invariants.push_back(pi_f(cfg, s.weight, 0).to_string());
      }
      res.set("summands", gcd_int(f.m, f.n));
      res.set("invariants", invariants);
    }
    res.set("weight", f.m == f.n);
    return;
  }
  const GWeight g = parse_gweight(cfg, o.rep);
  if (g.n != 1) {
    res.set("irreducible", false);
    res.set("summands", g.n);
  } else {
    const auto report = w_is_irreducible(cfg, g);
    res.set("irreducible", report.irreducible);
    res.set("witness", std::string(witness_name(report.witness)));
    if (report.witness == ReducibilityWitness::PolynomialTail) {
      res.set("tail_start", report.tail_start);
    }
  }
  res.set("weight", true);
}

void run_iso(const FieldConfig& cfg, const Options& o, Output& res) {
  const auto& a = o.operands.at(0);
  const auto& b = o.operands.at(1);
  if (is_v_rep(a) && is_v_rep(b)) {
    const FWeight f = parse_fweight(cfg, a);
    const FWeight g = parse_fweight(cfg, b);
    res.set("isomorphic", o.algebra == "qweyl" ? iso_check_qweyl(cfg, f, g) : iso_check(cfg, f, g));
  } else if (is_w_rep(a) && is_w_rep(b)) {
    res.set("isomorphic", w_iso_check(cfg, parse_gweight(cfg, a), parse_gweight(cfg, b)));
  } else {
    throw Error(ErrorCode::CategoryError, "iso compares two V[...] or two W[...] reps");
  }
}

void run_decompose(const FieldConfig& cfg, const Options& o, Output& res) {
  require_rep(o);
  json summands = json::array();
  if (is_v_rep(o.rep)) {
    for (const auto& s : decompose(cfg, parse_fweight(cfg, o.rep))) {
      summands.push_back(s.weight.to_string() + " at " + embedding_text(s.embedding));
    }
  } else {
    for (const auto& s : decompose_w(cfg, parse_gweight(cfg, o.rep))) {
      summands.push_back(s.weight.to_string() + " at " + embedding_text(s.embedding));
    }
  }
  res.set("count", summands.size());
  for (std::size_t i = 0; i < summands.size(); ++i) {
    res.set("summand " + std::to_string(i), summands[i]);
  }
}

void run_socle(const FieldConfig& cfg, const Options& o, Output& res) {
  require_rep(o);
  if (!is_w_rep(o.rep)) throw Error(ErrorCode::CategoryError, "socle needs a W[...] rep");
  if (o.via.empty()) throw UsageError("socle needs --via sigma|tau");
  const GWeight g = parse_gweight(cfg, o.rep);
  const std::int64_t window = resolve_window(o);
  const auto report = o.via == "sigma" ? socle_sigma(cfg, g, window) : socle_tau(cfg, g, window);
  res.set("lines", report.lines);
  res.set("window_verified", report.window_verified);
}

void run_embed(const FieldConfig& cfg, const Options& o, Output& res) {
  const auto& text = o.operands.at(0);
  if (o.map == "qweyl") {
    res.set("result", to_string(embed_qweyl(cfg, parse_qweyl(cfg, text))));
  } else if (o.map == "inverse") {
    res.set("result", to_string(localized_to_qweyl(cfg, parse_localized(cfg, text)), "X", "Y"));
  } else if (o.map == "sigma") {
    res.set("result", to_string(sigma(cfg, parse_qplane(cfg, text))));
  } else {
    res.set("result", to_string(tau_embed(cfg, parse_qplane(cfg, text))));
  }
}

void run_jackson(const FieldConfig& cfg, const Options& o, Output& res) {
  const PolyVector p = parse_poly(cfg, o.operands.at(0));
  if (o.elem.empty()) {
    res.set("result", to_string(jackson_derivative(cfg, p)));
  } else {
    res.set("result", to_string(act_jackson(cfg, parse_qplane(cfg, o.elem), p)));
  }
}

void run_probe(const FieldConfig& cfg, const Options& o, Output& res) {
  const std::int64_t window = resolve_window(o);
  if (o.kind == "faithful") {
    const auto report = jackson_faithfulness_probe(cfg, o.bound);
    res.set("faithful", report.faithful);
    res.set("degree_bound", report.degree_bound);
    if (report.kernel_witness) res.set("kernel_witness", to_string(*report.kernel_witness));
  } else if (o.kind == "whittaker") {
    const auto report = whittaker_eigenvector_probe(cfg, require_fweight(cfg, o), window);
    res.set("has_eigenvector", report.has_eigenvector);
    res.set("vectors_checked", report.vectors_checked);
  } else if (o.kind == "weight") {
    const auto report = is_weight_qp(cfg, require_fweight(cfg, o), window);
    res.set("weight", report.is_weight);
    json items = json::array();
    if (report.is_weight) {
      for (const auto& [i, ev] : report.eigenvalues) {
        items.push_back("t^" + std::to_string(i) + " -> " + ev.to_string());
      }
      res.set("eigenvalues", items);
    } else {
      for (const auto& v : report.orbit) items.push_back(to_string(v));
      res.set("orbit", items);
    }
  } else if (o.kind == "growth") {
    const auto report = qweyl_not_weight_witness(cfg, require_fweight(cfg, o), o.depth);
    json sizes = json::array();
    for (const auto& s : report.supports) sizes.push_back(s.size());
    res.set("support_sizes", sizes);
    res.set("span_dimension", report.span_dimension);
  } else if (o.kind == "annihilator") {
    if (o.elem.empty()) throw UsageError("probe annihilator needs --elem");
    const FWeight f = require_fweight(cfg, o);
    const auto result = in_annihilator(cfg, parse_qplane(cfg, o.elem), f, o.k);
    res.set("annihilates", result.annihilates);
    res.set("theta_root", result.theta_root.to_string());
    json remainders = json::array();
    for (const auto& c : result.components) remainders.push_back(c.remainder.to_string());
    res.set("remainders", remainders);
    res.set("generator", to_string(annihilator_generator(cfg, f, o.k)));
  } else if (o.kind == "cyclic") {
    json monomials = json::array();
    for (const auto& m : cyclicity_witness(require_fweight(cfg, o), o.from, o.to)) {
      monomials.push_back(monomial_text(m));
    }
    res.set("witness", monomials);
  } else if (o.kind == "logq") {
    const auto k = log_q(cfg, parse_scalar(cfg, o.value));
    res.set("log_q", k ? json(*k) : json("none"));
  } else if (o.kind == "bracket") {
    res.set("result", q_bracket(cfg, o.index).to_string());
  } else {
    throw UsageError("unknown probe kind '" + o.kind + "'");
  }
}

void report_error(std::ostream& out, std::ostream& err, bool as_json, std::string_view code,
                  const std::string& message) {
  if (as_json) {
    json j = json::object();
    j["error"] = {{"code", code}, {"message", message}};
    out << j.dump() << '\n';
  } else {
    err << "error[" << code << "]: " << message << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with quantum plane and q-Weyl algebra representations", "qrep"};
  Options o;
  const std::vector<std::string> algebras{"qplane", "qweyl", "localized"};

  app.add_option("--field", o.field, "Base field: Q (numeric q) or Qq (generic q, default)")
      ->check(CLI::IsMember({"Q", "Qq"}));
  app.add_option("--q", o.q, "Rational value of q over Q");
  app.add_flag("--json", o.json, "Structured output");
  app.add_option("--window", o.window, "Index window for probes (default 20 or QREP_WINDOW)");
  app.require_subcommand(1);
  app.fallthrough();

  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  nf->add_option("--algebra", o.algebra, "qplane, qweyl, localized, laurent, poly or scalar")
      ->check(CLI::IsMember({"qplane", "qweyl", "localized", "laurent", "poly", "scalar"}));
  nf->add_option("expr", o.operands)->required()->expected(1);

  auto* mul = app.add_subcommand("mul", "Product of two algebra elements");
  mul->add_option("--algebra", o.algebra)->check(CLI::IsMember(algebras));
  mul->add_option("--strategy", o.strategy, "Rewriting order for qweyl")
      ->check(CLI::IsMember({"leftmost", "rightmost"}));
  mul->add_option("operands", o.operands)->required()->expected(2);

  auto* act = app.add_subcommand("act", "Act with an algebra element on a Laurent polynomial");
  act->add_option("--rep", o.rep, "V[m,n; f0,...] or W[n; g0,...]")->required();
  act->add_option("--algebra", o.algebra)->check(CLI::IsMember(algebras));
  act->add_option("--via", o.via)->check(CLI::IsMember({"sigma", "tau"}));
  act->add_option("operands", o.operands, "ELEM VEC")->required()->expected(2);

  auto* classify = app.add_subcommand("classify", "Irreducibility and class invariant");
  classify->add_option("--rep", o.rep)->required();

  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("--algebra", o.algebra)->check(CLI::IsMember({"qplane", "qweyl"}));
  iso->add_option("reps", o.operands)->required()->expected(2);

  auto* decompose_cmd = app.add_subcommand("decompose", "Split into irreducible summands");
  decompose_cmd->add_option("--rep", o.rep)->required();

  auto* socle = app.add_subcommand("socle", "Irreducible lines of a restricted W rep");
  socle->add_option("--rep", o.rep)->required();
  socle->add_option("--via", o.via)->required()->check(CLI::IsMember({"sigma", "tau"}));

  auto* embed = app.add_subcommand("embed", "Apply one of the algebra maps");
  embed->add_option("--map", o.map)
      ->required()
      ->check(CLI::IsMember({"qweyl", "inverse", "sigma", "tau"}));
  embed->add_option("expr", o.operands)->required()->expected(1);

  auto* jackson = app.add_subcommand("jackson", "Jackson derivative or action on F[t]");
  jackson->add_option("--elem", o.elem, "Quantum plane element (default: Jackson derivative)");
  jackson->add_option("poly", o.operands)->required()->expected(1);

  auto* probe = app.add_subcommand("probe", "Finite-window property probes");
  probe->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"faithful", "whittaker", "weight", "growth", "annihilator", "cyclic",
                             "logq", "bracket"}));
  probe->add_option("--rep", o.rep);
  probe->add_option("--elem", o.elem);
  probe->add_option("--value", o.value);
  probe->add_option("--bound", o.bound);
  probe->add_option("--depth", o.depth);
  probe->add_option("--k", o.k);
  probe->add_option("--from", o.from);
  probe->add_option("--to", o.to);
  probe->add_option("--index", o.index);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    report_error(out, err, o.json, "Usage", e.what());
    return 1;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Output res;
  try {
    const FieldConfig cfg = make_field(o);
    if (verb == "nf") run_nf(cfg, o, res);
    else if (verb == "mul") run_mul(cfg, o, res);
    else if (verb == "act") run_act(cfg, o, res);
    else if (verb == "classify") run_classify(cfg, o, res);
    else if (verb == "iso") run_iso(cfg, o, res);
    else if (verb == "decompose") run_decompose(cfg, o, res);
    else if (verb == "socle") run_socle(cfg, o, res);
    else if (verb == "embed") run_embed(cfg, o, res);
    else if (verb == "jackson") run_jackson(cfg, o, res);
    else run_probe(cfg, o, res);
  } catch (const Error& e) {
    report_error(out, err, o.json, error_code_name(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const UsageError& e) {
    report_error(out, err, o.json, "Usage", e.what());
    return 1;
  }
  res.write(out, o.json);
  return 0;
}

}  // namespace qrep
