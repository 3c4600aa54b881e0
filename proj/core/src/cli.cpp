// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#include "symwitt/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symwitt/checks.hpp"
#include "symwitt/delta.hpp"
#include "symwitt/expr.hpp"
#include "symwitt/numbers.hpp"
#include "symwitt/symfunc.hpp"
#include "symwitt/witt.hpp"

namespace symwitt::cli {

namespace {

using nlohmann::json;

// shared witt-style flags
struct WittFlags {
  std::int64_t p = 0;
  int len = 0;
  std::string trunc_text;
  std::string mod_text = "0";  // 0 denotes Z
  std::string ring_text;
  bool json_out = false;

  void attach(CLI::App* cmd, bool with_json = true) {
    cmd->add_option("--p", p, "prime for a p-typical truncation {1,p,...,p^(len-1)}");
    cmd->add_option("--len", len, "number of components");
    cmd->add_option("--trunc", trunc_text, "explicit truncation set, e.g. 1,2,4");
    cmd->add_option("--mod", mod_text, "coefficient modulus m for Z/m; 0 = Z");
    cmd->add_option("--ring", ring_text, "coefficient ring: Z, Q, Z/6, Z[x], Q[x]");
    if (with_json) cmd->add_flag("--json", json_out, "JSON output");
  }

  RingDescriptor ring() const {
    if (!ring_text.empty()) return parse_ring(ring_text);
    Int m(mod_text);
    if (m == 0) return RingDescriptor::integers();
    return RingDescriptor::mod(m);
  }

  TruncationSet trunc() const {
    if (!trunc_text.empty()) {
      std::vector<std::int64_t> members;
      std::stringstream ss(trunc_text);
      std::string tok;
      while (std::getline(ss, tok, ',')) members.push_back(std::stoll(tok));
      return TruncationSet(std::move(members));
    }
    if (p >= 2 && len >= 1) return TruncationSet::p_typical(p, len);
    if (len >= 1) return TruncationSet::full(len);
    throw DescriptorError("no truncation given: use --trunc or --p/--len or --len");
  }
};

std::vector<std::string> split_components(const std::string& text) {
  std::string body = text;
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw SyntaxError("expected a bracketed vector like [2,-1,-4]", 1);
  body = body.substr(1, body.size() - 2);
  std::vector<std::string> out;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

WittVector parse_witt_vector(const WittFlags& flags, const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    json j = json::parse(text);
    std::vector<std::int64_t> members = j.at("trunc").get<std::vector<std::int64_t>>();
    RingDescriptor ring = RingDescriptor::integers();
    if (j.contains("ring")) {
      ring = parse_ring(j.at("ring").get<std::string>());
    } else if (j.contains("mod")) {
      Int m = j.at("mod").is_string() ? Int(j.at("mod").get<std::string>())
                                      : Int(j.at("mod").get<long long>());
      if (m != 0) ring = RingDescriptor::mod(m);
    }
    TruncationSet trunc(std::move(members));
    std::vector<RingElement> comps;
    for (const auto& c : j.at("components"))
      comps.push_back(parse_element(ring, c.get<std::string>()));
    return WittVector(std::move(trunc), ring, std::move(comps));
  }
  TruncationSet trunc = flags.trunc();
  RingDescriptor ring = flags.ring();
  std::vector<RingElement> comps;
  for (const auto& c : split_components(text)) comps.push_back(parse_element(ring, c));
  return WittVector(std::move(trunc), std::move(ring), std::move(comps));
}

json ghost_to_json(const GhostVector& g) {
  json j;
  j["trunc"] = g.trunc().members();
  json entries = json::array();
  for (const auto& e : g.entries()) entries.push_back(e.str());
  j["entries"] = entries;
  return j;
}

json symfunc_to_json(const SymFunc& f) {
  json j;
  j["basis"] = std::string(1, basis_letter(f.basis()));
  j["ring"] = f.ring().name();
  json terms = json::array();
  for (const auto& [part, c] : f.terms()) {
    json t;
    t["partition"] = part.parts();
    t["coeff"] = SymFunc::from_terms(f.basis(), f.ring(), {{Partition(), c}}).str();
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

Basis parse_basis_flag(const std::string& to) {
  if (to.size() != 1) throw DescriptorError("--to expects one of m, e, p, w");
  return basis_from_letter(to[0]);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact symmetric functions, Witt vectors and delta-rings"};
  app.require_subcommand(1);

  // --- sym ------------------------------------------------------------
  auto* sym = app.add_subcommand("sym", "symmetric-function expressions");
  sym->require_subcommand(1);
  struct {
    std::string expr;
    std::string to = "m";
    bool json_out = false;
  } sym_eval, sym_convert;
  auto* eval_cmd = sym->add_subcommand("eval", "evaluate an expression");
  eval_cmd->add_option("expr", sym_eval.expr, "expression, e.g. \"p[2] @ e[2]\"")->required();
  eval_cmd->add_option("--to", sym_eval.to, "output basis m|e|p|w (default m)");
  eval_cmd->add_flag("--json", sym_eval.json_out, "JSON output");
  auto* conv_cmd = sym->add_subcommand("convert", "evaluate and re-express in a basis");
  conv_cmd->add_option("expr", sym_convert.expr, "expression")->required();
  conv_cmd->add_option("--to", sym_convert.to, "output basis m|e|p|w")->required();
  conv_cmd->add_flag("--json", sym_convert.json_out, "JSON output");

  // --- witt -----------------------------------------------------------
  auto* witt = app.add_subcommand("witt", "Witt vector arithmetic");
  witt->require_subcommand(1);
  struct WittCmd {
    WittFlags flags;
    std::vector<std::string> vecs;
    std::int64_t n = 1;
    std::string scalar;
    bool invert = false;
    CLI::App* cmd = nullptr;
  };
  std::map<std::string, WittCmd> wc;
  auto add_witt_cmd = [&](const std::string& name, const std::string& desc, int nvecs,
                          bool has_n = false) -> WittCmd& {
    WittCmd& c = wc[name];
    c.cmd = witt->add_subcommand(name, desc);
    c.flags.attach(c.cmd);
    if (nvecs > 0)
      c.cmd->add_option("vectors", c.vecs, "component vectors like [2,-1,-4]")
          ->expected(nvecs);
    if (has_n) c.cmd->add_option("--n", c.n, "operator index n")->required();
    return c;
  };
  add_witt_cmd("add", "a + b in W(R)", 2);
  add_witt_cmd("mul", "a * b in W(R)", 2);
  add_witt_cmd("neg", "-a in W(R)", 1);
  add_witt_cmd("ghost", "ghost components of a", 1);
  add_witt_cmd("unghost", "Witt vector with the given ghost components", 1);
  add_witt_cmd("frob", "Frobenius F_n(a); result lives on {m : mn in trunc}", 1, true);
  add_witt_cmd("versch",
               "Verschiebung V_n into the given truncation set (source components "
               "are read on trunc/n)",
               1, true);
  {
    WittCmd& c = wc["teich"];
    c.cmd = witt->add_subcommand("teich", "Teichmueller lift [b] = (b,0,...)");
    c.flags.attach(c.cmd);
    c.cmd->add_option("value", c.scalar, "ring element b")->required();
  }
  {
    WittCmd& c = wc["series"];
    c.cmd = witt->add_subcommand(
        "series", "power-series form prod (1 - a_n t^n) of a big Witt vector on {1..N}");
    c.flags.attach(c.cmd);
    c.cmd->add_option("vector", c.vecs, "components (or series coefficients with --invert)")
        ->expected(1);
    c.cmd->add_flag("--invert", c.invert,
                    "treat the input [1,c1,...,cN] as series coefficients and recover the "
                    "Witt vector");
  }

  // --- ah ---------------------------------------------------------------
  struct {
    WittFlags flags;
    std::string vec;
    int outer = 1, inner = 1;
  } ah;
  auto* ah_cmd = app.add_subcommand("ah", "Artin-Hasse map W(R) -> W(W(R))");
  ah.flags.attach(ah_cmd);
  ah_cmd->add_option("vector", ah.vec, "p-typical vector of length >= outer+inner")->required();
  ah_cmd->add_option("--outer", ah.outer, "outer length r")->required();
  ah_cmd->add_option("--inner", ah.inner, "inner length s")->required();

  // --- dwork / delta ------------------------------------------------------
  struct LiftArgs {
    std::string ring_text = "Z";
    std::int64_t p = 2;
    std::string fx;
    std::string r;
    int len = 3;
    bool json_out = false;
  } dwork_args, delta_args;
  auto add_lift_cmd = [&](const char* name, const char* desc, LiftArgs& a, bool with_len) {
    auto* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--ring", a.ring_text, "torsion-free ring: Z, Z[x], Q[x]");
    cmd->add_option("--p", a.p, "prime")->required();
    cmd->add_option("--fx", a.fx, "image of the generator (polynomial rings; default x^p)");
    cmd->add_option("--r", a.r, "ring element")->required();
    if (with_len) cmd->add_option("--len", a.len, "number of Witt components");
    cmd->add_flag("--json", a.json_out, "JSON output");
    return cmd;
  };
  add_lift_cmd("dwork", "ring map R -> W(R) attached to a Frobenius lift", dwork_args, true);
  add_lift_cmd("delta", "delta(r) = (f(r) - r^p)/p", delta_args, false);

  // --- lambda ---------------------------------------------------------------
  struct {
    std::string psi_text;
    std::string const_text;
    int n = 0;
    std::string ring_text = "Z";
    bool json_out = false;
  } lambda_args;
  auto* lambda_cmd =
      app.add_subcommand("lambda", "lambda_1..lambda_N from Adams values by Newton's recursion");
  lambda_cmd->add_option("--psi", lambda_args.psi_text, "comma list of psi_1..psi_N");
  lambda_cmd->add_option("--const", lambda_args.const_text,
                         "constant Adams value m (binomial lambda-structure)");
  lambda_cmd->add_option("--n", lambda_args.n, "N (required with --const)");
  lambda_cmd->add_option("--ring", lambda_args.ring_text, "coefficient ring (default Z)");
  lambda_cmd->add_flag("--json", lambda_args.json_out, "JSON output");

  // --- check ---------------------------------------------------------------
  struct {
    std::vector<std::string> suites;
    bool all = false;
    bool json_out = false;
  } check_args;
  auto* check_cmd = app.add_subcommand("check", "run the identity suites");
  check_cmd->add_option("suites", check_args.suites, "suites to run (default: all)");
  check_cmd->add_flag("--all", check_args.all, "run every suite");
  check_cmd->add_flag("--json", check_args.json_out, "JSON output");

  // --- linearize -------------------------------------------------------------
  struct {
    std::int64_t p = 2;
    bool json_out = true;
  } lin_args;
  auto* lin_cmd = app.add_subcommand("linearize", "linearization report for Lambda_p");
  lin_cmd->add_option("--p", lin_args.p, "prime (2, 3 or 5)")->required();

  // ---------------------------------------------------------------------
  std::vector<const char*> argv;
  argv.push_back("symwitt");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval_cmd->parsed() || conv_cmd->parsed()) {
      const auto& a = eval_cmd->parsed() ? sym_eval : sym_convert;
      SymFunc f = eval_in_basis(a.expr, parse_basis_flag(a.to));
      if (a.json_out)
        out << symfunc_to_json(f).dump() << "\n";
      else
        out << f.str() << "\n";
      return 0;
    }

    for (auto& [name, c] : wc) {
      if (!c.cmd->parsed()) continue;
      if (name == "add" || name == "mul") {
        WittVector a = parse_witt_vector(c.flags, c.vecs[0]);
        WittVector b = parse_witt_vector(c.flags, c.vecs[1]);
        WittVector r = name == "add" ? witt_add(a, b) : witt_mul(a, b);
        out << (c.flags.json_out ? r.to_json().dump() : r.str()) << "\n";
      } else if (name == "neg") {
        WittVector r = witt_neg(parse_witt_vector(c.flags, c.vecs[0]));
        out << (c.flags.json_out ? r.to_json().dump() : r.str()) << "\n";
      } else if (name == "ghost") {
        GhostVector g = ghost(parse_witt_vector(c.flags, c.vecs[0]));
        out << (c.flags.json_out ? ghost_to_json(g).dump() : g.str()) << "\n";
      } else if (name == "unghost") {
        WittVector probe = parse_witt_vector(c.flags, c.vecs[0]);
        GhostVector g(probe.trunc(), probe.ring(), probe.components());
        WittVector r = from_ghost(g);
        out << (c.flags.json_out ? r.to_json().dump() : r.str()) << "\n";
      } else if (name == "frob") {
        WittVector r = frobenius(c.n, parse_witt_vector(c.flags, c.vecs[0]));
        out << (c.flags.json_out ? r.to_json().dump() : r.str()) << "\n";
      } else if (name == "versch") {
        TruncationSet target = c.flags.trunc();
        WittFlags src_flags = c.flags;
        src_flags.trunc_text.clear();
        src_flags.p = 0;
        src_flags.len = 0;
        TruncationSet source = target.quotient(c.n);
        std::ostringstream trunc_text;
        for (std::size_t i = 0; i < source.members().size(); ++i)
          trunc_text << (i ? "," : "") << source.members()[i];
        src_flags.trunc_text = trunc_text.str();
        WittVector a = parse_witt_vector(src_flags, c.vecs[0]);
        WittVector r = verschiebung(c.n, a, target);
        out << (c.flags.json_out ? r.to_json().dump() : r.str()) << "\n";
      } else if (name == "teich") {
        RingDescriptor ring = c.flags.ring();
        WittVector r = teichmuller(parse_element(ring, c.scalar), c.flags.trunc());
        out << (c.flags.json_out ? r.to_json().dump() : r.str()) << "\n";
      } else if (name == "series") {
        if (c.invert) {
          RingDescriptor ring = c.flags.ring();
          std::vector<RingElement> coeffs;
          for (const auto& t : split_components(c.vecs[0]))
            coeffs.push_back(parse_element(ring, t));
          WittVector r = witt_of_series(TruncatedSeries(ring, std::move(coeffs)));
          out << (c.flags.json_out ? r.to_json().dump() : r.str()) << "\n";
        } else {
          TruncatedSeries s = series_of(parse_witt_vector(c.flags, c.vecs[0]));
          out << s.str() << "\n";
        }
      }
      return 0;
    }

    if (ah_cmd->parsed()) {
      WittVector a = parse_witt_vector(ah.flags, ah.vec);
      if (ah.flags.p < 2) throw DescriptorError("ah needs --p");
      auto result = artin_hasse(a, ah.flags.p, ah.outer, ah.inner);
      if (ah.flags.json_out) {
        json j = json::array();
        for (const auto& v : result) j.push_back(v.to_json());
        out << j.dump() << "\n";
      } else {
        out << "[";
        for (std::size_t i = 0; i < result.size(); ++i) out << (i ? "," : "") << result[i].str();
        out << "]\n";
      }
      return 0;
    }

    auto make_lift = [](const LiftArgs& a) {
      RingDescriptor ring = parse_ring(a.ring_text);
      if (ring.is_poly()) {
        RingElement fx = a.fx.empty()
                             ? RingElement::generator(ring).pow(static_cast<std::uint64_t>(a.p))
                             : parse_element(ring, a.fx);
        return FrobeniusLift(ring, a.p, fx);
      }
      return FrobeniusLift(ring, a.p);
    };

    if (app.get_subcommand("dwork")->parsed()) {
      FrobeniusLift lift = make_lift(dwork_args);
      RingElement r = parse_element(lift.ring(), dwork_args.r);
      WittVector w = dwork_action(lift, r, dwork_args.len);
      out << (dwork_args.json_out ? w.to_json().dump() : w.str()) << "\n";
      return 0;
    }

    if (app.get_subcommand("delta")->parsed()) {
      FrobeniusLift lift = make_lift(delta_args);
      RingElement r = parse_element(lift.ring(), delta_args.r);
      RingElement d = delta_op(lift, r);
      if (delta_args.json_out)
        out << json{{"delta", d.str()}}.dump() << "\n";
      else
        out << d.str() << "\n";
      return 0;
    }

    if (lambda_cmd->parsed()) {
      RingDescriptor ring = parse_ring(lambda_args.ring_text);
      std::vector<RingElement> psi;
      if (!lambda_args.const_text.empty()) {
        if (lambda_args.n < 1) throw DescriptorError("--const needs --n");
        RingElement m = parse_element(ring, lambda_args.const_text);
        psi.assign(static_cast<std::size_t>(lambda_args.n), m);
      } else if (!lambda_args.psi_text.empty()) {
        std::stringstream ss(lambda_args.psi_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) psi.push_back(parse_element(ring, tok));
      } else {
        throw DescriptorError("lambda needs --psi or --const");
      }
      auto lambda = lambda_from_adams(psi);
      if (lambda_args.json_out) {
        json j = json::array();
        for (const auto& l : lambda) j.push_back(l.str());
        out << json{{"lambda", j}}.dump() << "\n";
      } else {
        out << "[";
        for (std::size_t i = 0; i < lambda.size(); ++i) out << (i ? "," : "") << lambda[i].str();
        out << "]\n";
      }
      return 0;
    }

    if (check_cmd->parsed()) {
      std::vector<CheckOutcome> results;
      if (check_args.all || check_args.suites.empty()) {
        results = run_all_checks();
      } else {
        for (const auto& s : check_args.suites) {
          auto part = run_check_suite(s);
          results.insert(results.end(), part.begin(), part.end());
        }
      }
      std::size_t failures = 0;
      if (check_args.json_out) {
        json j = json::array();
        for (const auto& r : results) {
          j.push_back({{"check", r.suite + "/" + r.name},
                       {"status", r.pass ? "pass" : "fail"},
                       {"witness", r.detail}});
          if (!r.pass) ++failures;
        }
        out << j.dump() << "\n";
      } else {
        for (const auto& r : results) {
          out << (r.pass ? "PASS  " : "FAIL  ") << r.suite << "/" << r.name << ": " << r.detail
              << "\n";
          if (!r.pass) ++failures;
        }
        out << (failures == 0 ? "all " + std::to_string(results.size()) + " checks passed"
                              : std::to_string(failures) + " of " +
                                    std::to_string(results.size()) + " checks failed")
            << "\n";
      }
      return failures == 0 ? 0 : 1;
    }

    if (lin_cmd->parsed()) {
      auto items = linearization_report(lin_args.p);
      json j = json::array();
      bool all_pass = true;
      for (const auto& item : items) {
        j.push_back({{"check", item.check},
                     {"status", item.pass ? "pass" : "fail"},
                     {"witness", item.witness}});
        all_pass = all_pass && item.pass;
      }
      out << j.dump() << "\n";
      return all_pass ? 0 : 1;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    err << "SyntaxError: " << e.what() << "\n";
    return 3;
  }
  err << "no subcommand handled\n";
  return 2;
}

}  // namespace symwitt::cli
