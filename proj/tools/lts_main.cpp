#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "lts/error.hpp"
#include "lts/parallel.hpp"
#include "report.hpp"

using namespace lts;

namespace {

struct Options {
  std::string field = "Qi";
  std::string format = "text";
  std::string lambda;
  std::size_t trials = 200;
  std::size_t borelTrials = 100;
  std::uint64_t seed = 1;
  std::string mode = "randomized";
  std::string target;
  std::string targetLambda;
  std::string source;
  std::string sourceLambda;
  std::size_t dim = 4;
  std::string path;
  std::string name;
};

bool json_out(const Options& o) { return o.format == "json"; }

std::optional<Scalar> scalar_opt(const std::string& text, Field field, const char* flag) {
  if (text.empty()) return std::nullopt;
  Scalar s;
  try {
    s = Scalar::parse(text);
  } catch (const Error& e) {
    throw Error(Errc::Parse, std::string("flag ") + flag + ": " + e.what());
  }
  if (field == Field::Q && !s.is_real())
    throw Error(Errc::FieldRestriction, std::string("flag ") + flag + ": " + s.to_string() + " needs i");
  return s;
}

// 2 for input the tool cannot interpret, 1 for input that fails a check.
int exit_code_for(Errc e) {
  switch (e) {
    case Errc::AxiomViolation:
    case Errc::InconsistentTable:
    case Errc::NotClosed:
    case Errc::NoMatch:
    case Errc::NotNilpotent:
    case Errc::InconsistentGraph:
    case Errc::SingularBasis:
    case Errc::RelationViolated:
    case Errc::NotAbelianDim3:
    case Errc::NotAnAutomorphism:
      return 1;
    default:
      return 2;
  }
}

int cmd_check(const Options& o) {
  Lts T = lts_from_json(read_json_file(o.path), parse_field(o.field), false);
  AxiomReport r = check_axioms(T);
  if (json_out(o)) {
    Json j = {{"pass", r.pass}};
    if (!r.pass) {
      Json res = Json::array();
      for (const auto& x : r.residual) res.push_back(x.to_string());
      j["identity"] = r.identity;
      j["tuple"] = r.tuple;
      j["residual"] = res;
    }
    std::cout << dump(j);
  } else {
    std::cout << r.to_string() << "\n";
  }
  return r.pass ? 0 : 1;
}

int cmd_invariants(const Options& o) {
  Lts T = lts_from_json(read_json_file(o.path), parse_field(o.field));
  Fingerprint f = fingerprint(T);
  std::size_t orbit = orbit_dimension(T);
  if (json_out(o)) {
    Json j = report::fingerprint_json(f);
    j["orbitDim"] = orbit;
    std::cout << dump(j);
  } else {
    std::cout << report::fingerprint_text(f, orbit);
  }
  return 0;
}

int cmd_cohomology(const Options& o) {
  Lts T = lts_from_json(read_json_file(o.path), parse_field(o.field));
  Cohomology h = cohomology(T);
  std::cout << (json_out(o) ? dump(report::cohomology_json(h)) : report::cohomology_text(h));
  return 0;
}

int cmd_extend(const Options& o) {
  ExtensionSpec spec = extension_from_json(read_json_file(o.path), parse_field(o.field));
  Lts T = extend(spec);
  bool independent = classes_independent(spec.base, spec.thetas);
  bool inTs = in_Ts(spec);
  std::optional<bool> component;
  if (inTs) component = has_annihilator_component(spec);
  Fingerprint f = fingerprint(T);
  std::optional<Classification> cls;
  try {
    cls = classify(T);
  } catch (const Error&) {
  }
  if (json_out(o)) {
    Json j = {{"system", lts_to_json(T)}, {"classesIndependent", independent}, {"radicalMeetsAnn", !inTs},
              {"fingerprint", report::fingerprint_json(f)}};
    if (component) j["annihilatorComponent"] = *component;
    if (cls) j["classification"] = report::classification_json(*cls);
    std::cout << dump(j);
  } else {
    std::cout << report::products_text(T) << "classes independent mod B3: " << (independent ? "yes" : "no") << "\n"
              << "radicals meet Ann(base): " << (inTs ? "no" : "yes") << "\n";
    if (component) std::cout << "annihilator component: " << (*component ? "yes" : "no") << "\n";
    std::cout << f.to_string() << "\n";
    if (cls) std::cout << "matches " << report::classification_text(*cls);
  }
  return 0;
}

int cmd_classify(const Options& o) {
  Lts T = lts_from_json(read_json_file(o.path), parse_field(o.field));
  Classification c = classify(T);
  std::cout << (json_out(o) ? dump(report::classification_json(c)) : report::classification_text(c));
  return 0;
}

int cmd_catalog_list(const Options& o) {
  Json out = Json::array();
  for (const auto& e : catalog()) {
    if (json_out(o)) {
      out.push_back({{"name", e.name}, {"dim", e.dim}, {"family", e.family}, {"table", table_text(e)}});
    } else {
      std::cout << e.name << (e.family ? "^lambda" : "") << "  dim " << e.dim << "  " << table_text(e) << "\n";
    }
  }
  if (json_out(o)) std::cout << dump(out);
  return 0;
}

int cmd_catalog_show(const Options& o) {
  Field field = parse_field(o.field);
  Lts T = instantiate(o.name, scalar_opt(o.lambda, field, "--lambda"));
  if (field == Field::Q && T.uses_imaginary()) throw Error(Errc::FieldRestriction, o.name + " needs i");
  if (json_out(o)) {
    std::cout << dump(lts_to_json(T));
  } else {
    std::cout << o.name << (o.lambda.empty() ? "" : "^" + o.lambda) << ": " << table_text(catalog_entry(o.name))
              << "\n"
              << report::products_text(T);
  }
  return 0;
}

int cmd_catalog_table1(const Options& o) {
  auto rows = table1_report();
  std::cout << (json_out(o) ? dump(report::table1_json(rows)) : report::table1_text(rows));
  bool all = true;
  for (const auto& r : rows) all = all && r.match();
  return all ? 0 : 1;
}

int cmd_degen_verify(const Options& o) {
  Field field = parse_field(o.field);
  Json doc = read_json_file(o.path);
  std::vector<DegenerationWitness> ws;
  if (doc.is_array()) {
    for (const auto& w : doc) ws.push_back(witness_from_json(w, field));
  } else {
    ws.push_back(witness_from_json(doc, field));
  }
  auto checks = run_indexed<DegenerationCheck>(ws.size(), [&](std::size_t k) { return verify_degeneration(ws[k]); });
  bool all = true;
  Json out = Json::array();
  for (std::size_t k = 0; k < ws.size(); ++k) {
    all = all && checks[k].pass;
    if (json_out(o)) {
      Json j = {{"witness", ws[k].label()}, {"pass", checks[k].pass}, {"poles", checks[k].poles},
                {"mismatches", checks[k].mismatches}};
      out.push_back(j);
    } else {
      std::cout << ws[k].label() << ": " << (checks[k].pass ? "pass" : "FAIL") << " (" << checks[k].to_string()
                << ")\n";
    }
  }
  if (json_out(o)) std::cout << dump(doc.is_array() ? out : out[0]);
  return all ? 0 : 1;
}

int cmd_degen_graph(const Options& o) {
  DegenerationGraph g = degeneration_graph(o.dim);
  std::cout << (json_out(o) ? dump(report::graph_json(g)) : g.render());
  return 0;
}

int cmd_degen_nondegen(const Options& o) {
  Field field = parse_field(o.field);
  SeparatingSet R = separating_from_json(read_json_file(o.path), field);
  if (R.name.empty()) R.name = "R";
  Lts target = instantiate(o.target, scalar_opt(o.targetLambda, field, "--target-lambda"));
  ClaimCheck r;
  auto note = [&](bool ok, const std::string& text) {
    r.pass = r.pass && ok;
    r.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + text);
  };
  if (!o.source.empty()) {
    Lts source = instantiate(o.source, scalar_opt(o.sourceLambda, field, "--source-lambda"));
    note(separating_contains(R, source), "source " + o.source + " in " + R.name);
  }
  StabilityMode mode = o.mode == "symbolic" ? StabilityMode::Symbolic : StabilityMode::Randomized;
  StabilityReport st = borel_stability(R, mode, o.borelTrials, o.seed);
  note(st.pass, R.name + " Borel " + st.to_string());
  note(!separating_contains(R, target), "target " + o.target + " not in " + R.name);
  EscapeReport er = orbit_escape_search(R, target, o.trials, o.seed);
  note(!er.found, "no point of the target orbit in " + R.name + " (" + std::to_string(er.trials) + " trials)");
  if (json_out(o)) {
    std::cout << dump({{"pass", r.pass}, {"evidence", "separating-set"}, {"lines", r.lines}});
  } else {
    std::cout << "evidence level: separating set (Borel-stable, randomized no-escape)\n";
    for (const auto& l : r.lines) std::cout << l << "\n";
  }
  return r.pass ? 0 : 1;
}

int cmd_degen_claims(const Options& o) {
  bool all = true;
  Json out = Json::array();
  for (const auto& claim : nondegeneration_claims()) {
    ClaimCheck c = check_claim(claim, o.borelTrials, o.trials, o.seed);
    all = all && c.pass;
    std::string level = claim.set ? "separating-set" : "invariants";
    if (json_out(o)) {
      out.push_back({{"claim", claim.label}, {"pass", c.pass}, {"evidence", level}, {"lines", c.lines}});
    } else {
      std::cout << (c.pass ? "PASS " : "FAIL ") << claim.label << " [" << level << "]\n";
      for (const auto& l : c.lines) std::cout << "  " << l << "\n";
    }
  }
  if (json_out(o)) std::cout << dump(out);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent Lie triple systems: axioms, cohomology, extensions, classification, degenerations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "ground field")->check(CLI::IsMember({"Q", "Qi"}));
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "check the axioms (A1)-(A3)");
  check->add_option("file", o.path, "Lts JSON")->required();
  auto* inv = app.add_subcommand("invariants", "annihilator, derived algebra, derivations, nilpotency");
  inv->add_option("file", o.path, "Lts JSON")->required();
  auto* coh = app.add_subcommand("cohomology", "Z3, B3, H3 with representatives");
  coh->add_option("file", o.path, "Lts JSON")->required();
  auto* ext = app.add_subcommand("extend", "build the annihilator extension of an ExtensionSpec");
  ext->add_option("file", o.path, "ExtensionSpec JSON")->required();
  auto* cls = app.add_subcommand("classify", "match against the dimension <= 4 catalog");
  cls->add_option("file", o.path, "Lts JSON")->required();

  auto* cat = app.add_subcommand("catalog", "catalog of nilpotent systems of dimension <= 4");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list catalog entries");
  auto* cat_show = cat->add_subcommand("show", "print one entry");
  cat_show->add_option("name", o.name, "entry name, e.g. T4,7")->required();
  cat_show->add_option("--lambda", o.lambda, "family parameter");
  auto* cat_t1 = cat->add_subcommand("table1", "dimensions of derivation algebras");

  auto* deg = app.add_subcommand("degen", "degenerations");
  deg->require_subcommand(1);
  auto* deg_verify = deg->add_subcommand("verify", "verify witness JSON (one object or an array)");
  deg_verify->add_option("file", o.path, "witness JSON")->required();
  auto* deg_graph = deg->add_subcommand("graph", "assemble the degeneration graph");
  deg_graph->add_option("--dim", o.dim, "dimension")->check(CLI::Range(1, 4));
  auto* deg_nd = deg->add_subcommand("nondegen", "separating-set evidence against a target");
  deg_nd->add_option("file", o.path, "SeparatingSet JSON")->required();
  deg_nd->add_option("--target", o.target, "target entry")->required();
  deg_nd->add_option("--target-lambda", o.targetLambda, "target family parameter");
  deg_nd->add_option("--source", o.source, "source entry to test for membership");
  deg_nd->add_option("--source-lambda", o.sourceLambda, "source family parameter");
  deg_nd->add_option("--mode", o.mode, "Borel stability check")->check(CLI::IsMember({"randomized", "symbolic"}));
  deg_nd->add_option("--trials", o.trials, "escape search trials");
  deg_nd->add_option("--borel-trials", o.borelTrials, "randomized Borel trials");
  deg_nd->add_option("--seed", o.seed, "random seed");
  auto* deg_claims = deg->add_subcommand("claims", "check every built-in non-degeneration");
  deg_claims->add_option("--trials", o.trials, "escape search trials");
  deg_claims->add_option("--borel-trials", o.borelTrials, "randomized Borel trials");
  deg_claims->add_option("--seed", o.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*check) return cmd_check(o);
    if (*inv) return cmd_invariants(o);
    if (*coh) return cmd_cohomology(o);
    if (*ext) return cmd_extend(o);
    if (*cls) return cmd_classify(o);
    if (*cat_list) return cmd_catalog_list(o);
    if (*cat_show) return cmd_catalog_show(o);
    if (*cat_t1) return cmd_catalog_table1(o);
    if (*deg_verify) return cmd_degen_verify(o);
    if (*deg_graph) return cmd_degen_graph(o);
    if (*deg_nd) return cmd_degen_nondegen(o);
    if (*deg_claims) return cmd_degen_claims(o);
  } catch (const Error& e) {
    std::cerr << "lts: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return 2;
}
