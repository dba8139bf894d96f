// edense: command-line front end for the E-dense semigroup workbench.
//
//   edense analyze     TABLE | --fixture NAME
//   edense act         TABLE | --fixture NAME  [--munn | --ideal IDS | --file ACT]
//   edense cosets      TABLE | --fixture NAME  --subsemigroup IDS
//   edense build-cu    CATEGORY | --derived G | --band G [--size K]  [--object U]
//   edense crypto-demo --prime P | --fixture NAME  [--protocol mo|elgamal] [--seed N]
//   edense verify      [TABLE...] [--corpus] [--suite NAME|all]
//
// Every command takes --json.  Exit status: 0 when all findings pass, 1 when
// some finding fails, 2 on an error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edense/edense.hpp"

using namespace edense;
using json = nlohmann::ordered_json;

namespace {

  struct Output {
    explicit Output(std::string c) : command(std::move(c)) {}

    std::string command;
    json        data = json::object();
    Report      report;
  };

  json ids(ElementSet const& A) {
    return json(A.members());
  }

  json findings_json(Report const& r) {
    json out = json::array();
    for (auto const& f : r.findings) {
      json j{{"name", f.name}, {"pass", f.pass}};
      if (!f.pass) {
        j["witness"] = f.witness;
      }
      out.push_back(std::move(j));
    }
    return out;
  }

  void render_value(std::ostream& os, json const& v, std::string const& indent) {
    if (v.is_object()) {
      for (auto const& [key, item] : v.items()) {
        if (item.is_object() || (item.is_array() && !item.empty()
                                 && item.front().is_structured())) {
          os << indent << key << ":\n";
          render_value(os, item, indent + "  ");
        } else {
          os << indent << key << ": ";
          render_value(os, item, "");
          os << '\n';
        }
      }
    } else if (v.is_array() && !v.empty() && v.front().is_structured()) {
      for (auto const& item : v) {
        if (item.is_object()) {
          render_value(os, item, indent);
          os << indent << "--\n";
        } else {
          os << indent;
          render_value(os, item, "");
          os << '\n';
        }
      }
    } else if (v.is_array()) {
      os << '{';
      bool first = true;
      for (auto const& item : v) {
        os << (first ? "" : ", ");
        render_value(os, item, "");
        first = false;
      }
      os << '}';
    } else if (v.is_string()) {
      os << v.get<std::string>();
    } else {
      os << v.dump();
    }
  }

  int emit(Output const& out, bool as_json) {
    bool const ok = out.report.all_pass();
    if (as_json) {
      json j{{"command", out.command},
             {"data", out.data},
             {"findings", findings_json(out.report)},
             {"pass", ok}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "command: " << out.command << '\n';
      render_value(std::cout, out.data, "");
      for (auto const& f : out.report.findings) {
        std::cout << (f.pass ? "PASS " : "FAIL ") << f.name;
        if (!f.pass && !f.witness.empty()) {
          std::cout << " [" << f.witness << ']';
        }
        std::cout << '\n';
      }
      std::cout << (ok ? "all checks passed" : "some checks FAILED") << " ("
                << out.report.findings.size() - out.report.failures() << '/'
                << out.report.findings.size() << ")\n";
    }
    return ok ? 0 : 1;
  }

  FiniteSemigroup load_semigroup(std::string const& path,
                                 std::string const& fixture_name) {
    if (!fixture_name.empty()) {
      return fixture(fixture_name);
    }
    if (path.empty()) {
      throw Error(ErrorCode::PreconditionFailed,
                  "give a table file or --fixture NAME");
    }
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::ParseError, "cannot open " + path);
    }
    return read_cayley_table(in);
  }

  std::string source_name(std::string const& path, std::string const& name) {
    return name.empty() ? path : "fixture " + name;
  }

  ////////////////////////////////////////////////////////////////////////
  // analyze
  ////////////////////////////////////////////////////////////////////////

  Output cmd_analyze(FiniteSemigroup const& S, std::string const& source) {
    Output out{"analyze " + source};
    auto const cls = classify_idempotents(S);
    auto&      d   = out.data;
    d["order"]     = S.size();
    d["identity"]  = S.identity() ? json(*S.identity()) : json(nullptr);
    d["idempotents"]   = ids(idempotents(S));
    d["band"]          = cls.is_band;
    d["semilattice"]   = cls.is_semilattice;
    d["commutative"]   = is_commutative(S);
    d["e_dense"]       = is_e_dense(S);
    d["e_unitary"]     = is_e_unitary(S);
    d["group"]         = is_group(S);
    d["inverse"]       = is_inverse_semigroup(S);
    d["regular"]       = ids(regular_elements(S));
    json elements      = json::array();
    for (ElementId s = 0; s < S.size(); ++s) {
      auto const sets = inverse_sets(S, s);
      elements.push_back({{"element", s},
                          {"label", S.label(s)},
                          {"W", ids(sets.weak)},
                          {"V", ids(sets.inverse)},
                          {"L", ids(sets.left_pre)}});
    }
    d["elements"] = std::move(elements);
    out.report.add("associative table", true);
    out.report.add("E-dense", is_e_dense(S));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // act
  ////////////////////////////////////////////////////////////////////////

  json act_json(PartialAct const& X) {
    json d;
    auto const p   = act_properties(X);
    d["points"]    = X.carrier_size();
    d["effective"] = p.effective;
    d["transitive"] = p.transitive;
    d["indecomposable"] = p.indecomposable;
    d["locally_free"]   = p.locally_free;
    json orbit_list     = json::array();
    for (auto const& O : orbits(X)) {
      orbit_list.push_back(ids(O));
    }
    d["orbits"] = std::move(orbit_list);
    json points = json::array();
    auto const g = grading(X);
    for (PointId x = 0; x < X.carrier_size(); ++x) {
      json j{{"point", x},
             {"label", X.point_label(x)},
             {"D^x", ids(X.point_domain(x))},
             {"stabilizer", ids(stabilizer(X, x))}};
      if (g.grading) {
        j["grading"] = (*g.grading)[x];
      }
      points.push_back(std::move(j));
    }
    d["graded"] = g.grading.has_value();
    if (!g.grading) {
      d["grading_absent"] = g.reason;
    }
    d["point_data"] = std::move(points);
    d["table"]      = format_partial_act(X);
    return d;
  }

  Output cmd_act(FiniteSemigroup const& S, std::string const& source,
                 bool munn, std::string const& ideal,
                 std::string const& act_file) {
    Output out{"act " + source};
    std::optional<PartialAct> X;
    if (munn) {
      out.command += " --munn";
      auto M            = munn_act(S);
      out.data["idempotents"] = json(M.points);
      X.emplace(std::move(M.act));
    } else if (!act_file.empty()) {
      out.command += " --file " + act_file;
      std::ifstream in(act_file);
      if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + act_file);
      }
      X.emplace(read_partial_act(in, S));
    } else if (!ideal.empty()) {
      out.command += " --ideal " + ideal;
      auto const I = parse_subset(ideal, S.size());
      X.emplace(wagner_preston(left_ideal_act(S, I)));
    } else {
      X.emplace(wagner_preston(S));
    }
    out.data.update(act_json(*X));
    out.report.add("act axioms (composition, cancellative, reflexive)", true);
    if (has_semilattice_of_idempotents(S)) {
      out.report.append(verify_act(*X, "act"));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // cosets
  ////////////////////////////////////////////////////////////////////////

  Output cmd_cosets(FiniteSemigroup const& S, std::string const& source,
                    std::string const& subset) {
    Output     out{"cosets " + source + " --subsemigroup " + subset};
    auto const H = parse_subset(subset, S.size());
    require_semilattice(S, "cosets");
    if (auto why = closed_e_dense_failure(S, H); !why.empty()) {
      throw Error(ErrorCode::BadSubsemigroup, H.to_string() + ": " + why);
    }
    CosetSpace const space(S, H);
    auto&            d = out.data;
    d["subsemigroup"]  = ids(H);
    d["domain"]        = ids(space.domain());
    json cosets        = json::array();
    for (auto const& c : space.cosets()) {
      cosets.push_back(ids(c.members));
    }
    d["cosets"]         = std::move(cosets);
    d["index"]          = space.size();
    bool const self     = is_self_conjugate(S, H);
    d["self_conjugate"] = self;
    if (self) {
      auto const Q     = quotient_group(S, H);
      d["quotient"]    = format_cayley_table(Q);
      json known       = nullptr;
      for (auto const& name : fixture_names()) {
        auto const G = fixture(name);
        if (is_group(G) && find_semigroup_isomorphism(Q, G)) {
          known = name;
        }
      }
      if (Q.size() == 1) {
        known = "trivial";
      }
      d["quotient_isomorphic_to"] = known;
    }
    out.report = verify_cosets_for(S, H);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // build-cu
  ////////////////////////////////////////////////////////////////////////

  Output cmd_build_cu(std::string const& path, std::string const& derived,
                      std::string const& band, std::size_t size,
                      std::optional<ObjectId> object) {
    Output                            out{"build-cu"};
    std::optional<CategoryWithAction> CA;
    if (!derived.empty()) {
      out.command += " --derived " + derived;
      CA.emplace(derived_category(fixture(derived)));
    } else if (!band.empty()) {
      out.command += " --band " + band + " --size " + std::to_string(size);
      CA.emplace(adjoin_band_category(fixture(band), size));
    } else if (!path.empty()) {
      out.command += " " + path;
      std::ifstream in(path);
      if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path);
      }
      CA.emplace(read_category(in));
    } else {
      throw Error(ErrorCode::PreconditionFailed,
                  "give a category file, --derived G or --band G");
    }
    auto const& C     = CA->category;
    auto const& G     = CA->action.group;
    auto const  props = validate_group_action(C, CA->action);
    auto const  u     = object.value_or(0);
    auto const  Cu    = c_u_monoid(C, CA->action, u);
    auto const& M     = Cu.monoid;
    auto&       d     = out.data;
    d["objects"]      = C.object_count();
    d["morphisms"]    = C.morphism_count();
    d["strongly_connected"] = C.is_strongly_connected();
    d["locally_idempotent"] = C.is_locally_idempotent();
    d["action_transitive"]  = props.transitive;
    d["action_free"]        = props.free;
    d["object"]             = u;
    d["order"]              = M.size();
    json elements           = json::array();
    for (ElementId k = 0; k < M.size(); ++k) {
      elements.push_back(M.label(k));
    }
    d["elements"]    = std::move(elements);
    d["idempotents"] = ids(idempotents(M));
    d["table"]       = format_cayley_table(M);
    out.report.add("C_u is E-dense", is_e_dense(M));
    out.report.add("C_u is E-unitary", is_e_unitary(M));
    ElementSet over_one(M.size());
    for (ElementId k = 0; k < M.size(); ++k) {
      if (Cu.pairs[k].second == *G.identity()) {
        over_one.insert(k);
      }
    }
    out.report.add("idempotents are the pairs (p, 1)",
                   idempotents(M) == over_one);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // crypto-demo
  ////////////////////////////////////////////////////////////////////////

  // The smallest principal left ideal on which S acts cancellatively.
  TotalAct fixture_cryptosystem(FiniteSemigroup const& S) {
    std::optional<TotalAct> best;
    for (auto& [name, X] : left_ideal_acts(S)) {
      if (is_cancellative(X)
          && (!best || X.carrier_size() < best->carrier_size())) {
        best = X;
      }
    }
    if (!best) {
      throw Error(ErrorCode::PreconditionFailed,
                  "no principal left ideal is a cancellative act");
    }
    return *best;
  }

  Output cmd_crypto_demo(std::optional<std::uint64_t> prime,
                         std::string const& fixture_name,
                         std::string const& protocol, std::uint64_t seed) {
    Output                  out{"crypto-demo"};
    std::optional<TotalAct> X;
    if (prime) {
      out.command += " --prime " + std::to_string(*prime);
      auto sys                  = modexp_system(*prime);
      out.data["system"]        = "x -> x^n mod " + std::to_string(*prime);
      out.data["free"]          = sys.is_free;
      X.emplace(std::move(sys.act));
    } else if (!fixture_name.empty()) {
      out.command += " --fixture " + fixture_name;
      X.emplace(fixture_cryptosystem(fixture(fixture_name)));
      out.data["system"] = fixture_name + " acting on a left ideal";
    } else {
      throw Error(ErrorCode::PreconditionFailed, "give --prime or --fixture");
    }
    out.command += " --protocol " + protocol + " --seed " + std::to_string(seed);
    auto const& S = X->semigroup;
    if (auto w = cancellation_failure(*X)) {
      throw Error(ErrorCode::NotCancellative, "sx = sy with x != y", *w);
    }
    json points = json::array();
    for (PointId x = 0; x < X->carrier_size(); ++x) {
      points.push_back(X->point_label(x));
    }
    out.data["points"] = std::move(points);

    auto const keys = draw_keys(usable_keys(*X), 3, seed);
    auto const plaintext
        = draw_keys(ElementSet::full(X->carrier_size()), 1, seed + 1).front();

    json sizes = json::array();
    for (ElementId s = 0; s < S.size(); ++s) {
      json row = json::array();
      for (PointId x = 0; x < X->carrier_size(); ++x) {
        row.push_back(decrypt_key_space(*X, s, x).size());
      }
      sizes.push_back({{"key", S.label(s)}, {"|K(s,x)|", std::move(row)}});
    }
    out.data["key_space_sizes"] = std::move(sizes);

    ProtocolTranscript tr;
    if (protocol == "mo") {
      out.data["keys"] = {{"s", S.label(keys[0])}, {"t", S.label(keys[1])}};
      tr               = massey_omura(*X, plaintext, keys[0], keys[1]);
    } else if (protocol == "elgamal") {
      out.data["keys"] = {{"s", S.label(keys[0])},
                          {"c", S.label(keys[1])},
                          {"d", S.label(keys[2])}};
      // Bob's key is redrawn until the shared product c s d is invertible
      auto const    usable = usable_keys(*X);
      auto          d      = keys[2];
      std::uint64_t retry  = seed;
      for (std::size_t k = 0; !usable.contains(S(S(keys[1], keys[0]), d)); ++k) {
        if (k == 64) {
          throw Error(ErrorCode::NoDecryptKey, "no invertible shared key");
        }
        d = draw_keys(ElementSet::full(S.size()), 1, ++retry).front();
      }
      out.data["keys"]["d"] = S.label(d);
      tr = elgamal(*X, plaintext, keys[0], keys[1], d);
    } else {
      throw Error(ErrorCode::PreconditionFailed,
                  "unknown protocol '" + protocol + "'");
    }
    out.data["plaintext"]  = X->point_label(plaintext);
    json lines             = json::array();
    for (auto const& e : tr.entries) {
      lines.push_back(e.party + ": " + e.kind + " = " + e.value);
    }
    out.data["transcript"] = std::move(lines);
    out.report.add("recovered = plaintext", tr.success(),
                   X->point_label(tr.recovered));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // verify
  ////////////////////////////////////////////////////////////////////////

  Output cmd_verify(std::vector<std::string> const& paths, bool corpus,
                    std::string const& suite) {
    Output out{"verify --suite " + suite};
    std::vector<std::pair<std::string, FiniteSemigroup>> inputs;
    if (corpus) {
      out.command += " --corpus";
      for (auto const& name : fixture_names()) {
        inputs.emplace_back(name, fixture(name));
      }
      for (std::size_t n = 1; n <= max_enumeration_order; ++n) {
        std::size_t k = 0;
        for (auto const& S : all_semigroups(n)) {
          inputs.emplace_back(
              "order " + std::to_string(n) + " #" + std::to_string(k++), S);
        }
      }
    }
    for (auto const& path : paths) {
      out.command += " " + path;
      try {
        inputs.emplace_back(path, load_semigroup(path, ""));
      } catch (Error const& e) {
        out.report.add(path + ": table", false, e.what());
      }
    }
    std::size_t checks = 0;
    for (auto const& [name, S] : inputs) {
      auto const r = verify_suite(suite, S);
      checks += r.findings.size();
      for (auto const& f : r.findings) {
        if (!f.pass || !corpus) {
          out.report.add(name + ": " + f.name, f.pass, f.witness);
        }
      }
    }
    if (corpus && out.report.findings.empty()) {
      out.report.add("corpus: all " + std::to_string(checks) + " findings",
                     true);
    }
    out.data["semigroups"] = inputs.size();
    out.data["findings"]   = checks;
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for finite E-dense semigroups"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string table, fixture_name;
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("table", table, "Cayley table file");
    sub->add_option("--fixture", fixture_name, "built-in fixture name");
    sub->add_flag("--json", as_json, "machine-readable output");
  };

  auto* analyze = app.add_subcommand("analyze", "semigroup summary");
  add_source(analyze);

  bool        munn = false;
  std::string ideal, act_file;
  auto*       act = app.add_subcommand("act", "Wagner-Preston, Munn or file acts");
  add_source(act);
  act->add_flag("--munn", munn, "the Munn act on E");
  act->add_option("--ideal", ideal, "left ideal to act on (ids)");
  act->add_option("--file", act_file, "partial act table file");

  std::string subset;
  auto*       cosets = app.add_subcommand("cosets", "omega-hat cosets S/H");
  add_source(cosets);
  cosets->add_option("--subsemigroup", subset, "ids of H")->required();

  std::string             category, derived, band;
  std::size_t             band_size = 2;
  std::optional<ObjectId> object;
  auto* build = app.add_subcommand("build-cu", "the monoid C_u of a category");
  build->add_option("category", category, "category file");
  build->add_option("--derived", derived, "derived category of a fixture group");
  build->add_option("--band", band, "adjoin a band to a fixture group");
  build->add_option("--size", band_size, "band size for --band");
  build->add_option("--object", object, "the object u");
  build->add_flag("--json", as_json, "machine-readable output");

  std::optional<std::uint64_t> prime;
  std::string                  protocol = "mo";
  std::uint64_t                seed     = 1;
  auto* demo = app.add_subcommand("crypto-demo", "protocol transcripts");
  demo->add_option("--prime", prime, "modular exponentiation modulo p");
  demo->add_option("--fixture", fixture_name, "fixture acting on a left ideal");
  demo->add_option("--protocol", protocol, "mo or elgamal")
      ->check(CLI::IsMember({"mo", "elgamal"}));
  demo->add_option("--seed", seed, "key generator seed");
  demo->add_flag("--json", as_json, "machine-readable output");

  std::vector<std::string> tables;
  bool                     corpus = false;
  std::string              suite  = "all";
  auto* verify = app.add_subcommand("verify", "property suites");
  verify->add_option("tables", tables, "Cayley table files");
  verify->add_flag("--corpus", corpus, "fixtures and all semigroups of order <= 3");
  verify->add_option("--suite", suite, "core, closures, acts, cosets, "
                                       "construction, crypto or all");
  verify->add_flag("--json", as_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    Output out{""};
    if (*analyze) {
      out = cmd_analyze(load_semigroup(table, fixture_name),
                        source_name(table, fixture_name));
    } else if (*act) {
      out = cmd_act(load_semigroup(table, fixture_name),
                    source_name(table, fixture_name), munn, ideal, act_file);
    } else if (*cosets) {
      out = cmd_cosets(load_semigroup(table, fixture_name),
                       source_name(table, fixture_name), subset);
    } else if (*build) {
      out = cmd_build_cu(category, derived, band, band_size, object);
    } else if (*demo) {
      out = cmd_crypto_demo(prime, fixture_name, protocol, seed);
    } else if (*verify) {
      if (tables.empty() && !corpus) {
        throw Error(ErrorCode::PreconditionFailed,
                    "give table files or --corpus");
      }
      out = cmd_verify(tables, corpus, suite);
    }
    return emit(out, as_json);
  } catch (Error const& e) {
    if (as_json) {
      json j{{"error", to_string(e.code())},
             {"message", e.what()},
             {"witness", e.witness()}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    return 2;
  }
}
