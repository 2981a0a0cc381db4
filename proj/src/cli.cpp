#include "hsp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsp/bialgebra.hpp"
#include "hsp/comodule.hpp"
#include "hsp/groupoid.hpp"
#include "hsp/json_io.hpp"
#include "hsp/operadic.hpp"
#include "hsp/rational.hpp"
#include "hsp/report.hpp"
#include "hsp/simplicial.hpp"
#include "hsp/species.hpp"

namespace hsp {
namespace {

using nlohmann::json;

json load_input(const std::string& input) {
  if (!input.empty() && (input.front() == '{' || input.front() == '[')) return json::parse(input);
  std::ifstream in(input);
  if (!in.good()) throw std::runtime_error("cannot open input file: " + input);
  return json::parse(in);
}

std::vector<HStructure> parse_structures(const std::string& input, const std::string& species) {
  const json j = load_input(input);
  std::vector<HStructure> xs;
  if (j.is_array())
    for (const auto& e : j) xs.push_back(structure_from_json(e, species));
  else
    xs.push_back(structure_from_json(j, species));
  return xs;
}

void emit_lincomb(const LinComb& lc, const std::string& command, const std::string& species,
                  const std::string& format, std::ostream& out) {
  if (format == "json") {
    json j;
    j["command"] = command;
    j["species"] = species;
    j["terms"] = lincomb_to_json(lc);
    out << j.dump(2) << "\n";
  } else {
    out << lc.to_string() << "\n";
  }
}

// ----------------------------------------------------------------- checks

struct CheckRun {
  CheckReport report;
  std::string subject;                              // heading for the text form
  std::string square;                               // square family, when one is involved
  bool has_k = false, has_level = false, has_nmax = false;
  int k = 0, level = 0, nmax = 0;
  std::string expected = "pass";                    // anticipated outcome
};

CheckRun run_check_suite(const std::string& suite, const std::string& species, int k, int level,
                         int nmax) {
  CheckRun r;
  auto need_species = [&]() -> const HereditarySpecies& {
    if (species.empty()) throw std::runtime_error("check " + suite + " needs --species");
    return species_by_name(species);
  };
  auto species_subject = [&](int bound) {
    r.has_nmax = true;
    r.nmax = bound;
    r.subject = species + " (n <= " + std::to_string(bound) + ")";
  };

  if (suite == "species") {
    if (nmax < 0) nmax = 4;
    const auto& H = need_species();
    species_subject(nmax);
    auto a = check_functoriality(H, nmax);
    if (!a.ok) {
      r.report = a;
      return r;
    }
    auto b = check_beck_chevalley(H, nmax);
    if (!b.ok) {
      r.report = b;
      return r;
    }
    auto c = check_schmitt_identities(H, nmax);
    r.report = c.ok ? CheckReport::pass(a.detail + "; " + b.detail + "; " + c.detail) : c;
  } else if (suite == "bialgebra") {
    if (nmax < 0) nmax = 4;
    const auto& H = need_species();
    species_subject(nmax);
    r.report = check_bialgebra(H, nmax);
  } else if (suite == "comodule") {
    if (nmax < 0) nmax = 3;
    const auto& H = need_species();
    species_subject(nmax);
    auto a = check_comodule(H, nmax);
    if (!a.ok) {
      r.report = a;
      return r;
    }
    auto b = check_comodule_bialgebra(H, nmax);
    r.report = b.ok ? CheckReport::pass(a.detail + "; " + b.detail) : b;
  } else if (suite == "decomp" || suite == "segal" || suite == "finiteness" ||
             suite == "pseudo") {
    if (level < 0) level = suite == "pseudo" ? 2 : 3;
    if (level < 2) throw std::runtime_error("check " + suite + " needs --level >= 2");
    r.has_k = r.has_level = true;
    r.k = k;
    r.level = level;
    const TruncatedSimplicialGroupoid X =
        species.empty() ? build_S(k, level) : build_H(species_by_name(species), k, level);
    r.subject = X.name;
    if (suite == "decomp") {
      r.square = "bottom-face squares against sections and inner faces";
      r.report = check_decomposition(X);
    } else if (suite == "segal") {
      r.square = "X_n -> X_{n-1} x_{X_{n-2}} X_{n-1}";
      if (species == "graphs") r.expected = "fail";
      r.report = check_segal(X);
    } else if (suite == "finiteness") {
      r.report = check_finiteness(X);
    } else {
      r.report = check_pseudo_identity(X, level);
    }
  } else if (suite == "culf") {
    if (level < 0) level = 3;
    r.has_k = r.has_level = true;
    r.k = k;
    r.level = level;
    r.square = "naturality squares of inner faces and degeneracies";
    const TruncatedSimplicialGroupoid plain = build_S(k, level);
    if (species.empty()) {
      const TruncatedSimplicialGroupoid chains = build_NSur(k, level);
      const SimplicialMap f = fibres_map(chains, plain);
      r.subject = f.name;
      r.report = check_culf(f);
    } else {
      const TruncatedSimplicialGroupoid decorated =
          build_H(species_by_name(species), k, level);
      const SimplicialMap f = forget_decorations(decorated, plain);
      r.subject = f.name;
      r.report = check_culf(f);
    }
  } else if (suite == "operadic") {
    if (nmax < 0) nmax = 3;
    const auto& H = need_species();
    species_subject(nmax);
    r.report = check_axioms(build_opcat(H, nmax), 3);
  } else if (suite == "schmitt-coincide") {
    if (nmax < 0) nmax = 3;
    const auto& H = need_species();
    species_subject(nmax);
    int count = 0;
    for (int n = 1; n <= nmax; ++n)
      for (const auto& x : iso_class_reps(H, n)) {
        if (groupoid_comultiply(H, x) == comultiply(H, make_family(H, {x}))) {
          ++count;
          continue;
        }
        r.report = CheckReport::fail(
            "the groupoid-fibre and partition-sum comultiplications differ at " + x.key());
        return r;
      }
    r.report = CheckReport::pass("groupoid-fibre and partition-sum comultiplications agree on " +
                                 std::to_string(count) + " canonical structures");
  } else if (suite == "nsur-equiv") {
    if (level < 0) level = 2;
    r.has_k = r.has_level = true;
    r.k = k;
    r.level = level;
    r.subject =
        "chains vs families (k=" + std::to_string(k) + ", N=" + std::to_string(level) + ")";
    r.report = check_equivalence_NSur_S(k, level);
  } else {
    throw std::runtime_error("unknown check suite: " + suite);
  }
  return r;
}

int emit_check(const CheckRun& r, const std::string& suite, const std::string& species,
               const std::string& format, const std::string& expect_flag, std::ostream& out) {
  const std::string expected = expect_flag.empty() ? r.expected : expect_flag;
  const std::string status = r.report.ok ? "pass" : "fail";
  const bool as_expected = status == expected;
  if (format == "json") {
    json j;
    j["check"] = suite;
    j["species"] = species.empty() ? json(nullptr) : json(species);
    j["k"] = r.has_k ? json(r.k) : json(nullptr);
    j["level"] = r.has_level ? json(r.level) : json(nullptr);
    j["nmax"] = r.has_nmax ? json(r.nmax) : json(nullptr);
    j["square"] = r.square.empty() ? json(nullptr) : json(r.square);
    j["status"] = status;
    j["detail"] = r.report.detail;
    if (!r.report.ok) j["witness"] = r.report.detail;
    j["expected"] = expected;
    j["as_expected"] = as_expected;
    out << j.dump(2) << "\n";
  } else {
    out << "check " << suite << " on " << r.subject << ": " << (r.report.ok ? "PASS" : "FAIL")
        << "\n"
        << r.report.detail << "\n"
        << "expected: " << expected << "\n";
  }
  if (!expect_flag.empty()) return as_expected ? 0 : 1;
  return r.report.ok ? 0 : 1;
}

// ------------------------------------------------------------ cardinality

struct NamedGroupoid {
  GroupoidPtr gpd;
  std::string subject;
};

NamedGroupoid groupoid_by_name(const std::string& name) {
  const size_t colon = name.find(':');
  if (colon == std::string::npos)
    throw std::runtime_error("a groupoid name looks like kind:N, got: " + name);
  const std::string kind = name.substr(0, colon);
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(name.substr(colon + 1), &used);
    if (used != name.size() - colon - 1) throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw std::runtime_error("bad groupoid size in: " + name);
  }
  if (n < 0 || n > 8) throw std::runtime_error("groupoid size out of range in: " + name);
  if (kind == "sym") return {symmetric_group_groupoid(n), name};
  if (kind == "cyclic") {
    if (n < 1) throw std::runtime_error("a cyclic group needs order >= 1");
    return {cyclic_group_groupoid(n), name};
  }
  if (kind == "sets") return {sets_groupoid(n), name};
  if (kind == "discrete") return {discrete_groupoid(n), name};
  if (kind == "codiscrete") return {codiscrete_groupoid(n), name};
  throw std::runtime_error("unknown groupoid kind: " + kind +
                           " (use sym, cyclic, sets, discrete, or codiscrete)");
}

int run_cardinality(const std::string& input, const std::string& species, int k, int level,
                    const std::string& format, std::ostream& out) {
  NamedGroupoid g;
  if (!input.empty()) {
    g = groupoid_by_name(input);
  } else if (level >= 0) {
    const TruncatedSimplicialGroupoid X = species.empty()
                                              ? build_S(k, std::max(level, 1))
                                              : build_H(species_by_name(species), k,
                                                        std::max(level, 1));
    g.gpd = X.level[level];
    g.subject = X.name + " level " + std::to_string(level);
  } else {
    throw std::runtime_error("cardinality needs --input kind:N, or --level (with --k)");
  }
  const Rat c = homotopy_cardinality(*g.gpd);
  if (format == "json") {
    json j;
    j["command"] = "cardinality";
    j["input"] = g.subject;
    j["cardinality"] = rat_to_string(c);
    j["groupoid"] = groupoid_to_json(*g.gpd);
    out << j.dump(2) << "\n";
  } else {
    out << "homotopy cardinality of " << g.subject << ": " << rat_to_string(c) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact incidence comultiplications and law checkers for hereditary species"};
  app.require_subcommand(1);

  std::string species, input, format = "text", expect, suite;
  int k = 3, level = -1, nmax = -1, n = 3;

  auto add_common = [&](CLI::App* cmd, bool need_species, bool need_input) {
    auto* s = cmd->add_option("--species", species, "species name (sets or graphs)");
    if (need_species) s->required();
    auto* i = cmd->add_option("--input", input, "inline JSON or a path to a JSON file");
    if (need_input) i->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* delta =
      app.add_subcommand("delta", "two-sided comultiplication of a multiplicative family");
  add_common(delta, true, true);

  auto* delta_a = app.add_subcommand("delta-a", "comultiplication of a layered family");
  add_common(delta_a, true, true);

  auto* coactc =
      app.add_subcommand("coact", "coaction of the multiplicative layer on a layered family");
  add_common(coactc, true, true);

  auto* check = app.add_subcommand("check", "run an exhaustive law checker");
  check->add_option("suite", suite, "which law to check")
      ->required()
      ->check(CLI::IsMember({"species", "bialgebra", "comodule", "decomp", "segal", "culf",
                             "finiteness", "pseudo", "operadic", "schmitt-coincide",
                             "nsur-equiv"}));
  add_common(check, false, false);
  check->add_option("--k", k, "bound on the carrier sizes of chain spaces");
  check->add_option("--level", level, "truncation level of chain spaces");
  check->add_option("--nmax", nmax, "bound on structure sizes");
  check->add_option("--expect", expect, "anticipated outcome")
      ->check(CLI::IsMember({"pass", "fail"}));

  auto* enumc = app.add_subcommand("enumerate", "canonical structures up to a size");
  add_common(enumc, true, false);
  enumc->add_option("--n", n, "maximal carrier size");

  auto* card = app.add_subcommand("cardinality",
                                  "homotopy cardinality of a named groupoid or a space level");
  add_common(card, false, false);
  card->add_option("--k", k, "bound on the carrier sizes of chain spaces");
  card->add_option("--level", level, "which level of the chain space");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*delta) {
      const auto& H = species_by_name(species);
      emit_lincomb(comultiply(H, make_family(H, parse_structures(input, species))), "delta",
                   species, format, out);
      return 0;
    }
    if (*delta_a) {
      const auto& H = species_by_name(species);
      emit_lincomb(comultiply_A(H, make_afamily(H, parse_structures(input, species))), "delta-a",
                   species, format, out);
      return 0;
    }
    if (*coactc) {
      const auto& H = species_by_name(species);
      emit_lincomb(coact_free(H, make_afamily(H, parse_structures(input, species))), "coact",
                   species, format, out);
      return 0;
    }
    if (*check)
      return emit_check(run_check_suite(suite, species, k, level, nmax), suite, species, format,
                        expect, out);
    if (*enumc) {
      const auto& H = species_by_name(species);
      if (n < 0 || n > 8) throw std::runtime_error("enumerate needs 0 <= n <= 8");
      std::vector<HStructure> all;
      for (int size = 0; size <= n; ++size)
        for (const auto& x : iso_class_reps(H, size)) all.push_back(x);
      if (format == "json") {
        json j;
        j["command"] = "enumerate";
        j["species"] = species;
        j["n"] = n;
        json arr = json::array();
        for (const auto& x : all) arr.push_back(structure_to_json(x));
        j["structures"] = arr;
        out << j.dump(2) << "\n";
      } else {
        for (const auto& x : all) out << x.key() << "\n";
      }
      return 0;
    }
    if (*card) return run_cardinality(input, species, k, level, format, out);
    err << "error: no command given\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hsp
