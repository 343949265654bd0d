#include "vaisman/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <regex>

#include <CLI11.hpp>

#include "vaisman/json_io.hpp"
#include "vaisman/parser.hpp"
#include "vaisman/random.hpp"

namespace vaisman::cli {

namespace {

using io::Json;

/// Raised for bad option values found after CLI11 parsing succeeded.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BracketKind kind_option(const std::string& name) {
  const auto kind = parse_bracket_kind(name);
  if (!kind) throw UsageError("unknown bracket kind '" + name + "' (expected dorfman, d or c)");
  return *kind;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

GenSection load_section(const std::string& path) { return io::section_from_json(io::read_json_file(path)); }

void require_same_dim(const std::vector<GenSection>& sections) {
  for (const auto& e : sections) {
    if (!(e.space() == sections.front().space())) {
      throw SpaceMismatch("input sections have different dimensions");
    }
  }
}

// ------------------------------------------------------------------ bracket

struct BracketArgs {
  std::string kind = "d";
  std::vector<std::string> files;
};

int run_bracket(const BracketArgs& a, std::ostream& out) {
  const BracketKind kind = kind_option(a.kind);
  const GenSection e1 = load_section(a.files.at(0));
  const GenSection e2 = load_section(a.files.at(1));
  require_same_dim({e1, e2});
  emit(out, Json{{"bracket", std::string(to_string(kind))},
                 {"e1", io::to_json(e1)},
                 {"e2", io::to_json(e2)},
                 {"result", io::to_json(bracket(kind, e1, e2))}});
  return kVerified;
}

// ------------------------------------------------------------------ check

struct CheckArgs {
  std::string kind = "d";
  std::string axioms = "courant";
  std::optional<std::size_t> random;
  std::uint64_t seed = 0;
  std::size_t dim = 2;
  std::uint32_t deg = 2;
  bool tilde_free = false;
  std::optional<std::string> witness;
  std::vector<std::string> files;
};

std::vector<ResidualReport> run_axioms(const std::string& axioms, BracketKind kind,
                                       const GenSection& e1, const GenSection& e2,
                                       const GenSection& e3, const Poly& f) {
  return axioms == "courant" ? check_courant(kind, e1, e2, e3, f) : check_vaisman(kind, e1, e2, e3, f);
}

Json inputs_json(const GenSection& e1, const GenSection& e2, const GenSection& e3, const Poly& f) {
  return Json{{"e1", io::to_json(e1)},
              {"e2", io::to_json(e2)},
              {"e3", io::to_json(e3)},
              {"f", Json{{"dim", f.space().dim()}, {"poly", f.to_string()}}}};
}

// Counts the probe residual of the anchor axiom as part of the verdict.
bool report_passes(const ResidualReport& r) {
  return r.is_zero && (!r.probe_residual || r.probe_residual->is_zero());
}

int run_check(const CheckArgs& a, std::ostream& out) {
  const BracketKind kind = kind_option(a.kind);
  if (a.axioms != "courant" && a.axioms != "vaisman") {
    throw UsageError("--axioms must be courant or vaisman");
  }
  const int modes = (a.random ? 1 : 0) + (a.witness ? 1 : 0) + (a.files.empty() ? 0 : 1);
  if (modes != 1) throw UsageError("check needs exactly one of --random N, --witness NAME, or e1 e2 e3 f");

  if (a.random) {
    if (a.dim == 0 || a.dim > 3) throw UsageError("--dim must be 1, 2 or 3");
    const DoubledSpace space(a.dim);
    RandomPolyOptions opts;
    opts.max_degree = a.deg;
    opts.tilde_free = a.tilde_free;
    Rng rng(a.seed);
    std::map<std::string, std::size_t> failures;
    Json failing = Json::array();
    for (std::size_t trial = 0; trial < *a.random; ++trial) {
      const GenSection e1 = random_section(rng, space, opts);
      const GenSection e2 = random_section(rng, space, opts);
      const GenSection e3 = random_section(rng, space, opts);
      const Poly f = random_poly(rng, space, opts);
      for (const auto& r : run_axioms(a.axioms, kind, e1, e2, e3, f)) {
        failures.try_emplace(r.axiom, 0);
        if (report_passes(r)) continue;
        ++failures[r.axiom];
        Json entry = io::to_json(r);
        entry["trial"] = trial;
        entry["inputs"] = inputs_json(e1, e2, e3, f);
        failing.push_back(std::move(entry));
      }
    }
    Json summary = Json::array();
    bool passed = true;
    for (const auto& [axiom, count] : failures) {
      summary.push_back(Json{{"axiom", axiom}, {"failures", count}});
      passed = passed && count == 0;
    }
    emit(out, Json{{"bracket", std::string(to_string(kind))},
                   {"axioms", a.axioms},
                   {"seed", a.seed},
                   {"dim", a.dim},
                   {"deg", a.deg},
                   {"tilde_free", a.tilde_free},
                   {"trials", *a.random},
                   {"passed", passed},
                   {"summary", summary},
                   {"failures", failing}});
    return passed ? kVerified : kViolation;
  }

  std::optional<PinnedWitness> w;
  if (a.witness) {
    w = find_pinned_witness(*a.witness);
    if (!w) throw UsageError("unknown witness '" + *a.witness + "'");
  } else {
    if (a.files.size() != 4) throw UsageError("explicit check needs files e1 e2 e3 f");
    const GenSection e1 = load_section(a.files[0]);
    const GenSection e2 = load_section(a.files[1]);
    const GenSection e3 = load_section(a.files[2]);
    require_same_dim({e1, e2, e3});
    const Poly f = io::poly_from_json(io::read_json_file(a.files[3]), e1.space());
    w = PinnedWitness{"input", e1, e2, e3, f};
  }
  Json reports = Json::array();
  bool passed = true;
  for (const auto& r : run_axioms(a.axioms, kind, w->e1, w->e2, w->e3, w->f)) {
    Json entry = io::to_json(r);
    if (!report_passes(r)) {
      passed = false;
      entry["inputs"] = inputs_json(w->e1, w->e2, w->e3, w->f);
    }
    reports.push_back(std::move(entry));
  }
  emit(out, reports);
  return passed ? kVerified : kViolation;
}

// ------------------------------------------------------------------ reduce

struct ReduceArgs {
  std::vector<std::string> files;
};

int run_reduce(const ReduceArgs& a, std::ostream& out) {
  if (a.files.size() == 1) {
    const GenSection e = load_section(a.files[0]);
    emit(out, Json{{"input", io::to_json(e)}, {"projected", io::to_json(strong_constraint_project(e))}});
    return kVerified;
  }
  if (a.files.size() != 2) throw UsageError("reduce takes one section, or two for the bracket comparison");
  const GenSection e1 = load_section(a.files[0]);
  const GenSection e2 = load_section(a.files[1]);
  require_same_dim({e1, e2});
  const ResidualReport r = check_reduction(e1, e2);
  emit(out, io::to_json(r));
  return r.is_zero ? kVerified : kViolation;
}

// ------------------------------------------------------------------ rack

struct RackArgs {
  std::optional<std::string> verify_file;
  std::optional<std::string> qybe_file;
  std::size_t n = 0;
  bool pointed = false;
};

Json read_table_json(const std::optional<std::string>& path, std::istream& in) {
  if (path && *path != "-") return io::read_json_file(*path);
  try {
    return Json::parse(std::string(std::istreambuf_iterator<char>(in), {}));
  } catch (const Json::parse_error& e) {
    throw io::SchemaError(std::string("malformed JSON on standard input: ") + e.what());
  }
}

int run_rack_verify(const RackArgs& a, std::ostream& out) {
  const rack::RackTable t = io::rack_from_json(read_table_json(a.verify_file, std::cin));
  const rack::RackVerdict v = rack::verify_rack(t);
  Json j = io::to_json(v);
  j["table"] = io::to_json(t);
  emit(out, j);
  const bool ok = v.is_rack && (!t.unit() || v.is_pointed);
  return ok ? kVerified : kViolation;
}

int run_rack_qybe(const RackArgs& a, std::ostream& out) {
  const rack::RackTable t = io::rack_from_json(read_table_json(a.qybe_file, std::cin));
  const rack::QybeVerdict v = rack::yang_baxter_check(t);
  Json j = io::to_json(v);
  j["table"] = io::to_json(t);
  emit(out, j);
  return v.satisfies_qybe ? kVerified : kViolation;
}

int run_rack_enumerate(const RackArgs& a, std::ostream& out) {
  if (a.n == 0 || a.n > rack::kMaxEnumerationSize) {
    throw UsageError("--n must be between 1 and " + std::to_string(rack::kMaxEnumerationSize));
  }
  const auto racks = rack::enumerate_racks(a.n, a.pointed);
  Json list = Json::array();
  std::size_t quandles = 0;
  for (const auto& t : racks) {
    list.push_back(io::to_json(t));
    if (rack::verify_rack(t).is_quandle) ++quandles;
  }
  emit(out, Json{{"n", a.n}, {"pointed", a.pointed}, {"count", racks.size()},
                 {"quandle_count", quandles}, {"racks", list}});
  return kVerified;
}

// ------------------------------------------------------------------ exp

struct ExpArgs {
  std::string kind = "d";
  std::uint32_t order = 3;
  std::optional<int> identity;
  std::vector<std::string> files;
};

int run_exp(const ExpArgs& a, std::ostream& out) {
  const BracketKind kind = kind_option(a.kind);
  if (a.files.size() < 2 || a.files.size() > 4) throw UsageError("exp takes e1 e2 [e3] [f]");
  std::vector<GenSection> sections;
  std::optional<Json> function_payload;
  for (const auto& path : a.files) {
    Json j = io::read_json_file(path);
    if (io::is_function_payload(j)) {
      if (function_payload) throw UsageError("exp takes at most one function file");
      function_payload = std::move(j);
    } else {
      if (function_payload) throw UsageError("the function file must come last");
      sections.push_back(io::section_from_json(j));
    }
  }
  if (sections.size() < 2 || sections.size() > 3) throw UsageError("exp needs two or three sections");
  require_same_dim(sections);
  const DoubledSpace space = sections.front().space();
  const std::optional<Poly> f =
      function_payload ? std::optional<Poly>(io::poly_from_json(*function_payload, space)) : std::nullopt;
  const bool have_e3 = sections.size() == 3;

  std::vector<RackIdentity> ids;
  if (a.identity) {
    if (*a.identity < 1 || *a.identity > 4) throw UsageError("--identity must be 1, 2, 3 or 4");
    ids.push_back(static_cast<RackIdentity>(*a.identity));
  } else {
    if (have_e3) ids.push_back(RackIdentity::self_distributive_sections);
    if (f) ids.push_back(RackIdentity::self_distributive_functions);
    if (f) ids.push_back(RackIdentity::module_compatibility);
    if (have_e3) ids.push_back(RackIdentity::metric_compatibility);
  }
  for (const auto id : ids) {
    const bool needs_e3 = id == RackIdentity::self_distributive_sections ||
                          id == RackIdentity::metric_compatibility;
    if (needs_e3 && !have_e3) throw UsageError("identity " + to_string(id) + " needs e3");
    if (!needs_e3 && !f) throw UsageError("identity " + to_string(id) + " needs a function f");
  }
  if (a.order < 1) throw UsageError("--order must be at least 1");

  Json j{{"bracket", std::string(to_string(kind))}, {"order", a.order}};
  j["exp_ad"] = io::to_json(exp_ad(kind, sections[0], sections[1], a.order));
  if (f) j["exp_anchor"] = io::to_json(exp_anchor(kind, sections[0], *f, a.order));
  if (!ids.empty() && a.order < 2) throw UsageError("identity checks need --order of at least 2");
  Json reports = Json::array();
  bool holds = true;
  const GenSection e3 = have_e3 ? sections[2] : GenSection(space);
  const Poly fp = f ? *f : Poly(space);
  for (const auto id : ids) {
    const GradedReport r = check_formal_rack_identity(kind, id, sections[0], sections[1], e3, fp, a.order);
    holds = holds && r.holds();
    reports.push_back(io::to_json(r));
  }
  j["identities"] = reports;
  emit(out, j);
  return holds ? kVerified : kViolation;
}

// ------------------------------------------------------------------ sigma

struct SigmaArgs {
  std::string model = "courant";
  std::size_t dim = 1;
  std::string grid = "2x2";
  std::string spacing = "1,1";
  bool all_pairs = false;
};

int run_sigma(const SigmaArgs& a, std::ostream& out) {
  const sigma::Model model = sigma::parse_model(a.model);
  static const std::regex grid_re(R"((\d+)x(\d+))");
  std::smatch m;
  if (!std::regex_match(a.grid, m, grid_re)) throw UsageError("--grid must look like L1xL2");
  const std::size_t l1 = std::stoul(m[1]);
  const std::size_t l2 = std::stoul(m[2]);
  if (l1 == 0 || l2 == 0 || l1 > 8 || l2 > 8) throw UsageError("grid sides must be between 1 and 8");
  if (a.dim == 0 || a.dim > 3) throw UsageError("--dim must be 1, 2 or 3");
  const auto comma = a.spacing.find(',');
  if (comma == std::string::npos) throw UsageError("--spacing must look like h1,h2");
  Rational h1;
  Rational h2;
  try {
    h1 = Rational(a.spacing.substr(0, comma));
    h2 = Rational(a.spacing.substr(comma + 1));
  } catch (const std::invalid_argument&) {
    throw UsageError("--spacing entries must be rationals p/q");
  }
  h1.canonicalize();
  h2.canonicalize();
  if (sgn(h1) <= 0 || sgn(h2) <= 0) throw UsageError("--spacing entries must be positive");
  const sigma::LatticePhaseSpace ps(model, a.dim, l1, l2, h1, h2);
  const auto report = sigma::constraint_algebra_report(ps);
  emit(out, io::to_json(report, ps, a.all_pairs));
  return report.first_class ? kVerified : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of doubled-geometry brackets, racks and sigma-model constraints",
               "vaisman"};
  app.require_subcommand(1);

  BracketArgs bracket_args;
  auto* bracket_cmd = app.add_subcommand("bracket", "Bracket of two sections");
  bracket_cmd->add_option("--kind", bracket_args.kind, "dorfman, d or c")->capture_default_str();
  bracket_cmd->add_option("files", bracket_args.files, "e1.json e2.json")->required()->expected(2);

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Axiom residuals for a bracket");
  check_cmd->add_option("--bracket", check_args.kind, "dorfman, d or c")->capture_default_str();
  check_cmd->add_option("--axioms", check_args.axioms, "courant (five axioms) or vaisman (two)")
      ->capture_default_str();
  check_cmd->add_option("--random", check_args.random, "number of random triples");
  check_cmd->add_option("--seed", check_args.seed, "seed for --random")->capture_default_str();
  check_cmd->add_option("--dim", check_args.dim, "dimension D for --random")->capture_default_str();
  check_cmd->add_option("--deg", check_args.deg, "maximum degree for --random")->capture_default_str();
  check_cmd->add_flag("--tilde-free", check_args.tilde_free, "random data without tilde coordinates");
  check_cmd->add_option("--witness", check_args.witness, "pinned witness name (pinned-1 ... pinned-4)");
  check_cmd->add_option("files", check_args.files, "e1.json e2.json e3.json f.json");

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Strong-constraint projection");
  reduce_cmd->add_option("files", reduce_args.files, "section.json [second.json]")->required();

  RackArgs rack_args;
  auto* rack_cmd = app.add_subcommand("rack", "Finite racks");
  rack_cmd->require_subcommand(1);
  auto* verify_cmd = rack_cmd->add_subcommand("verify", "Rack axioms for a table");
  verify_cmd->add_option("file", rack_args.verify_file, "table JSON (stdin when omitted)");
  auto* enumerate_cmd = rack_cmd->add_subcommand("enumerate", "All racks up to isomorphism");
  enumerate_cmd->add_option("--n", rack_args.n, "set size (1..4)")->required();
  enumerate_cmd->add_flag("--pointed", rack_args.pointed, "only racks with a unit");
  auto* qybe_cmd = rack_cmd->add_subcommand("qybe", "Set-theoretic Yang-Baxter check");
  qybe_cmd->add_option("file", rack_args.qybe_file, "table JSON (stdin when omitted)");

  ExpArgs exp_args;
  auto* exp_cmd = app.add_subcommand("exp", "Formal exponential and rack identities");
  exp_cmd->add_option("--kind", exp_args.kind, "dorfman, d or c")->capture_default_str();
  exp_cmd->add_option("--order", exp_args.order, "truncation order N")->capture_default_str();
  exp_cmd->add_option("--identity", exp_args.identity, "check only this identity (1..4)");
  exp_cmd->add_option("files", exp_args.files, "e1.json e2.json [e3.json] [f.json]")->required();

  SigmaArgs sigma_args;
  auto* sigma_cmd = app.add_subcommand("sigma", "Lattice sigma-model constraint algebra");
  sigma_cmd->add_option("--model", sigma_args.model, "courant or doubled")->capture_default_str();
  sigma_cmd->add_option("--dim", sigma_args.dim, "target dimension D")->capture_default_str();
  sigma_cmd->add_option("--grid", sigma_args.grid, "periodic grid L1xL2")->capture_default_str();
  sigma_cmd->add_option("--spacing", sigma_args.spacing, "lattice spacings h1,h2")->capture_default_str();
  sigma_cmd->add_flag("--all-pairs", sigma_args.all_pairs, "also list pairs with zero bracket");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (bracket_cmd->parsed()) return run_bracket(bracket_args, out);
    if (check_cmd->parsed()) return run_check(check_args, out);
    if (reduce_cmd->parsed()) return run_reduce(reduce_args, out);
    if (verify_cmd->parsed()) return run_rack_verify(rack_args, out);
    if (enumerate_cmd->parsed()) return run_rack_enumerate(rack_args, out);
    if (qybe_cmd->parsed()) return run_rack_qybe(rack_args, out);
    if (exp_cmd->parsed()) return run_exp(exp_args, out);
    if (sigma_cmd->parsed()) return run_sigma(sigma_args, out);
  } catch (const ParseError& e) {
    err << "error: polynomial parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace vaisman::cli
