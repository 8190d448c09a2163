#include "gfp/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "gfp/algebra.hpp"
#include "gfp/errors.hpp"
#include "gfp/patterns.hpp"
#include "gfp/quotient.hpp"
#include "gfp/word_ops.hpp"

namespace gfp::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

json vec_json(const FieldVector& v) {
  json out = json::array();
  for (Fp c : v) out.push_back(static_cast<int>(c));
  return out;
}

std::vector<long long> parse_coeff_list(const std::string& text) {
  std::vector<long long> coeffs;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      coeffs.push_back(std::stoll(item));
    } catch (const std::exception&) {
      fail(ErrorCode::BadParameters, "bad coefficient: " + item);
    }
  }
  return coeffs;
}

// accepts a decimal or the literal form logB(X)
double parse_real_or_log(const std::string& text) {
  if (text.rfind("log", 0) == 0) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos ||
        close < open) {
      fail(ErrorCode::BadParameters, "expected logB(X): " + text);
    }
    double base = std::stod(text.substr(3, open - 3));
    double arg = std::stod(text.substr(open + 1, close - open - 1));
    if (base <= 0.0 || base == 1.0 || arg <= 0.0) {
      fail(ErrorCode::BadParameters, "bad logarithm: " + text);
    }
    return std::log(arg) / std::log(base);
  }
  try {
    return std::stod(text);
  } catch (const std::exception&) {
    fail(ErrorCode::BadParameters, "bad real value: " + text);
  }
}

std::string real_str(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << std::fixed << x;
  return s.str();
}

struct Options {
  long long p = 0;
  std::string f;
  bool json_output = false;
  std::uint64_t budget_elems = Budget{}.max_elements;
  std::uint64_t budget_bytes = Budget{}.max_bytes;
  unsigned threads = 0;  // 0 = all cores; enumeration is deterministic
                         // regardless

  bool has_spec() const { return p != 0 && !f.empty(); }

  GroupSpec spec() const {
    if (!has_spec()) {
      fail(ErrorCode::BadParameters,
           "this subcommand needs --p and --f (a_0,...,a_m)");
    }
    return make_spec(p, parse_coeff_list(f));
  }

  Budget budget() const { return Budget{budget_elems, budget_bytes}; }
};

void emit(std::ostream& out, bool as_json, const json& j,
          const std::string& text) {
  if (as_json) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

int cmd_info(const Options& opt, std::ostream& out) {
  GroupSpec spec = opt.spec();
  json j{{"schema", kSchemaVersion}};
  std::ostringstream text;

  j["p"] = spec.p;
  j["m"] = spec.m;
  j["f"] = spec.coeffs_string();
  text << "p: " << spec.p << "\n"
       << "f: " << spec.polynomial_string() << " (coefficients "
       << spec.coeffs_string() << ")\n"
       << "m: " << spec.m << "\n";

  auto faithful = faithfulness_check(spec.rho, spec.omega_row);
  j["faithful"] = faithful.faithful;
  text << "faithful: " << (faithful.faithful ? "yes" : "no") << "\n";

  TorsionReport torsion = torsion_analysis(spec);
  j["torsion"]["is_p_group"] = torsion.is_p_group;
  if (torsion.is_p_group) {
    j["torsion"]["r"] = *torsion.r;
    text << "torsion: yes (p-group), r = " << *torsion.r << "\n";
    GrowthParameters growth = growth_parameters(spec);
    j["growth"] = {{"r", growth.r},
                   {"eta", growth.eta},
                   {"alpha", growth.alpha}};
    text << "growth: eta = " << real_str(growth.eta)
         << ", alpha = " << real_str(growth.alpha) << "\n";
  } else {
    j["torsion"]["witness"] = vec_json(torsion.witness_orbit->members[0]);
    text << "torsion: no, witness orbit through "
         << vec_to_string(torsion.witness_orbit->members[0]) << "\n";
  }

  if (spec.m >= 2) {
    DimensionReport dim =
        hausdorff_dimension(spec, DimensionMode::Theoretical);
    j["dimension_theoretical"] = dim.dimension.str();
    text << "dimension (theoretical): " << dim.dimension.str() << "\n";
  } else {
    j["dimension_theoretical"] = nullptr;
    text << "dimension (theoretical): n/a (needs m >= 2)\n";
  }

  emit(out, opt.json_output, j, text.str());
  return 0;
}

int cmd_orbits(const Options& opt, std::ostream& out) {
  GroupSpec spec = opt.spec();
  OrbitReport report = rho_orbits(spec);
  json j{{"schema", kSchemaVersion}, {"orbits", json::array()}};
  std::ostringstream text;
  for (const Orbit& orbit : report.orbits) {
    json members = json::array();
    for (const FieldVector& v : orbit.members) members.push_back(vec_json(v));
    j["orbits"].push_back(
        {{"members", members}, {"meets_kernel", orbit.meets_kernel}});
    text << "orbit:";
    for (const FieldVector& v : orbit.members) text << " " << vec_to_string(v);
    text << (orbit.meets_kernel ? "  (meets kernel)" : "  (avoids kernel)")
         << "\n";
  }
  emit(out, opt.json_output, j, text.str());
  return 0;
}

int cmd_dimension(const Options& opt, const std::string& mode_name,
                  unsigned max_depth, std::ostream& out) {
  GroupSpec spec = opt.spec();
  DimensionMode mode = DimensionMode::Hybrid;
  if (mode_name == "empirical") mode = DimensionMode::Empirical;
  else if (mode_name == "theoretical") mode = DimensionMode::Theoretical;
  else if (mode_name != "hybrid") {
    fail(ErrorCode::BadParameters, "unknown mode: " + mode_name);
  }
  DimensionReport report =
      hausdorff_dimension(spec, mode, opt.budget(), max_depth);

  json j{{"schema", kSchemaVersion}};
  j["mode"] = mode_name;
  j["s"] = report.s;
  j["r"] = report.r;
  j["t"] = report.t;
  j["r_measured"] = report.r_measured;
  j["t_measured"] = report.t_measured;
  j["dimension"] = report.dimension.str();
  j["matches_closed_form"] = report.matches_closed_form;
  if (!report.note.empty()) j["note"] = report.note;

  std::ostringstream text;
  text << "s = " << report.s << ", r = " << report.r
       << (report.r_measured ? " (measured)" : " (closed form)")
       << ", t = " << report.t
       << (report.t_measured ? " (measured)" : " (closed form)") << "\n"
       << "dimension: " << report.dimension.str() << " = "
       << real_str(report.dimension.value()) << "\n"
       << "matches closed form: "
       << (report.matches_closed_form ? "yes" : "no") << "\n";
  if (!report.note.empty()) text << "note: " << report.note << "\n";

  emit(out, opt.json_output, j, text.str());
  return 0;
}

int cmd_indices(const Options& opt, unsigned max_depth, std::ostream& out) {
  GroupSpec spec = opt.spec();
  IndexSequence seq = index_sequence(spec, max_depth, opt.budget());
  json j{{"schema", kSchemaVersion}, {"p", spec.p}, {"nus", seq.nus}};
  std::ostringstream text;
  for (std::size_t i = 0; i < seq.nus.size(); ++i) {
    text << "nu_" << (i + 1) << " = " << seq.nus[i] << "  ([G:G_" << (i + 1)
         << "] = " << spec.p << "^" << seq.nus[i] << ")\n";
  }
  if (seq.nus.size() < max_depth) {
    j["truncated_at"] = seq.nus.size();
    text << "(budget exhausted after depth " << seq.nus.size() << ")\n";
  }
  emit(out, opt.json_output, j, text.str());
  return 0;
}

int cmd_enumerate(const Options& opt, unsigned depth, const std::string& path,
                  std::ostream& out) {
  GroupSpec spec = opt.spec();
  QuotientTable table = enumerate_quotient(spec, depth, opt.budget());
  if (path.empty() || path == "-") {
    write_quotient(out, table, spec);
  } else {
    std::ofstream file(path);
    if (!file) fail(ErrorCode::BadParameters, "cannot open " + path);
    write_quotient(file, table, spec);
    out << "wrote " << table.size() << " elements to " << path << "\n";
  }
  return 0;
}

int cmd_order(const Options& opt, const std::string& word_text,
              std::ostream& out) {
  GroupSpec spec = opt.spec();
  Word w = parse_word(spec, word_text);
  OrderResult result = element_order(spec, w);
  json j{{"schema", kSchemaVersion}, {"word", format_word(w)}};
  std::ostringstream text;
  switch (result.kind) {
    case OrderResult::Kind::Finite:
      j["kind"] = "finite";
      j["order"] = result.order;
      text << "order: " << result.order << "\n";
      break;
    case OrderResult::Kind::Infinite: {
      j["kind"] = "infinite";
      json cycle = json::array();
      for (const Word& c : result.witness) cycle.push_back(format_word(c));
      j["witness"] = cycle;
      text << "order: infinite (descent cycle:";
      for (const Word& c : result.witness) text << " " << format_word(c);
      text << ")\n";
      break;
    }
    case OrderResult::Kind::Unknown:
      j["kind"] = "unknown";
      j["note"] = result.note;
      text << "order: unknown (" << result.note << ")\n";
      break;
  }
  emit(out, opt.json_output, j, text.str());
  return 0;
}

int cmd_identity(const Options& opt, const std::string& word_text,
                 std::ostream& out) {
  GroupSpec spec = opt.spec();
  Word w = parse_word(spec, word_text);
  bool trivial = is_identity(spec, w);
  json j{{"schema", kSchemaVersion},
         {"word", format_word(w)},
         {"identity", trivial}};
  emit(out, opt.json_output, j,
       std::string("identity: ") + (trivial ? "yes" : "no") + "\n");
  return 0;
}

int cmd_act(const Options& opt, const std::string& word_text,
            const std::string& treeword, std::ostream& out) {
  GroupSpec spec = opt.spec();
  Word w = parse_word(spec, word_text);
  std::string image = act(spec, w, treeword);
  json j{{"schema", kSchemaVersion}, {"input", treeword}, {"image", image}};
  emit(out, opt.json_output, j, image + "\n");
  return 0;
}

json portrait_json(const Portrait& g) {
  json acts = json::array();
  for (Fp a : g.activities()) acts.push_back(static_cast<int>(a));
  return json{{"p", g.p()}, {"depth", g.depth()}, {"activities", acts}};
}

int cmd_portrait(const Options& opt, const std::string& word_text,
                 unsigned depth, std::ostream& out) {
  GroupSpec spec = opt.spec();
  Word w = parse_word(spec, word_text);
  out << portrait_json(word_portrait(spec, w, depth)).dump(2) << "\n";
  return 0;
}

Portrait portrait_from_json(const json& j) {
  unsigned p = j.at("p").get<unsigned>();
  unsigned depth = j.at("depth").get<unsigned>();
  std::vector<Fp> acts;
  for (const auto& a : j.at("activities")) {
    acts.push_back(static_cast<Fp>(a.get<unsigned>()));
  }
  return Portrait(p, depth, std::move(acts));
}

PatternSet load_patterns(const Options& opt, const std::string& pattern_file) {
  if (!pattern_file.empty()) {
    std::ifstream in(pattern_file);
    if (!in) {
      fail(ErrorCode::BadParameters, "cannot open " + pattern_file);
    }
    return read_pattern_file(in, opt.budget());
  }
  return pattern_group(opt.spec(), opt.budget());
}

int cmd_patterns_export(const Options& opt, const std::string& path,
                        std::ostream& out) {
  PatternSet P = pattern_group(opt.spec(), opt.budget());
  if (path.empty() || path == "-") {
    write_pattern_file(out, P);
  } else {
    std::ofstream file(path);
    if (!file) fail(ErrorCode::BadParameters, "cannot open " + path);
    write_pattern_file(file, P);
    out << "wrote " << P.size() << " patterns to " << path << "\n";
  }
  return 0;
}

int cmd_patterns_count(const Options& opt, const std::string& pattern_file,
                       unsigned depth, std::ostream& out) {
  PatternSet P = load_patterns(opt, pattern_file);
  mpz_class count = count_window_valid(P, depth);
  json j{{"schema", kSchemaVersion},
         {"depth", depth},
         {"count", count.get_str()}};
  std::ostringstream text;
  text << "window-valid portraits at depth " << depth << ": "
       << count.get_str() << "\n";
  emit(out, opt.json_output, j, text.str());
  return 0;
}

int cmd_patterns_check(const Options& opt, const std::string& pattern_file,
                       const std::string& portrait_path, unsigned depth,
                       std::ostream& out) {
  PatternSet P = load_patterns(opt, pattern_file);
  if (!portrait_path.empty()) {
    std::ifstream in(portrait_path);
    if (!in) {
      fail(ErrorCode::BadParameters, "cannot open " + portrait_path);
    }
    json pj = json::parse(in);
    Portrait g = portrait_from_json(pj);
    bool valid = window_valid(P, g);
    json j{{"schema", kSchemaVersion}, {"window_valid", valid}};
    emit(out, opt.json_output, j,
         std::string("window-valid: ") + (valid ? "yes" : "no") + "\n");
    return valid ? 0 : 1;
  }
  if (depth == 0) {
    fail(ErrorCode::BadParameters,
         "patterns check needs --portrait FILE or --depth N");
  }
  GroupSpec spec = opt.spec();
  QuotientTable table = enumerate_quotient(spec, depth, opt.budget());
  CrossCheckReport report = cross_check_membership_with(P, table);
  json j{{"schema", kSchemaVersion},
         {"agree", report.agree},
         {"window_valid_count", report.window_valid_count.get_str()},
         {"quotient_size", report.quotient_size},
         {"mismatches", report.mismatches.size()},
         {"note", report.note}};
  std::ostringstream text;
  text << (report.agree ? "agree" : "DISAGREE") << ": " << report.note
       << "\n";
  emit(out, opt.json_output, j, text.str());
  return report.agree ? 0 : 1;
}

int emit_check(const Options& opt, const std::string& name,
               const CheckReport& report, std::ostream& out) {
  json j{{"schema", kSchemaVersion},
         {"check", name},
         {"pass", report.pass},
         {"checked", report.checked},
         {"detail", report.detail}};
  std::ostringstream text;
  text << name << ": " << (report.pass ? "PASS" : "FAIL") << " ("
       << report.detail << ")\n";
  emit(out, opt.json_output, j, text.str());
  return report.pass ? 0 : 1;
}

int cmd_general_dim(const Options& opt, long long k, long long q,
                    const std::string& eps, const std::string& r,
                    const std::string& t, long long s, unsigned curve_depth,
                    std::ostream& out) {
  double eps_v = parse_real_or_log(eps);
  double r_v = parse_real_or_log(r);
  double t_v = parse_real_or_log(t);
  GeneralDimensionResult result = general_dimension(k, q, eps_v, r_v, t_v, s);
  json j{{"schema", kSchemaVersion},
         {"k", k},
         {"q", q},
         {"epsilon", eps_v},
         {"r", r_v},
         {"t", t_v},
         {"s", s},
         {"dimension", result.dimension}};
  std::ostringstream text;
  text << "dimension: " << real_str(result.dimension) << "\n";
  if (curve_depth > 0) {
    json curve = json::object();
    for (long long n = s; n <= static_cast<long long>(curve_depth); ++n) {
      double e = result.index_exponent(n);
      curve[std::to_string(n)] = e;
      text << "log_q [H:H_" << n << "] = " << real_str(e) << "\n";
    }
    j["index_exponents"] = curve;
  }
  emit(out, opt.json_output, j, text.str());
  return 0;
}

}  // namespace

CliResult run(const std::vector<std::string>& args) {
  CliResult result;
  std::ostringstream out, err;

  Options opt;
  CLI::App app{"self-similar groups of p-adic tree automorphisms"};
  app.name("gfp");
  app.add_option("--p", opt.p, "prime p");
  app.add_option("--f", opt.f,
                 "polynomial coefficients a_0,...,a_m (leading 1 included)");
  app.add_flag("--json", opt.json_output, "structured output");
  app.add_option("--budget-elems", opt.budget_elems,
                 "element budget for enumeration");
  app.add_option("--budget-bytes", opt.budget_bytes,
                 "memory budget for enumeration");
  app.add_option("--threads", opt.threads,
                 "worker threads (results do not depend on this)");
  app.require_subcommand(1);

  auto* info = app.add_subcommand("info", "spec summary");

  auto* orbits = app.add_subcommand("orbits", "rho-orbits of B");

  std::string dim_mode = "hybrid";
  unsigned dim_max_depth = 0;
  auto* dimension =
      app.add_subcommand("dimension", "Hausdorff dimension of the closure");
  dimension->add_option("--mode", dim_mode,
                        "empirical | theoretical | hybrid");
  dimension->add_option("--max-depth", dim_max_depth,
                        "deepest level to enumerate");

  unsigned indices_depth = 0;
  auto* indices = app.add_subcommand("indices", "index sequence nu_n");
  indices->add_option("--max-depth", indices_depth, "compute nu_1..nu_N")
      ->required();

  unsigned enum_depth = 0;
  std::string enum_out;
  auto* enumerate = app.add_subcommand("enumerate", "export G/G_n");
  enumerate->add_option("--depth", enum_depth, "level n")->required();
  enumerate->add_option("--out", enum_out, "output file (- for stdout)");

  std::string order_word;
  auto* order = app.add_subcommand("order", "order of a word");
  order->add_option("--word", order_word, "word over the generators")
      ->required();

  std::string identity_word;
  auto* identity = app.add_subcommand("identity", "word problem");
  identity->add_option("--word", identity_word, "word over the generators")
      ->required();

  std::string act_word, act_on;
  auto* act_cmd = app.add_subcommand("act", "image of a tree word");
  act_cmd->add_option("--word", act_word, "word over the generators")
      ->required();
  act_cmd->add_option("--on", act_on, "tree word (digit string)")->required();

  std::string portrait_word;
  unsigned portrait_depth = 0;
  auto* portrait = app.add_subcommand("portrait", "portrait of a word");
  portrait->add_option("--word", portrait_word, "word over the generators")
      ->required();
  portrait->add_option("--depth", portrait_depth, "portrait depth")
      ->required();

  auto* patterns = app.add_subcommand("patterns", "finitely-constrained side");
  patterns->require_subcommand(1);
  std::string patterns_out, patterns_file, patterns_portrait;
  unsigned patterns_depth = 0;
  auto* patterns_export =
      patterns->add_subcommand("export", "write the pattern file");
  patterns_export->add_option("--out", patterns_out,
                              "output file (- for stdout)");
  auto* patterns_count =
      patterns->add_subcommand("count", "count window-valid portraits");
  patterns_count->add_option("--depth", patterns_depth, "portrait depth")
      ->required();
  patterns_count->add_option("--pattern-file", patterns_file,
                             "load patterns from file instead of the spec");
  auto* patterns_check = patterns->add_subcommand(
      "check", "window-validity of a portrait, or cross-check vs the "
               "quotient at --depth");
  patterns_check->add_option("--portrait", patterns_portrait,
                             "portrait JSON file");
  patterns_check->add_option("--depth", patterns_depth,
                             "cross-check against G/G_n");
  patterns_check->add_option("--pattern-file", patterns_file,
                             "load patterns from file instead of the spec");

  auto* verify = app.add_subcommand("verify", "structural verifications");
  verify->require_subcommand(1);
  unsigned verify_depth = 0, verify_level = 0;
  auto* v_branch_gens = verify->add_subcommand(
      "branch-generators", "portrait identities behind the branching");
  v_branch_gens->add_option("--depth", verify_depth, "portrait depth")
      ->required();
  auto* v_branching = verify->add_subcommand(
      "branching", "psi(G_{n+1}) contains G_n x ... x G_n");
  v_branching->add_option("--depth", verify_depth, "section depth d")
      ->required();
  v_branching->add_option("--level", verify_level,
                          "stabilizer level n (default m+1)");
  auto* v_selfrep =
      verify->add_subcommand("selfrep", "self-replication and transitivity");
  v_selfrep->add_option("--depth", verify_depth, "level n")->required();
  auto* v_abelian =
      verify->add_subcommand("abelian", "G/G' = A x B at finite depth");
  v_abelian->add_option("--depth", verify_depth, "quotient depth")
      ->required();
  auto* v_wreath =
      verify->add_subcommand("wreath", "G/G_n is the full wreath quotient");
  v_wreath->add_option("--depth", verify_depth, "quotient depth (try m+1)")
      ->required();

  long long gd_k = 0, gd_q = 0, gd_s = 0;
  std::string gd_eps, gd_r, gd_t;
  unsigned gd_curve = 0;
  auto* general_dim = app.add_subcommand(
      "general-dim", "dimension of a finitely constrained group from its "
                     "branching data");
  general_dim->add_option("--k", gd_k, "tree arity")->required();
  general_dim->add_option("--q", gd_q, "order of the vertex group")
      ->required();
  general_dim->add_option("--eps", gd_eps, "[H:H_1] = q^eps")->required();
  general_dim->add_option("--r", gd_r, "[H:H_s] = q^(r/(k-1))")->required();
  general_dim->add_option("--t", gd_t,
                          "[HxH..xH : psi(H_1)] = q^t (decimal or logB(X))")
      ->required();
  general_dim->add_option("--s", gd_s, "branching level")->required();
  general_dim->add_option("--curve-depth", gd_curve,
                          "also print log_q [H:H_n] for n = s..N");

  std::vector<const char*> argv;
  argv.push_back("gfp");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (info->parsed()) {
      result.exit_code = cmd_info(opt, out);
    } else if (orbits->parsed()) {
      result.exit_code = cmd_orbits(opt, out);
    } else if (dimension->parsed()) {
      result.exit_code = cmd_dimension(opt, dim_mode, dim_max_depth, out);
    } else if (indices->parsed()) {
      result.exit_code = cmd_indices(opt, indices_depth, out);
    } else if (enumerate->parsed()) {
      result.exit_code = cmd_enumerate(opt, enum_depth, enum_out, out);
    } else if (order->parsed()) {
      result.exit_code = cmd_order(opt, order_word, out);
    } else if (identity->parsed()) {
      result.exit_code = cmd_identity(opt, identity_word, out);
    } else if (act_cmd->parsed()) {
      result.exit_code = cmd_act(opt, act_word, act_on, out);
    } else if (portrait->parsed()) {
      result.exit_code = cmd_portrait(opt, portrait_word, portrait_depth, out);
    } else if (patterns->parsed()) {
      if (patterns_export->parsed()) {
        result.exit_code = cmd_patterns_export(opt, patterns_out, out);
      } else if (patterns_count->parsed()) {
        result.exit_code =
            cmd_patterns_count(opt, patterns_file, patterns_depth, out);
      } else {
        result.exit_code = cmd_patterns_check(opt, patterns_file,
                                              patterns_portrait,
                                              patterns_depth, out);
      }
    } else if (verify->parsed()) {
      GroupSpec spec = opt.spec();
      Budget budget = opt.budget();
      if (v_branch_gens->parsed()) {
        result.exit_code =
            emit_check(opt, "branch-generators",
                       verify_branch_generators(spec, verify_depth), out);
      } else if (v_branching->parsed()) {
        unsigned level = verify_level
                             ? verify_level
                             : static_cast<unsigned>(spec.m) + 1;
        result.exit_code = emit_check(
            opt, "branching",
            branching_check(spec, level, verify_depth, budget), out);
      } else if (v_selfrep->parsed()) {
        result.exit_code =
            emit_check(opt, "selfrep",
                       self_replicating_check(spec, verify_depth, budget),
                       out);
      } else if (v_abelian->parsed()) {
        result.exit_code = emit_check(
            opt, "abelian", abelianization_check(spec, verify_depth, budget),
            out);
      } else {
        result.exit_code = emit_check(
            opt, "wreath", full_wreath_check(spec, verify_depth, budget),
            out);
      }
    } else if (general_dim->parsed()) {
      result.exit_code = cmd_general_dim(opt, gd_k, gd_q, gd_eps, gd_r, gd_t,
                                         gd_s, gd_curve, out);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    result.exit_code = 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    result.exit_code = 2;
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    result.exit_code = e.code() == ErrorCode::BudgetExceeded ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 2;
  }

  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace gfp::cli
