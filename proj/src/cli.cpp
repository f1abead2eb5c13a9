#include "cyclosvp/cli.hpp"

#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cyclosvp/decimal.hpp"
#include "cyclosvp/error.hpp"
#include "cyclosvp/idealsvp.hpp"
#include "cyclosvp/json_io.hpp"

namespace cyclosvp {

namespace {

Integer parse_integer(const std::optional<std::string>& text, const std::string& flag) {
  if (!text) throw DomainError("missing_argument", "--" + flag + " is required");
  const std::string& s = *text;
  const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
    throw DomainError("invalid_integer", "--" + flag + " must be a decimal integer");
  }
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

struct TableClass {
  int modulus;
  int residue;
  std::string label;
};

const std::vector<TableClass>& covered_classes() {
  static const std::vector<TableClass> classes = {
      {8, 3, "3 mod 8"}, {8, 5, "5 mod 8"}, {16, 7, "7 mod 16"}, {16, 9, "9 mod 16"}};
  return classes;
}

TableClass parse_class(std::string s) {
  std::string compact;
  for (char c : s) {
    if (c != ' ') compact += c;
  }
  for (const TableClass& c : covered_classes()) {
    if (compact == std::to_string(c.residue) + "mod" + std::to_string(c.modulus)) return c;
  }
  throw DomainError("unknown_class", "classes are 3mod8, 5mod8, 7mod16, 9mod16");
}

bool in_class(const Integer& p, const TableClass& c) { return p % c.modulus == c.residue; }

int default_level(const ResidueClass& rc) { return rc.supported ? class_minimum_level(rc) : 2; }

struct TableRow {
  Integer p;
  std::string label;
  Lambda1Result result;
};

std::string csv_field(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

int cmd_table(const CliConfig& cfg, std::ostream& out) {
  const Integer pmax = parse_integer(cfg.pmax, "pmax");
  if (pmax < 3) throw DomainError("invalid_pmax", "--pmax must be at least 3");
  if (cfg.format != "json" && cfg.format != "csv") throw DomainError("invalid_format", "--format is json or csv");
  std::vector<TableClass> classes;
  const bool explicit_classes = cfg.classes.has_value();
  if (explicit_classes) {
    for (const std::string& c : *cfg.classes) {
      if (!c.empty()) classes.push_back(parse_class(c));
    }
  } else {
    classes = covered_classes();
  }

  std::vector<std::pair<Integer, TableClass>> work;
  for (Integer p = 3; p <= pmax; p += 2) {
    for (const TableClass& c : classes) {
      if (!in_class(p, c) || !is_prime(p)) continue;
      if (cfg.n && c.modulus == 16 && c.residue == 7 && *cfg.n < 3) {
        if (explicit_classes) {
          throw DomainError("level_below_class_minimum", "p = 7 mod 16 needs n >= 3", {{"n", *cfg.n}, {"min_level", 3}});
        }
        continue;
      }
      work.emplace_back(p, c);
    }
  }

  std::vector<std::optional<TableRow>> rows(work.size());
  std::vector<std::exception_ptr> errors(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        const Integer& p = work[i].first;
        const int n = cfg.n ? *cfg.n : default_level(classify_prime(p));
        rows[i] = TableRow{p, work[i].second.label, lambda1_squared(p, n)};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, std::min(cfg.jobs, 256));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Json table = Json::array();
  for (const auto& row : rows) {
    const Lambda1Result& r = row->result;
    Json j;
    j["p"] = to_json(row->p);
    j["class"] = row->label;
    j["a_p"] = r.pell ? to_json(r.pell->a) : Json(nullptr);
    j["lambda1_squared"] = to_json(r.lambda1_sq);
    j["bound_new"] = decimal_root(r.bound_new_4th, 4);
    j["bound_minkowski"] = r.bound_minkowski_4th ? Json(decimal_root(*r.bound_minkowski_4th, 4)) : Json(nullptr);
    j["certified"] = r.certified;
    table.push_back(std::move(j));
  }
  if (cfg.format == "json") {
    out << table.dump() << "\n";
    return 0;
  }
  out << "p,class,a_p,lambda1_squared,bound_new,bound_minkowski,certified\n";
  for (const Json& j : table) {
    out << csv_field(j["p"]) << "," << csv_field(j["class"]) << "," << csv_field(j["a_p"]) << ","
        << csv_field(j["lambda1_squared"]) << "," << csv_field(j["bound_new"]) << ","
        << csv_field(j["bound_minkowski"]) << "," << csv_field(j["certified"]) << "\n";
  }
  return 0;
}

int dispatch(const CliConfig& cfg, std::ostream& out) {
  const std::string& cmd = cfg.command;
  if (cmd == "classify") {
    const ResidueClass rc = classify_prime(parse_integer(cfg.p, "p"));
    if (!rc.supported && !cfg.enumerate_fallback) {
      throw DomainError("class_not_covered", "no lambda_1 formula for this residue class",
                        {{"class_mod16", rc.class_mod16}});
    }
    out << to_json(rc).dump() << "\n";
    return 0;
  }
  if (cmd == "pell") {
    const PellSolution s = solve_pell(parse_integer(cfg.p, "p"), cfg.sign);
    Json j;
    if (s.sign == 1) {
      j["a_p"] = to_json(s.a);
      j["b_p"] = to_json(s.b);
    } else {
      j["a_minus_p"] = to_json(s.a);
      j["b_minus_p"] = to_json(s.b);
    }
    out << j.dump() << "\n";
    return 0;
  }
  if (cmd == "sqrtmod") {
    const Integer p = parse_integer(cfg.p, "p");
    if (p < 3 || !is_prime(p)) throw DomainError("not_odd_prime", "--p must be an odd prime");
    const Integer a = parse_integer(cfg.a, "a");
    const auto r = sqrt_mod(a, p);
    Json j;
    j["a"] = to_json(a);
    j["p"] = to_json(p);
    j["root"] = r ? to_json(*r) : Json(nullptr);
    j["nonresidue"] = !r.has_value();
    out << j.dump() << "\n";
    return 0;
  }
  if (cmd == "lambda1" || cmd == "shortest" || cmd == "bounds") {
    const Integer p = parse_integer(cfg.p, "p");
    const ResidueClass rc = classify_prime(p);
    const int n = cfg.n ? *cfg.n : default_level(rc);
    if (cmd == "lambda1") {
      out << to_json(lambda1_squared(p, n, std::nullopt, cfg.enumerate_fallback)).dump() << "\n";
    } else if (cmd == "shortest") {
      Json j = to_json(shortest_vector(p, n));
      j = Json{{"p", to_json(p)}, {"n", std::to_string(n)}, {"witness", j["vector"]}, {"sq_length", j["sq_length"]},
               {"method", j["method"]}, {"cross_checked", j["cross_checked"]}};
      out << j.dump() << "\n";
    } else {
      out << to_json(bounds(p, n)).dump() << "\n";
    }
    return 0;
  }
  if (cmd == "verify") {
    if (cfg.ring) {
      const Integer bound = cfg.norm_bound ? parse_integer(cfg.norm_bound, "norm-bound") : Integer(100);
      const SvsgReport report = svsg_verify(RingTag::parse(*cfg.ring), bound);
      out << to_json(report).dump() << "\n";
      return report.mismatches == 0 ? 0 : 1;
    }
    const Zeta16LiftReport report = zeta16_lift_check(parse_integer(cfg.p, "p"));
    out << to_json(report).dump() << "\n";
    return report.pass ? 0 : 1;
  }
  if (cmd == "table") return cmd_table(cfg, out);
  throw DomainError("unknown_command", "unknown command '" + cmd + "'");
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out);
  } catch (const DomainError& e) {
    out << error_json(e).dump() << "\n";
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << error_json(e).dump() << "\n";
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    out << Json{{"error", "internal_error"}}.dump() << "\n";
    err << e.what() << "\n";
    return 1;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact shortest vectors of prime ideal lattices in power-of-two cyclotomic rings", "cyclosvp"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string p;
  std::string pmax;
  int n = 0;
  std::string ring;
  std::string norm_bound;
  std::vector<std::string> classes;

  auto add_p = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--p", p, "odd prime");
    if (required) opt->required();
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "tower level (ring CycloPow2(n))")->check(CLI::Range(1, 20)); };
  auto add_fallback = [&](CLI::App* sub) {
    sub->add_flag("--enumerate-fallback", cfg.enumerate_fallback, "enumerate when no formula covers the class");
  };

  CLI::App* classify = app.add_subcommand("classify", "residue class and splitting tower of p");
  add_p(classify, true);
  add_fallback(classify);

  CLI::App* pell = app.add_subcommand("pell", "minimal solution of a^2 - 2b^2 = +-p");
  add_p(pell, true);
  pell->add_option("--sign", cfg.sign, "+1 or -1")->check(CLI::IsMember({1, -1}));

  CLI::App* sqrtmod = app.add_subcommand("sqrtmod", "canonical square root of a mod p");
  add_p(sqrtmod, true);
  sqrtmod->add_option("--a", cfg.a, "radicand (default 2)");

  CLI::App* lambda1 = app.add_subcommand("lambda1", "lambda_1 of the prime ideal over p in CycloPow2(n)");
  add_p(lambda1, true);
  add_n(lambda1);
  add_fallback(lambda1);

  CLI::App* shortest = app.add_subcommand("shortest", "explicit shortest vector, built in a subring and lifted");
  add_p(shortest, true);
  add_n(shortest);

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "lambda_1 against the new and Minkowski bounds");
  add_p(bounds_cmd, true);
  add_n(bounds_cmd);

  CLI::App* verify = app.add_subcommand("verify", "SVSG check (--ring) or zeta16 lift check (--p)");
  add_p(verify, false);
  verify->add_option("--ring", ring, "GaussianInt, QuadSqrt2, CycloEighth or QuarticTheta");
  verify->add_option("--norm-bound", norm_bound, "largest ideal norm (default 100)");

  CLI::App* table = app.add_subcommand("table", "lambda_1 and bounds for every covered prime up to pmax");
  table->add_option("--pmax", pmax, "largest prime")->required();
  add_n(table);
  table->add_option("--classes", classes, "subset of 3mod8, 5mod8, 7mod16, 9mod16")->expected(0, -1);
  table->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << Json{{"error", "invalid_arguments"}}.dump() << "\n";
    err << e.what() << "\n";
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  auto given = [&](const std::string& name) {
    const CLI::Option* opt = chosen->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--p")) cfg.p = p;
  if (given("--pmax")) cfg.pmax = pmax;
  if (given("--n")) cfg.n = n;
  if (given("--ring")) cfg.ring = ring;
  if (given("--norm-bound")) cfg.norm_bound = norm_bound;
  if (given("--classes")) cfg.classes = classes;
  return run(cfg, out, err);
}

}  // namespace cyclosvp
