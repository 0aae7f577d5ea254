#include "toriccap/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "toriccap/bruteforce.hpp"
#include "toriccap/capacities.hpp"
#include "toriccap/error.hpp"
#include "toriccap/io.hpp"

namespace toriccap {

namespace {

using nlohmann::json;

constexpr int kOracleMaxK = 5;

const std::vector<std::string> kPerK{"lk", "uk", "gh"};
const std::vector<std::string> kAllQuantities{"lk", "uk", "gh", "slope", "width"};

struct RunConfig {
  int k_max = 5;
  std::vector<std::string> quantities{"lk", "uk", "gh"};
  std::string format = "table";
  bool oracle_check = false;
  bool oracle_only = false;
  std::string out;

  bool wants(const std::string& q) const {
    return std::find(quantities.begin(), quantities.end(), q) != quantities.end();
  }
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedDomain:
      return kExitUnsupported;
    case ErrorCode::kVerification:
      return kExitMismatch;
    default:
      return kExitParse;
  }
}

std::string read_source(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ostringstream ss;
  if (arg == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::kParse, "cannot read '" + arg + "'");
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

void validate(const RunConfig& cfg) {
  if (cfg.k_max < 1) throw Error(ErrorCode::kInvalidArgument, "kmax must be >= 1");
  if (cfg.quantities.empty()) throw Error(ErrorCode::kInvalidArgument, "no quantities requested");
  for (const auto& q : cfg.quantities) {
    if (std::find(kAllQuantities.begin(), kAllQuantities.end(), q) == kAllQuantities.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown quantity '" + q + "'");
    }
  }
  if (cfg.format != "table" && cfg.format != "csv" && cfg.format != "json") {
    throw Error(ErrorCode::kInvalidArgument, "unknown format '" + cfg.format + "'");
  }
}

// Values from a config file for every flag the command line left unset.
void apply_config_file(RunConfig& cfg, const std::string& path, const CLI::App& cmd) {
  json j;
  try {
    j = json::parse(read_source(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, "config '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kParse, "config '" + path + "': expected an object");
  auto unset = [&](const char* flag) {
    const CLI::Option* opt = cmd.get_option_no_throw(flag);
    return opt == nullptr || opt->count() == 0;
  };
  try {
    if (j.contains("k_max") && unset("--kmax")) cfg.k_max = j.at("k_max").get<int>();
    if (j.contains("quantities") && unset("--quantities")) {
      cfg.quantities = j.at("quantities").get<std::vector<std::string>>();
    }
    if (j.contains("format") && unset("--format")) cfg.format = j.at("format").get<std::string>();
    if (j.contains("oracle_check") && unset("--oracle-check")) {
      cfg.oracle_check = j.at("oracle_check").get<bool>();
    }
    if (j.contains("out") && unset("--out")) cfg.out = j.at("out").get<std::string>();
  } catch (const json::type_error& e) {
    throw Error(ErrorCode::kParse, "config '" + path + "': " + e.what());
  }
}

RationalPolytope load_domain(const std::string& arg) {
  return lower_domain(parse_domain(read_source(arg)));
}

[[noreturn]] void not_strongly_convex() {
  throw Error(ErrorCode::kUnsupportedDomain,
              "domain is not strongly convex (some outward normal is neither -e1, -e2 nor "
              "nonnegative)\nhint: rerun caps with --oracle-only to evaluate lk, uk and gh by "
              "lattice search");
}

struct CapsResult {
  std::vector<std::string> columns;
  std::vector<std::vector<Rational>> rows;  // one per k, ordered by columns
  std::optional<AsymptoticSlope> slope;
  std::optional<Rational> width;
};

Rational oracle_value(const RationalPolytope& omega, int k, bool u) {
  BruteForceOptions options;
  options.restrict_to_u = u;
  return l_k_bruteforce(omega, k, options).value;
}

CapsResult compute_caps(const RationalPolytope& omega, const RunConfig& cfg) {
  validate(cfg);
  CapsResult result;
  for (const auto& q : kPerK) {
    if (cfg.wants(q)) result.columns.push_back(q);
  }
  const bool strongly = is_strongly_convex(omega);
  if (!strongly && !cfg.oracle_only) not_strongly_convex();
  if (!strongly && (cfg.wants("slope") || cfg.wants("width"))) not_strongly_convex();

  if (cfg.oracle_only) {
    for (int k = 1; k <= cfg.k_max; ++k) {
      std::vector<Rational> row;
      for (const auto& q : result.columns) {
        if (q == "lk") row.push_back(oracle_value(omega, k, false));
        if (q == "uk") row.push_back(oracle_value(omega, k, true));
        if (q == "gh") row.push_back(gh_capacity(omega, k));
      }
      result.rows.push_back(std::move(row));
    }
  } else {
    FanLatticeProgram program(omega, cfg.k_max);
    for (int k = 1; k <= cfg.k_max; ++k) {
      std::vector<Rational> row;
      for (const auto& q : result.columns) {
        if (q == "lk") row.push_back(program.lower(k).value);
        if (q == "uk") row.push_back(program.upper(k).value);
        if (q == "gh") row.push_back(gh_capacity(omega, k));
      }
      result.rows.push_back(std::move(row));
    }
    if (cfg.oracle_check) {
      for (int k = 1; k <= std::min(cfg.k_max, kOracleMaxK); ++k) {
        for (bool u : {false, true}) {
          Rational dp = u ? program.upper(k).value : program.lower(k).value;
          Rational lattice = oracle_value(omega, k, u);
          if (dp != lattice) {
            throw Error(ErrorCode::kVerification,
                        std::string("oracle mismatch for ") + (u ? "uk" : "lk") +
                            " at k = " + std::to_string(k) + ": fan program " + to_string(dp) +
                            ", lattice search " + to_string(lattice));
          }
        }
      }
    }
  }
  if (cfg.wants("slope")) result.slope = asymptotic_slope(omega);
  if (cfg.wants("width")) result.width = gromov_width(omega);
  return result;
}

std::string ray_text(const LatticeVector& v) {
  return "(" + to_string(v.x()) + "," + to_string(v.y()) + ")";
}

void print_table(const std::vector<std::vector<std::string>>& cells, std::ostream& out) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void print_csv(const std::vector<std::vector<std::string>>& cells, std::ostream& out) {
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << '\n';
  }
}

void render_caps(const CapsResult& r, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      json row{{"k", i + 1}};
      for (std::size_t c = 0; c < r.columns.size(); ++c) row[r.columns[c]] = to_string(r.rows[i][c]);
      rows.push_back(row);
    }
    json j{{"k_max", cfg.k_max}, {"rows", rows}};
    if (r.slope) {
      j["slope"] = to_string(r.slope->slope);
      j["slope_ray"] = json::array({r.slope->ray.x().get_si(), r.slope->ray.y().get_si()});
    }
    if (r.width) j["gromov_width"] = to_string(*r.width);
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"k"};
  header.insert(header.end(), r.columns.begin(), r.columns.end());
  if (cfg.format == "csv") {
    if (r.slope) header.push_back("slope");
    if (r.width) header.push_back("width");
  }
  cells.push_back(header);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    std::vector<std::string> row{std::to_string(i + 1)};
    for (const auto& v : r.rows[i]) row.push_back(to_string(v));
    if (cfg.format == "csv") {
      if (r.slope) row.push_back(to_string(r.slope->slope));
      if (r.width) row.push_back(to_string(*r.width));
    }
    cells.push_back(row);
  }
  if (cfg.format == "csv") {
    print_csv(cells, out);
    return;
  }
  if (!r.columns.empty()) print_table(cells, out);
  if (r.slope) out << "slope: " << to_string(r.slope->slope) << " at ray " << ray_text(r.slope->ray) << '\n';
  if (r.width) out << "gromov width: " << to_string(*r.width) << '\n';
}

// Writes to --out when given, otherwise to out.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty()) {
    fn(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
  fn(file);
}

void cmd_interval(const std::string& domain_arg, const std::string& constraint_arg,
                  const std::string& format, std::ostream& out, std::ostream& err) {
  RationalPolytope omega = load_domain(domain_arg);
  TangencyConstraint p = parse_constraint(read_source(constraint_arg));
  RsftInterval iv = rsft_interval(omega, p);
  if (iv.non_lax_warning) {
    err << "warning: constraint is not lax; only the lower bound applies\n";
  }
  if (format == "json") {
    json j{{"k", iv.k}, {"lower", to_string(iv.lower)}, {"exact", iv.exact}};
    if (iv.upper) j["upper"] = to_string(*iv.upper);
    if (iv.stable_upper) j["stable_upper"] = to_string(*iv.stable_upper);
    out << j.dump(2) << '\n';
    return;
  }
  out << "k = " << iv.k << '\n';
  if (iv.upper) {
    out << "interval = [" << to_string(iv.lower) << ", " << to_string(*iv.upper) << "] "
        << (iv.exact ? "exact" : "inexact") << '\n';
  } else {
    out << "lower bound = " << to_string(iv.lower) << '\n';
  }
  if (iv.stable_upper) out << "stable upper bound = " << to_string(*iv.stable_upper) << '\n';
}

void cmd_fan(const std::string& domain_arg, bool resolve, const std::string& format,
             std::ostream& out) {
  RationalPolytope omega = load_domain(domain_arg);
  Fan2D base = normal_fan(omega);
  Fan2D smooth = refine_smooth(base);
  const Fan2D& shown = resolve ? smooth : base;
  json rays = json::array();
  std::vector<std::vector<std::string>> cells{{"ray", "support", "weight"}};
  for (const auto& v : shown.rays()) {
    const bool inserted = !base.index_of(v).has_value();
    Rational support = support_value(omega, v);
    Integer weight = anticanonical_degree(cocharacter_relation(smooth, v).as_class());
    cells.push_back({ray_text(v) + (inserted ? "*" : ""), to_string(support), to_string(weight)});
    rays.push_back(json{{"ray", json::array({v.x().get_si(), v.y().get_si()})},
                        {"support", to_string(support)},
                        {"weight", weight.get_si()},
                        {"inserted", inserted}});
  }
  if (format == "json") {
    out << json{{"smooth", is_smooth(shown)}, {"rays", rays}}.dump(2) << '\n';
  } else if (format == "csv") {
    print_csv(cells, out);
  } else {
    print_table(cells, out);
  }
}

void cmd_plot(const RationalPolytope& omega, const RunConfig& cfg, std::ostream& out) {
  if (!is_strongly_convex(omega)) not_strongly_convex();
  FanLatticeProgram program(omega, cfg.k_max);
  Rational slope = asymptotic_slope(omega).slope;
  std::vector<std::vector<std::string>> cells{{"k", "lk", "uk", "gh", "slope_k"}};
  for (int k = 1; k <= cfg.k_max; ++k) {
    cells.push_back({std::to_string(k), to_string(program.lower(k).value),
                     to_string(program.upper(k).value), to_string(gh_capacity(omega, k)),
                     to_string(Rational(slope * k))});
  }
  print_csv(cells, out);
}

// One golden case: run caps on the domain and compare against "expect", or
// check that it fails with "expect_exit".
std::optional<std::string> run_golden_case(const json& c) {
  int code = kExitOk;
  std::string message;
  std::optional<CapsResult> result;
  RunConfig cfg;
  const json expect = c.value("expect", json::object());
  try {
    DomainSpec spec = c.contains("domain_text") ? parse_domain(c.at("domain_text").get<std::string>())
                                                : domain_from_json(c.at("domain"));
    cfg.k_max = c.value("k_max", 5);
    cfg.quantities.clear();
    for (const auto& q : kAllQuantities) {
      if (expect.contains(q)) cfg.quantities.push_back(q);
    }
    if (cfg.quantities.empty()) cfg.quantities = {"lk"};
    cfg.oracle_check = c.value("oracle_check", false);
    result = compute_caps(lower_domain(spec), cfg);
  } catch (const Error& e) {
    code = exit_code_for(e.code());
    message = e.what();
  }
  const int want_code = c.value("expect_exit", 0);
  if (code != want_code) {
    return "exit " + std::to_string(code) + ", expected " + std::to_string(want_code) +
           (message.empty() ? "" : " (" + message + ")");
  }
  if (code != kExitOk) return std::nullopt;
  for (std::size_t col = 0; col < result->columns.size(); ++col) {
    const std::string& q = result->columns[col];
    const json& values = expect.at(q);
    if (!values.is_array() || values.size() != static_cast<std::size_t>(cfg.k_max)) {
      return q + ": expected " + std::to_string(cfg.k_max) + " values";
    }
    for (int k = 1; k <= cfg.k_max; ++k) {
      Rational want = rational_from_json(values[k - 1], q);
      const Rational& got = result->rows[k - 1][col];
      if (want != got) {
        return q + " at k = " + std::to_string(k) + ": got " + to_string(got) + ", expected " +
               to_string(want);
      }
    }
  }
  if (result->slope && result->slope->slope != rational_from_json(expect.at("slope"), "slope")) {
    return "slope: got " + to_string(result->slope->slope);
  }
  if (result->width && *result->width != rational_from_json(expect.at("width"), "width")) {
    return "width: got " + to_string(*result->width);
  }
  return std::nullopt;
}

int cmd_verify_golden(const std::string& path, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.emplace_back(path);
  }
  if (files.empty()) throw Error(ErrorCode::kParse, "no golden fixtures under '" + path + "'");
  int cases = 0;
  int failures = 0;
  for (const auto& file : files) {
    json fixture;
    try {
      fixture = json::parse(read_source(file.string()));
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParse, "fixture '" + file.string() + "': " + e.what());
    }
    const std::string name = fixture.value("name", file.stem().string());
    const json& list = fixture.at("cases");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string label = name + "/" + list[i].value("name", std::to_string(i));
      std::optional<std::string> failure;
      try {
        failure = run_golden_case(list[i]);
      } catch (const std::exception& e) {
        failure = std::string("malformed case: ") + e.what();
      }
      ++cases;
      if (failure) {
        ++failures;
        out << "FAIL " << label << ": " << *failure << '\n';
      } else {
        out << "PASS " << label << '\n';
      }
    }
  }
  out << cases << " cases, " << failures << " failures\n";
  if (failures > 0) {
    err << "golden verification failed\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice capacity bounds for toric domains"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string kmax_text;
  std::string quantities_text;
  std::string config_path;
  std::string domain_arg;
  std::string constraint_arg;
  std::string golden;
  bool resolve = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("domain", domain_arg, "domain JSON file, '-' for stdin, or inline JSON");
    cmd->add_option("--kmax", cfg.k_max, "largest k to evaluate");
    cmd->add_option("--format", cfg.format, "table, csv or json");
    cmd->add_option("--out", cfg.out, "write output to this file");
    cmd->add_option("--config", config_path, "JSON config file; flags take precedence");
  };

  CLI::App* caps = app.add_subcommand("caps", "lk, uk, gh per k, slope and Gromov width");
  add_common(caps);
  caps->get_option("domain")->required();
  caps->add_option("--quantities", quantities_text, "comma list from lk,uk,gh,slope,width");
  caps->add_flag("--oracle-check", cfg.oracle_check, "re-derive k <= 5 by lattice search");
  caps->add_flag("--oracle-only", cfg.oracle_only, "lattice search only; allows weakly convex domains");

  CLI::App* interval = app.add_subcommand("interval", "bracket for a tangency constraint");
  interval->add_option("domain", domain_arg, "domain JSON")->required();
  interval->add_option("constraint", constraint_arg, "constraint JSON")->required();
  interval->add_option("--format", cfg.format, "table or json");

  CLI::App* fan = app.add_subcommand("fan", "normal fan with support values and weights");
  fan->add_option("domain", domain_arg, "domain JSON")->required();
  fan->add_flag("--resolve", resolve, "show the minimal smooth refinement; '*' marks new rays");
  fan->add_option("--format", cfg.format, "table, csv or json");

  CLI::App* plot = app.add_subcommand("plot", "CSV of k, lk, uk, gh, slope*k");
  add_common(plot);
  plot->get_option("domain")->required();

  CLI::App* verify = app.add_subcommand("verify", "golden fixtures or an oracle comparison");
  add_common(verify);
  verify->add_option("--golden", golden, "fixture file or directory");

  std::vector<std::string> argv_storage{"toriccap"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!config_path.empty()) apply_config_file(cfg, config_path, *active);
    if (!quantities_text.empty()) cfg.quantities = split_list(quantities_text);

    if (active == caps) {
      RationalPolytope omega = load_domain(domain_arg);
      CapsResult r = compute_caps(omega, cfg);
      emit(cfg.out, out, [&](std::ostream& o) { render_caps(r, cfg, o); });
    } else if (active == interval) {
      cmd_interval(domain_arg, constraint_arg, cfg.format, out, err);
    } else if (active == fan) {
      cmd_fan(domain_arg, resolve, cfg.format, out);
    } else if (active == plot) {
      validate(cfg);
      RationalPolytope omega = load_domain(domain_arg);
      emit(cfg.out, out, [&](std::ostream& o) { cmd_plot(omega, cfg, o); });
    } else if (active == verify) {
      if (!golden.empty()) return cmd_verify_golden(golden, out, err);
      if (domain_arg.empty()) throw Error(ErrorCode::kInvalidArgument, "verify needs --golden or a domain");
      RationalPolytope omega = load_domain(domain_arg);
      cfg.quantities = {"lk", "uk"};
      cfg.k_max = std::min(cfg.k_max, kOracleMaxK);
      cfg.oracle_check = true;
      CapsResult r = compute_caps(omega, cfg);
      emit(cfg.out, out, [&](std::ostream& o) {
        render_caps(r, cfg, o);
        o << "oracle agrees for k <= " << cfg.k_max << '\n';
      });
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitOk;
}

}  // namespace toriccap
