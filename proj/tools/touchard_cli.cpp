// Command-line surface for the Touchard polynomial toolkit: exact and
// asymptotic evaluation, saddle diagnostics, Stokes analysis, regression
// tables, and steepest-path export.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "touchard/touchard.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace touchard;

namespace {

struct GlobalOpts {
  std::string format = "text";
  int precision = 12;
};

std::string num(double v, const GlobalOpts& g) { return decimal_string(v, g.precision); }

void emit(const json& report, const GlobalOpts& g) {
  if (g.format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  if (g.format == "csv") {
    // header from the first row of "rows", one CSV line per row
    if (report.contains("rows") && report["rows"].is_array() && !report["rows"].empty()) {
      const auto& rows = report["rows"];
      std::vector<std::string> keys;
      for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
      for (std::size_t i = 0; i < keys.size(); ++i)
        std::cout << keys[i] << (i + 1 < keys.size() ? "," : "\n");
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
          const auto& v = row.contains(keys[i]) ? row[keys[i]] : json("");
          std::cout << (v.is_string() ? v.get<std::string>() : v.dump())
                    << (i + 1 < keys.size() ? "," : "\n");
        }
      }
    } else {
      for (auto it = report.begin(); it != report.end(); ++it) {
        if (it->is_primitive())
          std::cout << it.key() << "," << (it->is_string() ? it->get<std::string>() : it->dump())
                    << "\n";
      }
    }
    return;
  }
  // text
  std::function<void(const json&, int)> walk = [&](const json& node, int depth) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (node.is_object()) {
      for (auto it = node.begin(); it != node.end(); ++it) {
        if (it->is_primitive()) {
          std::cout << pad << it.key() << ": "
                    << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
        } else {
          std::cout << pad << it.key() << ":\n";
          walk(*it, depth + 1);
        }
      }
    } else if (node.is_array()) {
      for (const auto& el : node) {
        if (el.is_primitive()) {
          std::cout << pad << "- " << (el.is_string() ? el.get<std::string>() : el.dump()) << "\n";
        } else {
          std::cout << pad << "-\n";
          walk(el, depth + 1);
        }
      }
    }
  };
  walk(report, 0);
}

json logcomplex_json(const LogComplexD& v, const GlobalOpts& g) {
  json j;
  j["re"] = num(v.real_part(), g);
  j["im"] = num(v.imag_part(), g);
  j["log10_magnitude"] = num(v.log_mag / std::log(10.0), g);
  j["display"] = format_paper_log(v);
  return j;
}

json contributory_json(const ContributorySet& set) {
  json j;
  j["indices"] = set.indices;
  j["K"] = set.K;
  j["K_prime"] = set.K_prime;
  if (set.near_boundary) j["near_boundary"] = true;
  if (set.near_coalescence) j["near_coalescence"] = true;
  return j;
}

int cmd_eval(int n, double x, double theta_over_pi, int truncation, bool reduced,
             const GlobalOpts& g) {
  ExpansionParams params(n, x, theta_over_pi * pi_v<double>());
  StirlingTable table(n - 1);
  CplxD z = params.z();
  if (theta_over_pi == 0.0) z = CplxD(x, 0.0);
  if (theta_over_pi == 1.0) z = CplxD(-x, 0.0);

  auto exact = touchard_scaled(n - 1, z, table);
  auto set = contributory_saddles(params);
  auto asym = assemble(params, truncation, reduced ? AssembleMode::reduced : AssembleMode::full);
  double err = relative_diff(asym, exact.value);

  json rep;
  rep["command"] = "eval";
  rep["n"] = n;
  rep["x"] = num(x, g);
  rep["theta_over_pi"] = num(theta_over_pi, g);
  rep["mu"] = num(params.mu(), g);
  rep["truncation"] = truncation;
  rep["mode"] = reduced ? "reduced" : "full";
  rep["exact"] = logcomplex_json(exact.value, g);
  rep["asymptotic"] = logcomplex_json(asym, g);
  rep["relative_error"] = num(err, g);
  rep["contributory"] = contributory_json(set);
  emit(rep, g);
  return 0;
}

int cmd_saddles(std::optional<int> n, std::optional<double> x, std::optional<double> mu_opt,
                double theta_over_pi, int k_min, int k_max, const GlobalOpts& g) {
  double mu = mu_opt ? *mu_opt : (*n / *x);
  double theta = theta_over_pi * pi_v<double>();
  PhaseParams phase(mu, theta);

  std::optional<ContributorySet> set;
  if (n && x) set = contributory_saddles(ExpansionParams(*n, *x, theta));

  json rows = json::array();
  int failures = 0;
  for (int k = k_min; k <= k_max; ++k) {
    json row;
    row["k"] = k;
    try {
      CplxD guess = saddle_initial_guess(phase, k);
      auto s = solve_saddle(phase, k);
      row["re"] = num(s.t.re, g);
      row["im"] = num(s.t.im, g);
      row["guess_re"] = num(guess.re, g);
      row["guess_im"] = num(guess.im, g);
      row["residual"] = num(saddle_residual(s, phase), g);
      row["re_psi"] = num(real(s.psi_value), g);
      if (s.near_coalescence) row["near_coalescence"] = true;
      if (set) {
        bool contrib = false;
        for (int idx : set->indices) contrib |= idx == k;
        row["contributory"] = contrib;
      }
    } catch (const std::exception& e) {
      row["error"] = e.what();
      ++failures;
    }
    rows.push_back(row);
  }
  json rep;
  rep["command"] = "saddles";
  rep["mu"] = num(mu, g);
  rep["theta_over_pi"] = num(theta_over_pi, g);
  rep["rows"] = rows;
  emit(rep, g);
  return failures == 0 ? 0 : 1;
}

int cmd_stokes(std::optional<int> n, std::optional<double> x, std::optional<double> mu_opt,
               bool boundaries, const GlobalOpts& g) {
  json rep;
  rep["command"] = "stokes";
  if (boundaries) {
    json rows = json::array();
    for (int k = 1; k <= 8; ++k) {
      json row;
      row["k"] = k;
      row["mu"] = num(mu_boundary(k), g);
      rows.push_back(row);
    }
    rep["rows"] = rows;
    emit(rep, g);
    return 0;
  }
  double mu = mu_opt ? *mu_opt : (*n / *x);
  auto res = stokes_angle(mu);
  rep["mu"] = num(mu, g);
  rep["pair"] = {res.pair.first, res.pair.second};
  if (res.theta_s) {
    rep["theta_s_over_pi"] = num(*res.theta_s / pi_v<double>(), g);
    rep["shot_distance"] = num(res.shot_distance, g);
  } else {
    rep["theta_s_over_pi"] = nullptr;
    rep["diagnostic"] = res.diagnostic;
    emit(rep, g);
    return 1;
  }
  emit(rep, g);
  return 0;
}

json load_golden(const std::string& data_path) {
  std::ifstream in(data_path);
  if (!in) throw std::runtime_error("cannot open golden data file: " + data_path);
  json j;
  in >> j;
  return j;
}

int cmd_table(int table_id, const std::string& data_path, const GlobalOpts& g) {
  json golden = load_golden(data_path);
  json rep;
  rep["command"] = "table";
  rep["table"] = table_id;
  json rows = json::array();

  auto dev = [&](double computed, double printed) {
    json d;
    d["computed"] = num(computed, g);
    d["printed"] = decimal_string(printed, 6);
    d["deviation"] = num(computed - printed, g);
    return d;
  };

  switch (table_id) {
    case 1: {
      PhaseParams p(2.0, 0.0);
      for (const auto& row : golden["table1"]["rows"]) {
        int k = row["k"];
        auto s = solve_saddle(p, k);
        CplxD guess = saddle_initial_guess(p, k);
        json r;
        r["k"] = k;
        r["re"] = dev(s.t.re, std::stod(row["re"].get<std::string>()));
        r["im"] = dev(s.t.im, std::stod(row["im"].get<std::string>()));
        r["approx_re"] = dev(guess.re, std::stod(row["approx_re"].get<std::string>()));
        r["approx_im"] = dev(guess.im, std::stod(row["approx_im"].get<std::string>()));
        rows.push_back(r);
      }
      break;
    }
    case 2: {
      for (const auto& row : golden["table2"]["rows"]) {
        int k = row["k"];
        json r;
        r["k"] = k;
        r["mu"] = dev(mu_boundary(k), std::stod(row["mu"].get<std::string>()));
        rows.push_back(r);
      }
      break;
    }
    case 4: {
      for (const auto& row : golden["table4"]["rows"]) {
        double mu = std::stod(row["mu"].get<std::string>());
        auto res = stokes_angle(mu);
        json r;
        r["mu"] = row["mu"];
        r["theta_s_over_pi"] = dev(res.theta_s ? *res.theta_s / pi_v<double>() : -1.0,
                                   std::stod(row["theta_s_over_pi"].get<std::string>()));
        rows.push_back(r);
      }
      break;
    }
    case 5:
    case 6: {
      const auto& t = golden[table_id == 5 ? "table5" : "table6"];
      double theta = table_id == 5 ? 0.0 : pi_v<double>();
      for (const auto& row : t["rows"]) {
        int n = row["n"];
        double x = row["x"];
        StirlingTable table(n - 1);
        auto exact = touchard_scaled(n - 1, CplxD(table_id == 5 ? x : -x, 0.0), table);
        ExpansionParams params(n, x, theta);
        LogComplexD asym;
        if (table_id == 5) {
          auto s0 = solve_saddle(PhaseParams(params), 0);
          asym = jk_series(s0, params, 2).value;  // dominant series only
        } else {
          asym = assemble(params, 2);
        }
        double err = relative_diff(asym, exact.value);
        json r;
        r["n"] = n;
        r["x"] = x;
        r["value"] = dev(exact.value.real_part(), std::stod(row["value"].get<std::string>()));
        r["value_display"] = format_paper_log(exact.value);
        r["error"] = dev(err, std::stod(row["error"].get<std::string>()));
        if (row.contains("note")) r["note"] = row["note"];
        rows.push_back(r);
      }
      break;
    }
    case 7: {
      const auto& t = golden["table7"];
      int n = t["n"];
      double x = t["x"];
      StirlingTable table(n - 1);
      for (const auto& row : t["rows"]) {
        double top = std::stod(row["theta_over_pi"].get<std::string>());
        double theta = top * pi_v<double>();
        ExpansionParams params(n, x, theta);
        CplxD z = top == 1.0 ? CplxD(-x, 0.0) : params.z();
        auto exact = touchard_scaled(n - 1, z, table);
        PhaseParams phase(params);
        auto j0 = jk_series(solve_saddle(phase, 0), params, 2);
        auto j1 = jk_series(solve_saddle(phase, 1), params, 2);
        auto asym = j0.value + j1.value;
        double ratio = std::exp(j1.value.log_mag - j0.value.log_mag);
        json r;
        r["theta_over_pi"] = row["theta_over_pi"];
        r["exact"] = format_paper_log(exact.value);
        r["asym_re"] = dev(asym.real_part(), std::stod(row["asym_re"].get<std::string>()));
        r["asym_im"] = dev(asym.imag_part(), std::stod(row["asym_im"].get<std::string>()));
        r["ratio"] = dev(ratio, std::stod(row["ratio"].get<std::string>()));
        rows.push_back(r);
      }
      break;
    }
    case 8: {
      // high precision so all ten printed digits are meaningful
      PhaseParamsT<HighReal> p(HighReal(4), HighReal(0));
      auto s0 = solve_saddle(p, 0);
      auto le = local_expansion(s0, 20);
      auto cs = wojdylo_c2s_all(le, 10);
      for (const auto& row : golden["table8"]["rows"]) {
        int s = row["s"];
        json r;
        r["s"] = s;
        r["c"] = dev(to_double(cs[static_cast<std::size_t>(s)].re),
                     std::stod(row["c"].get<std::string>()));
        rows.push_back(r);
      }
      break;
    }
    default:
      std::cerr << "table id must be one of 1, 2, 4, 5, 6, 7, 8\n";
      return 2;
  }
  rep["rows"] = rows;
  emit(rep, g);
  return 0;
}

const char* terminal_name(PathTerminal t) {
  switch (t) {
    case PathTerminal::left_infinity: return "left_infinity";
    case PathTerminal::right_strip: return "right_strip";
    case PathTerminal::origin: return "origin";
    case PathTerminal::branch_cut: return "branch_cut";
    case PathTerminal::step_limit: return "step_limit";
  }
  return "?";
}

int cmd_paths(int n, double x, double theta_over_pi, int k_min, int k_max, bool window_given,
              const std::string& out_dir, const GlobalOpts& g) {
  ExpansionParams params(n, x, theta_over_pi * pi_v<double>());
  PhaseParams phase(params);
  auto set = contributory_saddles(params);

  std::vector<int> ks;
  if (window_given)
    for (int k = k_min; k <= k_max; ++k) ks.push_back(k);
  else
    ks = set.indices;

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "cannot create output directory '" << out_dir << "': " << ec.message() << "\n";
    return 1;
  }

  json manifest;
  manifest["command"] = "paths";
  manifest["n"] = n;
  manifest["x"] = num(x, g);
  manifest["theta_over_pi"] = num(theta_over_pi, g);
  manifest["mu"] = num(params.mu(), g);
  manifest["contributory"] = contributory_json(set);
  json files = json::array();

  for (int k : ks) {
    SaddlePoint s;
    try {
      s = solve_saddle(phase, k);
    } catch (const std::exception& e) {
      json f;
      f["k"] = k;
      f["error"] = e.what();
      files.push_back(f);
      continue;
    }
    for (auto dir : {PathDirection::descent, PathDirection::ascent}) {
      for (auto br : {PathBranch::plus, PathBranch::minus}) {
        PathPolyline line;
        try {
          line = trace_path(s, params, dir, br);
        } catch (const std::exception& e) {
          json f;
          f["k"] = k;
          f["error"] = e.what();
          files.push_back(f);
          continue;
        }
        std::string name = "path_k" + std::to_string(k) +
                           (dir == PathDirection::descent ? "_descent" : "_ascent") +
                           (br == PathBranch::plus ? "_plus" : "_minus") + ".csv";
        fs::path file = fs::path(out_dir) / name;
        std::ofstream csv(file, std::ios::binary);
        if (!csv) {
          std::cerr << "cannot write '" << file.string() << "'\n";
          return 1;
        }
        csv << "re,im,re_psi,im_psi\n";
        for (std::size_t i = 0; i < line.points.size(); ++i) {
          csv << decimal_string(line.points[i].re, g.precision) << ","
              << decimal_string(line.points[i].im, g.precision) << ","
              << decimal_string(line.psi_values[i].re, g.precision) << ","
              << decimal_string(line.psi_values[i].im, g.precision) << "\n";
        }
        json f;
        f["k"] = k;
        f["direction"] = dir == PathDirection::descent ? "descent" : "ascent";
        f["branch"] = br == PathBranch::plus ? "plus" : "minus";
        f["file"] = name;
        f["terminal"] = terminal_name(line.terminal);
        if (line.terminal == PathTerminal::right_strip) f["strip"] = line.strip_index;
        f["points"] = line.points.size();
        bool contrib = false;
        for (int idx : set.indices) contrib |= idx == k;
        f["contributory"] = contrib;
        files.push_back(f);
      }
    }
  }
  manifest["files"] = files;
  std::ofstream mj(fs::path(out_dir) / "manifest.json", std::ios::binary);
  mj << manifest.dump(2) << "\n";
  json rep = manifest;
  rep.erase("files");
  rep["written"] = files.size();
  rep["out_dir"] = out_dir;
  emit(rep, g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Touchard (exponential) polynomial toolkit: exact evaluation via "
               "Stirling numbers and steepest-descent asymptotics"};
  app.require_subcommand(1);

  GlobalOpts g;
  if (const char* env = std::getenv("TOUCHARD_PRECISION")) g.precision = std::atoi(env);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--precision", g.precision, "significant digits in output");

  int n = 20;
  double x = 2.0, theta_over_pi = 0.0;
  std::optional<double> mu_opt;
  int truncation = 2;
  int k_min = 0, k_max = 0;
  bool reduced = false, boundaries = false;
  int table_id = 5;
  std::string out_dir = "paths_out";
  std::string data_path = "data/reference_tables.json";
  if (const char* env = std::getenv("TOUCHARD_DATA")) data_path = env;

  auto* eval = app.add_subcommand("eval", "exact vs asymptotic evaluation of the scaled polynomial");
  eval->add_option("--n", n, "degree parameter (evaluates index n-1)")->required();
  eval->add_option("--x", x, "|z|")->required();
  eval->add_option("--theta-over-pi", theta_over_pi, "arg z in units of pi, in [0,1]");
  eval->add_option("--truncation", truncation, "series truncation index s");
  eval->add_flag("--reduced", reduced, "use the two-saddle approximation");

  auto* saddles = app.add_subcommand("saddles", "solve and report saddle points");
  saddles->add_option("--n", n, "degree parameter");
  saddles->add_option("--x", x, "|z|");
  saddles->add_option("--mu", mu_opt, "mu = n/x directly (topology only)");
  saddles->add_option("--theta-over-pi", theta_over_pi, "arg z in units of pi");
  saddles->add_option("--k-min", k_min, "lowest strip index");
  saddles->add_option("--k-max", k_max, "highest strip index");

  auto* stokes = app.add_subcommand("stokes", "Stokes angle for mu's interval; --boundaries for mu_1..mu_8");
  stokes->add_option("--n", n, "degree parameter");
  stokes->add_option("--x", x, "|z|");
  stokes->add_option("--mu", mu_opt, "mu = n/x directly");
  stokes->add_flag("--boundaries", boundaries, "print the interval boundaries");

  auto* table = app.add_subcommand("table", "regenerate a reference table with deviations");
  table->add_option("--id", table_id, "table id: 1,2,4,5,6,7,8")->required();
  table->add_option("--data", data_path, "golden data file");

  auto* paths = app.add_subcommand("paths", "export steepest descent/ascent polylines as CSV");
  paths->add_option("--n", n, "degree parameter")->required();
  paths->add_option("--x", x, "|z|")->required();
  paths->add_option("--theta-over-pi", theta_over_pi, "arg z in units of pi");
  auto* kminopt = paths->add_option("--k-min", k_min, "lowest saddle index");
  paths->add_option("--k-max", k_max, "highest saddle index");
  paths->add_option("--out-dir", out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return cmd_eval(n, x, theta_over_pi, truncation, reduced, g);
    if (*saddles) {
      std::optional<int> n_opt;
      std::optional<double> x_opt;
      if (!mu_opt) {
        n_opt = n;
        x_opt = x;
      }
      return cmd_saddles(n_opt, x_opt, mu_opt, theta_over_pi, k_min, k_max, g);
    }
    if (*stokes) {
      std::optional<int> n_opt;
      std::optional<double> x_opt;
      if (!mu_opt) {
        n_opt = n;
        x_opt = x;
      }
      return cmd_stokes(n_opt, x_opt, mu_opt, boundaries, g);
    }
    if (*table) return cmd_table(table_id, data_path, g);
    if (*paths) return cmd_paths(n, x, theta_over_pi, k_min, k_max, kminopt->count() > 0, out_dir, g);
  } catch (const CoalescenceError& e) {
    std::cerr << "coalescence: " << e.what() << "\n";
    return 3;
  } catch (const DegeneracyError& e) {
    std::cerr << "degeneracy: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
