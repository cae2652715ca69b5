#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bohr/asymptotics.hpp"
#include "bohr/cesaro.hpp"
#include "bohr/kernels.hpp"
#include "bohr/radius.hpp"
#include "bohr/specfun.hpp"
#include "bohr/verify.hpp"
#include "bohr/weights.hpp"

namespace {

using nlohmann::ordered_json;

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string cell(const ordered_json& v) {
  if (v.is_number_float()) return fmt15(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Flat record: command echo + parameters + results, optionally tabular rows.
struct OutputRecord {
  std::string command;
  ordered_json parameters = ordered_json::object();
  ordered_json results = ordered_json::object();
  std::vector<std::string> columns;
  std::vector<ordered_json> rows;
};

std::string render(const OutputRecord& rec, const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["command"] = rec.command;
    j["parameters"] = rec.parameters;
    j["results"] = rec.results;
    if (!rec.columns.empty()) {
      j["columns"] = rec.columns;
      j["rows"] = rec.rows;
    }
    return j.dump(2) + "\n";
  }
  std::string out;
  if (format == "csv") {
    if (!rec.columns.empty()) {
      for (std::size_t i = 0; i < rec.columns.size(); ++i) {
        out += (i ? "," : "") + rec.columns[i];
      }
      out += "\n";
      for (const auto& row : rec.rows) {
        for (std::size_t i = 0; i < rec.columns.size(); ++i) {
          out += (i ? "," : "") + cell(row[rec.columns[i]]);
        }
        out += "\n";
      }
    } else {
      std::string hdr, vals;
      bool first = true;
      for (const auto& [k, v] : rec.results.items()) {
        hdr += (first ? "" : ",") + k;
        vals += (first ? "" : ",") + cell(v);
        first = false;
      }
      out = hdr + "\n" + vals + "\n";
    }
    return out;
  }
  // plain
  out += "command = " + rec.command + "\n";
  for (const auto& [k, v] : rec.parameters.items()) out += k + " = " + cell(v) + "\n";
  for (const auto& [k, v] : rec.results.items()) out += k + " = " + cell(v) + "\n";
  if (!rec.columns.empty()) {
    for (std::size_t i = 0; i < rec.columns.size(); ++i) {
      out += (i ? "," : "") + rec.columns[i];
    }
    out += "\n";
    for (const auto& row : rec.rows) {
      for (std::size_t i = 0; i < rec.columns.size(); ++i) {
        out += (i ? "," : "") + cell(row[rec.columns[i]]);
      }
      out += "\n";
    }
  }
  return out;
}

void emit(const OutputRecord& rec, const std::string& format, const std::string& out_path) {
  const std::string text = render(rec, format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
  }
}

struct FamilyFlags {
  std::string family;
  double alpha = 0.0;
  bool has_alpha = false;
  double a = 0.0, b = 0.0, c = 0.0;
  bool has_a = false, has_b = false, has_c = false;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& ff) {
  cmd->add_option("--family", ff.family, "weight family: monomial|shifted|power|hypergeom|cesaro")
      ->required();
  cmd->add_option("--alpha", ff.alpha, "family parameter alpha (power, cesaro)")
      ->each([&ff](const std::string&) { ff.has_alpha = true; });
  cmd->add_option("--a", ff.a, "hypergeometric parameter a")
      ->each([&ff](const std::string&) { ff.has_a = true; });
  cmd->add_option("--b", ff.b, "hypergeometric parameter b")
      ->each([&ff](const std::string&) { ff.has_b = true; });
  cmd->add_option("--c", ff.c, "hypergeometric parameter c")
      ->each([&ff](const std::string&) { ff.has_c = true; });
}

bohr::WeightFamily make_family(const FamilyFlags& ff, ordered_json* params) {
  (*params)["family"] = ff.family;
  if (ff.family == "monomial") return bohr::WeightFamily::monomial();
  if (ff.family == "shifted") return bohr::WeightFamily::shifted_monomial();
  if (ff.family == "power") {
    if (!ff.has_alpha) throw CLI::ValidationError("--family power requires --alpha");
    (*params)["alpha"] = ff.alpha;
    return bohr::WeightFamily::power(ff.alpha);
  }
  if (ff.family == "hypergeom") {
    if (!(ff.has_a && ff.has_b && ff.has_c)) {
      throw CLI::ValidationError("--family hypergeom requires --a, --b and --c");
    }
    (*params)["a"] = ff.a;
    (*params)["b"] = ff.b;
    (*params)["c"] = ff.c;
    return bohr::WeightFamily::hypergeometric(ff.a, ff.b, ff.c);
  }
  if (ff.family == "cesaro") {
    if (!ff.has_alpha) throw CLI::ValidationError("--family cesaro requires --alpha");
    (*params)["alpha"] = ff.alpha;
    return bohr::WeightFamily::cesaro_basis(ff.alpha);
  }
  throw CLI::ValidationError("unknown family: " + ff.family);
}

std::vector<double> parse_range(const std::string& spec) {
  double lo, hi, step;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0.0) {
    throw CLI::ValidationError("range must be lo:hi:step with positive step: " + spec);
  }
  std::vector<double> grid;
  for (double x = lo; x <= hi + 1e-9 * step; x += step) grid.push_back(x);
  if (grid.empty()) throw CLI::ValidationError("empty grid: " + spec);
  return grid;
}

void root_to_results(const bohr::RootResult& res, ordered_json* out) {
  (*out)["status"] = res.status == bohr::RootStatus::found ? "found" : "no-radius-below-1";
  (*out)["radius"] = res.radius;
  (*out)["residual"] = res.residual;
  (*out)["bracket_lo"] = res.bracket_lo;
  (*out)["bracket_hi"] = res.bracket_hi;
  (*out)["iterations"] = res.iterations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bohr: Bohr radii, Cesaro operator majorants and sharpness checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "json";
  std::string out_path;
  double tolerance = 1e-12;
  app.add_option("--format", format, "output format: json|csv|plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--out", out_path, "write output to this path instead of stdout");
  app.add_option("--tolerance", tolerance, "solver and series tolerance")
      ->envname("BOHR_LAB_TOLERANCE");

  // ------------------------------------------------------------------ radius
  auto* cmd_radius = app.add_subcommand("radius", "solve the Bohr radius for one family");
  FamilyFlags rad_ff;
  double rad_p = 1.0;
  add_family_flags(cmd_radius, rad_ff);
  cmd_radius->add_option("--p", rad_p, "exponent p (> 0; p > 2 uses the factor-1 variant)");

  // ------------------------------------------------------------------ table
  auto* cmd_table = app.add_subcommand("table", "sweep a quantity over a grid (CSV friendly)");
  std::string quantity;
  std::string kind = "R1";
  std::string p_range, alpha_range, r_range;
  FamilyFlags tab_ff;
  double tab_p = 1.0, tab_alpha = 0.0, tab_r = 0.5;
  bool tab_has_alpha = false;
  cmd_table->add_option("--quantity", quantity,
                        "radius|closed-form|s-alpha|lerch-majorant|envelope")
      ->required();
  cmd_table->add_option("--family", tab_ff.family, "family for --quantity radius");
  cmd_table->add_option("--alpha", tab_alpha, "alpha (family parameter or majorant order)")
      ->each([&tab_has_alpha](const std::string&) { tab_has_alpha = true; });
  cmd_table->add_option("--a", tab_ff.a)->each([&tab_ff](const std::string&) { tab_ff.has_a = true; });
  cmd_table->add_option("--b", tab_ff.b)->each([&tab_ff](const std::string&) { tab_ff.has_b = true; });
  cmd_table->add_option("--c", tab_ff.c)->each([&tab_ff](const std::string&) { tab_ff.has_c = true; });
  cmd_table->add_option("--p", tab_p, "fixed p for radius sweeps over alpha");
  cmd_table->add_option("--r", tab_r, "fixed r for sweeps over alpha");
  cmd_table->add_option("--kind", kind, "closed form kind: R1|R2|R3");
  cmd_table->add_option("--p-range", p_range, "lo:hi:step");
  cmd_table->add_option("--alpha-range", alpha_range, "lo:hi:step");
  cmd_table->add_option("--r-range", r_range, "lo:hi:step");

  // ------------------------------------------------------------------ verify
  auto* cmd_verify = app.add_subcommand("verify", "sharpness certification for one family");
  FamilyFlags ver_ff;
  double ver_p = 1.0;
  std::uint64_t seed = 1;
  std::size_t samples = 32;
  int below_points = 12;
  std::vector<double> deltas{1e-3, 1e-2};
  add_family_flags(cmd_verify, ver_ff);
  cmd_verify->add_option("--p", ver_p, "exponent p");
  cmd_verify->add_option("--seed", seed, "seed for the Schur witness sampler");
  cmd_verify->add_option("--samples", samples, "number of random Schur witnesses");
  cmd_verify->add_option("--below-points", below_points, "grid points in (0, R]");
  cmd_verify->add_option("--delta", deltas, "offsets above R for the violation search");

  // ------------------------------------------------------------- asymptotics
  auto* cmd_asym = app.add_subcommand("asymptotics",
                                      "growth constants and the lower-bound profile table");
  std::vector<double> asym_rs{0.9, 0.99, 0.999, 0.9999};
  cmd_asym->add_option("--r", asym_rs, "profile sample points in (0,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    OutputRecord rec;

    if (cmd_radius->parsed()) {
      rec.command = "radius";
      bohr::WeightFamily fam = make_family(rad_ff, &rec.parameters);
      rec.parameters["p"] = rad_p;
      rec.parameters["tolerance"] = tolerance;
      bohr::RootResult res;
      if (fam.kind() == bohr::WeightKind::cesaro_basis && rad_p == 1.0) {
        res = bohr::cesaro_radius(fam.alpha(), tolerance);
      } else {
        res = bohr::general_radius({fam, rad_p, tolerance});
      }
      root_to_results(res, &rec.results);
    } else if (cmd_table->parsed()) {
      rec.command = "table";
      rec.parameters["quantity"] = quantity;
      rec.parameters["tolerance"] = tolerance;
      const int n_ranges = !p_range.empty() + !alpha_range.empty() + !r_range.empty();
      if (n_ranges != 1) {
        throw CLI::ValidationError("table needs exactly one of --p-range, --alpha-range, --r-range");
      }

      if (quantity == "radius") {
        if (!alpha_range.empty()) {
          // alpha sweep of the cesaro radius (or power family radius)
          if (tab_ff.family.empty()) tab_ff.family = "cesaro";
          rec.parameters["family"] = tab_ff.family;
          rec.parameters["p"] = tab_p;
          rec.columns = {"alpha", "radius", "residual", "iterations", "status"};
          for (double al : parse_range(alpha_range)) {
            bohr::RootResult res;
            if (tab_ff.family == "cesaro" && tab_p == 1.0) {
              res = bohr::cesaro_radius(al, tolerance);
            } else {
              FamilyFlags ff = tab_ff;
              ff.alpha = al;
              ff.has_alpha = true;
              ordered_json scratch;
              res = bohr::general_radius({make_family(ff, &scratch), tab_p, tolerance});
            }
            ordered_json row;
            row["alpha"] = al;
            row["radius"] = res.radius;
            row["residual"] = res.residual;
            row["iterations"] = res.iterations;
            row["status"] = res.status == bohr::RootStatus::found ? "found" : "no-radius-below-1";
            rec.rows.push_back(row);
          }
        } else if (!p_range.empty()) {
          FamilyFlags ff = tab_ff;
          if (tab_has_alpha) {
            ff.alpha = tab_alpha;
            ff.has_alpha = true;
          }
          ordered_json scratch;
          bohr::WeightFamily fam = make_family(ff, &rec.parameters);
          (void)scratch;
          rec.columns = {"p", "radius", "residual", "iterations", "status"};
          for (double p : parse_range(p_range)) {
            bohr::RootResult res = bohr::general_radius({fam, p, tolerance});
            ordered_json row;
            row["p"] = p;
            row["radius"] = res.radius;
            row["residual"] = res.residual;
            row["iterations"] = res.iterations;
            row["status"] = res.status == bohr::RootStatus::found ? "found" : "no-radius-below-1";
            rec.rows.push_back(row);
          }
        } else {
          throw CLI::ValidationError("radius sweeps take --p-range or --alpha-range");
        }
      } else if (quantity == "closed-form") {
        if (p_range.empty()) throw CLI::ValidationError("closed-form sweeps take --p-range");
        rec.parameters["kind"] = kind;
        bohr::ClosedFormKind k;
        if (kind == "R1") k = bohr::ClosedFormKind::r1;
        else if (kind == "R2") k = bohr::ClosedFormKind::r2;
        else if (kind == "R3") k = bohr::ClosedFormKind::r3;
        else throw CLI::ValidationError("--kind must be R1, R2 or R3");
        rec.columns = {"p", "radius"};
        for (double p : parse_range(p_range)) {
          ordered_json row;
          row["p"] = p;
          row["radius"] = bohr::closed_form_radius(k, p);
          rec.rows.push_back(row);
        }
      } else if (quantity == "s-alpha" || quantity == "lerch-majorant") {
        const bool s_alpha = quantity == "s-alpha";
        if (!r_range.empty()) {
          if (!tab_has_alpha) throw CLI::ValidationError("--r-range sweeps need --alpha");
          rec.parameters["alpha"] = tab_alpha;
          rec.columns = {"r", "value", "error_bound"};
          for (double r : parse_range(r_range)) {
            bohr::EvalResult v;
            if (s_alpha) {
              v = bohr::s_alpha_majorant(tab_alpha, r, tolerance);
            } else {
              bohr::CesaroContext ctx(tab_alpha, 8);
              v = bohr::lerch_majorant(ctx, r, tolerance);
            }
            ordered_json row;
            row["r"] = r;
            row["value"] = v.value;
            row["error_bound"] = v.error_bound;
            rec.rows.push_back(row);
          }
        } else if (!alpha_range.empty()) {
          rec.parameters["r"] = tab_r;
          rec.columns = {"alpha", "value", "error_bound"};
          for (double al : parse_range(alpha_range)) {
            bohr::EvalResult v;
            if (s_alpha) {
              v = bohr::s_alpha_majorant(al, tab_r, tolerance);
            } else {
              bohr::CesaroContext ctx(al, 8);
              v = bohr::lerch_majorant(ctx, tab_r, tolerance);
            }
            ordered_json row;
            row["alpha"] = al;
            row["value"] = v.value;
            row["error_bound"] = v.error_bound;
            rec.rows.push_back(row);
          }
        } else {
          throw CLI::ValidationError("majorant sweeps take --r-range or --alpha-range");
        }
      } else if (quantity == "envelope") {
        if (r_range.empty()) throw CLI::ValidationError("envelope sweeps take --r-range");
        rec.columns = {"r", "bombieri", "bombieri_in_range", "bombieri_bourgain",
                       "bb_in_range", "upper_envelope"};
        for (double r : parse_range(r_range)) {
          auto env = bohr::asymptotics::classical_envelopes(r);
          ordered_json row;
          row["r"] = r;
          row["bombieri"] = env.bombieri;
          row["bombieri_in_range"] = env.bombieri_in_range;
          row["bombieri_bourgain"] = env.bombieri_bourgain;
          row["bb_in_range"] = env.bb_in_range;
          row["upper_envelope"] = bohr::asymptotics::upper_envelope(r);
          rec.rows.push_back(row);
        }
      } else {
        throw CLI::ValidationError("unknown quantity: " + quantity);
      }
      rec.results["rows"] = rec.rows.size();
    } else if (cmd_verify->parsed()) {
      rec.command = "verify";
      bohr::WeightFamily fam = make_family(ver_ff, &rec.parameters);
      rec.parameters["p"] = ver_p;
      rec.parameters["seed"] = seed;
      rec.parameters["samples"] = samples;
      rec.parameters["tolerance"] = tolerance;
      bohr::RootResult res;
      if (fam.kind() == bohr::WeightKind::cesaro_basis && ver_p == 1.0) {
        res = bohr::cesaro_radius(fam.alpha(), tolerance);
      } else {
        res = bohr::general_radius({fam, ver_p, tolerance});
      }
      if (below_points < 1) {
        throw CLI::ValidationError("--below-points must be at least 1");
      }
      if (res.status != bohr::RootStatus::found) {
        rec.results["status"] = "no-radius-below-1";
      } else {
        bohr::CertifyOptions opt;
        opt.seed = seed;
        opt.schur_samples = samples;
        opt.below_points = below_points;
        opt.deltas = deltas;
        auto report = bohr::certify_radius(fam, ver_p, res.radius, opt);
        rec.results = ordered_json::parse(bohr::report_to_json(report));
      }
    } else if (cmd_asym->parsed()) {
      rec.command = "asymptotics";
      rec.parameters["r"] = asym_rs;
      auto rep = bohr::asymptotics::asymptotic_report(asym_rs);
      rec.results["q"] = rep.q;
      rec.results["lower_constant"] = rep.lower_constant;
      rec.results["secondary_constant"] = rep.secondary_constant;
      rec.columns = {"r", "main_scaled", "correction_scaled", "profile_scaled"};
      for (const auto& s : rep.samples) {
        ordered_json row;
        row["r"] = s.r;
        row["main_scaled"] = s.main_scaled;
        row["correction_scaled"] = s.correction_scaled;
        row["profile_scaled"] = s.profile_scaled;
        rec.rows.push_back(row);
      }
    }

    emit(rec, format, out_path);
    return 0;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
