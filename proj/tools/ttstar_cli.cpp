// Command-line laboratory for the radial tt*-Toda monodromy computations.
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "ttstar/fredholm.hpp"
#include "ttstar/matrices.hpp"
#include "ttstar/ode.hpp"
#include "ttstar/region.hpp"
#include "ttstar/rh.hpp"
#include "ttstar/stokes.hpp"

using nlohmann::json;
using namespace ttstar;

namespace {

constexpr const char* kSchema = "v1";

struct OutputSink {
  std::string path;
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream f(path);
      if (!f) throw std::runtime_error("cannot open output file: " + path);
      f << text << "\n";
    }
  }
  void write(const json& j) const { write(j.dump(2)); }
};

json identity_report_json(const IdentityReport& rep) {
  json arr = json::array();
  for (const auto& c : rep.checks)
    arr.push_back({{"name", c.name}, {"residual", c.residual}, {"pass", c.pass()}});
  return arr;
}

int run_verify_identities(CaseId cs, int draws, unsigned seed,
                          const OutputSink& out) {
  json j;
  j["schema"] = kSchema;
  j["case"] = cs.name();
  j["constant_identities"] = identity_report_json(verify_identities(cs));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  double worst_q = 0.0, worst_e = 0.0, worst_j = 0.0, worst_det = 0.0;
  for (int i = 0; i < draws; ++i) {
    StokesParams s(dist(rng), dist(rng), cs);
    worst_q = std::max(worst_q, verify_q_symmetries(s).max_residual());
    if (cs.tag() == CaseId::k4a) {
      worst_e = std::max(worst_e, verify_connection_symmetries(s).max_residual());
      worst_j = std::max(worst_j, verify_circle_jumps(s).max_residual());
      worst_det = std::max(
          worst_det, std::abs(connection_matrix(s, Frac(4, 4)).determinant() -
                              Cplx(-1.0 / 256.0)));
    }
  }
  j["random_draws"] = draws;
  j["seed"] = seed;
  j["max_q_symmetry_residual"] = worst_q;
  if (cs.tag() == CaseId::k4a) {
    j["max_connection_symmetry_residual"] = worst_e;
    j["max_circle_jump_residual"] = worst_j;
    j["max_det_E1_residual"] = worst_det;
  }
  out.write(j);
  return 0;
}

json verdict_json(const StokesParams& s, const RegionVerdict& v) {
  json j;
  j["schema"] = kSchema;
  j["case"] = s.cs.name();
  j["s1"] = s.s1;
  j["s2"] = s.s2;
  j["in_a"] = v.in_a;
  j["in_b"] = v.in_b;
  if (v.roots_imag == 0.0)
    j["quadratic_roots"] = {v.root_lo, v.root_hi};
  else
    j["quadratic_roots_complex"] = {{"re", v.root_lo}, {"im", v.roots_imag}};
  if (v.theta1) j["theta1"] = *v.theta1;
  if (v.theta2) j["theta2"] = *v.theta2;
  j["printed_inequalities_in_a"] = v.printed_inequalities_in_a;
  j["vertex_condition"] = v.vertex_condition;
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

std::string csv_escape(const std::string& s) { return s; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for the radial tt*-Toda equations"};
  app.require_subcommand(1);

  std::string case_name = "4a";
  std::string out_path;
  bool csv = false;
  unsigned seed = 12345;
  int threads = 0;
  app.add_option("--threads", threads, "cap worker threads (0 = all cores)");

  // verify-identities
  auto* cmd_vi = app.add_subcommand("verify-identities",
                                    "constant-matrix identities and the "
                                    "Stokes/connection symmetry suites");
  int draws = 100;
  cmd_vi->add_option("--case", case_name, "4a, 5a or 6a");
  cmd_vi->add_option("--draws", draws, "random parameter draws");
  cmd_vi->add_option("--seed", seed, "rng seed");
  cmd_vi->add_option("--out", out_path, "write JSON here instead of stdout");

  // classify
  auto* cmd_cl = app.add_subcommand("classify",
                                    "region (a)/(b) membership for one point");
  double s1 = 0.0, s2 = 0.0;
  cmd_cl->add_option("--case", case_name);
  cmd_cl->add_option("--s1", s1)->required();
  cmd_cl->add_option("--s2", s2)->required();
  cmd_cl->add_option("--out", out_path);

  // map-gamma
  auto* cmd_mg = app.add_subcommand(
      "map-gamma", "map asymptotic exponents to Stokes parameters or back");
  std::optional<double> g0, g1, ms1, ms2;
  cmd_mg->add_option("--case", case_name);
  cmd_mg->add_option("--gamma0", g0);
  cmd_mg->add_option("--gamma1", g1);
  cmd_mg->add_option("--s1", ms1);
  cmd_mg->add_option("--s2", ms2);
  cmd_mg->add_option("--out", out_path);

  // region-grid
  auto* cmd_rg = app.add_subcommand("region-grid",
                                    "scan a rectangle of Stokes parameters");
  GridSpec spec{-4.0, 4.0, -8.0, 3.0, 0.25};
  cmd_rg->add_option("--case", case_name);
  cmd_rg->add_option("--s1-min", spec.s1_min);
  cmd_rg->add_option("--s1-max", spec.s1_max);
  cmd_rg->add_option("--s2-min", spec.s2_min);
  cmd_rg->add_option("--s2-max", spec.s2_max);
  cmd_rg->add_option("--step", spec.step);
  cmd_rg->add_flag("--csv", csv, "emit CSV instead of JSON");
  cmd_rg->add_option("--out", out_path);

  // integer-points
  auto* cmd_ip = app.add_subcommand(
      "integer-points", "integer Stokes data in region (a), with cyclotomic "
                        "factorizations");
  cmd_ip->add_option("--case", case_name);
  cmd_ip->add_flag("--csv", csv);
  cmd_ip->add_option("--out", out_path);

  // solve-ode
  auto* cmd_so = app.add_subcommand("solve-ode",
                                    "integrate the radial system inward");
  OdeConfig cfg;
  cmd_so->add_option("--s1", s1)->required();
  cmd_so->add_option("--s2", s2)->required();
  cmd_so->add_option("--x-start", cfg.x_start);
  cmd_so->add_option("--x-min", cfg.x_min);
  cmd_so->add_option("--rel-tol", cfg.rel_tol);
  cmd_so->add_option("--abs-tol", cfg.abs_tol);
  cmd_so->add_flag("--csv", csv, "emit the trajectory as CSV");
  cmd_so->add_option("--out", out_path);

  // connection-check
  auto* cmd_cc = app.add_subcommand(
      "connection-check", "round-trip the connection formula through the ODE");
  double cg0 = 0.0, cg1 = 0.0;
  cmd_cc->add_option("--gamma0", cg0)->required();
  cmd_cc->add_option("--gamma1", cg1)->required();
  cmd_cc->add_option("--x-start", cfg.x_start);
  cmd_cc->add_option("--x-min", cfg.x_min);
  cmd_cc->add_option("--rel-tol", cfg.rel_tol);
  cmd_cc->add_option("--out", out_path);

  // fredholm
  auto* cmd_fr = app.add_subcommand(
      "fredholm", "determinant representation q_1..q_4 at one radius");
  double t_radius = 1.0;
  int nodes = 200;
  std::string branch_name = "I";
  cmd_fr->add_option("--s1", s1)->required();
  cmd_fr->add_option("--s2", s2)->required();
  cmd_fr->add_option("--t", t_radius)->required();
  cmd_fr->add_option("--nodes", nodes);
  cmd_fr->add_option("--branch", branch_name, "I or II");
  cmd_fr->add_option("--out", out_path);

  // rh-y0
  auto* cmd_y0 = app.add_subcommand(
      "rh-y0", "leading-order Y(0,x) and the induced (w0, w1)");
  double x_radius = 4.0;
  cmd_y0->add_option("--s1", s1)->required();
  cmd_y0->add_option("--s2", s2)->required();
  cmd_y0->add_option("--x", x_radius)->required();
  cmd_y0->add_option("--out", out_path);

  // solvable-from
  auto* cmd_sf = app.add_subcommand(
      "solvable-from", "positivity threshold of the two-ray jump criterion");
  bool sf_scan = false;
  GridSpec sf_spec{-4.0, 4.0, -8.0, 3.0, 0.5};
  cmd_sf->add_option("--s1", s1);
  cmd_sf->add_option("--s2", s2);
  cmd_sf->add_flag("--scan", sf_scan, "emit a CSV threshold table over a grid");
  cmd_sf->add_option("--s1-min", sf_spec.s1_min);
  cmd_sf->add_option("--s1-max", sf_spec.s1_max);
  cmd_sf->add_option("--s2-min", sf_spec.s2_min);
  cmd_sf->add_option("--s2-max", sf_spec.s2_max);
  cmd_sf->add_option("--step", sf_spec.step);
  cmd_sf->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (threads > 0) {
    // mirrors the THREADS environment override
    setenv("THREADS", std::to_string(threads).c_str(), 1);
  }

  OutputSink out{out_path};
  try {
    CaseId cs = CaseId::parse(case_name);

    if (cmd_vi->parsed()) return run_verify_identities(cs, draws, seed, out);

    if (cmd_cl->parsed()) {
      StokesParams s(s1, s2, cs);
      out.write(verdict_json(s, in_region_b(s)));
      return 0;
    }

    if (cmd_mg->parsed()) {
      json j;
      j["schema"] = kSchema;
      j["case"] = cs.name();
      if (g0 && g1) {
        AsymptoticData g(*g0, *g1, cs);
        StokesParams s = gamma_to_stokes(g);
        j["gamma0"] = g.gamma0;
        j["gamma1"] = g.gamma1;
        j["s1"] = s.s1;
        j["s2"] = s.s2;
      } else if (ms1 && ms2) {
        StokesParams s(*ms1, *ms2, cs);
        AsymptoticData g = stokes_to_gammas(s);
        j["s1"] = s.s1;
        j["s2"] = s.s2;
        j["gamma0"] = g.gamma0;
        j["gamma1"] = g.gamma1;
      } else {
        std::cerr << "map-gamma needs --gamma0/--gamma1 or --s1/--s2\n";
        return 2;
      }
      out.write(j);
      return 0;
    }

    if (cmd_rg->parsed()) {
      auto rows = region_grid(cs, spec, threads);
      if (csv) {
        std::string text = "s1,s2,in_a,in_b";
        for (const auto& r : rows) {
          text += "\n" + std::to_string(r.s1) + "," + std::to_string(r.s2) +
                  "," + (r.in_a ? "1" : "0") + "," + (r.in_b ? "1" : "0");
        }
        out.write(text);
      } else {
        json j;
        j["schema"] = kSchema;
        j["case"] = cs.name();
        j["rows"] = json::array();
        for (const auto& r : rows)
          j["rows"].push_back(
              {{"s1", r.s1}, {"s2", r.s2}, {"in_a", r.in_a}, {"in_b", r.in_b}});
        out.write(j);
      }
      return 0;
    }

    if (cmd_ip->parsed()) {
      auto pts = integer_points(cs);
      if (csv) {
        std::string text = "s1,s2,factorization";
        for (const auto& p : pts)
          text += "\n" + std::to_string(p.s1) + "," + std::to_string(p.s2) +
                  "," + csv_escape(p.factorization.pretty());
        out.write(text);
      } else {
        json j;
        j["schema"] = kSchema;
        j["case"] = cs.name();
        j["count"] = pts.size();
        j["points"] = json::array();
        for (const auto& p : pts)
          j["points"].push_back({{"s1", p.s1},
                                 {"s2", p.s2},
                                 {"factorization", p.factorization.pretty()}});
        out.write(j);
      }
      return 0;
    }

    if (cmd_so->parsed()) {
      StokesParams s(s1, s2, cs);
      RadialSolution sol = integrate_inward(s, cfg);
      if (csv) {
        std::string text = "x,w0,w1,dw0,dw1";
        char buf[160];
        for (std::size_t i = 0; i < sol.xs.size(); ++i) {
          std::snprintf(buf, sizeof buf, "\n%.12e,%.12e,%.12e,%.12e,%.12e",
                        sol.xs[i], sol.w0[i], sol.w1[i], sol.dw0[i],
                        sol.dw1[i]);
          text += buf;
        }
        out.write(text);
        return sol.blew_up ? 1 : 0;
      }
      json j;
      j["schema"] = kSchema;
      j["s1"] = s1;
      j["s2"] = s2;
      j["x_start"] = cfg.x_start;
      j["x_min"] = cfg.x_min;
      j["samples"] = sol.xs.size();
      j["steps"] = sol.steps;
      j["rhs_evals"] = sol.rhs_evals;
      j["blow_up"] = sol.blew_up;
      if (sol.blew_up) {
        j["blowup_x"] = sol.blowup_x;
        out.write(j);
        std::cerr << "solution blew up at x = " << sol.blowup_x << "\n";
        return 1;
      }
      GammaFit fit = extract_gammas(sol, cs);
      j["gamma0"] = fit.gammas.gamma0;
      j["gamma1"] = fit.gammas.gamma1;
      j["fit_residual"] = fit.fit_residual;
      j["slope_alt"] = {fit.slope_alt0, fit.slope_alt1};
      out.write(j);
      return 0;
    }

    if (cmd_cc->parsed()) {
      AsymptoticData g(cg0, cg1, cs);
      ConnectionReport rep = verify_connection(g, cfg);
      json j;
      j["schema"] = kSchema;
      j["gamma0"] = g.gamma0;
      j["gamma1"] = g.gamma1;
      j["s1"] = rep.stokes.s1;
      j["s2"] = rep.stokes.s2;
      j["recovered_gamma0"] = rep.recovered.gamma0;
      j["recovered_gamma1"] = rep.recovered.gamma1;
      j["gamma_residual"] = rep.gamma_residual;
      j["amp_residual_plus"] = rep.amp_residual_plus;
      j["amp_residual_minus"] = rep.amp_residual_minus;
      j["fit_residual"] = rep.fit.fit_residual;
      j["estimator_disagreement"] = rep.fit.estimator_disagreement;
      out.write(j);
      return 0;
    }

    if (cmd_fr->parsed()) {
      StokesParams s(s1, s2, cs);
      Branch branch = branch_name == "II" ? Branch::II : Branch::I;
      TWParams p = params_from_stokes(s, branch);
      FredholmResult r = fredholm_q(t_radius, p, nodes);
      json j;
      j["schema"] = kSchema;
      j["t"] = t_radius;
      j["branch"] = branch_name;
      j["q1"] = r.q[0];
      j["q2"] = r.q[1];
      j["q3"] = r.q[2];
      j["q4"] = r.q[3];
      j["node_count"] = r.node_count;
      j["residuals"] = {{"max_imag", r.max_imag},
                        {"antisymmetry", r.antisym_residual},
                        {"grid_change", r.grid_change}};
      try {
        auto al = alpha_from_params(p);
        j["alpha"] = {al[0], al[1], al[2], al[3]};
      } catch (const PathObstruction& e) {
        j["alpha_error"] = e.what();
      }
      out.write(j);
      return 0;
    }

    if (cmd_y0->parsed()) {
      StokesParams s(s1, s2, cs);
      Y0Leading y = y0_leading(s, x_radius);
      auto [w0, w1] = w_from_y0(y);
      json j;
      j["schema"] = kSchema;
      j["x"] = y.x;
      j["a"] = y.a;
      j["b"] = y.b;
      j["w0"] = w0;
      j["w1"] = w1;
      j["warn_flags"] = json::array();
      if (y.warn_small_x) j["warn_flags"].push_back("leading_order_floor");
      out.write(j);
      return 0;
    }

    if (cmd_sf->parsed()) {
      if (sf_scan) {
        if (sf_spec.step <= 0.0) {
          std::cerr << "step must be positive\n";
          return 2;
        }
        std::string text = "s1,s2,x_threshold";
        char buf[96];
        for (double a = sf_spec.s1_min; a <= sf_spec.s1_max + 1e-9;
             a += sf_spec.step)
          for (double b = sf_spec.s2_min; b <= sf_spec.s2_max + 1e-9;
               b += sf_spec.step) {
            std::snprintf(buf, sizeof buf, "\n%g,%g,%.8f", a, b,
                          solvable_from(StokesParams(a, b, cs)));
            text += buf;
          }
        out.write(text);
        return 0;
      }
      StokesParams s(s1, s2, cs);
      json j;
      j["schema"] = kSchema;
      j["s1"] = s1;
      j["s2"] = s2;
      j["x_threshold"] = solvable_from(s);
      out.write(j);
      return 0;
    }
  } catch (const NotInRegionAError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const BlowUpError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const PathObstruction& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const DeterminantNearZero& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
