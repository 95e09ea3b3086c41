#include "ttstar/ode.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "ttstar/region.hpp"

namespace ttstar {

namespace {
constexpr double kExpGuard = 700.0;

double guarded_exp(double arg, double x) {
  if (arg > kExpGuard) throw BlowUpError(x);
  return std::exp(arg);
}
}  // namespace

OdeState ode_rhs(double x, const OdeState& y, int a, int b) {
  if (x <= 0.0) throw std::invalid_argument("radius must be positive");
  double u = y[0], v = y[1], du = y[2], dv = y[3];
  double eau = guarded_exp(a * u, x);
  double evu = guarded_exp(v - u, x);
  double ebv = guarded_exp(-b * v, x);
  return {du, dv, 4.0 * (eau - evu) - du / x, 4.0 * (evu - ebv) - dv / x};
}

OdeState asymptotic_init(const StokesParams& s, double x_start) {
  if (x_start <= 0.0) throw std::invalid_argument("x_start must be positive");
  const double r2 = std::sqrt(2.0);
  double pref = std::pow(kPi * x_start, -0.5);
  // w0+w1 and w0-w1, the two decaying modes
  double ap = -s.s1 * std::pow(2.0, -0.75) * pref * std::exp(-2.0 * r2 * x_start);
  double am = s.s2 * std::pow(2.0, -1.5) * pref * std::exp(-4.0 * x_start);
  if (std::abs(ap) >= 1e-3 || std::abs(am) >= 1e-3)
    throw std::invalid_argument(
        "x_start too small: asymptotic amplitude exceeds 1e-3");
  double dap = ap * (-2.0 * r2 - 0.5 / x_start);
  double dam = am * (-4.0 - 0.5 / x_start);
  // u = 2 w0 = ap + am, v = 2 w1 = ap - am
  return {ap + am, ap - am, dap + dam, dap - dam};
}

RadialSolution integrate_inward(const StokesParams& s, const OdeConfig& cfg) {
  namespace odeint = boost::numeric::odeint;
  if (cfg.x_min >= cfg.x_start || cfg.x_min <= 0.0)
    throw std::invalid_argument("need 0 < x_min < x_start");
  if (cfg.rel_tol <= 0.0 || cfg.abs_tol <= 0.0)
    throw std::invalid_argument("tolerances must be positive");

  RadialSolution sol;
  long rhs_evals = 0;

  // Integrate in tau = log x with state (u, v, x u', x v'); the radius stays
  // positive for any step size and the small-x log regime flattens out.
  auto rhs_tau = [&](const OdeState& y, OdeState& dydt, double tau) {
    ++rhs_evals;
    double x = std::exp(tau);
    double u = y[0], v = y[1];
    double eau = guarded_exp(cfg.a * u, x);
    double evu = guarded_exp(v - u, x);
    double ebv = guarded_exp(-cfg.b * v, x);
    double x2 = x * x;
    dydt = {y[2], y[3], 4.0 * x2 * (eau - evu), 4.0 * x2 * (evu - ebv)};
  };

  double tau0 = std::log(cfg.x_start), tau1 = std::log(cfg.x_min);
  long nobs = std::max(2L, static_cast<long>(std::ceil(
                               (tau0 - tau1) / std::log(10.0) *
                               cfg.samples_per_decade)) + 1);

  auto record = [&sol](double tau, const OdeState& y) {
    double x = std::exp(tau);
    sol.xs.push_back(x);
    sol.w0.push_back(0.5 * y[0]);
    sol.w1.push_back(0.5 * y[1]);
    sol.dw0.push_back(0.5 * y[2] / x);
    sol.dw1.push_back(0.5 * y[3] / x);
  };

  OdeState yx = asymptotic_init(s, cfg.x_start);
  OdeState y = {yx[0], yx[1], cfg.x_start * yx[2], cfg.x_start * yx[3]};
  auto stepper = odeint::make_dense_output(cfg.abs_tol, cfg.rel_tol,
                                           odeint::runge_kutta_dopri5<OdeState>());
  stepper.initialize(y, tau0, -1e-2);

  auto obs_tau = [&](long i) {
    return tau0 + (tau1 - tau0) * static_cast<double>(i) / (nobs - 1);
  };
  long next_obs = 0;
  record(obs_tau(next_obs++), y);
  const long max_steps = 5'000'000;
  try {
    while (stepper.current_time() > tau1) {
      stepper.do_step(rhs_tau);
      ++sol.steps;
      if (sol.steps > max_steps)
        throw std::runtime_error("step limit exceeded (step-size underflow?)");
      OdeState yi;
      while (next_obs < nobs && obs_tau(next_obs) >= stepper.current_time()) {
        stepper.calc_state(obs_tau(next_obs), yi);
        record(obs_tau(next_obs), yi);
        ++next_obs;
      }
    }
    if (!sol.xs.empty()) sol.xs.back() = cfg.x_min;  // pin the endpoint
  } catch (const BlowUpError& e) {
    sol.blew_up = true;
    sol.blowup_x = e.x;
  }
  sol.rhs_evals = rhs_evals;
  return sol;
}

std::pair<double, double> w_at(const RadialSolution& sol, double x) {
  if (sol.xs.size() < 2 || x > sol.xs.front() || x < sol.xs.back())
    throw std::invalid_argument("radius outside the sampled trajectory");
  // xs is decreasing; find the bracketing pair
  auto it = std::lower_bound(sol.xs.begin(), sol.xs.end(), x,
                             [](double a, double b) { return a > b; });
  std::size_t hi = static_cast<std::size_t>(it - sol.xs.begin());
  if (hi == 0) hi = 1;
  if (hi >= sol.xs.size()) hi = sol.xs.size() - 1;
  std::size_t lo = hi - 1;
  double t = (std::log(x) - std::log(sol.xs[lo])) /
             (std::log(sol.xs[hi]) - std::log(sol.xs[lo]));
  return {sol.w0[lo] + t * (sol.w0[hi] - sol.w0[lo]),
          sol.w1[lo] + t * (sol.w1[hi] - sol.w1[lo])};
}

GammaFit extract_gammas(const RadialSolution& sol, CaseId cs) {
  if (sol.blew_up)
    throw BlowUpError(sol.blowup_x);
  if (sol.xs.empty() || sol.xs.back() > 1e-3 + 1e-12)
    throw std::invalid_argument("trajectory does not reach x <= 1e-3");
  double x_min = sol.xs.back();

  // least squares of 2 w_i against log x on [x_min, 10 x_min]
  auto fit = [&](const std::vector<double>& w, double& slope, double& res) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long n = 0;
    for (std::size_t i = 0; i < sol.xs.size(); ++i) {
      if (sol.xs[i] > 10.0 * x_min) continue;
      double lx = std::log(sol.xs[i]);
      double yv = 2.0 * w[i];
      sx += lx; sy += yv; sxx += lx * lx; sxy += lx * yv;
      ++n;
    }
    if (n < 4) throw std::invalid_argument("too few samples in the fit window");
    double det = n * sxx - sx * sx;
    slope = (n * sxy - sx * sy) / det;
    double icpt = (sy - slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < sol.xs.size(); ++i) {
      if (sol.xs[i] > 10.0 * x_min) continue;
      double d = 2.0 * w[i] - (slope * std::log(sol.xs[i]) + icpt);
      ss += d * d;
    }
    res = std::sqrt(ss / n);
  };

  GammaFit out;
  double g0, g1, r0, r1;
  fit(sol.w0, g0, r0);
  fit(sol.w1, g1, r1);
  out.gammas = AsymptoticData(g0, g1, cs);
  out.fit_residual = std::max(r0, r1);
  if (out.fit_residual > 0.05)
    throw std::runtime_error(
        "log fit residual too large: trajectory not in the logarithmic regime");
  out.slope_alt0 = 2.0 * x_min * sol.dw0.back();
  out.slope_alt1 = 2.0 * x_min * sol.dw1.back();
  out.estimator_disagreement =
      std::max(std::abs(g0 - out.slope_alt0) / std::max(std::abs(g0), 1.0),
               std::abs(g1 - out.slope_alt1) / std::max(std::abs(g1), 1.0));
  return out;
}

ConnectionReport verify_connection(const AsymptoticData& g,
                                   const OdeConfig& cfg) {
  ConnectionReport rep;
  rep.stokes = gamma_to_stokes(g);
  RadialSolution sol = integrate_inward(rep.stokes, cfg);
  if (sol.blew_up) throw BlowUpError(sol.blowup_x);
  rep.fit = extract_gammas(sol, g.cs);
  rep.recovered = rep.fit.gammas;
  rep.gamma_residual = std::max(
      std::abs(rep.recovered.gamma0 - g.gamma0) / std::max(std::abs(g.gamma0), 1.0),
      std::abs(rep.recovered.gamma1 - g.gamma1) / std::max(std::abs(g.gamma1), 1.0));

  // decay-amplitude residuals at x = 4
  double xs = 4.0;
  auto [w0, w1] = w_at(sol, xs);
  const double r2 = std::sqrt(2.0);
  double fp = -rep.stokes.s1 * std::pow(2.0, -0.75) * std::pow(kPi * xs, -0.5) *
              std::exp(-2.0 * r2 * xs);
  double fm = rep.stokes.s2 * std::pow(2.0, -1.5) * std::pow(kPi * xs, -0.5) *
              std::exp(-4.0 * xs);
  double denom = std::max({std::abs(fp), std::abs(fm), 1e-300});
  rep.amp_residual_plus = std::abs(w0 + w1 - fp) / denom;
  rep.amp_residual_minus = std::abs(w0 - w1 - fm) / denom;
  return rep;
}

LimitReport verify_decay_limits(const RadialSolution& sol) {
  LimitReport rep;
  if (sol.xs.empty()) return rep;
  rep.winf_max = std::max(std::abs(sol.w0.front()), std::abs(sol.w1.front()));
  rep.init_amplitude = rep.winf_max;
  double b0 = 0.0, b1 = 0.0;
  for (std::size_t i = 0; i < sol.xs.size(); ++i) {
    if (sol.xs[i] >= 0.1) continue;
    double denom = std::abs(std::log(sol.xs[i]));
    b0 = std::max(b0, std::abs(2.0 * sol.w0[i]) / denom);
    b1 = std::max(b1, std::abs(2.0 * sol.w1[i]) / denom);
  }
  rep.log_bound_beta0 = b0;
  rep.log_bound_beta1 = b1;
  double lx = std::abs(std::log(sol.xs.back()));
  rep.slope_vs_gamma0 = std::abs(2.0 * sol.w0.back()) / lx;
  rep.slope_vs_gamma1 = std::abs(2.0 * sol.w1.back()) / lx;
  rep.bounded = std::isfinite(b0) && std::isfinite(b1) && !sol.blew_up;
  return rep;
}

}  // namespace ttstar
