#include "glstep/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

#include <boost/math/tools/minima.hpp>

#include "glstep/error.hpp"

namespace glstep {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Input: return "input";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Truncation: return "truncation";
    case ErrorKind::Solver: return "solver";
    case ErrorKind::Conditioning: return "conditioning";
  }
  return "unknown";
}

Grid1D::Grid1D(double left, double right, std::size_t n)
    : left_(left), right_(right), n_(n), h_(0.0) {
  if (!std::isfinite(left) || !std::isfinite(right) || !(left < right))
    fail(ErrorKind::Input, "Grid1D: need finite left < right");
  if (n < 3) fail(ErrorKind::Input, "Grid1D: need at least 3 nodes");
  h_ = (right - left) / static_cast<double>(n - 1);
}

Grid1D Grid1D::with_spacing(double left, double right, double h) {
  if (!(h > 0.0)) fail(ErrorKind::Input, "Grid1D: spacing must be positive");
  const auto cells =
      static_cast<std::size_t>(std::ceil((right - left) / h - 1e-9));
  Grid1D g(left, left + static_cast<double>(cells) * h,
           std::max<std::size_t>(cells, 2) + 1);
  g.h_ = h;
  return g;
}

std::vector<double> Grid1D::nodes() const {
  std::vector<double> t(n_);
  for (std::size_t i = 0; i < n_; ++i) t[i] = node(i);
  return t;
}

std::vector<double> Grid1D::trapezoid_weights() const {
  std::vector<double> w(n_, h_);
  w.front() = 0.5 * h_;
  w.back() = 0.5 * h_;
  return w;
}

double trapezoid(const Grid1D& g, std::span<const double> values) {
  if (values.size() != g.size())
    fail(ErrorKind::Input, "trapezoid: sample count does not match grid");
  double s = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) s += values[i];
  return s * g.spacing();
}

namespace {

void check_tridiagonal(std::span<const double> diag,
                       std::span<const double> offdiag) {
  if (diag.size() < 3)
    fail(ErrorKind::Input, "eigensolver: matrix must be at least 3x3");
  if (offdiag.size() + 1 != diag.size())
    fail(ErrorKind::Input, "eigensolver: offdiag must have n-1 entries");
  for (double d : diag)
    if (!std::isfinite(d)) fail(ErrorKind::Input, "eigensolver: non-finite diagonal");
  for (double e : offdiag)
    if (!std::isfinite(e))
      fail(ErrorKind::Input, "eigensolver: non-finite off-diagonal");
}

double infinity_norm(std::span<const double> d, std::span<const double> e) {
  const std::size_t n = d.size();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = std::abs(d[i]);
    if (i > 0) r += std::abs(e[i - 1]);
    if (i + 1 < n) r += std::abs(e[i]);
    best = std::max(best, r);
  }
  return best;
}

// Solves (T - shift I) x = rhs in place by the Thomas algorithm.
void shifted_solve(std::span<const double> d, std::span<const double> e,
                   double shift, double tiny, std::vector<double>& rhs,
                   std::vector<double>& work) {
  const std::size_t n = d.size();
  work.resize(n);
  double pivot = d[0] - shift;
  if (std::abs(pivot) < tiny) pivot = tiny;
  work[0] = e[0] / pivot;
  rhs[0] /= pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = d[i] - shift - e[i - 1] * work[i - 1];
    if (std::abs(pivot) < tiny) pivot = tiny;
    if (i + 1 < n) work[i] = e[i] / pivot;
    rhs[i] = (rhs[i] - e[i - 1] * rhs[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= work[i] * rhs[i + 1];
}

void apply(std::span<const double> d, std::span<const double> e,
           std::span<const double> x, std::span<double> y) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    double s = d[i] * x[i];
    if (i > 0) s += e[i - 1] * x[i - 1];
    if (i + 1 < n) s += e[i] * x[i + 1];
    y[i] = s;
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void normalize(std::vector<double>& v) {
  const double nrm = std::sqrt(dot(v, v));
  for (double& x : v) x /= nrm;
}

// Bracket [lo, hi] of the k-th eigenvalue by Sturm bisection.
std::pair<double, double> bisect_eigenvalue(std::span<const double> d,
                                            std::span<const double> e,
                                            std::size_t k) {
  const std::size_t n = d.size();
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(e[i - 1]);
    if (i + 1 < n) r += std::abs(e[i]);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const double pad = 1e-12 * std::max(1.0, hi - lo);
  lo -= pad;
  hi += pad;
  for (int it = 0; it < 256; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_eigenvalues_below(d, e, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

}  // namespace

std::size_t count_eigenvalues_below(std::span<const double> diag,
                                    std::span<const double> offdiag,
                                    double x) {
  const std::size_t n = diag.size();
  const double tiny = std::numeric_limits<double>::min() * 1e10;
  std::size_t count = 0;
  double q = diag[0] - x;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(q) < tiny) q = -tiny;
    q = diag[i] - x - offdiag[i - 1] * offdiag[i - 1] / q;
    if (q < 0) ++count;
  }
  return count;
}

EigenResult eigenpair(std::span<const double> diag,
                      std::span<const double> offdiag, std::size_t k,
                      double tol) {
  check_tridiagonal(diag, offdiag);
  if (!(tol > 0.0)) fail(ErrorKind::Input, "eigensolver: tol must be positive");
  const std::size_t n = diag.size();
  if (k >= n) fail(ErrorKind::Input, "eigensolver: index out of range");

  const double norm = infinity_norm(diag, offdiag);
  const double tiny = std::numeric_limits<double>::epsilon() * std::max(1.0, norm);

  std::vector<std::vector<double>> lower;
  for (std::size_t j = 0; j < k; ++j)
    lower.push_back(eigenpair(diag, offdiag, j, tol).vector);

  const auto [lo, hi] = bisect_eigenvalue(diag, offdiag, k);
  (void)hi;
  const double shift = lo - 1e-12 * std::max(1.0, norm);

  std::vector<double> x(n, 1.0), prev, work, ax(n);
  auto deflate = [&](std::vector<double>& v) {
    for (const auto& u : lower) {
      const double c = dot(u, v);
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * u[i];
    }
  };
  // Odd states are orthogonal to the all-ones start; perturb deterministically.
  if (k > 0)
    for (std::size_t i = 0; i < n; ++i)
      x[i] = 1.0 + static_cast<double>(i) / static_cast<double>(n);
  deflate(x);
  normalize(x);

  EigenResult out;
  for (int it = 0; it < 40; ++it) {
    prev = x;
    shifted_solve(diag, offdiag, shift, tiny, x, work);
    deflate(x);
    normalize(x);
    apply(diag, offdiag, x, ax);
    const double rq = dot(x, ax);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res += (ax[i] - rq * x[i]) * (ax[i] - rq * x[i]);
    out.value = rq;
    out.residual = std::sqrt(res);
    const double overlap = std::abs(dot(x, prev));
    if (it > 0 && 1.0 - overlap < 1e-15 && out.residual <= tol * std::max(1.0, norm))
      break;
  }
  double mean = std::accumulate(x.begin(), x.end(), 0.0);
  if (mean < 0)
    for (double& v : x) v = -v;
  out.vector = std::move(x);
  if (!(out.residual <= tol * std::max(1.0, norm)))
    throw SolverError("eigensolver: residual " + sci(out.residual) +
                          " above tolerance after iteration cap",
                      out.vector);
  return out;
}

EigenResult smallest_eigenpair(std::span<const double> diag,
                               std::span<const double> offdiag, double tol) {
  return eigenpair(diag, offdiag, 0, tol);
}

ScalarMinimum minimize_scalar(const std::function<double(double)>& f,
                              double lo, double hi, double tol, int max_iter) {
  if (!std::isfinite(lo) || !std::isfinite(hi))
    fail(ErrorKind::Input, "minimize_scalar: non-finite bracket");
  if (!(lo < hi)) fail(ErrorKind::Input, "minimize_scalar: need lo < hi");
  if (!(tol > 0.0)) fail(ErrorKind::Input, "minimize_scalar: tol must be positive");

  ScalarMinimum out;
  auto wrapped = [&](double x) {
    ++out.evaluations;
    const double v = f(x);
    if (!std::isfinite(v))
      fail(ErrorKind::Input, "minimize_scalar: objective not finite on bracket");
    return v;
  };
  // Brent's tolerance is 2^(1-bits) relative; sqrt(eps) is the floor.
  const int max_bits = std::numeric_limits<double>::digits / 2;
  const int bits = std::clamp(static_cast<int>(std::ceil(1.0 - std::log2(tol))), 8, max_bits);
  std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
  const auto [x, fx] = boost::math::tools::brent_find_minima(wrapped, lo, hi, bits, iters);
  out.x = x;
  out.f = fx;

  // Values within the noise floor of the objective count as ties, so a band
  // that flattens towards an endpoint reports that endpoint.
  const double f_lo = wrapped(lo);
  const double f_hi = wrapped(hi);
  const double noise = 1e-10 * std::max(1.0, std::abs(fx));
  if (f_lo <= fx + noise && f_lo <= f_hi) {
    out.boundary_minimum = true;
    out.at_lower = true;
    out.x = lo;
    out.f = f_lo;
  } else if (f_hi <= fx + noise) {
    out.boundary_minimum = true;
    out.at_lower = false;
    out.x = hi;
    out.f = f_hi;
  }
  return out;
}

DescentReport minimize_energy(const EnergyFunction& energy,
                              std::vector<double>& state,
                              const DescentOptions& opt) {
  const std::size_t n = state.size();
  std::vector<double> grad(n), trial(n), trial_grad(n), dir(n);
  DescentReport rep;

  auto evaluate = [&](std::span<const double> x, std::span<double> g) {
    const double e = energy(x, g);
    if (!std::isfinite(e)) fail(ErrorKind::Input, "minimize_energy: energy is NaN");
    return e;
  };
  auto scaled_norm = [&](std::span<const double> g) {
    return std::sqrt(dot(g, g)) * opt.grad_norm_scale;
  };

  double e = evaluate(state, grad);
  rep.history.push_back(e);

  struct Pair {
    std::vector<double> s, y, hy;  // hy = M^{-1} y when preconditioned
    double rho;
  };
  std::vector<double> scratch(n);
  std::deque<Pair> mem;
  std::vector<double> alpha_buf;

  const double ulp16 = 16 * std::numeric_limits<double>::epsilon();
  const double noise_floor = ulp16 * std::max(std::abs(e), opt.energy_scale);
  for (rep.iterations = 0; rep.iterations < opt.max_iter; ++rep.iterations) {
    rep.grad_norm = scaled_norm(grad);
    if (rep.grad_norm <= opt.grad_tol) {
      rep.converged = true;
      rep.status = DescentStatus::Converged;
      break;
    }

    // Two-loop recursion.
    dir = grad;
    alpha_buf.assign(mem.size(), 0.0);
    for (std::size_t j = mem.size(); j-- > 0;) {
      alpha_buf[j] = mem[j].rho * dot(mem[j].s, dir);
      for (std::size_t i = 0; i < n; ++i) dir[i] -= alpha_buf[j] * mem[j].y[i];
    }
    double gamma = 1.0;
    if (opt.precondition) {
      if (!mem.empty()) gamma = 1.0 / (mem.back().rho * dot(mem.back().y, mem.back().hy));
      opt.precondition(dir, scratch);
      dir.swap(scratch);
    } else if (!mem.empty()) {
      gamma = 1.0 / (mem.back().rho * dot(mem.back().y, mem.back().y));
    }
    for (double& v : dir) v *= gamma;
    for (std::size_t j = 0; j < mem.size(); ++j) {
      const double beta = mem[j].rho * dot(mem[j].y, dir);
      for (std::size_t i = 0; i < n; ++i) dir[i] += (alpha_buf[j] - beta) * mem[j].s[i];
    }
    for (double& v : dir) v = -v;
    double slope = dot(grad, dir);
    if (!(slope < 0.0)) {
      mem.clear();
      for (std::size_t i = 0; i < n; ++i) dir[i] = -grad[i];
      slope = dot(grad, dir);
    }

    double step = 1.0;
    if (mem.empty() && !opt.precondition) step = std::min(1.0, 1.0 / std::sqrt(-slope));
    bool accepted = false;
    double e_new = e;
    for (int ls = 0; ls < 60; ++ls) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = state[i] + step * dir[i];
      if (opt.project) opt.project(trial);
      e_new = evaluate(trial, trial_grad);
      if (e_new <= e + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      // Near convergence the decrease drops below energy round-off; accept
      // a step whose energy change is at noise level if the directional
      // derivative shrank (approximate Wolfe test).
      const double noise = std::max(noise_floor, ulp16 * std::abs(e));
      if (e_new <= e + noise && std::abs(dot(trial_grad, dir)) <= 0.8 * std::abs(slope)) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      rep.status = DescentStatus::LineSearchFailed;
      break;
    }

    Pair p{std::vector<double>(n), std::vector<double>(n), {}, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      p.s[i] = trial[i] - state[i];
      p.y[i] = trial_grad[i] - grad[i];
    }
    const double sy = dot(p.s, p.y);
    if (sy > 1e-12 * std::sqrt(dot(p.s, p.s) * dot(p.y, p.y)) && sy > 0.0) {
      p.rho = 1.0 / sy;
      if (opt.precondition) {
        p.hy.resize(n);
        opt.precondition(p.y, p.hy);
      }
      mem.push_back(std::move(p));
      if (static_cast<int>(mem.size()) > opt.memory) mem.pop_front();
    }
    state.swap(trial);
    grad.swap(trial_grad);
    e = e_new;
    rep.history.push_back(e);
  }
  rep.energy = e;
  rep.grad_norm = scaled_norm(grad);
  if (!rep.converged && rep.grad_norm <= opt.grad_tol) {
    rep.converged = true;
    rep.status = DescentStatus::Converged;
  }
  return rep;
}

std::vector<double> finite_difference_gradient(const EnergyFunction& energy,
                                               std::span<const double> x,
                                               double step) {
  std::vector<double> xp(x.begin(), x.end()), g(x.size()), scratch(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double orig = xp[i];
    xp[i] = orig + step;
    const double ep = energy(xp, scratch);
    xp[i] = orig - step;
    const double em = energy(xp, scratch);
    xp[i] = orig;
    g[i] = (ep - em) / (2 * step);
  }
  return g;
}

void solve_tridiagonal(std::span<const double> d, std::span<const double> e,
                       std::span<const double> rhs, std::span<double> x) {
  const std::size_t n = d.size();
  thread_local std::vector<double> c;
  c.resize(n);
  double pivot = d[0];
  c[0] = n > 1 ? e[0] / pivot : 0.0;
  x[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = d[i] - e[i - 1] * c[i - 1];
    if (i + 1 < n) c[i] = e[i] / pivot;
    x[i] = (rhs[i] - e[i - 1] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double xtol, int max_iter) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0) == (fhi < 0))
    fail(ErrorKind::Input, "bisect_root: endpoints do not bracket a sign change");
  for (int it = 0; it < max_iter && hi - lo > xtol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace glstep
