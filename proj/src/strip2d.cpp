#include "glstep/strip2d.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <mutex>
#include <numbers>

#include "glstep/error.hpp"
#include "glstep/parallel.hpp"

namespace glstep {

namespace {

std::mutex& fftw_planner_lock() {
  static std::mutex m;
  return m;
}

std::size_t whole_cells(double length, double h, const char* what) {
  const double c = length / h;
  const double r = std::round(c);
  if (!(r >= 1.0) || std::abs(c - r) > 1e-9 * std::max(1.0, c))
    fail(ErrorKind::Input, std::string("strip: ") + what + " must be an integer multiple of the spacing");
  return static_cast<std::size_t>(r);
}

void check_finite(std::span<const double> x) {
  for (double v : x)
    if (!std::isfinite(v)) fail(ErrorKind::Input, "strip_energy: NaN in state");
}

}  // namespace

double StripDisc::default_spacing(double b) {
  return std::min(0.05, 1.0 / (4.0 * std::sqrt(std::max(b, 1e-12))));
}

void StripDisc::validate() const {
  if (!std::isfinite(a) || a == 0.0 || a < -1.0 || a >= 1.0)
    fail(ErrorKind::Domain, "strip: a must lie in [-1, 1) without 0");
  if (!(b > 0.0) || !std::isfinite(b)) fail(ErrorKind::Domain, "strip: b must be positive");
  if (!(R > 0.0) || !std::isfinite(R)) fail(ErrorKind::Input, "strip: R must be positive");
  if (!(m >= 4.0) || !std::isfinite(m)) fail(ErrorKind::Input, "strip: m must be at least 4");
  if (!(hx > 0.0) || !(hy > 0.0)) fail(ErrorKind::Input, "strip: spacings must be positive");
  if (whole_cells(R, hx, "R") < 2) fail(ErrorKind::Input, "strip: need at least one interior column");
  whole_cells(m, hy, "m");
}

std::size_t StripDisc::nx() const { return whole_cells(R, hx, "R") - 1; }
std::size_t StripDisc::ny() const { return 2 * whole_cells(m, hy, "m") - 1; }

// Row-wise sine transforms for the preconditioner.
struct StripLattice::Transform {
  fftw_plan plan = nullptr;
  std::vector<double> diag;  // per mode k, per row j
  mutable std::vector<double> buf;

  ~Transform() {
    if (plan) {
      std::lock_guard<std::mutex> g(fftw_planner_lock());
      fftw_destroy_plan(plan);
    }
  }
};

StripLattice::StripLattice(const StripDisc& disc) : disc_(disc) {
  disc_.validate();
  nx_ = disc_.nx();
  ny_ = disc_.ny();
  cx_ = disc_.b * disc_.hy / disc_.hx;
  cy_ = disc_.b * disc_.hx / disc_.hy;
  w_ = disc_.hx * disc_.hy;
  cos_.resize(ny_);
  sin_.resize(ny_);
  for (std::size_t j = 0; j < ny_; ++j) {
    const double y = disc_.x2(j);
    const double th = disc_.sigma(y) * y * disc_.hx;
    cos_[j] = std::cos(th);
    sin_[j] = std::sin(th);
  }

  dst_ = std::make_unique<Transform>();
  dst_->buf.resize(nx_ * ny_);
  {
    std::lock_guard<std::mutex> g(fftw_planner_lock());
    const int n = static_cast<int>(nx_);
    std::vector<double> probe(nx_);
    dst_->plan = fftw_plan_r2r_1d(n, probe.data(), probe.data(), FFTW_RODFT00,
                                  FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  if (!dst_->plan) fail(ErrorKind::Solver, "strip: FFTW planning failed");
  dst_->diag.resize(nx_ * ny_);
  const double pi = std::numbers::pi;
  for (std::size_t k = 0; k < nx_; ++k) {
    const double ck = std::cos(pi * static_cast<double>(k + 1) / static_cast<double>(nx_ + 1));
    for (std::size_t j = 0; j < ny_; ++j)
      dst_->diag[k * ny_ + j] = 2.0 * cx_ * (2.0 - 2.0 * cos_[j] * ck) + 4.0 * cy_ + 2.0 * w_;
  }
}

StripLattice::~StripLattice() = default;

double StripLattice::energy(std::span<const double> x, Kernel k) const {
  if (x.size() != unknowns()) fail(ErrorKind::Input, "strip_energy: state size does not match the grid");
  check_finite(x);
  return k == Kernel::Serial ? serial_energy(x, nullptr) : parallel_energy(x, nullptr);
}

double StripLattice::energy_and_gradient(std::span<const double> x, std::span<double> grad, Kernel k) const {
  if (x.size() != unknowns() || grad.size() != unknowns())
    fail(ErrorKind::Input, "strip_energy: state size does not match the grid");
  return k == Kernel::Serial ? serial_energy(x, grad.data()) : parallel_energy(x, grad.data());
}

// Reference kernel: loops over bonds and scatters into both endpoints.
double StripLattice::serial_energy(std::span<const double> x, double* grad) const {
  using C = std::complex<double>;
  const std::size_t nx = nx_, ny = ny_;
  auto at = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> C {
    if (i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(nx) || j >= static_cast<std::ptrdiff_t>(ny)) return 0.0;
    const std::size_t n = static_cast<std::size_t>(j) * nx + static_cast<std::size_t>(i);
    return {x[2 * n], x[2 * n + 1]};
  };
  auto add = [&](std::ptrdiff_t i, std::ptrdiff_t j, C g) {
    if (!grad || i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(nx) || j >= static_cast<std::ptrdiff_t>(ny)) return;
    const std::size_t n = static_cast<std::size_t>(j) * nx + static_cast<std::size_t>(i);
    grad[2 * n] += g.real();
    grad[2 * n + 1] += g.imag();
  };
  if (grad) std::fill(grad, grad + unknowns(), 0.0);

  double kin_x = 0.0, kin_y = 0.0, pot = 0.0;
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(ny); ++j) {
    const C link(cos_[static_cast<std::size_t>(j)], sin_[static_cast<std::size_t>(j)]);
    for (std::ptrdiff_t i = -1; i < static_cast<std::ptrdiff_t>(nx); ++i) {
      const C d = link * at(i + 1, j) - at(i, j);
      kin_x += std::norm(d);
      add(i, j, -2.0 * cx_ * d);
      add(i + 1, j, 2.0 * cx_ * std::conj(link) * d);
    }
  }
  for (std::ptrdiff_t j = -1; j < static_cast<std::ptrdiff_t>(ny); ++j)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(nx); ++i) {
      const C d = at(i, j + 1) - at(i, j);
      kin_y += std::norm(d);
      add(i, j, -2.0 * cy_ * d);
      add(i, j + 1, 2.0 * cy_ * d);
    }
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(ny); ++j)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(nx); ++i) {
      const C u = at(i, j);
      const double r = std::norm(u);
      pot += -r + 0.5 * r * r;
      add(i, j, 2.0 * w_ * (r - 1.0) * u);
    }
  return cx_ * kin_x + cy_ * kin_y + w_ * pot;
}

// Row-parallel kernel: each node gathers its own gradient; row energies are
// summed in row order so the result does not depend on the thread count.
double StripLattice::parallel_energy(std::span<const double> x, double* grad) const {
  const std::size_t nx = nx_, ny = ny_;
  std::vector<double> rows(ny);
  const double* p = x.data();
  parallel_for(ny, [&](std::size_t j) {
    const double c = cos_[j], s = sin_[j];
    const double* row = p + 2 * j * nx;
    const double* up = j + 1 < ny ? row + 2 * nx : nullptr;
    const double* down = j > 0 ? row - 2 * nx : nullptr;
    double e = 0.0;
    for (std::size_t i = 0; i < nx; ++i) {
      const double ur = row[2 * i], ui = row[2 * i + 1];
      const double rr = i + 1 < nx ? row[2 * i + 2] : 0.0, ri = i + 1 < nx ? row[2 * i + 3] : 0.0;
      const double lr = i > 0 ? row[2 * i - 2] : 0.0, li = i > 0 ? row[2 * i - 1] : 0.0;
      const double vr = up ? up[2 * i] : 0.0, vi = up ? up[2 * i + 1] : 0.0;
      const double dr = down ? down[2 * i] : 0.0, di = down ? down[2 * i + 1] : 0.0;
      // e^{i th} u_{i+1} - u_i
      const double hr = c * rr - s * ri - ur, hi = s * rr + c * ri - ui;
      e += cx_ * (hr * hr + hi * hi);
      if (i == 0) e += cx_ * (ur * ur + ui * ui);
      e += cy_ * ((vr - ur) * (vr - ur) + (vi - ui) * (vi - ui));
      if (j == 0) e += cy_ * (ur * ur + ui * ui);
      const double r = ur * ur + ui * ui;
      e += w_ * (-r + 0.5 * r * r);
      if (grad) {
        // 2u - e^{i th} u_{i+1} - e^{-i th} u_{i-1}
        const double xr = 2 * ur - (c * rr - s * ri) - (c * lr + s * li);
        const double xi = 2 * ui - (s * rr + c * ri) - (c * li - s * lr);
        const double yr = 2 * ur - vr - dr, yi = 2 * ui - vi - di;
        double* g = grad + 2 * (j * nx + i);
        g[0] = 2 * cx_ * xr + 2 * cy_ * yr + 2 * w_ * (r - 1.0) * ur;
        g[1] = 2 * cx_ * xi + 2 * cy_ * yi + 2 * w_ * (r - 1.0) * ui;
      }
    }
    rows[j] = e;
  });
  double e = 0.0;
  for (double v : rows) e += v;
  return e;
}

double StripLattice::energy_magnitude(std::span<const double> x) const {
  const std::size_t nx = nx_, ny = ny_;
  double kin = 0.0, pot = 0.0;
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      const std::size_t n = j * nx + i;
      const double r = x[2 * n] * x[2 * n] + x[2 * n + 1] * x[2 * n + 1];
      kin += 4.0 * (cx_ + cy_) * r;  // bounds the bond sums
      pot += w_ * (r + 0.5 * r * r);
    }
  return kin + pot;
}

void StripLattice::precondition(std::span<const double> in, std::span<double> out) const {
  const std::size_t nx = nx_, ny = ny_;
  std::vector<double>& t = dst_->buf;
  const double scale = 1.0 / (2.0 * static_cast<double>(nx + 1));
  for (int comp = 0; comp < 2; ++comp) {
    for (std::size_t n = 0; n < nx * ny; ++n) t[n] = in[2 * n + comp];
    parallel_for(ny, [&](std::size_t j) { fftw_execute_r2r(dst_->plan, t.data() + j * nx, t.data() + j * nx); });
    parallel_for(nx, [&](std::size_t k) {
      std::vector<double> col(ny), sol(ny), off(ny > 0 ? ny - 1 : 0, -2.0 * cy_);
      for (std::size_t j = 0; j < ny; ++j) col[j] = t[j * nx + k];
      solve_tridiagonal(std::span<const double>(dst_->diag.data() + k * ny, ny), off, col, sol);
      for (std::size_t j = 0; j < ny; ++j) t[j * nx + k] = sol[j] * scale;
    });
    parallel_for(ny, [&](std::size_t j) { fftw_execute_r2r(dst_->plan, t.data() + j * nx, t.data() + j * nx); });
    for (std::size_t n = 0; n < nx * ny; ++n) out[2 * n + comp] = t[n];
  }
}

double StripLattice::euler_lagrange_residual(std::span<const double> x) const {
  std::vector<double> g(unknowns());
  parallel_energy(x, g.data());
  double worst = 0.0;
  for (std::size_t n = 0; n < nx_ * ny_; ++n)
    worst = std::max(worst, std::hypot(g[2 * n], g[2 * n + 1]) / (2.0 * w_));
  return worst;
}

double strip_cutoff(double s) {
  const double r = std::abs(s);
  if (r <= 0.25) return 1.0;
  if (r >= 0.5) return 0.0;
  const double c = std::cos(2.0 * std::numbers::pi * (r - 0.25));
  return c * c;
}

double strip_cutoff_derivative(double s) {
  const double r = std::abs(s);
  if (r <= 0.25 || r >= 0.5) return 0.0;
  const double d = -2.0 * std::numbers::pi * std::sin(4.0 * std::numbers::pi * (r - 0.25));
  return s < 0.0 ? -d : d;
}

namespace {

std::span<const double> as_reals(const std::vector<std::complex<double>>& v) {
  return {reinterpret_cast<const double*>(v.data()), 2 * v.size()};
}

std::span<double> as_reals(std::vector<std::complex<double>>& v) {
  return {reinterpret_cast<double*>(v.data()), 2 * v.size()};
}

double sup_norm(const std::vector<std::complex<double>>& v) {
  double s = 0.0;
  for (const auto& z : v) s = std::max(s, std::abs(z));
  return s;
}

void clamp_modulus(std::span<double> x) {
  for (std::size_t n = 0; 2 * n < x.size(); ++n) {
    const double r2 = x[2 * n] * x[2 * n] + x[2 * n + 1] * x[2 * n + 1];
    if (r2 > 1.0) {
      const double s = 1.0 / std::sqrt(r2);
      x[2 * n] *= s;
      x[2 * n + 1] *= s;
    }
  }
}

}  // namespace

double strip_energy(const StripState& s) {
  const StripLattice lat(s.disc);
  return lat.energy(as_reals(s.psi));
}

StripState strip_trial_state(const StripDisc& disc, const DispersionCurve& curve, double amplitude) {
  disc.validate();
  if (curve.a != disc.a) fail(ErrorKind::Input, "strip: dispersion curve belongs to a different a");
  const double xi = curve.zeta ? *curve.zeta : 3.0;
  const FiberGround g = fiber_ground(disc.a, xi);
  double nu = curve.nu;
  double mu = curve.beta;
  if (!curve.zeta) {
    std::vector<double> f4(g.f.size());
    for (std::size_t i = 0; i < f4.size(); ++i) f4[i] = std::pow(g.f[i], 4);
    nu = trapezoid(g.op.grid(), f4);
    mu = g.value;
  }
  const double t = amplitude >= 0.0 ? amplitude : std::sqrt(std::max(0.0, 1.0 - disc.b * mu) / nu);

  const Grid1D fg = g.op.grid();
  auto phi = [&](double y) {
    const double pos = (y - fg.left()) / fg.spacing();
    if (pos <= 0.0 || pos >= static_cast<double>(fg.size() - 1)) return 0.0;
    const auto k = static_cast<std::size_t>(pos);
    const double w = pos - static_cast<double>(k);
    return (1.0 - w) * g.f[k] + w * g.f[k + 1];
  };

  StripState s;
  s.disc = disc;
  const std::size_t nx = disc.nx(), ny = disc.ny();
  s.psi.resize(nx * ny);
  for (std::size_t j = 0; j < ny; ++j) {
    const double py = phi(disc.x2(j));
    for (std::size_t i = 0; i < nx; ++i) {
      const double x = disc.x1(i);
      s.psi[j * nx + i] = std::polar(t * strip_cutoff(x / disc.R) * py, xi * x);
    }
  }
  clamp_modulus(as_reals(s.psi));
  s.energy = strip_energy(s);
  s.sup_norm = sup_norm(s.psi);
  return s;
}

StripState embed_state(const StripState& s, const StripDisc& target) {
  target.validate();
  if (std::abs(s.disc.hx - target.hx) > 1e-12 || std::abs(s.disc.hy - target.hy) > 1e-12 ||
      s.disc.a != target.a || s.disc.b != target.b)
    fail(ErrorKind::Input, "embed_state: discs differ in spacing or parameters");
  const std::size_t nx0 = s.disc.nx(), ny0 = s.disc.ny();
  const std::size_t nx1 = target.nx(), ny1 = target.ny();
  if (nx1 < nx0 || ny1 < ny0 || (nx1 - nx0) % 2 || (ny1 - ny0) % 2)
    fail(ErrorKind::Input, "embed_state: target grid does not contain the source grid symmetrically");
  const std::size_t oi = (nx1 - nx0) / 2, oj = (ny1 - ny0) / 2;
  StripState out;
  out.disc = target;
  out.psi.assign(nx1 * ny1, 0.0);
  for (std::size_t j = 0; j < ny0; ++j)
    for (std::size_t i = 0; i < nx0; ++i) out.psi[(j + oj) * nx1 + i + oi] = s.psi[j * nx0 + i];
  out.energy = strip_energy(out);
  out.sup_norm = s.sup_norm;
  return out;
}

StripState minimize_strip(const StripDisc& disc, const DispersionCurve& curve, const StripOptions& opt,
                          const StripState* warm_start) {
  const StripLattice lat(disc);
  StripState s = strip_trial_state(disc, curve, opt.amplitude);
  if (warm_start) {
    StripState w = embed_state(*warm_start, disc);
    if (w.energy < s.energy) s = std::move(w);
  }
  std::vector<double> x(as_reals(s.psi).begin(), as_reals(s.psi).end());

  DescentOptions d = opt.descent;
  d.grad_norm_scale = 1.0 / std::sqrt(disc.hx * disc.hy);
  d.energy_scale = std::max(d.energy_scale, lat.energy_magnitude(x));
  d.project = clamp_modulus;
  d.precondition = [&lat](std::span<const double> in, std::span<double> out) { lat.precondition(in, out); };
  const Kernel kernel = opt.kernel;
  const DescentReport rep = minimize_energy(
      [&](std::span<const double> v, std::span<double> g) { return lat.energy_and_gradient(v, g, kernel); }, x, d);
  if (!rep.converged)
    throw SolverError("minimize_strip: descent stopped (" +
                          std::string(rep.status == DescentStatus::LineSearchFailed ? "line search" : "iteration cap") +
                          ") after " + std::to_string(rep.iterations) + " steps with gradient norm " +
                          sci(rep.grad_norm),
                      x);
  s.iterations = rep.iterations;
  s.converged = true;
  // psi = 0 is admissible with energy 0 and zero gradient; keep it when the
  // descent did not get below it.
  if (lat.energy(x) > 0.0) std::fill(x.begin(), x.end(), 0.0);
  std::copy(x.begin(), x.end(), as_reals(s.psi).begin());
  s.energy = lat.energy(x);
  s.sup_norm = sup_norm(s.psi);
  s.grad_norm = s.sup_norm == 0.0 ? 0.0 : rep.grad_norm;
  return s;
}

StripState minimize_strip(const StripDisc& disc, const StripOptions& opt) {
  return minimize_strip(disc, beta(disc.a), opt);
}

StripGround strip_ground_state(double a, double b, double R, const DispersionCurve& curve,
                               const StripGroundOptions& opt) {
  if (a < 0.0 && !(b >= 1.0 / std::abs(a)))
    fail(ErrorKind::Domain, "strip_ground_state: b must be at least 1/|a| = " + std::to_string(1.0 / std::abs(a)));
  if (opt.m_schedule.empty()) fail(ErrorKind::Input, "strip_ground_state: empty m schedule");
  StripGround out;
  std::optional<StripState> prev;
  double gap = 0.0;
  for (double m : opt.m_schedule) {
    StripDisc d;
    d.a = a;
    d.b = b;
    d.R = R;
    d.m = m;
    d.hx = opt.hx > 0.0 ? opt.hx : StripDisc::default_spacing(b);
    d.hy = opt.hy > 0.0 ? opt.hy : StripDisc::default_spacing(b);
    StripState s = minimize_strip(d, curve, opt.strip, prev ? &*prev : nullptr);
    out.m_values.push_back(m);
    out.energies.push_back(s.energy);
    if (prev) {
      gap = std::abs(s.energy - prev->energy);
      if (gap <= opt.gap_tol * std::abs(s.energy)) {
        out.g = s.energy;
        out.state = std::move(s);
        return out;
      }
    }
    prev = std::move(s);
  }
  throw SolverError("strip_ground_state: m schedule exhausted with last gap " + sci(gap),
                    std::vector<double>(as_reals(prev->psi).begin(), as_reals(prev->psi).end()));
}

StripGround strip_ground_state(double a, double b, double R, const StripGroundOptions& opt) {
  return strip_ground_state(a, b, R, beta(a), opt);
}

DecayReport decay_diagnostics(const StripState& s) {
  const StripDisc& d = s.disc;
  const std::size_t nx = d.nx(), ny = d.ny();
  const double w = d.hx * d.hy;
  auto at = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> std::complex<double> {
    if (i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(nx) || j >= static_cast<std::ptrdiff_t>(ny)) return 0.0;
    return s.psi[static_cast<std::size_t>(j) * nx + static_cast<std::size_t>(i)];
  };
  auto weight = [](double y, double power) {
    const double r = std::abs(y);
    if (r < 4.0) return 0.0;
    const double l = std::log(r);
    return std::pow(r, power) / (l * l);
  };
  auto y_of = [&](double j) { return -d.m + (j + 1.0) * d.hy; };

  DecayReport r;
  double kin = 0.0;
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(ny); ++j) {
    const double y = y_of(static_cast<double>(j));
    const double th = d.sigma(y) * y * d.hx;
    const std::complex<double> link = std::polar(1.0, th);
    for (std::ptrdiff_t i = -1; i < static_cast<std::ptrdiff_t>(nx); ++i) {
      const double e = std::norm(link * at(i + 1, j) - at(i, j)) / (d.hx * d.hx) * w;
      kin += e;
      r.weighted_l2 += weight(y, 1.0) * e;
    }
  }
  for (std::ptrdiff_t j = -1; j < static_cast<std::ptrdiff_t>(ny); ++j) {
    const double y = y_of(static_cast<double>(j) + 0.5);
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(nx); ++i) {
      const double e = std::norm(at(i, j + 1) - at(i, j)) / (d.hy * d.hy) * w;
      kin += e;
      r.weighted_l2 += weight(y, 1.0) * e;
    }
  }
  for (std::size_t j = 0; j < ny; ++j) {
    const double y = d.x2(j);
    for (std::size_t i = 0; i < nx; ++i) {
      const double q = std::norm(s.psi[j * nx + i]);
      r.mass += w * q;
      r.quartic += w * q * q;
      r.weighted_l2 += weight(y, 1.0) * w * q;
      r.weighted_l4 += weight(y, 3.0) * w * q * q;
    }
  }
  r.plain_mass = d.b * kin + r.mass;
  r.l2_constant = r.weighted_l2 / (d.b * d.R);
  r.l4_constant = r.weighted_l4 / (d.b * d.b * d.R);
  r.mass_constant = r.plain_mass / (d.b * d.R);
  return r;
}

namespace {

void put(std::ofstream& f, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  f.write(reinterpret_cast<const char*>(&bits), sizeof bits);
}

double get(std::ifstream& f) {
  std::uint64_t bits = 0;
  f.read(reinterpret_cast<char*>(&bits), sizeof bits);
  if (!f) fail(ErrorKind::Input, "read_strip_dump: truncated file");
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  return std::bit_cast<double>(bits);
}

}  // namespace

void write_strip_dump(const StripState& s, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::Input, "write_strip_dump: cannot open " + path);
  for (double v : {s.disc.a, s.disc.b, s.disc.R, s.disc.m, s.disc.hx, s.disc.hy}) put(f, v);
  for (const auto& z : s.psi) {
    put(f, z.real());
    put(f, z.imag());
  }
  if (!f) fail(ErrorKind::Input, "write_strip_dump: write failed for " + path);
}

StripState read_strip_dump(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::Input, "read_strip_dump: cannot open " + path);
  StripState s;
  s.disc.a = get(f);
  s.disc.b = get(f);
  s.disc.R = get(f);
  s.disc.m = get(f);
  s.disc.hx = get(f);
  s.disc.hy = get(f);
  s.disc.validate();
  s.psi.resize(s.disc.nx() * s.disc.ny());
  for (auto& z : s.psi) {
    const double re = get(f);
    z = {re, get(f)};
  }
  s.energy = strip_energy(s);
  s.sup_norm = sup_norm(s.psi);
  return s;
}

}  // namespace glstep
