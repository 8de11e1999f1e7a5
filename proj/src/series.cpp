#include "bohrlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "bohrlab/numeric.hpp"

namespace bohrlab {

namespace {

constexpr double kBoundRelTol = 1e-12;
constexpr double kBoundAbsTol = 1e-15;

std::string violation_message(std::size_t index, double modulus, double bound) {
  std::ostringstream os;
  os.precision(17);
  os << "Schwarz-Pick bound violated at n=" << index << ": |d_n|=" << modulus << " > " << bound;
  return os.str();
}

double rho_power(double rho, std::size_t n) { return std::pow(rho, static_cast<double>(n)); }

// 10 radii up to 0.999 times 100 angles.
std::vector<cplx> sampling_points() {
  std::vector<cplx> pts;
  pts.reserve(1000);
  for (int i = 1; i <= 10; ++i) {
    const double r = 0.999 * i / 10.0;
    for (int j = 0; j < 100; ++j) pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / 100.0));
  }
  return pts;
}

double coanalytic_area_tail(const HarmonicPair& p, double rho) {
  const CoeffSeries& g = p.g();
  const std::size_t N = g.truncation();
  if (g.envelope()) return envelope_tail::area(*g.envelope(), rho, N);
  if (p.h().mode() == TailMode::Zero) return 0.0;
  return p.k() * p.k() * p.h().budget() * numeric::weighted_geometric_tail(rho * rho, N);
}

double analytic_area_tail(const CoeffSeries& s, double rho) {
  const std::size_t N = s.truncation();
  double tail = std::numeric_limits<double>::infinity();
  if (s.mode() == TailMode::SchwarzPick) {
    tail = s.budget() * s.budget() * numeric::weighted_geometric_tail(rho * rho, N);
  }
  if (s.envelope()) tail = std::min(tail, envelope_tail::area(*s.envelope(), rho, N));
  return std::isinf(tail) ? 0.0 : tail;
}

bool is_certified(const CoeffSeries& s) {
  return s.mode() == TailMode::SchwarzPick || s.envelope().has_value();
}

}  // namespace

void require_rho(double rho) {
  if (!std::isfinite(rho) || rho < 0.0 || rho >= 1.0) {
    throw std::domain_error("rho must lie in [0, 1), got " + std::to_string(rho));
  }
}

namespace envelope_tail {

double linear(const GeometricEnvelope& e, double rho, std::size_t N) {
  const double y = e.ratio * rho;
  if (y >= 1.0) return std::numeric_limits<double>::infinity();
  return e.scale * rho * rho_power(y, N) / (1.0 - y);
}

double quadratic(const GeometricEnvelope& e, double rho, std::size_t N) {
  const double y = e.ratio * e.ratio * rho * rho;
  if (y >= 1.0) return std::numeric_limits<double>::infinity();
  return e.scale * e.scale * rho * rho * rho_power(y, N) / (1.0 - y);
}

double area(const GeometricEnvelope& e, double r, std::size_t N) {
  const double y = e.ratio * e.ratio * r * r;
  if (y >= 1.0) return std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(N);
  return e.scale * e.scale * r * r * rho_power(y, N) * ((n + 1.0) - n * y) / ((1.0 - y) * (1.0 - y));
}

}  // namespace envelope_tail

SchwarzPickViolation::SchwarzPickViolation(std::size_t index, double modulus, double bound)
    : std::domain_error(violation_message(index, modulus, bound)), index_(index) {}

CoeffSeries::CoeffSeries(double gamma, std::vector<cplx> d, TailMode mode,
                         std::optional<GeometricEnvelope> envelope)
    : gamma_(gamma), d_(std::move(d)), mode_(mode), envelope_(envelope) {}

CoeffSeries CoeffSeries::from_disk_coeffs(double gamma, std::vector<cplx> d, TailMode mode,
                                          std::optional<GeometricEnvelope> envelope) {
  require_gamma(gamma);
  if (d.empty()) throw std::invalid_argument("coefficient list is empty");
  if (d.size() > kMaxTerms + 1) throw std::invalid_argument("too many coefficients (cap 4096)");
  for (const cplx& c : d) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("non-finite coefficient");
    }
  }
  const double m0 = std::abs(d.front());
  if (m0 > 1.0 + kBoundAbsTol) throw SchwarzPickViolation(0, m0, 1.0);
  if (mode == TailMode::SchwarzPick) {
    const double bound = 1.0 - m0 * m0;
    for (std::size_t n = 1; n < d.size(); ++n) {
      const double m = std::abs(d[n]);
      if (m > bound * (1.0 + kBoundRelTol) + kBoundAbsTol) throw SchwarzPickViolation(n, m, bound);
    }
  }
  if (d.size() == 1) d.emplace_back(0.0);
  return CoeffSeries(gamma, std::move(d), mode, envelope);
}

CoeffSeries CoeffSeries::from_shifted_coeffs(double gamma, std::span<const cplx> a, TailMode mode) {
  require_gamma(gamma);
  std::vector<cplx> d(a.begin(), a.end());
  double scale = 1.0;
  for (std::size_t n = 1; n < d.size(); ++n) {
    scale *= 1.0 - gamma;
    d[n] /= scale;
  }
  return from_disk_coeffs(gamma, std::move(d), mode);
}

cplx CoeffSeries::shifted_coeff(std::size_t n) const {
  if (n >= d_.size()) return 0.0;
  return d_[n] * rho_power(1.0 - gamma_, n);
}

cplx CoeffSeries::value(cplx xi) const noexcept {
  cplx acc = 0.0;
  for (auto it = d_.rbegin(); it != d_.rend(); ++it) acc = acc * xi + *it;
  return acc;
}

cplx CoeffSeries::derivative(cplx xi) const noexcept {
  cplx acc = 0.0;
  for (std::size_t n = d_.size() - 1; n >= 1; --n) acc = acc * xi + static_cast<double>(n) * d_[n];
  return acc;
}

CoeffSeries extremal_series(double gamma, double a, double rho_max) {
  if (!std::isfinite(a) || a < 0.0 || a >= 1.0) {
    throw std::domain_error("extremal parameter must satisfy 0 <= a < 1");
  }
  require_rho(rho_max);
  const GeometricEnvelope env{1.0 - a * a, a};
  std::size_t N = 1;
  while (N < kMaxTerms && envelope_tail::linear(env, rho_max, N) >= kTailTarget) ++N;
  std::vector<cplx> d(N + 1);
  d[0] = a;
  double power = 1.0;
  for (std::size_t n = 1; n <= N; ++n) {
    d[n] = -power * env.scale;
    power *= a;
  }
  return CoeffSeries::from_disk_coeffs(gamma, std::move(d), TailMode::SchwarzPick, env);
}

CoeffSeries blaschke_series(double gamma, std::span<const cplx> zeros, cplx rotation, double scale,
                            std::size_t n_terms) {
  if (n_terms < 2 || n_terms > kMaxTerms + 1) throw std::invalid_argument("n_terms out of range");
  if (std::abs(std::abs(rotation) - 1.0) > 1e-12) throw std::invalid_argument("rotation must be unimodular");
  if (!(scale >= 0.0 && scale <= 1.0)) throw std::invalid_argument("scale must lie in [0, 1]");
  std::vector<cplx> prod(n_terms, 0.0);
  prod[0] = rotation * scale;
  std::vector<cplx> factor(n_terms);
  std::vector<cplx> next(n_terms);
  for (const cplx& z : zeros) {
    if (std::abs(z) >= 1.0) throw std::invalid_argument("Blaschke zeros must lie in the unit disk");
    factor[0] = -z;
    cplx power = 1.0 - std::norm(z);
    for (std::size_t n = 1; n < n_terms; ++n) {
      factor[n] = power;
      power *= std::conj(z);
    }
    std::fill(next.begin(), next.end(), cplx{0.0});
    for (std::size_t i = 0; i < n_terms; ++i) {
      if (prod[i] == cplx{0.0}) continue;
      for (std::size_t j = 0; i + j < n_terms; ++j) next[i + j] += prod[i] * factor[j];
    }
    prod.swap(next);
  }
  return CoeffSeries::from_disk_coeffs(gamma, std::move(prod), TailMode::SchwarzPick);
}

Estimate majorant(const CoeffSeries& s, double rho) {
  require_rho(rho);
  const auto d = s.coeffs();
  double value = 0.0;
  double power = 1.0;
  for (const cplx& c : d) {
    value += std::abs(c) * power;
    power *= rho;
  }
  const std::size_t N = s.truncation();
  double tail = std::numeric_limits<double>::infinity();
  if (s.mode() == TailMode::SchwarzPick) tail = s.budget() * numeric::geometric_tail(rho, N);
  if (s.envelope()) tail = std::min(tail, envelope_tail::linear(*s.envelope(), rho, N));
  return {value, std::isinf(tail) ? 0.0 : tail, is_certified(s)};
}

Estimate quadratic_sum(const CoeffSeries& s, double rho) {
  require_rho(rho);
  const auto d = s.coeffs();
  const double r2 = rho * rho;
  double value = 0.0;
  double power = r2;
  for (std::size_t n = 1; n < d.size(); ++n) {
    value += std::norm(d[n]) * power;
    power *= r2;
  }
  const std::size_t N = s.truncation();
  double tail = std::numeric_limits<double>::infinity();
  if (s.mode() == TailMode::SchwarzPick) tail = s.budget() * s.budget() * numeric::geometric_tail(r2, N);
  if (s.envelope()) tail = std::min(tail, envelope_tail::quadratic(*s.envelope(), rho, N));
  return {value, std::isinf(tail) ? 0.0 : tail, is_certified(s)};
}

Estimate area_analytic(const CoeffSeries& s, double rho) {
  require_rho(rho);
  const auto d = s.coeffs();
  const double r2 = rho * rho;
  double value = 0.0;
  double power = r2;
  for (std::size_t n = 1; n < d.size(); ++n) {
    value += static_cast<double>(n) * std::norm(d[n]) * power;
    power *= r2;
  }
  return {value, analytic_area_tail(s, rho), is_certified(s)};
}

double area_quadrature(const std::function<cplx(cplx)>& derivative, double rho, std::size_t grid) {
  require_rho(rho);
  if (grid < 64) throw std::invalid_argument("quadrature grid must be >= 64");
  const std::size_t n_theta = grid;
  const std::size_t n_r = grid / 2;
  const double dr = rho / static_cast<double>(n_r);
  const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(n_theta);
  std::vector<cplx> unit(n_theta);
  for (std::size_t j = 0; j < n_theta; ++j) unit[j] = std::polar(1.0, (static_cast<double>(j) + 0.5) * dtheta);
  double total = 0.0;
  for (std::size_t i = 0; i < n_r; ++i) {
    const double r = (static_cast<double>(i) + 0.5) * dr;
    double ring = 0.0;
    for (const cplx& u : unit) ring += std::norm(derivative(r * u));
    total += ring * r;
  }
  return total * dr * dtheta / std::numbers::pi;
}

double area_quadrature(const CoeffSeries& s, double rho, std::size_t grid) {
  return area_quadrature([&s](cplx w) { return s.derivative(w); }, rho, grid);
}

CoefficientBoundReport check_coefficient_bound(const CoeffSeries& s) {
  CoefficientBoundReport rep;
  const double budget = s.budget();
  const auto d = s.coeffs();
  for (std::size_t n = 1; n < d.size(); ++n) {
    const double m = std::abs(d[n]);
    double ratio = 0.0;
    if (budget > 0.0) {
      ratio = m / budget;
    } else if (m > 0.0) {
      ratio = std::numeric_limits<double>::infinity();
    }
    if (ratio > rep.worst_ratio) {
      rep.worst_ratio = ratio;
      rep.worst_index = n;
    }
  }
  rep.pass = rep.worst_ratio <= 1.0 + kBoundRelTol;
  return rep;
}

bool dilatation_holds(const CoeffSeries& h, const CoeffSeries& g, double k, double tol) {
  static const std::vector<cplx> pts = sampling_points();
  for (const cplx& w : pts) {
    const double lhs = std::abs(g.derivative(w));
    const double rhs = k * std::abs(h.derivative(w));
    if (lhs > rhs * (1.0 + tol) + tol) return false;
  }
  return true;
}

HarmonicPair::HarmonicPair(Trusted, CoeffSeries h, CoeffSeries g, double k)
    : h_(std::move(h)), g_(std::move(g)), k_(k) {}

HarmonicPair::HarmonicPair(CoeffSeries h, CoeffSeries g, double k)
    : h_(std::move(h)), g_(std::move(g)), k_(k) {
  if (!(k >= 0.0 && k <= 1.0)) throw std::domain_error("dilatation bound k must lie in [0, 1]");
  if (h_.gamma() != g_.gamma()) throw std::invalid_argument("h and g must share gamma");
  if (g_.coeffs().front() != cplx{0.0}) throw std::invalid_argument("g must vanish at the disk center");
  if (!dilatation_holds(h_, g_, k_)) {
    throw std::invalid_argument("sampled |g'| exceeds k |h'|");
  }
}

HarmonicPair HarmonicPair::extremal(double gamma, double a, double k, double rho_max) {
  if (!(k >= 0.0 && k <= 1.0)) throw std::domain_error("dilatation bound k must lie in [0, 1]");
  CoeffSeries h = extremal_series(gamma, a, rho_max);
  const auto d = h.coeffs();
  std::vector<cplx> e(d.size());
  e[0] = 0.0;
  for (std::size_t n = 1; n < d.size(); ++n) e[n] = -k * d[n];
  GeometricEnvelope env = *h.envelope();
  env.scale *= k;
  CoeffSeries g = CoeffSeries::from_disk_coeffs(gamma, std::move(e), TailMode::Zero, env);
  return HarmonicPair(Trusted{}, std::move(h), std::move(g), k);
}

HarmonicPair HarmonicPair::with_dilatation(const CoeffSeries& h, std::span<const cplx> omega,
                                           double scale, double k) {
  if (!(scale >= 0.0 && scale <= k)) throw std::invalid_argument("dilatation scale must lie in [0, k]");
  const auto d = h.coeffs();
  const std::size_t N = d.size() - 1;
  std::vector<cplx> hprime(N);
  for (std::size_t m = 0; m < N; ++m) hprime[m] = static_cast<double>(m + 1) * d[m + 1];
  std::vector<cplx> e(N + 1, 0.0);
  for (std::size_t m = 0; m < N; ++m) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i <= m && i < omega.size(); ++i) acc += omega[i] * hprime[m - i];
    e[m + 1] = scale * acc / static_cast<double>(m + 1);
  }
  CoeffSeries g = CoeffSeries::from_disk_coeffs(h.gamma(), std::move(e), TailMode::Zero);
  return HarmonicPair(h, std::move(g), k);
}

Estimate coanalytic_majorant(const HarmonicPair& p, double rho) {
  require_rho(rho);
  const auto e = p.g().coeffs();
  double value = 0.0;
  double power = 1.0;
  for (const cplx& c : e) {
    value += std::abs(c) * power;
    power *= rho;
  }
  const std::size_t N = p.g().truncation();
  double tail = std::numeric_limits<double>::infinity();
  if (p.h().mode() == TailMode::SchwarzPick) {
    tail = p.k() * std::sqrt(p.h().budget()) * rho_power(rho, N + 1) / std::sqrt(1.0 - rho * rho);
  }
  if (p.g().envelope()) tail = std::min(tail, envelope_tail::linear(*p.g().envelope(), rho, N));
  const bool certified = p.h().mode() == TailMode::SchwarzPick || p.g().envelope().has_value();
  return {value, std::isinf(tail) ? 0.0 : tail, certified};
}

Estimate area_harmonic(const HarmonicPair& p, double rho, AreaScaling scaling) {
  require_rho(rho);
  const auto d = p.h().coeffs();
  const auto e = p.g().coeffs();
  const std::size_t n_max = std::max(d.size(), e.size());
  const double r2 = rho * rho;
  double value = 0.0;
  double power = r2;
  for (std::size_t n = 1; n < n_max; ++n) {
    const double dn = n < d.size() ? std::norm(d[n]) : 0.0;
    const double en = n < e.size() ? std::norm(e[n]) : 0.0;
    value += static_cast<double>(n) * (dn - en) * power;
    power *= r2;
  }
  double tail = std::max(analytic_area_tail(p.h(), rho), coanalytic_area_tail(p, rho));
  if (scaling == AreaScaling::GammaRescaled) {
    const double f = 1.0 / ((1.0 - p.gamma()) * (1.0 - p.gamma()));
    value *= f;
    tail *= f;
  }
  if (value < -(tail + 1e-12)) {
    throw NotSensePreserving("harmonic area is negative: pair is not sense-preserving");
  }
  return {value, tail, is_certified(p.h())};
}

LemmaReport check_lemma_quadratic(const HarmonicPair& p, double rho) {
  require_rho(rho);
  const auto d = p.h().coeffs();
  const auto e = p.g().coeffs();
  const std::size_t n_max = std::max(d.size(), e.size());
  const double k2 = p.k() * p.k();
  LemmaReport rep;
  double pw = rho;
  double pw2 = rho * rho;
  for (std::size_t n = 1; n < n_max; ++n) {
    const double dn = n < d.size() ? std::norm(d[n]) : 0.0;
    const double en = n < e.size() ? std::norm(e[n]) : 0.0;
    const double nn = static_cast<double>(n);
    rep.area_lhs += nn * en * pw2;
    rep.area_rhs += k2 * nn * dn * pw2;
    rep.quad_lhs += en * pw;
    rep.quad_rhs += k2 * dn * pw;
    pw *= rho;
    pw2 *= rho * rho;
  }
  rep.pass = rep.area_lhs <= rep.area_rhs * (1.0 + kBoundRelTol) + kBoundAbsTol &&
             rep.quad_lhs <= rep.quad_rhs * (1.0 + kBoundRelTol) + kBoundAbsTol;
  return rep;
}

DiskSeries::DiskSeries(double gamma, std::vector<cplx> coeffs, std::optional<GeometricEnvelope> envelope)
    : gamma_(gamma), c_(std::move(coeffs)), envelope_(envelope) {
  require_gamma(gamma);
  if (c_.empty()) throw std::invalid_argument("coefficient list is empty");
  if (c_.size() == 1) c_.emplace_back(0.0);
}

DiskSeries background_extremal_series(double gamma, double a, double rho_max) {
  require_gamma(gamma);
  require_rho(rho_max);
  if (!std::isfinite(a) || a < 0.0 || a >= 1.0) {
    throw std::domain_error("extremal parameter must satisfy 0 <= a < 1");
  }
  const double den = 1.0 - a * gamma;
  const GeometricEnvelope env{(1.0 - gamma) * (1.0 - a * a) / (den * den), a * (1.0 - gamma) / den};
  std::size_t N = 1;
  while (N < kMaxTerms && envelope_tail::linear(env, rho_max, N) >= kTailTarget) ++N;
  std::vector<cplx> c(N + 1);
  c[0] = (a - gamma) / den;
  double power = 1.0;
  for (std::size_t n = 1; n <= N; ++n) {
    c[n] = -env.scale * power;
    power *= env.ratio;
  }
  return DiskSeries(gamma, std::move(c), env);
}

DiskSeries restrict_to_unit_disk(const CoeffSeries& s, std::size_t n_out) {
  std::vector<cplx> c(s.coeffs().begin(), s.coeffs().end());
  const double gamma = s.gamma();
  const std::size_t N = c.size() - 1;
  // in-place Taylor shift: c <- coefficients of p(gamma + t)
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = N - 1;; --j) {
      c[j] += gamma * c[j + 1];
      if (j == i) break;
    }
  }
  n_out = std::min(n_out, c.size());
  c.resize(n_out);
  double scale = 1.0;
  for (std::size_t n = 1; n < c.size(); ++n) {
    scale *= 1.0 - gamma;
    c[n] *= scale;
  }
  return DiskSeries(gamma, std::move(c));
}

}  // namespace bohrlab
