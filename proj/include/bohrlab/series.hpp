#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bohrlab/geometry.hpp"

namespace bohrlab {

/// Hard cap on stored coefficients.
inline constexpr std::size_t kMaxTerms = 4096;
/// Target for adaptively chosen truncations.
inline constexpr double kTailTarget = 1e-12;

enum class TailMode {
  SchwarzPick,  ///< coefficients obey |d_n| <= 1 - |d_0|^2; tails are certified
  Zero,         ///< finite polynomial; tail reported as 0 and uncertified
};

/// Whether a harmonic area carries the 1/(1-gamma)^2 prefactor.
enum class AreaScaling { Unscaled, GammaRescaled };

/// A truncated sum together with a bound on the neglected remainder.
struct Estimate {
  double value = 0.0;
  double tail = 0.0;
  bool certified = true;
};

/// |c_n| <= scale * ratio^(n-1) for every n beyond the stored truncation.
struct GeometricEnvelope {
  double scale = 0.0;
  double ratio = 0.0;
};

class SchwarzPickViolation : public std::domain_error {
 public:
  SchwarzPickViolation(std::size_t index, double modulus, double bound);
  [[nodiscard]] std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Coefficients of an analytic function on the shifted disk, stored in
/// unit-disk-normalized form d_n = a_n / (1-gamma)^n where a_n are the
/// coefficients about the disk center. Equivalently d_n are the Taylor
/// coefficients at 0 of phi = f o forward, the transport to the unit disk.
class CoeffSeries {
 public:
  /// From center-expansion coefficients a_n. Throws SchwarzPickViolation
  /// under SchwarzPick mode when some |a_n| > (1-gamma)^n (1-|a_0|^2).
  static CoeffSeries from_shifted_coeffs(double gamma, std::span<const cplx> a, TailMode mode);
  static CoeffSeries from_disk_coeffs(double gamma, std::vector<cplx> d, TailMode mode,
                                      std::optional<GeometricEnvelope> envelope = std::nullopt);

  [[nodiscard]] double gamma() const noexcept { return gamma_; }
  [[nodiscard]] TailMode mode() const noexcept { return mode_; }
  [[nodiscard]] std::span<const cplx> coeffs() const noexcept { return d_; }
  [[nodiscard]] std::size_t truncation() const noexcept { return d_.size() - 1; }
  [[nodiscard]] const std::optional<GeometricEnvelope>& envelope() const noexcept { return envelope_; }

  /// a_n = d_n (1-gamma)^n; zero past the truncation.
  [[nodiscard]] cplx shifted_coeff(std::size_t n) const;
  /// 1 - |d_0|^2, the Schwarz-Pick coefficient budget.
  [[nodiscard]] double budget() const noexcept { return 1.0 - std::norm(d_.front()); }

  [[nodiscard]] cplx value(cplx xi) const noexcept;
  [[nodiscard]] cplx derivative(cplx xi) const noexcept;

 private:
  CoeffSeries(double gamma, std::vector<cplx> d, TailMode mode,
              std::optional<GeometricEnvelope> envelope);

  double gamma_;
  std::vector<cplx> d_;
  TailMode mode_;
  std::optional<GeometricEnvelope> envelope_;
};

/// psi_a o backward: d_0 = a, d_n = -a^(n-1) (1-a^2). Truncated where the
/// neglected majorant at rho_max drops below kTailTarget (capped at kMaxTerms).
[[nodiscard]] CoeffSeries extremal_series(double gamma, double a, double rho_max = 1.0 - 1e-3);

/// scale * rotation * prod_j (w - z_j)/(1 - conj(z_j) w), truncated after n_terms
/// coefficients. Requires |z_j| < 1, |rotation| = 1, scale in [0, 1].
[[nodiscard]] CoeffSeries blaschke_series(double gamma, std::span<const cplx> zeros, cplx rotation,
                                          double scale, std::size_t n_terms);

/// Sum |d_n| rho^n.
[[nodiscard]] Estimate majorant(const CoeffSeries& s, double rho);
/// Sum_{n>=1} |d_n|^2 rho^(2n).
[[nodiscard]] Estimate quadratic_sum(const CoeffSeries& s, double rho);
/// Sum_{n>=1} n |d_n|^2 rho^(2n): the area of the image of the sub-disk of
/// normalized radius rho, divided by pi.
[[nodiscard]] Estimate area_analytic(const CoeffSeries& s, double rho);

/// Polar midpoint rule for (1/pi) * integral over |w| < rho of |phi'(w)|^2.
/// `grid` angular cells, grid/2 radial cells.
[[nodiscard]] double area_quadrature(const std::function<cplx(cplx)>& derivative, double rho,
                                     std::size_t grid);
[[nodiscard]] double area_quadrature(const CoeffSeries& s, double rho, std::size_t grid);

struct CoefficientBoundReport {
  std::size_t worst_index = 0;
  double worst_ratio = 0.0;  ///< max_n |d_n| / (1 - |d_0|^2)
  bool pass = true;
};

/// |a_n| <= (1-gamma)^n (1-|a_0|^2) for all stored n >= 1.
[[nodiscard]] CoefficientBoundReport check_coefficient_bound(const CoeffSeries& s);

/// f = h + conj(g) with |g'| <= k |h'| and g(center) = 0.
class HarmonicPair {
 public:
  /// Validates the dilatation bound by sampling 1000 points of radius <= 0.999.
  HarmonicPair(CoeffSeries h, CoeffSeries g, double k);

  /// h = extremal_series(gamma, a), g = -k (h - h(center)).
  static HarmonicPair extremal(double gamma, double a, double k, double rho_max = 1.0 - 1e-3);
  /// g' = scale * omega * h' with omega given by its Taylor coefficients.
  static HarmonicPair with_dilatation(const CoeffSeries& h, std::span<const cplx> omega,
                                      double scale, double k);

  [[nodiscard]] const CoeffSeries& h() const noexcept { return h_; }
  [[nodiscard]] const CoeffSeries& g() const noexcept { return g_; }
  [[nodiscard]] double k() const noexcept { return k_; }
  [[nodiscard]] double gamma() const noexcept { return h_.gamma(); }

 private:
  struct Trusted {};
  HarmonicPair(Trusted, CoeffSeries h, CoeffSeries g, double k);

  CoeffSeries h_;
  CoeffSeries g_;
  double k_;
};

/// True when |g'(w)| <= k |h'(w)| (1 + tol) + tol on the sampling set.
[[nodiscard]] bool dilatation_holds(const CoeffSeries& h, const CoeffSeries& g, double k,
                                    double tol = 1e-9);

/// Sum |e_n| rho^n over the co-analytic part.
[[nodiscard]] Estimate coanalytic_majorant(const HarmonicPair& p, double rho);

class NotSensePreserving : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sum n (|d_n|^2 - |e_n|^2) rho^(2n), times 1/(1-gamma)^2 under GammaRescaled.
/// Throws NotSensePreserving when the value is negative beyond its tail.
[[nodiscard]] Estimate area_harmonic(const HarmonicPair& p, double rho,
                                     AreaScaling scaling = AreaScaling::GammaRescaled);

struct LemmaReport {
  double area_lhs = 0.0;   ///< sum n |e_n|^2 rho^(2n)
  double area_rhs = 0.0;   ///< k^2 sum n |d_n|^2 rho^(2n)
  double quad_lhs = 0.0;   ///< sum |e_n|^2 rho^n
  double quad_rhs = 0.0;   ///< k^2 sum |d_n|^2 rho^n
  bool pass = true;
};

[[nodiscard]] LemmaReport check_lemma_quadratic(const HarmonicPair& p, double rho);

/// Expansion about 0 of a function bounded by 1 on the shifted disk; the
/// input convention of the unit-disk (restricted) inequalities.
class DiskSeries {
 public:
  DiskSeries(double gamma, std::vector<cplx> coeffs,
             std::optional<GeometricEnvelope> envelope = std::nullopt);

  [[nodiscard]] double gamma() const noexcept { return gamma_; }
  [[nodiscard]] std::span<const cplx> coeffs() const noexcept { return c_; }
  [[nodiscard]] std::size_t truncation() const noexcept { return c_.size() - 1; }
  [[nodiscard]] const std::optional<GeometricEnvelope>& envelope() const noexcept { return envelope_; }

 private:
  double gamma_;
  std::vector<cplx> c_;
  std::optional<GeometricEnvelope> envelope_;
};

/// psi_a(gamma + (1-gamma) z) expanded about z = 0.
[[nodiscard]] DiskSeries background_extremal_series(double gamma, double a,
                                                    double rho_max = 1.0 - 1e-3);

/// Re-expands phi(gamma + (1-gamma) z) about z = 0 by a Taylor shift of the
/// stored polynomial. Only the first n_out coefficients are returned; no tail.
[[nodiscard]] DiskSeries restrict_to_unit_disk(const CoeffSeries& s, std::size_t n_out);

/// Tail helpers for an envelope scale * ratio^(n-1), n > N.
namespace envelope_tail {
[[nodiscard]] double linear(const GeometricEnvelope& e, double rho, std::size_t N);
[[nodiscard]] double quadratic(const GeometricEnvelope& e, double rho, std::size_t N);
[[nodiscard]] double area(const GeometricEnvelope& e, double r, std::size_t N);
}  // namespace envelope_tail

void require_rho(double rho);

}  // namespace bohrlab
