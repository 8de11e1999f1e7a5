#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace bohrlab {

using cplx = std::complex<double>;

/// Largest accepted shift parameter; the disk radius 1/(1-gamma) diverges at 1.
inline constexpr double kMaxGamma = 1.0 - 1e-6;

/// Distance from a boundary circle below which a point counts as on it.
inline constexpr double kBoundaryTol = 1e-12;

enum class Membership { Inside, Boundary, Outside };

/// Throws std::domain_error unless 0 <= gamma <= kMaxGamma.
void require_gamma(double gamma);

/// The disk |z + gamma/(1-gamma)| < 1/(1-gamma). Contains the unit disk and
/// its boundary circle passes through z = 1 for every gamma.
class ShiftedDisk {
 public:
  explicit ShiftedDisk(double gamma);

  [[nodiscard]] double gamma() const noexcept { return gamma_; }
  [[nodiscard]] cplx center() const noexcept { return {center_, 0.0}; }
  [[nodiscard]] double radius() const noexcept { return radius_; }

  [[nodiscard]] Membership classify(cplx z) const noexcept;
  [[nodiscard]] bool contains(cplx z) const noexcept {
    return classify(z) == Membership::Inside;
  }

 private:
  double gamma_;
  double center_;
  double radius_;
};

[[nodiscard]] inline ShiftedDisk make_disk(double gamma) { return ShiftedDisk(gamma); }

/// Affine bijection between the unit disk and the shifted disk.
///   forward:  xi -> (xi - gamma)/(1 - gamma)   (unit disk -> shifted disk)
///   backward: z  -> gamma + (1 - gamma) z      (shifted disk -> unit disk)
/// The backward image modulus is the normalized radius used by every
/// shifted-disk inequality.
class AffineTransport {
 public:
  explicit AffineTransport(double gamma);

  [[nodiscard]] double gamma() const noexcept { return gamma_; }
  [[nodiscard]] cplx forward(cplx xi) const noexcept { return (xi - gamma_) / (1.0 - gamma_); }
  [[nodiscard]] cplx backward(cplx z) const noexcept { return gamma_ + (1.0 - gamma_) * z; }
  [[nodiscard]] double normalized_radius(cplx z) const noexcept { return std::abs(backward(z)); }

 private:
  double gamma_;
};

/// Disk automorphism w -> (a - w)/(1 - a w) for real 0 <= a < 1. Involutive.
class MobiusAutomorphism {
 public:
  explicit MobiusAutomorphism(double a);

  [[nodiscard]] double a() const noexcept { return a_; }
  [[nodiscard]] cplx operator()(cplx w) const noexcept { return (a_ - w) / (1.0 - a_ * w); }
  [[nodiscard]] cplx derivative(cplx w) const noexcept {
    const cplx d = 1.0 - a_ * w;
    return -(1.0 - a_ * a_) / (d * d);
  }

 private:
  double a_;
};

[[nodiscard]] inline MobiusAutomorphism mobius_auto(double a) { return MobiusAutomorphism(a); }

/// n equally spaced points on the boundary circle C_gamma, starting at z = 1.
[[nodiscard]] std::vector<cplx> circle_points(const ShiftedDisk& disk, std::size_t n);

}  // namespace bohrlab
