#include "bohrlab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bohrlab {

void require_gamma(double gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma > kMaxGamma) {
    throw std::domain_error("gamma must lie in [0, 1 - 1e-6], got " + std::to_string(gamma));
  }
}

ShiftedDisk::ShiftedDisk(double gamma) : gamma_(gamma) {
  require_gamma(gamma);
  center_ = -gamma / (1.0 - gamma);
  radius_ = 1.0 / (1.0 - gamma);
}

Membership ShiftedDisk::classify(cplx z) const noexcept {
  const double d = std::abs(z - center());
  if (std::abs(d - radius_) <= kBoundaryTol * radius_) return Membership::Boundary;
  return d < radius_ ? Membership::Inside : Membership::Outside;
}

AffineTransport::AffineTransport(double gamma) : gamma_(gamma) { require_gamma(gamma); }

MobiusAutomorphism::MobiusAutomorphism(double a) : a_(a) {
  if (!std::isfinite(a) || a < 0.0 || a >= 1.0) {
    throw std::domain_error("Mobius parameter must satisfy 0 <= a < 1");
  }
}

std::vector<cplx> circle_points(const ShiftedDisk& disk, std::size_t n) {
  if (n < 2) throw std::invalid_argument("circle_points needs n >= 2");
  std::vector<cplx> pts;
  pts.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    pts.push_back(disk.center() + std::polar(disk.radius(), theta));
  }
  return pts;
}

}  // namespace bohrlab
