#include "hbtsim/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hbtsim/errors.hpp"

namespace hbtsim {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector3d unit3(const PoincarePoint& p) {
  Eigen::Vector3d v(p.s1, p.s2, p.s3);
  const double n = v.norm();
  if (std::abs(n - 1.0) > 1e-9) {
    throw DegenerateError("Poincare point is not unit norm");
  }
  return v / n;
}

// Signed solid angle of the geodesic triangle (a, b, c); the two-argument
// arctangent keeps the sign and stays finite for thin triangles.
double triangle_solid_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                            const Eigen::Vector3d& c) {
  const double num = a.dot(b.cross(c));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

}  // namespace

PolarizationState PolarizationState::linear(double theta) {
  return PolarizationState(Jones(std::cos(theta), std::sin(theta)));
}

PolarizationState PolarizationState::circular(Handedness h) {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex q = (h == Handedness::right) ? Complex(0.0, -r) : Complex(0.0, r);
  return PolarizationState(Jones(Complex(r, 0.0), q));
}

PolarizationState PolarizationState::from_jones(const Jones& v) {
  const double n = v.norm();
  if (n < 1e-12) {
    throw DegenerateError("cannot normalise a null Jones vector");
  }
  return PolarizationState(v / n);
}

Complex PolarizationState::overlap(const PolarizationState& other) const {
  return v_.dot(other.v_);  // Eigen's dot conjugates the left factor
}

Projector Projector::onto(const PolarizationState& s) {
  return Projector(s.jones() * s.jones().adjoint());
}

Projector Projector::from_matrix(const Eigen::Matrix2cd& m) {
  if ((m - m.adjoint()).norm() > 1e-12 || (m * m - m).norm() > 1e-12 ||
      std::abs(m.trace() - Complex(1.0, 0.0)) > 1e-12) {
    throw std::invalid_argument(
        "projector matrix must be Hermitian, idempotent, and of unit trace");
  }
  return Projector(m);
}

PoincarePoint poincare_of(const PolarizationState& s) {
  return poincare_of(Projector::onto(s));
}

PoincarePoint poincare_of(const Projector& p) {
  const Eigen::Matrix2cd& m = p.matrix();
  // P = (I + s . sigma~)/2 in this library's axis convention, so the Bloch
  // components sit directly in the matrix entries.
  return PoincarePoint{std::real(m(0, 0) - m(1, 1)), -2.0 * std::real(m(1, 0)),
                       -2.0 * std::imag(m(1, 0))};
}

PolarizationState state_at(const PoincarePoint& p) {
  const Eigen::Vector3d v = unit3(p);
  const double polar = std::acos(std::clamp(v.x(), -1.0, 1.0));
  const double chi = std::atan2(-v.z(), -v.y());
  const Complex b = std::polar(std::sin(polar / 2.0), chi);
  return PolarizationState::from_jones(Jones(Complex(std::cos(polar / 2.0), 0.0), b));
}

PancharatnamTrace pancharatnam_trace(std::span<const Projector> circuit) {
  if (circuit.size() < 2) {
    throw DegenerateError("a circuit needs at least two projectors");
  }
  // An orthogonal consecutive pair collapses the whole product; report that
  // as exact zero instead of returning the roundoff dust of the matrix chain.
  const std::size_t n = circuit.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Projector& p = circuit[i];
    const Projector& q = circuit[(i + 1) % n];
    const double link = std::real((p.matrix() * q.matrix()).trace());
    if (link < 1e-24) {
      return PancharatnamTrace{Complex(0.0, 0.0), true};
    }
  }
  Eigen::Matrix2cd prod = circuit[0].matrix();
  for (std::size_t i = 1; i < n; ++i) {
    prod *= circuit[i].matrix();
  }
  prod *= circuit[0].matrix();
  return PancharatnamTrace{prod.trace(), false};
}

PancharatnamTrace pancharatnam_trace(std::span<const PolarizationState> circuit) {
  std::vector<Projector> ps;
  ps.reserve(circuit.size());
  for (const auto& s : circuit) ps.push_back(Projector::onto(s));
  return pancharatnam_trace(std::span<const Projector>(ps));
}

double geodesic_polygon_solid_angle(std::span<const PoincarePoint> vertices) {
  if (vertices.size() < 2) {
    throw DegenerateError("a geodesic polygon needs at least two vertices");
  }
  std::vector<Eigen::Vector3d> v;
  v.reserve(vertices.size());
  for (const auto& p : vertices) {
    Eigen::Vector3d cand = unit3(p);
    if (v.empty() || (cand - v.back()).norm() > 1e-12) {
      v.push_back(cand);
    }
  }
  while (v.size() > 1 && (v.front() - v.back()).norm() < 1e-12) {
    v.pop_back();
  }
  const std::size_t n = v.size();
  if (n < 3) {
    return 0.0;  // a point or an out-and-back path encloses nothing
  }
  for (std::size_t i = 0; i < n; ++i) {
    if ((v[i] + v[(i + 1) % n]).norm() < 1e-9) {
      throw DegenerateError("consecutive polygon vertices are antipodal");
    }
  }
  // Fan from a vertex that is antipodal to no other vertex, so every
  // triangulation diagonal is a well-defined geodesic. Modulo 4*pi the
  // result does not depend on this choice.
  std::size_t base = n;
  double best = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double closest = 2.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j) closest = std::min(closest, (v[i] + v[j]).norm());
    }
    if (closest > best) {
      best = closest;
      base = j;
    }
  }
  if (best >= 1e-9) {
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(base),
                v.end());
    double total = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      total += triangle_solid_angle(v[0], v[i], v[i + 1]);
    }
    return total;
  }
  // Every vertex has an antipodal partner (a lune between orthogonal
  // states, say). Fan instead from an edge midpoint that conflicts with
  // nothing; adding a point on a geodesic edge changes no area. Modulo
  // 4*pi the result is still apex independent.
  for (std::size_t j = 0; j < n; ++j) {
    Eigen::Vector3d apex = v[j] + v[(j + 1) % n];
    apex.normalize();
    double closest = 2.0;
    for (std::size_t i = 0; i < n; ++i) {
      closest = std::min(closest, (v[i] + apex).norm());
    }
    if (closest < 1e-9) continue;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      total += triangle_solid_angle(apex, v[i], v[(i + 1) % n]);
    }
    return total;
  }
  throw DegenerateError("every candidate triangulation apex has an antipodal partner");
}

double circuit_solid_angle(std::span<const Projector> circuit) {
  std::vector<PoincarePoint> pts;
  pts.reserve(circuit.size());
  for (const auto& p : circuit) pts.push_back(poincare_of(p));
  return geodesic_polygon_solid_angle(pts);
}

double circuit_solid_angle(std::span<const PolarizationState> circuit) {
  std::vector<Projector> ps;
  ps.reserve(circuit.size());
  for (const auto& s : circuit) ps.push_back(Projector::onto(s));
  return circuit_solid_angle(std::span<const Projector>(ps));
}

double mod_4pi_deviation(double a, double b) {
  const double period = 4.0 * kPi;
  double d = std::remainder(a - b, period);
  return std::abs(d);
}

}  // namespace hbtsim
