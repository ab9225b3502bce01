#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hbtsim {

using Complex = std::complex<double>;
using Jones = Eigen::Vector2cd;

// Conventions used throughout this library:
//
//   * Jones vectors live in the (x, y) linear basis and are kept unit norm.
//   * Right circular is (1, -i)/sqrt(2); left circular is (1, +i)/sqrt(2).
//   * The sphere map sends a state (a, b) to
//         s1 = |a|^2 - |b|^2,  s2 = -2 Re(conj(a) b),  s3 = -2 Im(conj(a) b),
//     the Bloch vector in the Pauli frame (sigma_z, -sigma_x, -sigma_y), a
//     proper rotation of the standard frame. Right circular sits at the
//     north pole (0, 0, +1), left circular at the south pole, and
//     linear(theta) on the equator, at azimuth 2*theta measured from +s1
//     toward -s2.
//   * Solid angles are signed by the right-hand rule: the face (1,0,0) ->
//     (0,1,0) -> (0,0,1) of the positive octant encloses +pi/2.
//
// Under these conventions the circuit phase and the enclosed area agree in
// the order the circuit is written:
//
//     2 * arg(pancharatnam_trace({P1, ..., Pn}))
//         == geodesic_polygon_solid_angle({image P1, ..., image Pn})
//                                                          (mod 4*pi)
//
// The frame choice is what makes the sign come out right: an improper frame
// (for instance the axis triple with +2 Re(conj(a) b) as s2) flips every
// signed area and the identity only holds for the reversed list.
// circuit_solid_angle below packages the left-hand side's counterpart.

enum class Handedness { right, left };

// Unit Jones vector. Physical predictions ignore the global phase; only
// pancharatnam_trace style circuit products are phase sensitive, and those
// consume projectors, which carry no global phase at all.
class PolarizationState {
 public:
  // Linear polarisation at angle theta from the x axis, (cos, sin).
  static PolarizationState linear(double theta);
  static PolarizationState circular(Handedness h);
  // Normalises; throws DegenerateError when the vector is numerically null.
  static PolarizationState from_jones(const Jones& v);

  const Jones& jones() const { return v_; }
  // <this|other> in the bra-ket sense.
  Complex overlap(const PolarizationState& other) const;

 private:
  explicit PolarizationState(Jones v) : v_(std::move(v)) {}
  Jones v_;
};

// Rank-1 Hermitian idempotent |psi><psi|. Analyser matrices of higher rank
// (open ports) are modelled by Analyser in the correlator layer, not here.
class Projector {
 public:
  static Projector onto(const PolarizationState& s);
  // Accepts a matrix that is Hermitian, idempotent, and of unit trace
  // within 1e-12; throws std::invalid_argument otherwise.
  static Projector from_matrix(const Eigen::Matrix2cd& m);
  const Eigen::Matrix2cd& matrix() const { return m_; }

 private:
  explicit Projector(Eigen::Matrix2cd m) : m_(std::move(m)) {}
  Eigen::Matrix2cd m_;
};

struct PoincarePoint {
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
};

PoincarePoint poincare_of(const PolarizationState& s);
PoincarePoint poincare_of(const Projector& p);
// Inverse of poincare_of up to global phase; the point must be unit norm
// within 1e-9.
PolarizationState state_at(const PoincarePoint& p);

struct PancharatnamTrace {
  Complex value;
  // Set when consecutive states are orthogonal; value is then exactly zero
  // and the circuit phase is undefined.
  bool degenerate = false;
};

// Tr[P1 P2 ... Pn P1] for a closed polarisation circuit, n >= 2. Cyclic in
// its argument list. The modulus is the product of the consecutive overlap
// moduli; the argument is the (nonlocal) Pancharatnam phase.
PancharatnamTrace pancharatnam_trace(std::span<const Projector> circuit);
PancharatnamTrace pancharatnam_trace(std::span<const PolarizationState> circuit);

// Signed solid angle of the closed geodesic polygon through the listed
// vertices, by fan triangulation into signed spherical triangles. Accepts
// any list with >= 2 entries; consecutive duplicates (and a duplicated
// wrap-around vertex) are merged, and fewer than three distinct vertices
// enclose nothing. Throws DegenerateError when consecutive vertices are
// antipodal, where the geodesic is ambiguous. Result lies in (-4*pi, 4*pi);
// self-intersecting polygons are meaningful modulo 4*pi.
double geodesic_polygon_solid_angle(std::span<const PoincarePoint> vertices);

// Solid angle of the listed circuit's sphere image, the quantity equal to
// twice the trace argument modulo 4*pi (see the header comment).
double circuit_solid_angle(std::span<const Projector> circuit);
double circuit_solid_angle(std::span<const PolarizationState> circuit);

// Smallest absolute difference between two phases modulo 4*pi; the natural
// metric for comparing solid angles to doubled trace arguments.
double mod_4pi_deviation(double a, double b);

}  // namespace hbtsim
