#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "pqk/curvature.hpp"
#include "pqk/error.hpp"
#include "pqk/pqmap.hpp"
#include "pqk/sampling.hpp"

namespace pqk {

/// Which J family a structure uses. LeftJ pairs with left-regular f,
/// RightJ with right-regular f.
enum class Chirality { LeftJ, RightJ };

Side side_of(Chirality c);
std::string to_string(Chirality c);

using PolyMatrix4 = std::array<std::array<RealPoly4, 4>, 4>;

/// f is not regular on the side its chirality requires.
class NotRegular : public Error {
 public:
  explicit NotRegular(RegularityVerdict verdict);
  const RegularityVerdict& verdict() const noexcept { return verdict_; }

 private:
  RegularityVerdict verdict_;
};

/// A conformally flat almost epsilon-Kaehler structure in a canonical chart:
/// g = h G with G = diag(-1,-1,1,1), J from (a, b, c) = (f1, f2, f3) / h,
/// h^2 = -epsilon ((f1)^2 - (f2)^2 - (f3)^2).
struct EpsilonStructure {
  Chirality chirality = Chirality::LeftJ;
  int epsilon = -1;
  PQPolyMap f;
  RealPoly4 h_sq;
  Box domain;
};

/// -epsilon * ((f1)^2 - (f2)^2 - (f3)^2). Throws NonzeroRealPart if f0 != 0.
RealPoly4 h_squared(const PQPolyMap& f, int epsilon);

/// The epsilon that makes h_squared positive at every corner and at
/// `samples` Halton points of the box. Throws SignChange otherwise.
int choose_epsilon(const PQPolyMap& f, const Box& domain, std::size_t samples = 1024);

/// Components Omega_ij of the fundamental form, antisymmetric.
PolyMatrix4 omega_field(const PQPolyMap& f, Chirality chirality);

/// J^i_j at a point. Throws DegeneratePoint when h_sq(point) <= 0.
Matrix4 j_field(const PQPolyMap& f, const RealPoly4& h_sq, Chirality chirality, const PointQ& point);
Matrix4 j_field(const PQPolyMap& f, const RealPoly4& h_sq, Chirality chirality, const Point& point);

/// g_ij = h * diag(-1,-1,1,1), h = sqrt(h_sq(point)).
Matrix4 metric_field(const RealPoly4& h_sq, const PointQ& point);
Matrix4 metric_field(const RealPoly4& h_sq, const Point& point);

/// MetricSampler for g = sqrt(h_sq) G, for curvature checks.
MetricSampler conformal_metric(const RealPoly4& h_sq);

/// Independent components of dOmega, each including the 1/3 factor.
struct DOmega {
  static constexpr std::array<std::array<int, 3>, 4> kIndices{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  std::array<RealPoly4, 4> components;

  bool is_zero() const;
};

/// (dOmega)_ijk = 1/3 (d_i Omega_jk + d_j Omega_ki + d_k Omega_ij).
DOmega d_omega(const PQPolyMap& f, Chirality chirality);

/// Every quantity of the structure evaluated at one point.
struct FrameSample {
  Point point{};
  Matrix4 g = Matrix4::Zero();
  Matrix4 J = Matrix4::Zero();
  Matrix4 Omega = Matrix4::Zero();
  double h = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Throws DegeneratePoint when h_sq(point) <= 0.
FrameSample sample_frame(const EpsilonStructure& s, const PointQ& point);

struct BuildOptions {
  std::size_t epsilon_samples = 1024;
};

/// Checks regularity on the chirality's side, picks epsilon and assembles
/// the structure. Throws NonzeroRealPart, NotRegular or SignChange.
EpsilonStructure build_structure(const PQPolyMap& f, Chirality chirality, const Box& domain,
                                 const BuildOptions& options = {});

struct VerifyOptions {
  std::size_t samples = 1000;
  double tol = 1e-12;
  double weyl_step = 1e-3;
  double weyl_tol = 1e-6;
  std::size_t weyl_points = 10;
  std::uint64_t seed = 0;
};

struct StructureReport {
  // Exact checks.
  bool real_part_zero = false;
  bool h_sq_identity = false;
  bool regularity_verdict = false;
  bool symbolic_dOmega_zero = false;

  // Maxima over sampled points; all >= 0.
  double j_squared = 0.0;             // ||J^2 - eps I||_inf
  double metric_compatibility = 0.0;  // ||J^T g J + eps g||_inf
  double omega_consistency = 0.0;     // ||g J - Omega||_inf
  double omega_antisymmetry = 0.0;    // ||Omega + Omega^T||_inf
  double norm_constraint = 0.0;       // |a^2 - b^2 - c^2 + eps|
  double weyl = 0.0;                  // max |C_abcd|

  std::size_t samples_used = 0;
  std::size_t weyl_points_used = 0;
  VerifyOptions options;

  bool symbolic_pass() const;
  bool numeric_pass() const;
  bool passed() const { return symbolic_pass() && numeric_pass(); }
};

/// Exact checks, then the pointwise identities at `options.samples`
/// Halton points of the domain and the finite-difference Weyl check at
/// `options.weyl_points` interior points. Throws DegeneratePoint if h_sq
/// is not positive somewhere it is evaluated.
StructureReport verify_structure(const EpsilonStructure& s, const VerifyOptions& options = {});

enum class BuiltinExample { A, B };

/// A: 2x0 i1 + (x0 - x1 - x2 - x3) i2 + (x0 + x1 + x2 + x3) i3, left-regular.
/// B: 2x0 i1 + (x0 + x1 + x2 + x3) i2 + (x0 - x1 - x2 - x3) i3, right-regular.
PQPolyMap builtin_example(BuiltinExample which);

}  // namespace pqk
