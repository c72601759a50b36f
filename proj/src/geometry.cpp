#include "pqk/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pqk/text.hpp"

namespace pqk {
namespace {

const Matrix4 kFlatNorden = Eigen::Vector4d(-1.0, -1.0, 1.0, 1.0).asDiagonal();

void require_zero_real_part(const PQPolyMap& f) {
  if (!f[0].is_zero()) throw NonzeroRealPart("structure function must have zero real part");
}

void require_epsilon(int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
}

std::string describe(const PointQ& p) {
  std::ostringstream os;
  os << "(" << p[0].get_str() << ", " << p[1].get_str() << ", " << p[2].get_str() << ", " << p[3].get_str() << ")";
  return os.str();
}

Matrix4 j_matrix(Chirality chirality, double a, double b, double c) {
  Matrix4 J;
  if (chirality == Chirality::LeftJ) {
    J << 0, a, b, c,
        -a, 0, -c, b,
         b, -c, 0, -a,
         c, b, a, 0;
  } else {
    J << 0, a, b, c,
        -a, 0, c, -b,
         b, c, 0, a,
         c, -b, -a, 0;
  }
  return J;
}

struct FrameValues {
  double h, a, b, c;
};

FrameValues frame_values(double f1, double f2, double f3, double h_sq) {
  if (!(h_sq > 0.0)) throw DegeneratePoint("h^2 is not positive");
  const double h = std::sqrt(h_sq);
  return {h, f1 / h, f2 / h, f3 / h};
}

FrameValues frame_values_exact(const PQPolyMap& f, const RealPoly4& h_sq, const PointQ& point) {
  const Rational hs = h_sq.evaluate(point);
  if (hs <= 0) throw DegeneratePoint("h^2 = " + hs.get_str() + " is not positive at " + describe(point));
  return frame_values(f[1].evaluate(point).get_d(), f[2].evaluate(point).get_d(), f[3].evaluate(point).get_d(),
                      hs.get_d());
}

Matrix4 evaluate(const PolyMatrix4& m, const PointQ& point) {
  Matrix4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = m[i][j].evaluate(point).get_d();
  return out;
}

FrameSample frame_at(const EpsilonStructure& s, const PolyMatrix4& omega, const PointQ& point) {
  const FrameValues v = frame_values_exact(s.f, s.h_sq, point);
  FrameSample out;
  out.point = to_double(point);
  out.h = v.h;
  out.a = v.a;
  out.b = v.b;
  out.c = v.c;
  out.g = v.h * kFlatNorden;
  out.J = j_matrix(s.chirality, v.a, v.b, v.c);
  out.Omega = evaluate(omega, point);
  return out;
}

struct Residuals {
  double j_squared = 0.0;
  double metric_compatibility = 0.0;
  double omega_consistency = 0.0;
  double omega_antisymmetry = 0.0;
  double norm_constraint = 0.0;

  void merge(const Residuals& o) {
    j_squared = std::max(j_squared, o.j_squared);
    metric_compatibility = std::max(metric_compatibility, o.metric_compatibility);
    omega_consistency = std::max(omega_consistency, o.omega_consistency);
    omega_antisymmetry = std::max(omega_antisymmetry, o.omega_antisymmetry);
    norm_constraint = std::max(norm_constraint, o.norm_constraint);
  }
};

Residuals residuals_at(const FrameSample& fs, int epsilon) {
  const double eps = epsilon;
  const Matrix4 id = Matrix4::Identity();
  Residuals r;
  r.j_squared = (fs.J * fs.J - eps * id).cwiseAbs().maxCoeff();
  r.metric_compatibility = (fs.J.transpose() * fs.g * fs.J + eps * fs.g).cwiseAbs().maxCoeff();
  r.omega_consistency = (fs.g * fs.J - fs.Omega).cwiseAbs().maxCoeff();
  r.omega_antisymmetry = (fs.Omega + fs.Omega.transpose()).cwiseAbs().maxCoeff();
  r.norm_constraint = std::abs(fs.a * fs.a - fs.b * fs.b - fs.c * fs.c + eps);
  return r;
}

// Splits [0, n) into contiguous chunks and merges per-chunk maxima in
// chunk order, so the result does not depend on the thread count.
template <typename Result, typename Fn>
Result parallel_reduce(std::size_t n, Fn per_range) {
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  if (workers == 1 || n < 64) return per_range(0, n);
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::future<Result>> parts;
  for (std::size_t begin = 0; begin < n; begin += chunk)
    parts.push_back(std::async(std::launch::async, per_range, begin, std::min(n, begin + chunk)));
  Result total;
  for (auto& part : parts) total.merge(part.get());
  return total;
}

std::vector<Point> weyl_points(const Box& box, std::size_t count, double step, std::uint64_t seed) {
  const double margin = 2.0 * step;
  std::array<double, 4> lo{};
  std::array<double, 4> hi{};
  for (std::size_t k = 0; k < 4; ++k) {
    lo[k] = box.lower[k].get_d() + margin;
    hi[k] = box.upper[k].get_d() - margin;
    if (lo[k] > hi[k]) lo[k] = hi[k] = 0.5 * (box.lower[k].get_d() + box.upper[k].get_d());
  }
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const PointQ u = halton_point(seed + n + 1);
    Point p{};
    for (std::size_t k = 0; k < 4; ++k) p[k] = lo[k] + (hi[k] - lo[k]) * u[k].get_d();
    out.push_back(p);
  }
  return out;
}

}  // namespace

Side side_of(Chirality c) { return c == Chirality::LeftJ ? Side::Left : Side::Right; }

std::string to_string(Chirality c) { return c == Chirality::LeftJ ? "left" : "right"; }

namespace {

std::string not_regular_message(const RegularityVerdict& v) {
  std::ostringstream os;
  os << "function is not " << to_string(v.side) << "-regular; failing equation(s):";
  static constexpr const char* kNames[] = {"real", "i1", "i2", "i3"};
  for (int k : v.failing_equations()) os << " " << kNames[k] << " (" << v.residual[k] << " = 0)";
  return os.str();
}

}  // namespace

NotRegular::NotRegular(RegularityVerdict verdict)
    : Error(not_regular_message(verdict)), verdict_(std::move(verdict)) {}

RealPoly4 h_squared(const PQPolyMap& f, int epsilon) {
  require_zero_real_part(f);
  require_epsilon(epsilon);
  const RealPoly4 q = f[1] * f[1] - f[2] * f[2] - f[3] * f[3];
  return Rational(-epsilon) * q;
}

int choose_epsilon(const PQPolyMap& f, const Box& domain, std::size_t samples) {
  require_zero_real_part(f);
  domain.validate();
  const RealPoly4 q = f[1] * f[1] - f[2] * f[2] - f[3] * f[3];
  std::vector<PointQ> points = domain.corners();
  for (auto& p : sample_box(domain, samples)) points.push_back(std::move(p));

  int sign = 0;
  for (const auto& p : points) {
    const int s = sgn(q.evaluate(p));
    if (s == 0) throw SignChange("(f1)^2 - (f2)^2 - (f3)^2 vanishes at " + describe(p));
    if (sign == 0) sign = s;
    if (s != sign) throw SignChange("(f1)^2 - (f2)^2 - (f3)^2 changes sign on the domain, e.g. at " + describe(p));
  }
  // h^2 = -eps * q > 0
  return -sign;
}

PolyMatrix4 omega_field(const PQPolyMap& f, Chirality chirality) {
  require_zero_real_part(f);
  const RealPoly4& f1 = f[1];
  const RealPoly4& f2 = f[2];
  const RealPoly4& f3 = f[3];
  PolyMatrix4 m;
  auto set = [&m](int i, int j, const RealPoly4& v) {
    m[i][j] = v;
    m[j][i] = -v;
  };
  set(0, 1, -f1);
  set(0, 2, -f2);
  set(0, 3, -f3);
  if (chirality == Chirality::LeftJ) {
    set(1, 2, f3);
    set(1, 3, -f2);
    set(2, 3, -f1);
  } else {
    set(1, 2, -f3);
    set(1, 3, f2);
    set(2, 3, f1);
  }
  return m;
}

Matrix4 j_field(const PQPolyMap& f, const RealPoly4& h_sq, Chirality chirality, const PointQ& point) {
  const FrameValues v = frame_values_exact(f, h_sq, point);
  return j_matrix(chirality, v.a, v.b, v.c);
}

Matrix4 j_field(const PQPolyMap& f, const RealPoly4& h_sq, Chirality chirality, const Point& point) {
  const FrameValues v = frame_values(f[1].evaluate(point), f[2].evaluate(point), f[3].evaluate(point),
                                     h_sq.evaluate(point));
  return j_matrix(chirality, v.a, v.b, v.c);
}

Matrix4 metric_field(const RealPoly4& h_sq, const PointQ& point) {
  const Rational hs = h_sq.evaluate(point);
  if (hs <= 0) throw DegeneratePoint("h^2 = " + hs.get_str() + " is not positive at " + describe(point));
  return std::sqrt(hs.get_d()) * kFlatNorden;
}

Matrix4 metric_field(const RealPoly4& h_sq, const Point& point) {
  const double hs = h_sq.evaluate(point);
  if (!(hs > 0.0)) throw DegeneratePoint("h^2 is not positive");
  return std::sqrt(hs) * kFlatNorden;
}

MetricSampler conformal_metric(const RealPoly4& h_sq) {
  return [h_sq](const Point& p) { return metric_field(h_sq, p); };
}

bool DOmega::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const RealPoly4& p) { return p.is_zero(); });
}

DOmega d_omega(const PQPolyMap& f, Chirality chirality) {
  const PolyMatrix4 omega = omega_field(f, chirality);
  DOmega out;
  for (std::size_t n = 0; n < DOmega::kIndices.size(); ++n) {
    const auto [i, j, k] = DOmega::kIndices[n];
    out.components[n] =
        Rational(1, 3) * (omega[j][k].partial(i) + omega[k][i].partial(j) + omega[i][j].partial(k));
  }
  return out;
}

FrameSample sample_frame(const EpsilonStructure& s, const PointQ& point) {
  return frame_at(s, omega_field(s.f, s.chirality), point);
}

EpsilonStructure build_structure(const PQPolyMap& f, Chirality chirality, const Box& domain,
                                 const BuildOptions& options) {
  require_zero_real_part(f);
  domain.validate();
  RegularityVerdict verdict = check_regularity(f, side_of(chirality));
  if (!verdict.is_regular()) throw NotRegular(std::move(verdict));
  const int epsilon = choose_epsilon(f, domain, options.epsilon_samples);
  return {chirality, epsilon, f, h_squared(f, epsilon), domain};
}

bool StructureReport::symbolic_pass() const {
  return real_part_zero && h_sq_identity && regularity_verdict && symbolic_dOmega_zero;
}

bool StructureReport::numeric_pass() const {
  const double tol = options.tol;
  return j_squared < tol && metric_compatibility < tol && omega_consistency < tol && omega_antisymmetry < tol &&
         norm_constraint < tol && weyl < options.weyl_tol;
}

StructureReport verify_structure(const EpsilonStructure& s, const VerifyOptions& options) {
  require_epsilon(s.epsilon);
  s.domain.validate();
  StructureReport report;
  report.options = options;
  report.real_part_zero = s.f[0].is_zero();
  report.regularity_verdict = check_regularity(s.f, side_of(s.chirality)).is_regular();
  if (report.real_part_zero) {
    report.h_sq_identity = s.h_sq == h_squared(s.f, s.epsilon);
    report.symbolic_dOmega_zero = d_omega(s.f, s.chirality).is_zero();
  }

  // Omega from the real-part-free part of f, so a nonzero f0 shows up in
  // the symbolic verdicts rather than aborting the numeric checks.
  PQPolyMap imaginary = s.f;
  imaginary[0] = RealPoly4();
  const PolyMatrix4 omega = omega_field(imaginary, s.chirality);
  const std::vector<PointQ> points = sample_box(s.domain, options.samples, options.seed);
  const Residuals r = parallel_reduce<Residuals>(points.size(), [&](std::size_t begin, std::size_t end) {
    Residuals part;
    for (std::size_t n = begin; n < end; ++n) part.merge(residuals_at(frame_at(s, omega, points[n]), s.epsilon));
    return part;
  });
  report.j_squared = r.j_squared;
  report.metric_compatibility = r.metric_compatibility;
  report.omega_consistency = r.omega_consistency;
  report.omega_antisymmetry = r.omega_antisymmetry;
  report.norm_constraint = r.norm_constraint;
  report.samples_used = points.size();

  const MetricSampler metric = conformal_metric(s.h_sq);
  for (const Point& p : weyl_points(s.domain, options.weyl_points, options.weyl_step, options.seed))
    report.weyl = std::max(report.weyl, weyl_numeric(metric, p, options.weyl_step));
  report.weyl_points_used = options.weyl_points;
  return report;
}

PQPolyMap builtin_example(BuiltinExample which) {
  const RealPoly4 x0 = RealPoly4::variable(0);
  const RealPoly4 s = RealPoly4::variable(1) + RealPoly4::variable(2) + RealPoly4::variable(3);
  const RealPoly4 minus = x0 - s;
  const RealPoly4 plus = x0 + s;
  if (which == BuiltinExample::A) return {RealPoly4(), Rational(2) * x0, minus, plus};
  return {RealPoly4(), Rational(2) * x0, plus, minus};
}

}  // namespace pqk
