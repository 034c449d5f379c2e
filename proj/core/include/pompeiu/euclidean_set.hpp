#pragma once

// Compact subsets of R^n (n = 2, 3) with exact volume: balls, annuli
// (spherical shells in R^3), convex polytopes and disjoint unions, plus the
// complex frequency vectors and rigid motions that act on them.

#include <array>
#include <complex>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace pompeiu {

using Complex = std::complex<double>;
/// A point of R^n stored in three slots; slots >= n are zero.
using Point = std::array<double, 3>;

void check_dimension(int dim);

double dot(const Point& a, const Point& b, int dim);
double norm(const Point& a, int dim);

/// z in C^n. The bilinear square z . z (not the Hermitian norm) is what
/// radial transforms depend on.
class ComplexVector {
 public:
  explicit ComplexVector(int dim);
  ComplexVector(int dim, std::array<Complex, 3> coords);
  /// lambda * direction.
  static ComplexVector along(int dim, Complex lambda, const Point& direction);

  int dim() const noexcept { return dim_; }
  Complex operator[](int k) const { return z_[k]; }
  Complex& operator[](int k) { return z_[k]; }
  const std::array<Complex, 3>& coords() const noexcept { return z_; }

  Complex bilinear_square() const;
  /// z . x = sum z_k x_k.
  Complex dot(const Point& x) const;
  double max_abs_imag() const;

 private:
  int dim_;
  std::array<Complex, 3> z_{};
};

/// x -> R x + t with R in SO(n).
class RigidMotion {
 public:
  explicit RigidMotion(int dim);
  /// Validates R^T R = I and det R = +1 to 1e-12.
  RigidMotion(int dim, std::array<double, 9> rotation, Point translation);

  static RigidMotion rotation2d(double angle, Point translation = {});
  /// Rotation from the (not necessarily normalized) quaternion (w, x, y, z).
  static RigidMotion from_quaternion(double w, double x, double y, double z, Point translation = {});

  int dim() const noexcept { return dim_; }
  double r(int i, int j) const { return rotation_[3 * i + j]; }
  const Point& translation() const noexcept { return translation_; }

  Point apply(const Point& x) const;
  Point rotate(const Point& x) const;
  /// R^T x = R^-1 x.
  Point rotate_inverse(const Point& x) const;
  ComplexVector rotate(const ComplexVector& z) const;
  ComplexVector rotate_inverse(const ComplexVector& z) const;

  /// (this o other)(x) = this(other(x)).
  RigidMotion compose(const RigidMotion& other) const;
  RigidMotion inverse() const;

 private:
  int dim_;
  std::array<double, 9> rotation_{};
  Point translation_{};
};

struct Simplex {
  std::array<Point, 4> vertices;  // dim + 1 used
  double volume;
};

struct Ball {
  double radius;
  Point center;
};

/// r_inner < |x - center| < r_outer.
struct Annulus {
  double inner;
  double outer;
  Point center;
};

/// Convex hull of the given vertices, triangulated.
struct Polytope {
  std::vector<Point> vertices;
  std::vector<Point> hull;
  std::vector<Simplex> simplices;
};

class EuclideanSet;

struct DisjointUnion {
  std::vector<EuclideanSet> members;
};

struct BoundingBox {
  Point lo;
  Point hi;
};

/// One term sign * chi_{B(radius)} of a radial set written as a signed sum of
/// concentric balls.
struct RadialTerm {
  double sign;
  double radius;
};

class EuclideanSet {
 public:
  using Shape = std::variant<Ball, Annulus, Polytope, DisjointUnion>;

  static EuclideanSet ball(int dim, double radius, Point center = {});
  static EuclideanSet annulus(int dim, double inner, double outer, Point center = {});
  /// Throws DegeneratePolytope when the vertices do not span R^n.
  static EuclideanSet polytope(int dim, std::vector<Point> vertices);
  /// Rejects members of different dimension and members whose interiors
  /// overlap (bounding boxes for general members, radial shells for
  /// concentric ones).
  static EuclideanSet disjoint_union(std::vector<EuclideanSet> members);

  int dim() const noexcept { return dim_; }
  double volume() const noexcept { return volume_; }
  const Shape& shape() const noexcept { return shape_; }
  std::string kind() const;

  BoundingBox bounding_box() const;
  /// Ball, annulus, or union of such with a common center.
  bool is_radial() const;
  /// Common center of a radial set; throws NonRadial.
  Point radial_center() const;
  /// chi_E as a signed sum of balls about radial_center(); throws NonRadial.
  std::vector<RadialTerm> radial_terms() const;

  EuclideanSet transformed(const RigidMotion& motion) const;

 private:
  EuclideanSet(int dim, Shape shape, double volume);

  int dim_;
  Shape shape_;
  double volume_;
};

double ball_volume(int dim, double radius);

/// |det[v_1 - v_0, ..., v_n - v_0]| / n!.
double simplex_volume(std::span<const Point> vertices, int dim);

}  // namespace pompeiu
