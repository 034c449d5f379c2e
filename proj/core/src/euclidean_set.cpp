#include "pompeiu/euclidean_set.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pompeiu/error.hpp"

namespace pompeiu {
namespace {

Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double cross2(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double extent(const std::vector<Point>& pts, int dim) {
  double s = 0;
  for (const auto& p : pts)
    for (int k = 0; k < dim; ++k) s = std::max(s, std::abs(p[k]));
  return std::max(s, 1.0);
}

// Counter-clockwise hull without collinear points (monotone chain).
std::vector<Point> hull2d(std::vector<Point> pts, double eps) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], p) <= eps) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= eps) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

struct Face {
  Point normal;
  double offset;
  std::vector<Point> polygon;  // ordered around the face
};

std::vector<Face> hull3d_faces(const std::vector<Point>& pts, double eps) {
  std::vector<Face> faces;
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        Point n = cross(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        const double len = norm(n, 3);
        if (len <= eps) continue;
        for (auto& c : n) c /= len;
        double d = dot(n, pts[i], 3);
        bool above = false, below = false;
        for (const auto& p : pts) {
          const double h = dot(n, p, 3) - d;
          above |= h > eps;
          below |= h < -eps;
        }
        if (above && below) continue;
        if (above) {
          for (auto& c : n) c = -c;
          d = -d;
        }
        const bool seen = std::any_of(faces.begin(), faces.end(), [&](const Face& f) {
          return std::abs(f.offset - d) <= eps && norm(sub(f.normal, n), 3) <= 1e-9;
        });
        if (seen) continue;
        // Order the coplanar points with a 2-D hull in an in-plane basis.
        const Point u = [&] {
          Point a = sub(pts[j], pts[i]);
          const double l = norm(a, 3);
          for (auto& c : a) c /= l;
          return a;
        }();
        const Point v = cross(n, u);
        std::vector<Point> planar;
        for (const auto& p : pts) {
          if (std::abs(dot(n, p, 3) - d) <= eps) {
            const Point q = sub(p, pts[i]);
            planar.push_back({dot(q, u, 3), dot(q, v, 3), 0.0});
          }
        }
        Face f{n, d, {}};
        for (const auto& q : hull2d(planar, eps)) {
          f.polygon.push_back({pts[i][0] + q[0] * u[0] + q[1] * v[0], pts[i][1] + q[0] * u[1] + q[1] * v[1],
                               pts[i][2] + q[0] * u[2] + q[1] * v[2]});
        }
        faces.push_back(std::move(f));
      }
    }
  }
  return faces;
}

std::vector<std::pair<double, double>> shells(const EuclideanSet& s) {
  std::vector<std::pair<double, double>> out;
  if (const auto* b = std::get_if<Ball>(&s.shape())) out.emplace_back(0.0, b->radius);
  if (const auto* a = std::get_if<Annulus>(&s.shape())) out.emplace_back(a->inner, a->outer);
  if (const auto* u = std::get_if<DisjointUnion>(&s.shape())) {
    for (const auto& m : u->members) {
      const auto sub_shells = shells(m);
      out.insert(out.end(), sub_shells.begin(), sub_shells.end());
    }
  }
  return out;
}

bool same_point(const Point& a, const Point& b) { return norm(sub(a, b), 3) <= 1e-12; }

}  // namespace

void check_dimension(int dim) {
  if (dim != 2 && dim != 3) {
    throw Error(ErrorKind::UnsupportedDimension, "dimension " + std::to_string(dim) + " not supported (2 or 3)");
  }
}

double dot(const Point& a, const Point& b, int dim) {
  double s = 0;
  for (int k = 0; k < dim; ++k) s += a[k] * b[k];
  return s;
}

double norm(const Point& a, int dim) { return std::sqrt(dot(a, a, dim)); }

ComplexVector::ComplexVector(int dim) : dim_(dim) { check_dimension(dim); }

ComplexVector::ComplexVector(int dim, std::array<Complex, 3> coords) : dim_(dim), z_(coords) {
  check_dimension(dim);
  for (int k = dim; k < 3; ++k) z_[k] = 0;
}

ComplexVector ComplexVector::along(int dim, Complex lambda, const Point& direction) {
  ComplexVector z(dim);
  for (int k = 0; k < dim; ++k) z.z_[k] = lambda * direction[k];
  return z;
}

Complex ComplexVector::bilinear_square() const {
  Complex s = 0;
  for (int k = 0; k < dim_; ++k) s += z_[k] * z_[k];
  return s;
}

Complex ComplexVector::dot(const Point& x) const {
  Complex s = 0;
  for (int k = 0; k < dim_; ++k) s += z_[k] * x[k];
  return s;
}

double ComplexVector::max_abs_imag() const {
  double m = 0;
  for (int k = 0; k < dim_; ++k) m = std::max(m, std::abs(z_[k].imag()));
  return m;
}

RigidMotion::RigidMotion(int dim) : dim_(dim) {
  check_dimension(dim);
  rotation_ = {1, 0, 0, 0, 1, 0, 0, 0, 1};
}

RigidMotion::RigidMotion(int dim, std::array<double, 9> rotation, Point translation)
    : dim_(dim), rotation_(rotation), translation_(translation) {
  check_dimension(dim);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i >= dim || j >= dim) rotation_[3 * i + j] = i == j ? 1.0 : 0.0;
    }
  }
  for (int k = dim; k < 3; ++k) translation_[k] = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += r(k, i) * r(k, j);
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > 1e-12) {
        throw Error(ErrorKind::InvalidArgument, "rotation matrix is not orthogonal");
      }
    }
  }
  const double det = r(0, 0) * (r(1, 1) * r(2, 2) - r(1, 2) * r(2, 1)) -
                     r(0, 1) * (r(1, 0) * r(2, 2) - r(1, 2) * r(2, 0)) +
                     r(0, 2) * (r(1, 0) * r(2, 1) - r(1, 1) * r(2, 0));
  if (std::abs(det - 1.0) > 1e-12) throw Error(ErrorKind::InvalidArgument, "rotation matrix has det != +1");
}

RigidMotion RigidMotion::rotation2d(double angle, Point translation) {
  const double c = std::cos(angle), s = std::sin(angle);
  return RigidMotion(2, {c, -s, 0, s, c, 0, 0, 0, 1}, translation);
}

RigidMotion RigidMotion::from_quaternion(double w, double x, double y, double z, Point translation) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "zero quaternion");
  w /= n, x /= n, y /= n, z /= n;
  return RigidMotion(3,
                     {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
                      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
                      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)},
                     translation);
}

Point RigidMotion::rotate(const Point& x) const {
  Point y{};
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) y[i] += r(i, j) * x[j];
  return y;
}

Point RigidMotion::rotate_inverse(const Point& x) const {
  Point y{};
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) y[i] += r(j, i) * x[j];
  return y;
}

Point RigidMotion::apply(const Point& x) const {
  Point y = rotate(x);
  for (int i = 0; i < dim_; ++i) y[i] += translation_[i];
  return y;
}

ComplexVector RigidMotion::rotate(const ComplexVector& z) const {
  ComplexVector y(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) y[i] += r(i, j) * z[j];
  return y;
}

ComplexVector RigidMotion::rotate_inverse(const ComplexVector& z) const {
  ComplexVector y(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) y[i] += r(j, i) * z[j];
  return y;
}

RigidMotion RigidMotion::compose(const RigidMotion& other) const {
  if (other.dim_ != dim_) throw Error(ErrorKind::InvalidArgument, "motions of different dimension");
  RigidMotion out(dim_);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += r(i, k) * other.r(k, j);
      out.rotation_[3 * i + j] = s;
    }
  }
  out.translation_ = apply(other.translation_);
  return out;
}

RigidMotion RigidMotion::inverse() const {
  RigidMotion out(dim_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.rotation_[3 * i + j] = r(j, i);
  const Point t = rotate_inverse(translation_);
  for (int i = 0; i < dim_; ++i) out.translation_[i] = -t[i];
  return out;
}

double ball_volume(int dim, double radius) {
  check_dimension(dim);
  return dim == 2 ? std::numbers::pi * radius * radius : 4.0 / 3.0 * std::numbers::pi * radius * radius * radius;
}

double simplex_volume(std::span<const Point> v, int dim) {
  const Point a = sub(v[1], v[0]), b = sub(v[2], v[0]);
  if (dim == 2) return std::abs(a[0] * b[1] - a[1] * b[0]) / 2.0;
  const Point c = sub(v[3], v[0]);
  return std::abs(dot(cross(a, b), c, 3)) / 6.0;
}

EuclideanSet::EuclideanSet(int dim, Shape shape, double volume)
    : dim_(dim), shape_(std::move(shape)), volume_(volume) {}

EuclideanSet EuclideanSet::ball(int dim, double radius, Point center) {
  check_dimension(dim);
  if (!(radius > 0) || !std::isfinite(radius)) throw Error(ErrorKind::InvalidArgument, "ball radius must be positive");
  for (int k = dim; k < 3; ++k) center[k] = 0;
  return EuclideanSet(dim, Ball{radius, center}, ball_volume(dim, radius));
}

EuclideanSet EuclideanSet::annulus(int dim, double inner, double outer, Point center) {
  check_dimension(dim);
  if (!(inner > 0) || !(outer > inner) || !std::isfinite(outer)) {
    throw Error(ErrorKind::InvalidArgument, "annulus needs 0 < inner < outer");
  }
  for (int k = dim; k < 3; ++k) center[k] = 0;
  return EuclideanSet(dim, Annulus{inner, outer, center}, ball_volume(dim, outer) - ball_volume(dim, inner));
}

EuclideanSet EuclideanSet::polytope(int dim, std::vector<Point> vertices) {
  check_dimension(dim);
  for (auto& v : vertices) {
    for (int k = dim; k < 3; ++k) v[k] = 0;
    for (int k = 0; k < dim; ++k) {
      if (!std::isfinite(v[k])) throw Error(ErrorKind::InvalidArgument, "non-finite polytope vertex");
    }
  }
  if (vertices.size() < static_cast<std::size_t>(dim) + 1) {
    throw Error(ErrorKind::DegeneratePolytope, "polytope needs at least " + std::to_string(dim + 1) + " vertices");
  }
  const double scale = extent(vertices, dim);
  const double eps = 1e-10 * scale;
  Polytope p;
  p.vertices = vertices;
  double volume = 0;
  if (dim == 2) {
    p.hull = hull2d(vertices, eps * scale);
    for (std::size_t i = 1; i + 1 < p.hull.size(); ++i) {
      Simplex s{{p.hull[0], p.hull[i], p.hull[i + 1], Point{}}, 0.0};
      s.volume = simplex_volume(s.vertices, 2);
      volume += s.volume;
      p.simplices.push_back(s);
    }
  } else {
    const auto faces = hull3d_faces(vertices, eps);
    for (const auto& f : faces)
      for (const auto& q : f.polygon)
        if (std::none_of(p.hull.begin(), p.hull.end(), [&](const Point& h) { return norm(sub(h, q), 3) <= eps; }))
          p.hull.push_back(q);
    Point c{};
    for (const auto& h : p.hull)
      for (int k = 0; k < 3; ++k) c[k] += h[k] / static_cast<double>(p.hull.size());
    for (const auto& f : faces) {
      for (std::size_t i = 1; i + 1 < f.polygon.size(); ++i) {
        Simplex s{{c, f.polygon[0], f.polygon[i], f.polygon[i + 1]}, 0.0};
        s.volume = simplex_volume(s.vertices, 3);
        volume += s.volume;
        p.simplices.push_back(s);
      }
    }
  }
  if (!(volume > 1e-12 * std::pow(scale, dim))) {
    throw Error(ErrorKind::DegeneratePolytope, "polytope vertices do not span R^" + std::to_string(dim));
  }
  return EuclideanSet(dim, std::move(p), volume);
}

EuclideanSet EuclideanSet::disjoint_union(std::vector<EuclideanSet> members) {
  if (members.empty()) throw Error(ErrorKind::EmptySet, "union needs at least one member");
  const int dim = members.front().dim();
  double volume = 0;
  for (const auto& m : members) {
    if (m.dim() != dim) throw Error(ErrorKind::InvalidArgument, "union members of different dimension");
    volume += m.volume();
  }
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const auto& x = members[a];
      const auto& y = members[b];
      bool overlap;
      if (x.is_radial() && y.is_radial() && same_point(x.radial_center(), y.radial_center())) {
        overlap = false;
        for (const auto& [lo1, hi1] : shells(x))
          for (const auto& [lo2, hi2] : shells(y))
            overlap |= std::max(lo1, lo2) < std::min(hi1, hi2) - 1e-12;
      } else {
        const auto bx = x.bounding_box(), by = y.bounding_box();
        overlap = true;
        for (int k = 0; k < dim; ++k) overlap &= bx.lo[k] < by.hi[k] - 1e-12 && by.lo[k] < bx.hi[k] - 1e-12;
      }
      if (overlap) {
        throw Error(ErrorKind::OverlappingUnion,
                    "union members " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
      }
    }
  }
  return EuclideanSet(dim, DisjointUnion{std::move(members)}, volume);
}

std::string EuclideanSet::kind() const {
  switch (shape_.index()) {
    case 0: return "ball";
    case 1: return "annulus";
    case 2: return "polytope";
    default: return "union";
  }
}

BoundingBox EuclideanSet::bounding_box() const {
  BoundingBox box{};
  auto around = [&](const Point& c, double r) {
    for (int k = 0; k < dim_; ++k) {
      box.lo[k] = c[k] - r;
      box.hi[k] = c[k] + r;
    }
  };
  if (const auto* b = std::get_if<Ball>(&shape_)) around(b->center, b->radius);
  if (const auto* a = std::get_if<Annulus>(&shape_)) around(a->center, a->outer);
  if (const auto* p = std::get_if<Polytope>(&shape_)) {
    box.lo = box.hi = p->hull.front();
    for (const auto& v : p->hull) {
      for (int k = 0; k < dim_; ++k) {
        box.lo[k] = std::min(box.lo[k], v[k]);
        box.hi[k] = std::max(box.hi[k], v[k]);
      }
    }
  }
  if (const auto* u = std::get_if<DisjointUnion>(&shape_)) {
    box = u->members.front().bounding_box();
    for (const auto& m : u->members) {
      const auto mb = m.bounding_box();
      for (int k = 0; k < dim_; ++k) {
        box.lo[k] = std::min(box.lo[k], mb.lo[k]);
        box.hi[k] = std::max(box.hi[k], mb.hi[k]);
      }
    }
  }
  return box;
}

bool EuclideanSet::is_radial() const {
  if (std::holds_alternative<Ball>(shape_) || std::holds_alternative<Annulus>(shape_)) return true;
  const auto* u = std::get_if<DisjointUnion>(&shape_);
  if (!u) return false;
  for (const auto& m : u->members) {
    if (!m.is_radial() || !same_point(m.radial_center(), u->members.front().radial_center())) return false;
  }
  return true;
}

Point EuclideanSet::radial_center() const {
  if (const auto* b = std::get_if<Ball>(&shape_)) return b->center;
  if (const auto* a = std::get_if<Annulus>(&shape_)) return a->center;
  if (!is_radial()) throw Error(ErrorKind::NonRadial, "set is not radial (" + kind() + ")");
  return std::get<DisjointUnion>(shape_).members.front().radial_center();
}

std::vector<RadialTerm> EuclideanSet::radial_terms() const {
  if (const auto* b = std::get_if<Ball>(&shape_)) return {{1.0, b->radius}};
  if (const auto* a = std::get_if<Annulus>(&shape_)) return {{1.0, a->outer}, {-1.0, a->inner}};
  if (!is_radial()) throw Error(ErrorKind::NonRadial, "set is not radial (" + kind() + ")");
  std::vector<RadialTerm> out;
  for (const auto& m : std::get<DisjointUnion>(shape_).members) {
    const auto t = m.radial_terms();
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

EuclideanSet EuclideanSet::transformed(const RigidMotion& motion) const {
  if (motion.dim() != dim_) throw Error(ErrorKind::InvalidArgument, "motion and set of different dimension");
  if (const auto* b = std::get_if<Ball>(&shape_)) return EuclideanSet(dim_, Ball{b->radius, motion.apply(b->center)}, volume_);
  if (const auto* a = std::get_if<Annulus>(&shape_))
    return EuclideanSet(dim_, Annulus{a->inner, a->outer, motion.apply(a->center)}, volume_);
  if (const auto* p = std::get_if<Polytope>(&shape_)) {
    std::vector<Point> v;
    v.reserve(p->vertices.size());
    for (const auto& x : p->vertices) v.push_back(motion.apply(x));
    return polytope(dim_, std::move(v));
  }
  DisjointUnion u;
  for (const auto& m : std::get<DisjointUnion>(shape_).members) u.members.push_back(m.transformed(motion));
  return EuclideanSet(dim_, std::move(u), volume_);
}

}  // namespace pompeiu
