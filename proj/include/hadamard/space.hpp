#pragma once

#include <string>
#include <variant>
#include <vector>

namespace hadamard {

enum class SpaceKind { Euclidean, Spider, Spd, Hyperbolic };

struct EuclideanPoint {
  std::vector<double> coords;
};

// k half-lines glued at a common origin. Every point of radius zero is the
// origin; make_spider canonicalizes those to ray 0.
struct SpiderPoint {
  int ray = 0;
  double radius = 0.0;
};

// Symmetric positive-definite matrix, row-major, with the affine-invariant
// metric.
struct SpdPoint {
  int n = 0;
  std::vector<double> entries;
};

// Upper half-plane model, y > 0.
struct HyperbolicPoint {
  double x = 0.0;
  double y = 1.0;
};

using Point = std::variant<EuclideanPoint, SpiderPoint, SpdPoint, HyperbolicPoint>;

struct Space {
  SpaceKind kind = SpaceKind::Euclidean;
  int dim = 1;  // coordinates (Euclidean), matrix size (Spd), ray count (Spider)

  static Space euclidean(int n);
  static Space spider(int rays);
  static Space spd(int n);
  static Space hyperbolic();
};

Point make_euclidean(std::vector<double> coords);
Point make_spider(int ray, double radius);
// Symmetrizes on ingestion; rejects matrices with an eigenvalue <= 1e-14.
Point make_spd(int n, std::vector<double> entries);
Point make_hyperbolic(double x, double y);

struct ClosedBall {
  Point center;
  double radius = 0.0;
};
struct GeodesicSegment {
  Point a;
  Point b;
};
// Union of the listed rays together with the origin (Spider only).
struct SubSpider {
  std::vector<int> rays;
};
struct WholeSpace {};

using ConvexSet = std::variant<ClosedBall, GeodesicSegment, SubSpider, WholeSpace>;

// Throws std::invalid_argument when p does not live in the space.
void validate_point(const Space& space, const Point& p);

double distance(const Space& space, const Point& p, const Point& q);

// The point z on [p,q] with d(p,z) = t * d(p,q); t must lie in [0,1].
Point geodesic_point(const Space& space, const Point& p, const Point& q, double t);

Point project(const Space& space, const ConvexSet& set, const Point& x);
bool member(const Space& space, const ConvexSet& set, const Point& x, double tol = 1e-9);

// d(x, gamma(t))^2 - [(1-t) d(x,p)^2 + t d(x,q)^2 - t(1-t) d(p,q)^2];
// nonpositive (up to rounding) in every supported space.
double check_cat0(const Space& space, const Point& x, const Point& p, const Point& q, double t);

bool same_point(const Space& space, const Point& p, const Point& q, double tol = 0.0);

std::string describe(const Space& space);
std::string describe(const Point& p);
std::string describe(const ConvexSet& set);

// Tangent helpers for the upper half-plane, used by the iterative prox.
struct HypTangent {
  double vx = 0.0;
  double vy = 0.0;
};
double hyperbolic_norm(const HyperbolicPoint& base, const HypTangent& v);
HypTangent hyperbolic_log(const HyperbolicPoint& base, const HyperbolicPoint& target);
HyperbolicPoint hyperbolic_exp(const HyperbolicPoint& base, const HypTangent& v);

}  // namespace hadamard
