#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace geokiss::geom {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// thrown when two shapes live in different ambient dimensions
struct DimensionMismatch : GeometryError {
    using GeometryError::GeometryError;
};

// thrown for shape pairs the predicate set does not cover
struct UnsupportedPair : GeometryError {
    using GeometryError::GeometryError;
};

using Point = std::vector<double>;

struct Ball {
    Point center;
    double radius = 1.0;
};

struct AxisHypercube {
    Point center;
    double side = 1.0;
};

// vertex j sits at angle rotation + 2*pi*j/k, distance circumradius from center
struct RegularKGon {
    Point center;
    int k = 3;
    double circumradius = 1.0;
    double rotation = 0.0;
};

// strictly convex, counter-clockwise, 2-D
struct ConvexPolygon {
    std::vector<Point> vertices;
};

// product of a convex 2-D base (first two axes) and one interval per extra axis;
// covers unit hypercubes rotated only inside the first two coordinates
struct Prism {
    std::vector<Point> base;                    // CCW convex polygon
    std::vector<std::array<double, 2>> intervals;  // [lo, hi] for axes 2, 3, ...
};

class Shape {
public:
    using Variant = std::variant<Ball, AxisHypercube, RegularKGon, ConvexPolygon, Prism>;

    Shape(Ball b);            // NOLINT: implicit by design
    Shape(AxisHypercube h);   // NOLINT
    Shape(RegularKGon g);     // NOLINT
    Shape(ConvexPolygon p);   // NOLINT
    Shape(Prism p);           // NOLINT

    int dimension() const;
    std::string kind_name() const;
    Point center() const;

    template <class T> bool is() const { return std::holds_alternative<T>(v_); }
    template <class T> const T& as() const { return std::get<T>(v_); }
    const Variant& raw() const { return v_; }

private:
    Variant v_;
};

// process-wide tangency tolerance tau; |gap| <= tau classifies as touching
double default_tolerance();
void set_default_tolerance(double tau);

enum class Contact { disjoint, touching, overlapping };

// trichotomy on the signed boundary gap; ball-ball and hypercube-hypercube
// pairs are decided by exact rational comparison of the banded thresholds,
// polygonal pairs by floating point against tau
Contact classify(const Shape& a, const Shape& b, double tol);
Contact classify(const Shape& a, const Shape& b);

bool intersects(const Shape& a, const Shape& b);
bool intersects(const Shape& a, const Shape& b, double tol);
bool non_touching(const Shape& a, const Shape& b);
bool non_touching(const Shape& a, const Shape& b, double tol);
bool interiors_overlap(const Shape& a, const Shape& b);
bool interiors_overlap(const Shape& a, const Shape& b, double tol);

// scaling factor lambda such that y lies on the boundary of C translated to x
// and scaled by lambda; C must contain the origin strictly in its interior
double convex_distance(const Shape& c, const Point& x, const Point& y);

// inf over y in s of convex_distance(c, x, y); exact for origin-centered balls
// and hypercubes, numeric (tolerance tol) for other 2-D combinations
double convex_distance_to_set(const Shape& c, const Point& x, const Shape& s,
                              double tol);
double convex_distance_to_set(const Shape& c, const Point& x, const Shape& s);

struct FatMeta {
    double alpha = 1.0;   // aspect ratio: width / height
    double width = 1.0;   // min distance from the aspect point to the boundary
    double height = 1.0;  // max distance from the aspect point to the boundary
};

FatMeta fat_meta(const Shape& s);

// interior test for a single point (used by the distance helpers)
bool contains_point(const Shape& s, const Point& p, double tol = default_tolerance());

// vertices of the 2-D outline for squares, k-gons and polygons
std::vector<std::array<double, 2>> outline_2d(const Shape& s);

}  // namespace geokiss::geom
