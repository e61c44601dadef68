#include "geokiss/geometry.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace geokiss::geom {

namespace {

double g_tolerance = 1e-9;

void require_finite(const Point& p, const char* what) {
    if (p.empty()) throw GeometryError(std::string(what) + ": empty point");
    for (double v : p)
        if (!std::isfinite(v)) throw GeometryError(std::string(what) + ": non-finite coordinate");
}

double cross(const std::array<double, 2>& o, const std::array<double, 2>& a,
             const std::array<double, 2>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

void validate_ccw_convex(const std::vector<Point>& vs, const char* what) {
    if (vs.size() < 3) throw GeometryError(std::string(what) + ": need at least 3 vertices");
    for (const auto& v : vs) {
        require_finite(v, what);
        if (v.size() != 2) throw GeometryError(std::string(what) + ": vertices must be 2-D");
    }
    const size_t n = vs.size();
    for (size_t i = 0; i < n; ++i) {
        std::array<double, 2> o{vs[i][0], vs[i][1]};
        std::array<double, 2> a{vs[(i + 1) % n][0], vs[(i + 1) % n][1]};
        std::array<double, 2> b{vs[(i + 2) % n][0], vs[(i + 2) % n][1]};
        if (cross(o, a, b) <= 0.0)
            throw GeometryError(std::string(what) + ": vertices must be strictly convex CCW");
    }
}

}  // namespace

double default_tolerance() { return g_tolerance; }

void set_default_tolerance(double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau))
        throw GeometryError("tolerance must be positive and finite");
    g_tolerance = tau;
}

Shape::Shape(Ball b) : v_(std::move(b)) {
    const auto& x = std::get<Ball>(v_);
    require_finite(x.center, "Ball");
    if (!(x.radius > 0.0)) throw GeometryError("Ball: radius must be positive");
}

Shape::Shape(AxisHypercube h) : v_(std::move(h)) {
    const auto& x = std::get<AxisHypercube>(v_);
    require_finite(x.center, "AxisHypercube");
    if (!(x.side > 0.0)) throw GeometryError("AxisHypercube: side must be positive");
}

Shape::Shape(RegularKGon g) : v_(std::move(g)) {
    const auto& x = std::get<RegularKGon>(v_);
    require_finite(x.center, "RegularKGon");
    if (x.center.size() != 2) throw GeometryError("RegularKGon: center must be 2-D");
    if (x.k < 3) throw GeometryError("RegularKGon: k must be at least 3");
    if (!(x.circumradius > 0.0)) throw GeometryError("RegularKGon: circumradius must be positive");
    if (!std::isfinite(x.rotation)) throw GeometryError("RegularKGon: rotation must be finite");
}

Shape::Shape(ConvexPolygon p) : v_(std::move(p)) {
    validate_ccw_convex(std::get<ConvexPolygon>(v_).vertices, "ConvexPolygon");
}

Shape::Shape(Prism p) : v_(std::move(p)) {
    const auto& x = std::get<Prism>(v_);
    validate_ccw_convex(x.base, "Prism");
    if (x.intervals.empty()) throw GeometryError("Prism: needs at least one interval");
    for (const auto& iv : x.intervals)
        if (!(iv[0] < iv[1]) || !std::isfinite(iv[0]) || !std::isfinite(iv[1]))
            throw GeometryError("Prism: interval must satisfy lo < hi");
}

int Shape::dimension() const {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball> || std::is_same_v<T, AxisHypercube>)
                return static_cast<int>(s.center.size());
            else if constexpr (std::is_same_v<T, RegularKGon>)
                return 2;
            else if constexpr (std::is_same_v<T, ConvexPolygon>)
                return 2;
            else
                return 2 + static_cast<int>(s.intervals.size());
        },
        v_);
}

std::string Shape::kind_name() const {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) return "ball";
            else if constexpr (std::is_same_v<T, AxisHypercube>) return "axis_hypercube";
            else if constexpr (std::is_same_v<T, RegularKGon>) return "regular_kgon";
            else if constexpr (std::is_same_v<T, ConvexPolygon>) return "convex_polygon";
            else return "prism";
        },
        v_);
}

Point Shape::center() const {
    return std::visit(
        [](const auto& s) -> Point {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball> || std::is_same_v<T, AxisHypercube> ||
                          std::is_same_v<T, RegularKGon>) {
                return s.center;
            } else if constexpr (std::is_same_v<T, ConvexPolygon>) {
                Point c{0.0, 0.0};
                for (const auto& v : s.vertices) {
                    c[0] += v[0];
                    c[1] += v[1];
                }
                c[0] /= static_cast<double>(s.vertices.size());
                c[1] /= static_cast<double>(s.vertices.size());
                return c;
            } else {
                Point c{0.0, 0.0};
                for (const auto& v : s.base) {
                    c[0] += v[0];
                    c[1] += v[1];
                }
                c[0] /= static_cast<double>(s.base.size());
                c[1] /= static_cast<double>(s.base.size());
                for (const auto& iv : s.intervals) c.push_back(0.5 * (iv[0] + iv[1]));
                return c;
            }
        },
        v_);
}

std::vector<std::array<double, 2>> outline_2d(const Shape& s) {
    if (s.is<AxisHypercube>()) {
        const auto& h = s.as<AxisHypercube>();
        if (h.center.size() != 2) throw GeometryError("outline_2d: hypercube not 2-D");
        const double hx = h.side / 2.0;
        return {{h.center[0] + hx, h.center[1] + hx},
                {h.center[0] - hx, h.center[1] + hx},
                {h.center[0] - hx, h.center[1] - hx},
                {h.center[0] + hx, h.center[1] - hx}};
    }
    if (s.is<RegularKGon>()) {
        const auto& g = s.as<RegularKGon>();
        std::vector<std::array<double, 2>> out;
        out.reserve(static_cast<size_t>(g.k));
        for (int j = 0; j < g.k; ++j) {
            const double a = g.rotation + 2.0 * M_PI * j / g.k;
            out.push_back({g.center[0] + g.circumradius * std::cos(a),
                           g.center[1] + g.circumradius * std::sin(a)});
        }
        return out;
    }
    if (s.is<ConvexPolygon>()) {
        std::vector<std::array<double, 2>> out;
        for (const auto& v : s.as<ConvexPolygon>().vertices) out.push_back({v[0], v[1]});
        return out;
    }
    if (s.is<Prism>()) {
        std::vector<std::array<double, 2>> out;
        for (const auto& v : s.as<Prism>().base) out.push_back({v[0], v[1]});
        return out;
    }
    throw GeometryError("outline_2d: shape has no polygonal outline");
}

namespace {

using Poly = std::vector<std::array<double, 2>>;

// -1 gap below band, 0 inside band (touching), +1 above band (disjoint)
int band_side(double gap, double tol) {
    if (gap > tol) return 1;
    if (gap < -tol) return -1;
    return 0;
}

Contact contact_from_side(int side) {
    if (side > 0) return Contact::disjoint;
    if (side < 0) return Contact::overlapping;
    return Contact::touching;
}

// exact: compare squared center distance against (t +- tau)^2
Contact classify_ball_ball(const Ball& a, const Ball& b, double tol) {
    mpq_class sq(0);
    for (size_t i = 0; i < a.center.size(); ++i) {
        mpq_class d = mpq_class(a.center[i]) - mpq_class(b.center[i]);
        sq += d * d;
    }
    mpq_class t = mpq_class(a.radius) + mpq_class(b.radius);
    mpq_class tau(tol);
    mpq_class hi = (t + tau) * (t + tau);
    if (sq > hi) return Contact::disjoint;
    mpq_class lo_base = t - tau;
    if (lo_base > 0) {
        mpq_class lo = lo_base * lo_base;
        if (sq < lo) return Contact::overlapping;
    } else {
        return Contact::overlapping;
    }
    return Contact::touching;
}

// exact: per-axis gap max_i |dc_i| - (s1+s2)/2 compared against +-tau
Contact classify_box_box(const AxisHypercube& a, const AxisHypercube& b, double tol) {
    mpq_class h = (mpq_class(a.side) + mpq_class(b.side)) / 2;
    mpq_class gap;
    bool first = true;
    for (size_t i = 0; i < a.center.size(); ++i) {
        mpq_class d = mpq_class(a.center[i]) - mpq_class(b.center[i]);
        if (d < 0) d = -d;
        mpq_class g = d - h;
        if (first || g > gap) {
            gap = g;
            first = false;
        }
    }
    mpq_class tau(tol);
    if (gap > tau) return Contact::disjoint;
    if (gap < -tau) return Contact::overlapping;
    return Contact::touching;
}

double dot(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return a[0] * b[0] + a[1] * b[1];
}

// largest support-function gap over the edge normals of both polygons;
// positive means a separating line exists, negative bounds the penetration
double sat_gap(const Poly& p, const Poly& q) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Poly* poly : {&p, &q}) {
        const size_t n = poly->size();
        for (size_t i = 0; i < n; ++i) {
            const auto& u = (*poly)[i];
            const auto& v = (*poly)[(i + 1) % n];
            std::array<double, 2> nrm{v[1] - u[1], u[0] - v[0]};
            const double len = std::hypot(nrm[0], nrm[1]);
            if (len <= 0.0) continue;
            nrm[0] /= len;
            nrm[1] /= len;
            double pmin = std::numeric_limits<double>::infinity(), pmax = -pmin;
            for (const auto& w : p) {
                const double d = dot(nrm, w);
                pmin = std::min(pmin, d);
                pmax = std::max(pmax, d);
            }
            double qmin = std::numeric_limits<double>::infinity(), qmax = -qmin;
            for (const auto& w : q) {
                const double d = dot(nrm, w);
                qmin = std::min(qmin, d);
                qmax = std::max(qmax, d);
            }
            best = std::max(best, std::max(pmin - qmax, qmin - pmax));
        }
    }
    return best;
}

double point_segment_dist(const std::array<double, 2>& p, const std::array<double, 2>& a,
                          const std::array<double, 2>& b) {
    const double vx = b[0] - a[0], vy = b[1] - a[1];
    const double wx = p[0] - a[0], wy = p[1] - a[1];
    const double vv = vx * vx + vy * vy;
    double t = vv > 0.0 ? (wx * vx + wy * vy) / vv : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(wx - t * vx, wy - t * vy);
}

double poly_poly_distance(const Poly& p, const Poly& q) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j)
            best = std::min(best, point_segment_dist(p[i], q[j], q[(j + 1) % q.size()]));
    for (size_t j = 0; j < q.size(); ++j)
        for (size_t i = 0; i < p.size(); ++i)
            best = std::min(best, point_segment_dist(q[j], p[i], p[(i + 1) % p.size()]));
    return best;
}

// signed gap between convex polygons: Euclidean distance when separated,
// negative penetration estimate when not
double signed_gap_poly_poly(const Poly& p, const Poly& q) {
    const double g = sat_gap(p, q);
    if (g > 0.0) return poly_poly_distance(p, q);
    return g;
}

// signed distance from a point to a convex polygon: negative inside
double signed_point_poly(const std::array<double, 2>& pt, const Poly& poly) {
    double worst = -std::numeric_limits<double>::infinity();
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& u = poly[i];
        const auto& v = poly[(i + 1) % n];
        // CCW outline, so this normal points out of the polygon
        std::array<double, 2> nrm{v[1] - u[1], u[0] - v[0]};
        const double len = std::hypot(nrm[0], nrm[1]);
        nrm[0] /= len;
        nrm[1] /= len;
        worst = std::max(worst, dot(nrm, {pt[0] - u[0], pt[1] - u[1]}));
    }
    if (worst <= 0.0) return worst;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_dist(pt, poly[i], poly[(i + 1) % n]));
    return best;
}

double signed_gap_disk_poly(const Ball& b, const Poly& poly) {
    return signed_point_poly({b.center[0], b.center[1]}, poly) - b.radius;
}

bool polygonal_2d(const Shape& s) {
    return (s.is<AxisHypercube>() && s.dimension() == 2) || s.is<RegularKGon>() ||
           s.is<ConvexPolygon>();
}

Contact classify_generic_2d(const Shape& a, const Shape& b, double tol) {
    if (a.is<Ball>() && b.is<Ball>())
        return classify_ball_ball(a.as<Ball>(), b.as<Ball>(), tol);
    if (a.is<Ball>() && polygonal_2d(b))
        return contact_from_side(band_side(signed_gap_disk_poly(a.as<Ball>(), outline_2d(b)), tol));
    if (polygonal_2d(a) && b.is<Ball>())
        return contact_from_side(band_side(signed_gap_disk_poly(b.as<Ball>(), outline_2d(a)), tol));
    if (polygonal_2d(a) && polygonal_2d(b))
        return contact_from_side(band_side(signed_gap_poly_poly(outline_2d(a), outline_2d(b)), tol));
    throw UnsupportedPair("no predicate for " + a.kind_name() + " vs " + b.kind_name() +
                          " in dimension 2");
}

Prism to_prism(const Shape& s) {
    if (s.is<Prism>()) return s.as<Prism>();
    const auto& h = s.as<AxisHypercube>();
    Prism p;
    const double hx = h.side / 2.0;
    p.base = {{h.center[0] + hx, h.center[1] + hx},
              {h.center[0] - hx, h.center[1] + hx},
              {h.center[0] - hx, h.center[1] - hx},
              {h.center[0] + hx, h.center[1] - hx}};
    for (size_t i = 2; i < h.center.size(); ++i)
        p.intervals.push_back({h.center[i] - hx, h.center[i] + hx});
    return p;
}

// product sets intersect iff every factor does: classify on the worst factor gap
Contact classify_prism_prism(const Prism& a, const Prism& b, double tol) {
    if (a.intervals.size() != b.intervals.size())
        throw DimensionMismatch("prism interval counts differ");
    Poly pa, pb;
    for (const auto& v : a.base) pa.push_back({v[0], v[1]});
    for (const auto& v : b.base) pb.push_back({v[0], v[1]});
    double gap = signed_gap_poly_poly(pa, pb);
    for (size_t i = 0; i < a.intervals.size(); ++i) {
        const double g =
            std::max(a.intervals[i][0] - b.intervals[i][1], b.intervals[i][0] - a.intervals[i][1]);
        gap = std::max(gap, g);
    }
    return contact_from_side(band_side(gap, tol));
}

}  // namespace

Contact classify(const Shape& a, const Shape& b, double tol) {
    if (a.dimension() != b.dimension())
        throw DimensionMismatch("shape dimensions differ: " + std::to_string(a.dimension()) +
                                " vs " + std::to_string(b.dimension()));
    const int d = a.dimension();
    if (a.is<Ball>() && b.is<Ball>()) return classify_ball_ball(a.as<Ball>(), b.as<Ball>(), tol);
    if (a.is<AxisHypercube>() && b.is<AxisHypercube>())
        return classify_box_box(a.as<AxisHypercube>(), b.as<AxisHypercube>(), tol);
    if (d == 2) return classify_generic_2d(a, b, tol);
    const bool a_pr = a.is<Prism>() || a.is<AxisHypercube>();
    const bool b_pr = b.is<Prism>() || b.is<AxisHypercube>();
    if (d >= 3 && a_pr && b_pr) return classify_prism_prism(to_prism(a), to_prism(b), tol);
    throw UnsupportedPair("no predicate for " + a.kind_name() + " vs " + b.kind_name() +
                          " in dimension " + std::to_string(d));
}

Contact classify(const Shape& a, const Shape& b) { return classify(a, b, g_tolerance); }

bool intersects(const Shape& a, const Shape& b, double tol) {
    return classify(a, b, tol) != Contact::disjoint;
}
bool intersects(const Shape& a, const Shape& b) { return intersects(a, b, g_tolerance); }

bool non_touching(const Shape& a, const Shape& b, double tol) {
    return classify(a, b, tol) == Contact::disjoint;
}
bool non_touching(const Shape& a, const Shape& b) { return non_touching(a, b, g_tolerance); }

bool interiors_overlap(const Shape& a, const Shape& b, double tol) {
    return classify(a, b, tol) == Contact::overlapping;
}
bool interiors_overlap(const Shape& a, const Shape& b) {
    return interiors_overlap(a, b, g_tolerance);
}

namespace {

// largest s >= 0 with s*u inside C; C must contain the origin strictly
double exit_scale(const Shape& c, const Point& u) {
    if (c.is<Ball>()) {
        const auto& b = c.as<Ball>();
        double uu = 0.0, uc = 0.0, cc = 0.0;
        for (size_t i = 0; i < u.size(); ++i) {
            uu += u[i] * u[i];
            uc += u[i] * b.center[i];
            cc += b.center[i] * b.center[i];
        }
        if (cc >= b.radius * b.radius)
            throw GeometryError("convex_distance: shape must contain the origin strictly");
        const double disc = uc * uc + uu * (b.radius * b.radius - cc);
        return (uc + std::sqrt(disc)) / uu;
    }
    if (c.is<AxisHypercube>()) {
        const auto& h = c.as<AxisHypercube>();
        const double hx = h.side / 2.0;
        double s = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < u.size(); ++i) {
            const double lo = h.center[i] - hx, hi = h.center[i] + hx;
            if (!(lo < 0.0 && 0.0 < hi))
                throw GeometryError("convex_distance: shape must contain the origin strictly");
            if (u[i] > 0.0)
                s = std::min(s, hi / u[i]);
            else if (u[i] < 0.0)
                s = std::min(s, lo / u[i]);
        }
        return s;
    }
    if (c.is<RegularKGon>() || c.is<ConvexPolygon>()) {
        const Poly poly = outline_2d(c);
        const size_t n = poly.size();
        double s = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < n; ++i) {
            const auto& a = poly[i];
            const auto& b = poly[(i + 1) % n];
            std::array<double, 2> nrm{b[1] - a[1], a[0] - b[0]};
            const double rhs = dot(nrm, a);
            if (rhs <= 0.0)
                throw GeometryError("convex_distance: shape must contain the origin strictly");
            const double du = nrm[0] * u[0] + nrm[1] * u[1];
            if (du > 0.0) s = std::min(s, rhs / du);
        }
        return s;
    }
    throw UnsupportedPair("convex_distance: unsupported reference shape " + c.kind_name());
}

}  // namespace

double convex_distance(const Shape& c, const Point& x, const Point& y) {
    require_finite(x, "convex_distance x");
    require_finite(y, "convex_distance y");
    if (static_cast<int>(x.size()) != c.dimension() || x.size() != y.size())
        throw DimensionMismatch("convex_distance: dimension mismatch");
    Point u(x.size());
    bool zero = true;
    for (size_t i = 0; i < x.size(); ++i) {
        u[i] = y[i] - x[i];
        if (u[i] != 0.0) zero = false;
    }
    if (zero) return 0.0;
    return 1.0 / exit_scale(c, u);
}

bool contains_point(const Shape& s, const Point& p, double tol) {
    if (static_cast<int>(p.size()) != s.dimension())
        throw DimensionMismatch("contains_point: dimension mismatch");
    if (s.is<Ball>()) {
        const auto& b = s.as<Ball>();
        double d2 = 0.0;
        for (size_t i = 0; i < p.size(); ++i)
            d2 += (p[i] - b.center[i]) * (p[i] - b.center[i]);
        return std::sqrt(d2) <= b.radius + tol;
    }
    if (s.is<AxisHypercube>()) {
        const auto& h = s.as<AxisHypercube>();
        const double hx = h.side / 2.0;
        for (size_t i = 0; i < p.size(); ++i)
            if (std::abs(p[i] - h.center[i]) > hx + tol) return false;
        return true;
    }
    if (s.is<RegularKGon>() || s.is<ConvexPolygon>())
        return signed_point_poly({p[0], p[1]}, outline_2d(s)) <= tol;
    if (s.is<Prism>()) {
        const auto& pr = s.as<Prism>();
        if (signed_point_poly({p[0], p[1]}, outline_2d(s)) > tol) return false;
        for (size_t i = 0; i < pr.intervals.size(); ++i)
            if (p[2 + i] < pr.intervals[i][0] - tol || p[2 + i] > pr.intervals[i][1] + tol)
                return false;
        return true;
    }
    throw UnsupportedPair("contains_point: unsupported shape");
}

namespace {

double eucl_point_shape(const Point& x, const Shape& s) {
    if (s.is<Ball>()) {
        const auto& b = s.as<Ball>();
        double d2 = 0.0;
        for (size_t i = 0; i < x.size(); ++i)
            d2 += (x[i] - b.center[i]) * (x[i] - b.center[i]);
        return std::max(0.0, std::sqrt(d2) - b.radius);
    }
    if (s.is<AxisHypercube>()) {
        const auto& h = s.as<AxisHypercube>();
        const double hx = h.side / 2.0;
        double d2 = 0.0;
        for (size_t i = 0; i < x.size(); ++i) {
            const double g = std::max(0.0, std::abs(x[i] - h.center[i]) - hx);
            d2 += g * g;
        }
        return std::sqrt(d2);
    }
    const double d = signed_point_poly({x[0], x[1]}, outline_2d(s));
    return std::max(0.0, d);
}

double cheb_point_shape(const Point& x, const Shape& s, double tol) {
    if (s.is<AxisHypercube>()) {
        const auto& h = s.as<AxisHypercube>();
        const double hx = h.side / 2.0;
        double g = 0.0;
        for (size_t i = 0; i < x.size(); ++i)
            g = std::max(g, std::abs(x[i] - h.center[i]) - hx);
        return std::max(0.0, g);
    }
    // bisect on t: the axis box of radius t around x meets s iff t >= answer
    double lo = 0.0, hi = 1.0;
    auto meets = [&](double t) {
        if (t <= 0.0) return contains_point(s, x, tol);
        Shape box = AxisHypercube{x, 2.0 * t};
        return intersects(box, s, tol);
    };
    while (!meets(hi)) {
        hi *= 2.0;
        if (hi > 1e12) throw GeometryError("convex_distance_to_set: unbounded search");
    }
    for (int it = 0; it < 200 && hi - lo > tol * 0.5; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (meets(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

bool origin_centered(const Point& c) {
    for (double v : c)
        if (v != 0.0) return false;
    return true;
}

// boundary point of a 2-D shape at parameter t in [0,1)
std::array<double, 2> boundary_at(const Shape& s, double t) {
    if (s.is<Ball>()) {
        const auto& b = s.as<Ball>();
        const double a = 2.0 * M_PI * t;
        return {b.center[0] + b.radius * std::cos(a), b.center[1] + b.radius * std::sin(a)};
    }
    const Poly poly = outline_2d(s);
    double per = 0.0;
    std::vector<double> lens(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % poly.size()];
        lens[i] = std::hypot(b[0] - a[0], b[1] - a[1]);
        per += lens[i];
    }
    double want = t * per;
    for (size_t i = 0; i < poly.size(); ++i) {
        if (want <= lens[i]) {
            const double f = lens[i] > 0.0 ? want / lens[i] : 0.0;
            const auto& a = poly[i];
            const auto& b = poly[(i + 1) % poly.size()];
            return {a[0] + f * (b[0] - a[0]), a[1] + f * (b[1] - a[1])};
        }
        want -= lens[i];
    }
    return poly[0];
}

}  // namespace

double convex_distance_to_set(const Shape& c, const Point& x, const Shape& s, double tol) {
    if (static_cast<int>(x.size()) != c.dimension() || c.dimension() != s.dimension())
        throw DimensionMismatch("convex_distance_to_set: dimension mismatch");
    if (contains_point(s, x, tol)) return 0.0;
    if (c.is<Ball>() && origin_centered(c.as<Ball>().center))
        return eucl_point_shape(x, s) / c.as<Ball>().radius;
    if (c.is<AxisHypercube>() && origin_centered(c.as<AxisHypercube>().center))
        return cheb_point_shape(x, s, tol) / (c.as<AxisHypercube>().side / 2.0);
    if (c.dimension() != 2)
        throw UnsupportedPair("convex_distance_to_set: only 2-D supported for this reference");
    // numeric: the infimum is attained on the boundary of s; sample then refine
    const int samples = 512;
    double best = std::numeric_limits<double>::infinity();
    double best_t = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        const auto b = boundary_at(s, t);
        const double v = convex_distance(c, x, {b[0], b[1]});
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    double lo = best_t - 1.0 / samples, hi = best_t + 1.0 / samples;
    auto eval = [&](double t) {
        const double tt = t - std::floor(t);
        const auto b = boundary_at(s, tt);
        return convex_distance(c, x, {b[0], b[1]});
    };
    for (int it = 0; it < 120; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (eval(m1) <= eval(m2))
            hi = m2;
        else
            lo = m1;
    }
    return std::min(best, eval(0.5 * (lo + hi)));
}

double convex_distance_to_set(const Shape& c, const Point& x, const Shape& s) {
    return convex_distance_to_set(c, x, s, g_tolerance);
}

FatMeta fat_meta(const Shape& s) {
    if (s.is<Ball>()) {
        const double r = s.as<Ball>().radius;
        return {1.0, r, r};
    }
    if (s.is<AxisHypercube>()) {
        const auto& h = s.as<AxisHypercube>();
        const double d = static_cast<double>(h.center.size());
        const double w = h.side / 2.0;
        return {1.0 / std::sqrt(d), w, w * std::sqrt(d)};
    }
    if (s.is<RegularKGon>()) {
        const auto& g = s.as<RegularKGon>();
        const double a = std::cos(M_PI / g.k);
        return {a, g.circumradius * a, g.circumradius};
    }
    throw UnsupportedPair("fat_meta: unsupported shape " + s.kind_name());
}

}  // namespace geokiss::geom
