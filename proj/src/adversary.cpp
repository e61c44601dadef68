#include "geokiss/adversary.hpp"

#include <algorithm>
#include <cmath>

#include "geokiss/graph.hpp"

namespace geokiss::adversary {

using geom::AxisHypercube;
using geom::Ball;
using geom::Point;
using geom::Prism;
using geom::RegularKGon;
using geom::Shape;

namespace {

constexpr double pi = M_PI;

Point ring_point(double radius, double angle) {
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

Shape translate(const Shape& s, const Point& delta) {
    if (s.is<Ball>()) {
        Ball b = s.as<Ball>();
        for (size_t i = 0; i < b.center.size(); ++i) b.center[i] += delta[i];
        return b;
    }
    if (s.is<AxisHypercube>()) {
        AxisHypercube h = s.as<AxisHypercube>();
        for (size_t i = 0; i < h.center.size(); ++i) h.center[i] += delta[i];
        return h;
    }
    if (s.is<RegularKGon>()) {
        RegularKGon g = s.as<RegularKGon>();
        g.center[0] += delta[0];
        g.center[1] += delta[1];
        return g;
    }
    if (s.is<geom::ConvexPolygon>()) {
        geom::ConvexPolygon p = s.as<geom::ConvexPolygon>();
        for (auto& v : p.vertices) {
            v[0] += delta[0];
            v[1] += delta[1];
        }
        return p;
    }
    Prism p = s.as<Prism>();
    for (auto& v : p.base) {
        v[0] += delta[0];
        v[1] += delta[1];
    }
    for (size_t i = 0; i < p.intervals.size(); ++i) {
        p.intervals[i][0] += delta[2 + i];
        p.intervals[i][1] += delta[2 + i];
    }
    return p;
}

// place s so its center sits at core_center + dist * u
Shape place_at(const Shape& s, const Point& core_center, const Point& u, double dist) {
    const Point cur = s.center();
    Point delta(cur.size());
    for (size_t i = 0; i < cur.size(); ++i) delta[i] = core_center[i] + dist * u[i] - cur[i];
    return translate(s, delta);
}

}  // namespace

std::vector<Shape> config_shapes(const KissingConfig& cfg) {
    std::vector<Shape> out = cfg.independents;
    out.push_back(cfg.core);
    return out;
}

ConfigVerdict verify_config(const KissingConfig& cfg, bool standard) {
    if (static_cast<int>(cfg.independents.size()) != cfg.claimed_zeta)
        return {false, "claimed zeta " + std::to_string(cfg.claimed_zeta) + " but " +
                           std::to_string(cfg.independents.size()) + " independents"};
    for (size_t i = 0; i < cfg.independents.size(); ++i) {
        const auto c = geom::classify(cfg.core, cfg.independents[i]);
        if (c == geom::Contact::disjoint)
            return {false, "core misses independent " + std::to_string(i)};
        if (standard && c == geom::Contact::overlapping)
            return {false, "independent " + std::to_string(i) + " overlaps the core interior"};
    }
    for (size_t i = 0; i < cfg.independents.size(); ++i)
        for (size_t j = i + 1; j < cfg.independents.size(); ++j)
            if (!geom::non_touching(cfg.independents[i], cfg.independents[j]))
                return {false, "independents " + std::to_string(i) + " and " + std::to_string(j) +
                                   " touch"};
    return {true, ""};
}

KissingConfig standardize(const KissingConfig& cfg) {
    const Point k = cfg.core.center();
    KissingConfig out = cfg;
    for (auto& ind : out.independents) {
        const Point c = ind.center();
        double norm2 = 0.0;
        for (size_t i = 0; i < c.size(); ++i) norm2 += (c[i] - k[i]) * (c[i] - k[i]);
        const double norm = std::sqrt(norm2);
        if (norm < 1e-12)
            throw AdversaryError("standardize: independent is concentric with the core");
        Point u(c.size());
        for (size_t i = 0; i < c.size(); ++i) u[i] = (c[i] - k[i]) / norm;

        if (cfg.core.is<Ball>() && ind.is<Ball>()) {
            ind = place_at(ind, k, u, cfg.core.as<Ball>().radius + ind.as<Ball>().radius);
            continue;
        }
        if (cfg.core.is<AxisHypercube>() && ind.is<AxisHypercube>()) {
            double umax = 0.0;
            for (double ui : u) umax = std::max(umax, std::abs(ui));
            const double h = (cfg.core.as<AxisHypercube>().side + ind.as<AxisHypercube>().side) / 2;
            ind = place_at(ind, k, u, h / umax);
            continue;
        }
        if (geom::classify(cfg.core, ind) == geom::Contact::touching) continue;
        double lo = norm;  // known not disjoint
        double hi = norm + 1.0;
        while (geom::classify(cfg.core, place_at(ind, k, u, hi)) != geom::Contact::disjoint) {
            hi += (hi - norm) + 1.0;
            if (hi > norm + 1e6) throw AdversaryError("standardize: no separation found");
        }
        bool landed = false;
        for (int it = 0; it < 300; ++it) {
            const double mid = 0.5 * (lo + hi);
            const auto cls = geom::classify(cfg.core, place_at(ind, k, u, mid));
            if (cls == geom::Contact::touching) {
                ind = place_at(ind, k, u, mid);
                landed = true;
                break;
            }
            (cls == geom::Contact::overlapping ? lo : hi) = mid;
        }
        if (!landed) throw AdversaryError("standardize: bisection missed the touching band");
    }
    return out;
}

KissingConfig config_unit_disks(double delta) {
    if (!(delta > 0.0) || delta >= 0.29)
        throw AdversaryError("unit-disk config slack must lie in (0, 0.29)");
    KissingConfig cfg{Ball{{0.0, 0.0}, 1.0}, {}, 5, "unit_disks"};
    for (int j = 0; j < 5; ++j)
        cfg.independents.push_back(Ball{ring_point(2.0 - delta, 2 * pi * j / 5), 1.0});
    return cfg;
}

KissingConfig config_balls_icosahedron(double epsilon) {
    if (!(epsilon > 0.0) || epsilon >= 1.0)
        throw AdversaryError("icosahedron epsilon must lie in (0, 1)");
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double s = (2.0 + epsilon) / 2.0;  // standard coordinates have edge length 2
    KissingConfig cfg{Ball{{0.0, 0.0, 0.0}, 1.0}, {}, 12, "congruent_balls"};
    for (double a : {1.0, -1.0})
        for (double b : {phi, -phi}) {
            cfg.independents.push_back(Ball{{0.0, a * s, b * s}, 1.0});
            cfg.independents.push_back(Ball{{a * s, b * s, 0.0}, 1.0});
            cfg.independents.push_back(Ball{{b * s, 0.0, a * s}, 1.0});
        }
    return cfg;
}

KissingConfig config_hypercube_translates(int d, double epsilon) {
    if (d < 1) throw AdversaryError("hypercube translates need dimension at least 1");
    const double cap = 1.0 / (2.0 * std::sqrt(static_cast<double>(d)));
    if (!(epsilon > 0.0) || !(epsilon < cap))
        throw AdversaryError("hypercube translates need epsilon in (0, " + std::to_string(cap) +
                             ")");
    KissingConfig cfg{AxisHypercube{Point(d, 0.5), 1.0}, {}, 1 << d, "hypercube_translates"};
    for (int p = 0; p < (1 << d); ++p) {
        Point c(d);
        for (int j = 0; j < d; ++j) c[j] = (p >> j & 1) ? 1.0 + epsilon : -epsilon;
        cfg.independents.push_back(AxisHypercube{c, 1.0});
    }
    return cfg;
}

namespace {

// eight congruent unit squares around an axis-aligned unit square at the
// origin; centers and frame rotations found by numerical search, frozen here
struct SquarePose {
    double x, y, theta;
};

constexpr SquarePose congruent_square_poses[8] = {
    {-1.0934, -0.8544, 1.3259}, {-0.1092, -1.0940, 2.8965}, {1.0312, -0.9402, 1.6638},
    {1.1357, 0.2082, 1.9482},   {0.7302, 1.1368, 1.9482},   {-0.5821, 1.1868, 0.9362},
    {-0.1169, 0.1087, 2.5064},  {-1.1826, 0.3695, 2.5080},
};

Shape rotated_unit_square(const SquarePose& p) {
    // edge-frame rotation theta; the first vertex sits at theta + pi/4
    return RegularKGon{{p.x, p.y}, 4, std::sqrt(0.5), p.theta + pi / 4};
}

}  // namespace

KissingConfig config_congruent_hypercubes(int d, double epsilon) {
    if (d < 2) throw AdversaryError("congruent hypercubes need dimension at least 2");
    if (!(epsilon > 0.0) || !(epsilon < 0.5))
        throw AdversaryError("congruent hypercubes need epsilon in (0, 0.5)");
    KissingConfig base{AxisHypercube{{0.0, 0.0}, 1.0}, {}, 8, "congruent_hypercubes"};
    for (const auto& p : congruent_square_poses) base.independents.push_back(rotated_unit_square(p));
    if (d == 2) return base;

    std::vector<std::vector<std::array<double, 2>>> bases;
    for (const auto& s : base.independents) bases.push_back(geom::outline_2d(s));
    const auto core_base = geom::outline_2d(base.core);

    auto as_points = [](const std::vector<std::array<double, 2>>& vs) {
        std::vector<Point> out;
        for (const auto& v : vs) out.push_back({v[0], v[1]});
        return out;
    };

    std::vector<Prism> independents;
    for (const auto& b : bases) independents.push_back(Prism{as_points(b), {}});
    Prism core{as_points(core_base), {}};
    for (int dim = 3; dim <= d; ++dim) {
        std::vector<Prism> next;
        for (double sign : {1.0, -1.0})
            for (const auto& p : independents) {
                Prism q = p;
                q.intervals.push_back(
                    {sign * (0.5 + epsilon) - 0.5, sign * (0.5 + epsilon) + 0.5});
                next.push_back(std::move(q));
            }
        independents = std::move(next);
        core.intervals.push_back({-0.5, 0.5});
    }

    KissingConfig cfg{Shape{core}, {}, 1 << (d + 1), "congruent_hypercubes"};
    for (auto& p : independents) cfg.independents.push_back(Shape{std::move(p)});
    return cfg;
}

KissingConfig config_regular_kgon(int k) {
    if (k == 4)
        throw AdversaryError("k = 4 is the square family; use the hypercube generators");
    if (k < 3) throw AdversaryError("regular k-gon needs k at least 3");
    double radius, phase;
    if (k == 3) {
        radius = 1.49;
        phase = pi / 6;
    } else if (k == 5) {
        radius = 1.85;
        phase = pi / 10;
    } else if (k == 6) {
        radius = 1.716;
        phase = 0.0;
    } else {
        radius = 1.78;
        phase = 0.0;
    }
    KissingConfig cfg{RegularKGon{{0.0, 0.0}, k, 1.0, 0.0}, {}, 5, "regular_kgon"};
    for (int j = 0; j < 5; ++j)
        cfg.independents.push_back(
            RegularKGon{ring_point(radius, phase + 2 * pi * j / 5), k, 1.0, 0.0});
    return cfg;
}

KissingConfig config_disks_radii_1_2() {
    // unit-disk centers around a radius-2 core disk; pairwise distances
    // exceed 2 and every norm stays below 3; found by search, frozen here
    static constexpr double centers[11][2] = {
        {0.9796, -0.3228},  {-2.7583, -1.1012}, {0.6054, -2.9076}, {2.3327, -1.8383},
        {2.2154, 1.9781},   {-1.4053, -2.6165}, {-0.8102, 0.6383}, {-2.8208, 0.9294},
        {2.9686, 0.0912},   {0.4255, 2.9394},   {-1.5635, 2.5252},
    };
    KissingConfig cfg{Ball{{0.0, 0.0}, 2.0}, {}, 11, "disks_radii_1_2"};
    for (const auto& c : centers) cfg.independents.push_back(Ball{{c[0], c[1]}, 1.0});
    return cfg;
}

online::ArrivalSequence star_sequence(const KissingConfig& cfg) {
    const auto verdict = verify_config(cfg);
    if (!verdict.valid) throw AdversaryError("invalid configuration: " + verdict.reason);
    const auto shapes = config_shapes(cfg);
    const graph::Graph g = graph::build_intersection_graph(shapes);
    online::ArrivalSequence seq;
    for (int i = 0; i < g.size(); ++i) {
        online::Arrival a;
        a.vertex = i;
        for (int u : g.neighbors(i))
            if (u < i) a.neighbors_among_previous.push_back(u);
        try {
            a.width = geom::fat_meta(shapes[i]).width;
        } catch (const geom::UnsupportedPair&) {
        }
        seq.push_back(std::move(a));
    }
    return seq;
}

CycloneOrder cyclone_sequence(int k, int t) {
    if (k < 4) throw AdversaryError("cyclone order needs wheel size at least 4");
    if (t <= 0 || t >= k - 1)
        throw AdversaryError("cyclone split must satisfy 0 < t < k-1, got t = " +
                             std::to_string(t));
    CycloneOrder o{k, t, {}};
    for (int v = 0; v <= t; ++v) o.sequence.push_back(v);
    for (int v = k - 1; v > t; --v) o.sequence.push_back(v);
    o.sequence.push_back(k);
    return o;
}

online::ArrivalSequence cyclone_arrivals(const CycloneOrder& order) {
    const int k = order.k;
    if (static_cast<int>(order.sequence.size()) != k + 1)
        throw AdversaryError("cyclone order has wrong length");
    auto wheel_adjacent = [k](int a, int b) {
        if (a > b) std::swap(a, b);
        if (b == k) return true;  // core
        return (b - a == 1) || (a == 0 && b == k - 1);
    };
    online::ArrivalSequence seq;
    std::vector<int> arrived;
    for (int v : order.sequence) {
        online::Arrival a;
        a.vertex = v;
        for (int u : arrived)
            if (wheel_adjacent(u, v)) a.neighbors_among_previous.push_back(u);
        arrived.push_back(v);
        seq.push_back(std::move(a));
    }
    return seq;
}

WheelRealization wheel_from_translates(WheelFamily family, double delta, int k) {
    int zeta = 0;
    std::vector<Shape> shapes;
    switch (family) {
        case WheelFamily::unit_disks: {
            if (!(delta > 0.0) || delta >= 0.25)
                throw AdversaryError("disk wheel slack must lie in (0, 0.25)");
            zeta = 5;
            for (int j = 0; j < 2 * zeta; ++j)
                shapes.push_back(Ball{ring_point(2.0 - delta, 2 * pi * j / (2 * zeta)), 1.0});
            shapes.push_back(Ball{{0.0, 0.0}, 1.0});
            break;
        }
        case WheelFamily::unit_squares: {
            if (!(delta > 0.0) || delta >= 0.15)
                throw AdversaryError("square wheel slack must lie in (0, 0.15)");
            zeta = 4;
            static constexpr double ring[8][2] = {
                {1.0, 0.25},  {0.25, 1.0},  {-0.25, 1.0},  {-1.0, 0.25},
                {-1.0, -0.25}, {-0.25, -1.0}, {0.25, -1.0}, {1.0, -0.25},
            };
            for (const auto& c : ring)
                shapes.push_back(
                    AxisHypercube{{c[0] * (1.0 - delta), c[1] * (1.0 - delta)}, 1.0});
            shapes.push_back(AxisHypercube{{0.0, 0.0}, 1.0});
            break;
        }
        case WheelFamily::regular_kgon: {
            if (k == 4)
                throw AdversaryError("k = 4 is the square family; use unit_squares");
            if (k < 3) throw AdversaryError("k-gon wheel needs k at least 3");
            zeta = 5;
            // support-function extremes of the difference body of two translates
            const double min_touch =
                k % 2 ? 1.0 + std::cos(pi / k) : 2.0 * std::cos(pi / k);
            const double max_touch = k % 2 ? 2.0 * std::cos(pi / (2 * k)) : 2.0;
            const double window = min_touch - max_touch / (2.0 * std::sin(pi / 5));
            if (!(delta > 0.0) || !(delta < window))
                throw AdversaryError("k-gon wheel slack must lie in (0, " +
                                     std::to_string(window) + ")");
            const double radius = min_touch - delta;
            for (int j = 0; j < 2 * zeta; ++j)
                shapes.push_back(RegularKGon{ring_point(radius, 2 * pi * j / (2 * zeta)), k,
                                             1.0, 0.0});
            shapes.push_back(RegularKGon{{0.0, 0.0}, k, 1.0, 0.0});
            break;
        }
    }

    const int rim = 2 * zeta;
    const graph::Graph g = graph::build_intersection_graph(shapes);
    if (g.degree(rim) != rim)
        throw AdversaryError("wheel check failed: core degree " + std::to_string(g.degree(rim)) +
                             ", expected " + std::to_string(rim));
    for (int v = 0; v < rim; ++v) {
        if (!g.adjacent(v, rim))
            throw AdversaryError("wheel check failed: rim " + std::to_string(v) +
                                 " misses the core");
        if (!g.adjacent(v, (v + 1) % rim))
            throw AdversaryError("wheel check failed: rim " + std::to_string(v) +
                                 " misses its successor");
        if (g.degree(v) != 3)
            throw AdversaryError("wheel check failed: rim " + std::to_string(v) + " has degree " +
                                 std::to_string(g.degree(v)) + ", expected 3");
    }
    return {std::move(shapes), cyclone_sequence(rim, zeta - 1)};
}

FatBounds fat_bound_formulas(double alpha, double m, int d, double epsilon) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw AdversaryError("fat bounds need alpha in (0, 1]");
    if (!(m >= 1.0)) throw AdversaryError("fat bounds need m at least 1");
    if (d < 1) throw AdversaryError("fat bounds need dimension at least 1");
    if (!(epsilon > 0.0)) throw AdversaryError("fat bounds need positive epsilon");
    FatBounds b;
    b.lower = std::pow(alpha / 2.0 * (m + 2.0) / (1.0 + epsilon), d);
    b.upper = std::pow(m / alpha + 2.0, d);
    b.zeta_prime_upper = std::pow(2.0 / alpha + 2.0, d);
    return b;
}

}  // namespace geokiss::adversary
