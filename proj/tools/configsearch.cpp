// Regenerates the stored hard placements: 11 disks of radius 1 packed around a
// radius-2 core, and 8 rotated unit squares packed around an axis-aligned unit
// square. Maximin separation search with projection back into the feasible
// region; results are rounded to 4 decimals and re-checked with the library
// verifier before printing.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "geokiss/adversary.hpp"
#include "geokiss/graph.hpp"

namespace {

using geokiss::geom::AxisHypercube;
using geokiss::geom::Ball;
using geokiss::geom::RegularKGon;
using geokiss::geom::Shape;

constexpr double pi = 3.14159265358979323846;

struct Vec {
    double x = 0, y = 0;
};

double dist(const Vec& a, const Vec& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// --- 11 unit disks, pairwise disjoint, all overlapping a radius-2 core ---

std::vector<Vec> search_disks(std::uint64_t seed, int iters) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.9, 2.9);
    const int n = 11;
    const double rmax = 2.97;   // stay strictly inside the radius-3 touch circle
    const double target = 2.04; // pairwise separation goal, 1+1 plus slack
    std::vector<Vec> best;
    double best_min = 0;
    for (int restart = 0; restart < 40; ++restart) {
        std::vector<Vec> p(n);
        for (auto& v : p)
            do {
                v = {u(rng), u(rng)};
            } while (std::hypot(v.x, v.y) > rmax);
        for (int it = 0; it < iters; ++it) {
            const double step = 0.5 * (1.0 - double(it) / iters) + 0.02;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const double d = dist(p[i], p[j]);
                    if (d >= target || d < 1e-12) continue;
                    const double push = 0.5 * step * (target - d) / d;
                    const double dx = (p[j].x - p[i].x) * push, dy = (p[j].y - p[i].y) * push;
                    p[i].x -= dx;
                    p[i].y -= dy;
                    p[j].x += dx;
                    p[j].y += dy;
                }
            for (auto& v : p) {
                const double r = std::hypot(v.x, v.y);
                if (r > rmax) {
                    v.x *= rmax / r;
                    v.y *= rmax / r;
                }
            }
        }
        double mind = 1e9;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) mind = std::min(mind, dist(p[i], p[j]));
        if (mind > best_min) {
            best_min = mind;
            best = p;
        }
    }
    std::cout << "min pairwise distance " << best_min << " (need > 2)\n";
    return best;
}

// --- 8 rotated unit squares, pairwise disjoint, all overlapping a unit core ---

struct Pose {
    double x = 0, y = 0, th = 0;
};

double support(double theta, double nx, double ny) {
    const double c = std::cos(theta), s = std::sin(theta);
    return 0.5 * (std::abs(nx * c + ny * s) + std::abs(-nx * s + ny * c));
}

// largest separation over the four edge normals; positive means disjoint
double sat_gap(const Pose& a, const Pose& b) {
    double gap = -1e9;
    const double axes[4] = {a.th, a.th + pi / 2, b.th, b.th + pi / 2};
    for (double ax : axes) {
        const double nx = std::cos(ax), ny = std::sin(ax);
        const double sep = std::abs((b.x - a.x) * nx + (b.y - a.y) * ny) -
                           support(a.th, nx, ny) - support(b.th, nx, ny);
        gap = std::max(gap, sep);
    }
    return gap;
}

double core_gap(const Pose& a) {
    const Pose core{0, 0, 0};
    return sat_gap(a, core);
}

std::vector<Pose> search_squares(std::uint64_t seed, int iters) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> upos(-1.2, 1.2), uang(0, pi / 2);
    const int n = 8;
    const double core_overlap = -0.05;  // definite interior overlap with the core
    std::vector<Pose> best;
    double best_min = -1e9;
    for (int restart = 0; restart < 60; ++restart) {
        std::vector<Pose> p(n);
        for (int i = 0; i < n; ++i) {
            const double ang = 2 * pi * i / n;
            p[i] = {1.1 * std::cos(ang) + 0.1 * upos(rng), 1.1 * std::sin(ang) + 0.1 * upos(rng),
                    uang(rng)};
        }
        for (int it = 0; it < iters; ++it) {
            const double step = 0.08 * (1.0 - double(it) / iters) + 0.004;
            // push the currently closest pair apart
            int wi = 0, wj = 1;
            double worst = 1e9;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const double g = sat_gap(p[i], p[j]);
                    if (g < worst) {
                        worst = g;
                        wi = i;
                        wj = j;
                    }
                }
            double dx = p[wj].x - p[wi].x, dy = p[wj].y - p[wi].y;
            const double len = std::hypot(dx, dy);
            if (len > 1e-9) {
                dx /= len;
                dy /= len;
                p[wi].x -= step * dx;
                p[wi].y -= step * dy;
                p[wj].x += step * dx;
                p[wj].y += step * dy;
            }
            // nudge angles of the worst pair by finite differences
            for (int* idx : {&wi, &wj}) {
                Pose trial = p[*idx];
                trial.th += 0.02;
                double up = 1e9, down = 1e9;
                for (int j = 0; j < n; ++j)
                    if (j != *idx) up = std::min(up, sat_gap(trial, p[j]));
                trial.th -= 0.04;
                for (int j = 0; j < n; ++j)
                    if (j != *idx) down = std::min(down, sat_gap(trial, p[j]));
                if (up > worst && up >= down) p[*idx].th += 0.02;
                else if (down > worst) p[*idx].th -= 0.02;
            }
            // keep every square overlapping the core
            for (auto& q : p) {
                if (core_gap(q) > core_overlap) {
                    const double r = std::hypot(q.x, q.y);
                    if (r > 1e-9) {
                        q.x *= (r - step) / r;
                        q.y *= (r - step) / r;
                    }
                }
            }
        }
        double mind = 1e9;
        bool core_ok = true;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) mind = std::min(mind, sat_gap(p[i], p[j]));
            core_ok = core_ok && core_gap(p[i]) <= core_overlap;
        }
        if (core_ok && mind > best_min) {
            best_min = mind;
            best = p;
        }
    }
    std::cout << "min pairwise gap " << best_min << " (need > 0)\n";
    return best;
}

double round4(double v) { return std::round(v * 1e4) / 1e4; }

int verify_disks(const std::vector<Vec>& centers) {
    geokiss::adversary::KissingConfig cfg{Ball{{0.0, 0.0}, 2.0}, {}, 11, "disks_radii_1_2"};
    std::printf("rounded centers:\n");
    for (const auto& c : centers) {
        const double x = round4(c.x), y = round4(c.y);
        std::printf("  {%.4f, %.4f},\n", x, y);
        cfg.independents.push_back(Ball{{x, y}, 1.0});
    }
    const auto verdict = geokiss::adversary::verify_config(cfg);
    std::cout << (verdict.valid ? "library verifier: valid\n"
                                : "library verifier: INVALID: " + verdict.reason + "\n");
    if (!verdict.valid) return 1;
    const auto g = geokiss::graph::build_intersection_graph(geokiss::adversary::config_shapes(cfg));
    const auto rep = geokiss::graph::independent_kissing_number(g);
    std::cout << "graph kissing number " << rep.zeta << " (want 11)\n";
    return rep.zeta == 11 ? 0 : 1;
}

int verify_squares(const std::vector<Pose>& poses) {
    geokiss::adversary::KissingConfig cfg{AxisHypercube{{0.0, 0.0}, 1.0}, {}, 8,
                                          "congruent_hypercubes"};
    std::printf("rounded poses (x, y, theta):\n");
    for (const auto& p : poses) {
        const double x = round4(p.x), y = round4(p.y), th = round4(p.th);
        std::printf("  {%.4f, %.4f, %.4f},\n", x, y, th);
        cfg.independents.push_back(
            RegularKGon{{x, y}, 4, std::sqrt(0.5), th + pi / 4});
    }
    const auto verdict = geokiss::adversary::verify_config(cfg);
    std::cout << (verdict.valid ? "library verifier: valid\n"
                                : "library verifier: INVALID: " + verdict.reason + "\n");
    if (!verdict.valid) return 1;
    const auto g = geokiss::graph::build_intersection_graph(geokiss::adversary::config_shapes(cfg));
    const auto rep = geokiss::graph::independent_kissing_number(g);
    std::cout << "graph kissing number " << rep.zeta << " (want 8)\n";
    return rep.zeta == 8 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximin placement search for the stored kissing configurations"};
    bool disks = false, squares = false;
    std::uint64_t seed = 7;
    int iters = 4000;
    app.add_flag("--disks", disks, "11 disks of radius 1 around a radius-2 core");
    app.add_flag("--squares", squares, "8 rotated unit squares around a unit core");
    app.add_option("--seed", seed, "rng seed");
    app.add_option("--iters", iters, "relaxation iterations per restart");
    CLI11_PARSE(app, argc, argv);
    if (!disks && !squares) {
        std::cerr << "pick --disks or --squares\n";
        return 2;
    }
    int rc = 0;
    if (disks) rc |= verify_disks(search_disks(seed, iters));
    if (squares) rc |= verify_squares(search_squares(seed, iters));
    return rc;
}
