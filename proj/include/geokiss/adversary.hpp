#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "geokiss/geometry.hpp"
#include "geokiss/online.hpp"

namespace geokiss::adversary {

struct AdversaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a core shape intersecting claimed_zeta pairwise non-touching shapes
struct KissingConfig {
    geom::Shape core;
    std::vector<geom::Shape> independents;
    int claimed_zeta = 0;
    std::string family_tag;
};

// independents first, core last; the order used by instance files and graphs
std::vector<geom::Shape> config_shapes(const KissingConfig& cfg);

struct ConfigVerdict {
    bool valid = false;
    std::string reason;  // empty when valid
};

ConfigVerdict verify_config(const KissingConfig& cfg, bool standard = false);

// pushes each independent outward along the ray from the core center until
// it only touches the core
KissingConfig standardize(const KissingConfig& cfg);

KissingConfig config_unit_disks(double delta = 1e-3);
KissingConfig config_balls_icosahedron(double epsilon);
KissingConfig config_hypercube_translates(int d, double epsilon);
KissingConfig config_congruent_hypercubes(int d, double epsilon);
KissingConfig config_regular_kgon(int k);
KissingConfig config_disks_radii_1_2();

// independents in arrival order, core last; classical model
online::ArrivalSequence star_sequence(const KissingConfig& cfg);

struct CycloneOrder {
    int k = 0;  // wheel rim size; vertices 0..k-1 rim, k core
    int t = 0;  // 0 < t < k-1
    std::vector<int> sequence;
};

CycloneOrder cyclone_sequence(int k, int t);
online::ArrivalSequence cyclone_arrivals(const CycloneOrder& order);

enum class WheelFamily { unit_disks, unit_squares, regular_kgon };

struct WheelRealization {
    std::vector<geom::Shape> shapes;  // rim 0..2*zeta-1 in ring order, core last
    CycloneOrder order;
};

// realizes the wheel graph on 2*zeta rim objects plus a core; the result's
// intersection graph is checked structurally and a failure is an error
WheelRealization wheel_from_translates(WheelFamily family, double delta = 1e-3, int k = 0);

struct FatBounds {
    double lower = 0.0;
    double upper = 0.0;
    double zeta_prime_upper = 0.0;
};

FatBounds fat_bound_formulas(double alpha, double m, int d, double epsilon);

}  // namespace geokiss::adversary
