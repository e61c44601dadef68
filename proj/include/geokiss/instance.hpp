#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "geokiss/geometry.hpp"
#include "geokiss/online.hpp"

namespace geokiss::harness {

struct HarnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FamilyMeta {
    std::string family;
    double m = 0.0;      // width ratio bound: widths live in [1, m]; 0 = unset
    double alpha = 1.0;  // aspect lower bound for the family
};

struct Instance {
    int dimension = 2;
    online::Model model = online::Model::classical;
    FamilyMeta family_meta;
    std::vector<geom::Shape> shapes;
    std::vector<int> arrival_order;
};

// permutation check, width range check where widths are defined, and prefix
// connectivity for relaxed_connected instances
void validate_instance(const Instance& inst);

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);

}  // namespace geokiss::harness
