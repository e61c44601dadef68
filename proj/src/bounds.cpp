#include "geokiss/bounds.hpp"

#include <cmath>

namespace geokiss::bounds {

double greedy_ds_bound(int zeta, int opt) { return static_cast<double>(zeta) * opt; }

double greedy_cds_abs_bound(int zeta, int opt) { return 2.0 * zeta * opt; }

double greedy_cds_asym_bound(int zeta, int opt) {
    return 2.0 * (zeta - 1) * opt + greedy_cds_asym_const;
}

double greedy_cds_unit_disk_bound(int opt) {
    return 2.0 * (du_du_slope * opt + du_du_intercept);
}

double first_fit_bound(int zeta, int chi) { return static_cast<double>(zeta) * chi; }

int layer_count(double m) { return std::ilogb(m) + 1; }

double layer_bound(double zeta_prime, double m, int chi) {
    return zeta_prime * layer_count(m) * chi;
}

double independent_set_bound(int zeta, int opt_mcds) { return (zeta - 1.0) * opt_mcds + 1.0; }

double cross_layer_bound(double zeta_prime, int chi) { return zeta_prime * (chi - 1.0); }

double zeta_prime_for(const harness::FamilyMeta& meta, int dimension) {
    const std::string& f = meta.family;
    if (f.find("disk") != std::string::npos) return 11.0;
    const double alpha = meta.alpha > 0.0 ? meta.alpha : 1.0;
    return std::pow(2.0 / alpha + 2.0, dimension);
}

std::vector<TableRow> table_rows(int d, double alpha, double m) {
    auto row = [](std::string family, double zeta) {
        return TableRow{std::move(family), zeta, zeta, 2.0 * (zeta - 1.0), 2.0 * zeta * zeta};
    };
    std::vector<TableRow> rows;
    rows.push_back(row("congruent_balls", 12));
    rows.push_back(row("hypercube_translates", std::ldexp(1.0, d)));
    rows.push_back(row("congruent_hypercubes", std::ldexp(1.0, d + 1)));
    rows.push_back(row("regular_kgon", 6));
    rows.push_back(row("disks_radii_1_2", 11));
    const double zeta_up = std::pow(m / alpha + 2.0, d);
    const double zeta_prime = std::pow(2.0 / alpha + 2.0, d);
    rows.push_back(TableRow{"fat_objects", zeta_up, zeta_prime * layer_count(m),
                            2.0 * (zeta_up - 1.0), 2.0 * zeta_up * zeta_up});
    return rows;
}

}  // namespace geokiss::bounds
