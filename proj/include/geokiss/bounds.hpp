#pragma once

#include <string>
#include <vector>

#include "geokiss/instance.hpp"

namespace geokiss::bounds {

inline constexpr double du_du_slope = 3.399;
inline constexpr double du_du_intercept = 4.874;
inline constexpr double greedy_cds_asym_const = 2.0;

double greedy_ds_bound(int zeta, int opt);            // zeta * opt
double greedy_cds_abs_bound(int zeta, int opt);       // 2 * zeta * opt
double greedy_cds_asym_bound(int zeta, int opt);      // 2 * (zeta - 1) * opt + 2
double greedy_cds_unit_disk_bound(int opt);           // 6.798 * opt + 9.748
double first_fit_bound(int zeta, int chi);            // zeta * chi
int layer_count(double m);                            // floor(log2 m) + 1
double layer_bound(double zeta_prime, double m, int chi);
double independent_set_bound(int zeta, int opt_mcds);  // (zeta - 1) * opt + 1
double cross_layer_bound(double zeta_prime, int chi);  // zeta_prime * (chi - 1)

// width-[1,2] kissing bound used in coloring checks: 11 for disk families,
// (2/alpha + 2)^d otherwise
double zeta_prime_for(const harness::FamilyMeta& meta, int dimension);

struct TableRow {
    std::string family;
    double mds_mids = 0.0;
    double mc = 0.0;
    double mcds = 0.0;
    double t_relaxed = 0.0;
};

// hypercube rows at dimension d, fat row at (alpha, m, d)
std::vector<TableRow> table_rows(int d, double alpha, double m);

}  // namespace geokiss::bounds
