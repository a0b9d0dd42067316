#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "ncres/catalog.hpp"

namespace ncres {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SelftestOptions {
    std::uint64_t seed = 0;
    double tol = 1e-9;
    int random_instances = 100;   // per randomized numeric check
    int exact_instances = 1000;   // per randomized exact check
    bool pipeline = true;         // include the full-pipeline suites
    int jobs = 4;
};

// Individual suites; each returns one result.
CheckResult check_clifford_relations();
CheckResult check_spin_traces();
CheckResult check_b_coefficients();
CheckResult check_trace_identities(Family family);
CheckResult check_collar_geometry();
CheckResult check_partial_fractions(std::uint64_t seed, int count);
CheckResult check_projection(std::uint64_t seed, int count);
CheckResult check_contour_quadrature(std::uint64_t seed, int count, double tol);
CheckResult check_moment_quadrature(double tol);
CheckResult check_leibniz(Family family);
CheckResult check_composition(Family family, std::uint64_t seed);
CheckResult check_homogeneity(Family family, std::uint64_t seed, double tol);
CheckResult check_case_invariants_all(Family family, int jobs);
CheckResult check_permutation_invariance(int jobs);
CheckResult check_trivial_bundle(int jobs);
CheckResult check_determinism(Family family);

std::vector<CheckResult> run_selftest(const SelftestOptions& opts = {});

}  // namespace ncres
