#pragma once

#include "parity/element_set.hpp"
#include "parity/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace paritygroups {

struct VerifyOptions {
    int max_n = 4;                   // exhaustive sweeps over P_n and partitions go up to this
    std::uint64_t seed = 20260810;   // randomized checks
    double tol = 1e-9;               // unitary reconstruction tolerance
    Caps caps;
};

struct Criterion {
    int id;            // 1-based, stable
    std::string slug;  // CLI name
    std::string title;
};

const std::vector<Criterion>& criteria();

/// Runs one criterion (by id) and returns its report.
Report run_criterion(int id, const VerifyOptions& opt = {});

/// Runs every criterion in order. `verify all` and the acceptance suite are
/// exactly this list; there are no hidden checks.
std::vector<Report> run_all_criteria(const VerifyOptions& opt = {});

} // namespace paritygroups
