#ifndef DIAMETERLAB_EXPERIMENT_HPP
#define DIAMETERLAB_EXPERIMENT_HPP

#include <string>
#include <vector>

#include "diameterlab/types.hpp"

namespace dlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

enum class Scale { small_scale, full };

// The desk-scale verification suite: every check pins either an exact small
// instance or a property that must hold across a swept family. Deterministic;
// `seed` feeds the randomized property checks.
std::vector<CheckResult> run_acceptance(Scale scale, std::uint64_t seed = 0);

// Exit code convention: 0 all pass, 1 some check failed.
int print_acceptance(const std::vector<CheckResult>& results, std::ostream& os);

}  // namespace dlab

#endif
