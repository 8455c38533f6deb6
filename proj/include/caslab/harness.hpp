#pragma once

#include <json.hpp>

#include "caslab/quasihom.hpp"

namespace caslab {

using Json = nlohmann::ordered_json;

// One (type, parabolic subset) verification unit. The two contexts share the
// root system; everything else is task-local.
struct Bundle {
    std::string type;
    std::shared_ptr<const RootSystem> rs;
    Context ctxP;
    Context ctxB;
};
Bundle make_bundle(const DynkinSpec& spec, uint32_t parabolic, const Context* seedB = nullptr);

struct CheckOutcome {
    std::string status; // pass | fail | skipped | open-case
    Json witness;       // null unless status != pass
};

const std::vector<std::string>& harness_check_names();
CheckOutcome run_named_check(const std::string& name, const Bundle& b);

struct SweepConfig {
    std::vector<DynkinSpec> types;
    bool all_subsets = true;
    uint32_t listed_parabolic = 0;      // when !all_subsets
    std::vector<std::string> checks;    // empty = all registered checks
    int jobs = 1;
    std::string out_path;               // empty = stdout only decided by caller
};

struct SweepResult {
    Json report;
    int exit_code; // 0 no fail; 1 fail or cap-skip; open-case does not fail
};

// Runs every selected check over the grid. Report bytes are independent of
// the worker count (results fully sorted; config echoes no parallelism).
SweepResult run_sweep(const SweepConfig& cfg);

// (r_p, N_p) for the D series, p = 3..8, against the closed forms.
Json golden_counts(bool& ok);

} // namespace caslab
