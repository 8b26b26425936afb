#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bteo/background.hpp"
#include "bteo/oracle.hpp"

namespace bteo::cli {

// One batch request: which background, which modes, which times, which
// methods.  Named models pin (mu, nu) and reject overrides.  Every field
// mirrors a config-file key; command-line flags win over the file.
struct RunConfig {
    std::string model;          // "", "rw", "stiff", "kasner", "conformal"
    double mu = 1.0;
    double nu = 0.5;
    double t_ref = 0.0;
    double t_A = 0.0;
    Chirality chirality = Chirality::negative;

    std::vector<Mode> modes;    // explicit list ...
    int random_modes = 0;       // ... or sampled: count, bound, seed
    double k_bound = 10.0;
    std::uint64_t seed = 1;

    std::vector<double> times;  // explicit list ...
    int time_count = 0;         // ... or grid: count over [t_min, t_max]
    double t_min = 0.0;
    double t_max = 0.0;
    bool log_times = false;

    std::vector<Method> methods;
    bool have_reference = false;  // first method is the error reference
    double tol = 1e-10;
    std::string format = "csv";   // csv | json
    std::string out_path;         // empty = stdout
    int threads = 0;              // 0 = hardware concurrency
};

// One output row per (mode, time, method), emitted in deterministic order
// (mode-major, time-minor, method last) regardless of worker scheduling.
struct SweepRow {
    std::string model;
    double mu = 0.0;
    double nu = 0.0;
    double delta = 0.0;
    Mode k;
    double t_A = 0.0;
    double t = 0.0;
    Method method = Method::oracle;
    cplx k11;
    cplx k12;
    double defect = 0.0;
    double err_vs_ref = 0.0;  // NaN when no reference requested
    double wall_us = 0.0;
    std::string error;        // nonempty when this cell failed
};

RunConfig config_from_json_file(const std::string& path);

// Computes all cells of the config in parallel and returns them ordered.
std::vector<SweepRow> run_sweep(const RunConfig& cfg);

void write_rows(const std::vector<SweepRow>& rows, const std::string& format, std::ostream& out);

int cmd_teo(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_models(std::ostream& out);
int cmd_verify(const std::string& suite, std::ostream& out);

// Argument parsing + dispatch for the `teo|verify|sweep|models` subcommands.
int run_cli(int argc, char** argv);

}  // namespace bteo::cli
