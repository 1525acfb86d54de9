#ifndef DDL_EXPERIMENTS_HPP
#define DDL_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ddl/config.hpp"
#include "ddl/diagnostics.hpp"

namespace ddl {

// One named experiment per verified claim.
// ids: poly-decay-zk, exp-decay-zk, poly-decay-kdv, exp-decay-kdv,
//      soliton-validate, linear-growth, psido-suite, weights-suite
struct ExperimentConfig {
    std::string id;
    // grid
    double box_length = 0.0;
    int points = 0;
    // solver
    double dt = 0.0;
    double t_end = 0.0;
    std::string integrator = "ETDRK4";  // or IMEX-CN
    std::string dealias = "two-thirds";  // or none
    int snapshot_stride = 0;
    // weights / regions
    double r = 2.0;
    double b = 0.5;
    double eps = 0.5;
    double tau = 2.5;
    std::vector<double> sigma = {1.0};
    double nu = 1.0;
    double kappa = 0.0;
    double delta = 0.1;
    // misc
    double c = 1.0;  // soliton speed
    std::uint64_t seed = 1;
    std::string outdir = "out";
};

// Desk-scale preset for an experiment id; throws on unknown id.
ExperimentConfig experiment_defaults(const std::string& id);

// Populate from a parsed config file ([experiment]/[grid]/[solver]/[weights]
// sections) on top of the id's defaults.
ExperimentConfig experiment_from_config(const Config& file);

// Eager validation; returns every violated precondition (empty = valid).
std::vector<std::string> validate_experiment(const ExperimentConfig& cfg);

struct RunManifest {
    ExperimentConfig config;
    std::vector<std::pair<std::string, std::uint64_t>> snapshots;  // path, fnv1a
    double wall_seconds = 0.0;
    DiagnosticsReport report;
    bool all_pass() const { return report.all_pass(); }
};

// Execute the pipeline: initial data -> evolve -> diagnostics. Throws on
// validation failures (all of them listed in the message).
RunManifest run_experiment(const ExperimentConfig& cfg);

// CSV time series (t,quantity_id,region_id,value), JSON verdicts, and
// gnuplot-ready .dat files under cfg.outdir. Returns the written paths.
std::vector<std::string> write_reports(const RunManifest& man);

std::string manifest_json(const RunManifest& man);
void write_manifest(const RunManifest& man, const std::string& path);

// Verify that every snapshot referenced by a manifest file exists with a
// matching checksum; returns problems (empty = ok).
std::vector<std::string> check_manifest(const std::string& path);

}  // namespace ddl

#endif
