#pragma once

// Experiment harness: the rounding experiment, the per-event slab bound and
// its Monte Carlo estimate, and the randomized verifiers for the cell
// transversal claim and the orientation certificate.

#include <string>
#include <vector>

#include "chirogrid/chirotope.hpp"
#include "chirogrid/codec.hpp"
#include "chirogrid/geometry.hpp"
#include "chirogrid/sampling.hpp"

namespace chirogrid {

struct ExperimentParams {
    long n = 0;
    int d = 2;
    Rat eps;
    long trials = 1;
    uint64_t seed = 0;
    Domain domain = Domain::Ball;
    int precision_bits = 96;
};

enum class Outcome { Preserved, Flip, Degenerate, Collision };

std::string outcome_name(Outcome o);

struct TrialRecord {
    long trial = 0;
    uint64_t derived_seed = 0;
    Int M;
    Outcome outcome = Outcome::Preserved;
    long diff_count = 0;
    long collisions = 0;
    double min_sq_margin = 0;  // reporting only, 64-bit float
};

struct WilsonInterval {
    double lo = 0;
    double hi = 1;

    double halfwidth() const { return (hi - lo) / 2; }
};

/// Wilson score interval for k successes out of n at z standard normal
/// quantiles.
WilsonInterval wilson(long successes, long total, double z);

struct BoundValues {
    double paper = 0;  // 1 - C(n,d+1)(d+1) d^{3/2} / (sqrt(pi) M)
    double exact = 0;  // 1 - C(n,d+1)(d+1) (4 sqrt(d)/M) vol(B_{d-1})/vol(B_d)
};

/// Closed-form lower bounds on the preservation probability at
/// M = ceil(n^(d+1+eps)), clamped to [0, 1].
BoundValues success_lower_bound(long n, int d, const Rat& eps);

struct PerEventBound {
    double paper = 0;       // (2 sqrt(d)/M) vol(B_{d-1})/vol(B_d)
    double simplified = 0;  // d^{3/2} / (sqrt(pi) M)
    double exact = 0;       // (4 sqrt(d)/M) vol(B_{d-1})/vol(B_d), two-sided slab
};

PerEventBound per_event_bound(int d, const Int& M);

/// Sample, round, compare chirotopes. Deterministic given (seed, index).
TrialRecord theorem_trial(const ExperimentParams& params, long index);

struct ExperimentSummary {
    ExperimentParams params;
    Int M;
    long preserved = 0;
    long flip = 0;
    long degenerate = 0;
    long collision = 0;
    double freq = 0;
    WilsonInterval wilson95;
    BoundValues bounds;
};

/// Aggregation is a pure fold over the trial records, so any execution
/// order yields the same summary.
ExperimentSummary run_theorem_experiment(const ExperimentParams& params,
                                         std::vector<TrialRecord>* records = nullptr);

struct PerEventEstimate {
    long samples = 0;
    long bad = 0;
    long degenerate_redraws = 0;
    double freq = 0;
    WilsonInterval wilson95;
    PerEventBound bound;
};

/// Draws d+1 ball points per sample, builds the hyperplane through the
/// first d, and counts how often the last point lies within 2 sqrt(d)/M
/// of it (decided exactly).
PerEventEstimate estimate_per_event(int d, const Int& M, long samples, uint64_t seed);

struct Lemma1Report {
    int d = 0;
    long trials = 0;
    long counterexamples = 0;
    std::vector<long> witness_trials;
};

/// Random (simplex, hyperplane) pairs; counts trials where the hyperplane
/// met all d+1 R-cells or all d+1 S-cells. Expected zero.
Lemma1Report lemma1_falsify(int d, long trials, uint64_t seed);

struct Lemma2Report {
    int d = 0;
    long trials = 0;
    long certified = 0;
    long violations = 0;
};

/// Random simplices rounded at step 1/M; wherever the certificate holds,
/// asserts that the orientation is unchanged. Expected zero violations.
Lemma2Report lemma2_property_run(int d, long trials, const Int& M, uint64_t seed);

/// Smallest squared vertex-to-opposite-facet distance over all (d+1)-tuples,
/// computed in floating point (diagnostics only).
double min_squared_facet_margin(const std::vector<Point>& pts, int d);

// JSON / CSV reporting. JSON output is deterministic byte-for-byte for
// identical inputs.
std::string record_to_json(const TrialRecord& r);
std::string summary_to_json(const ExperimentSummary& s);
std::string per_event_to_json(const PerEventEstimate& e, int d, const Int& M);
std::string lemma1_to_json(const Lemma1Report& r);
std::string lemma2_to_json(const Lemma2Report& r, const Int& M);
std::string summary_csv_header();
std::string summary_csv_row(const ExperimentSummary& s);

}  // namespace chirogrid
