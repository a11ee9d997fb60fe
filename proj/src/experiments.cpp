#include "chirogrid/experiments.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace chirogrid {

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Preserved: return "PRESERVED";
        case Outcome::Flip: return "FLIP";
        case Outcome::Degenerate: return "DEGENERATE";
        default: return "COLLISION";
    }
}

WilsonInterval wilson(long successes, long total, double z) {
    if (total < 1) throw std::invalid_argument("wilson: total must be >= 1");
    double n = static_cast<double>(total);
    double p = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1 + z2 / n;
    double center = (p + z2 / (2 * n)) / denom;
    double hw = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
    // At the edges center and hw cancel exactly; avoid FP residue.
    double lo = successes == 0 ? 0.0 : std::max(0.0, center - hw);
    double hi = successes == total ? 1.0 : std::min(1.0, center + hw);
    return {lo, hi};
}

BoundValues success_lower_bound(long n, int d, const Rat& eps) {
    if (n < d + 1) throw std::invalid_argument("success_lower_bound: need n >= d+1");
    Int M = grid_from_params(n, d, eps).M;
    double m = M.get_d();
    double c = binomial(static_cast<unsigned long>(n),
                        static_cast<unsigned long>(d + 1)).get_d();
    double events = c * (d + 1);
    PerEventBound pe = per_event_bound(d, M);
    BoundValues b;
    b.paper = std::max(0.0, 1 - events * std::pow(d, 1.5) / (std::sqrt(M_PI) * m));
    b.exact = std::max(0.0, 1 - events * pe.exact);
    return b;
}

PerEventBound per_event_bound(int d, const Int& M) {
    if (d < 1 || M < 1) throw std::invalid_argument("per_event_bound: need d >= 1, M >= 1");
    double m = M.get_d();
    double ratio = ball_volume_ratio(d).to_double();
    PerEventBound b;
    b.paper = 2 * std::sqrt(d) / m * ratio;
    b.simplified = std::pow(d, 1.5) / (std::sqrt(M_PI) * m);
    b.exact = 4 * std::sqrt(d) / m * ratio;
    return b;
}

namespace {

// Determinant of a small double matrix, partial-pivot elimination.
double det_double(std::vector<std::vector<double>> m) {
    const size_t n = m.size();
    double det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        for (size_t i = k + 1; i < n; ++i)
            if (std::fabs(m[i][k]) > std::fabs(m[pivot][k])) pivot = i;
        if (m[pivot][k] == 0) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            double f = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

}  // namespace

double min_squared_facet_margin(const std::vector<Point>& pts, int d) {
    std::vector<std::vector<double>> coords(pts.size(), std::vector<double>(d));
    for (size_t i = 0; i < pts.size(); ++i)
        for (int c = 0; c < d; ++c) coords[i][c] = pts[i][c].get_d();

    double best = std::numeric_limits<double>::infinity();
    auto subsets = enumerate_subsets(static_cast<long>(pts.size()), d + 1);
    std::vector<std::vector<double>> homo(d + 1, std::vector<double>(d + 1));
    for (const auto& sub : subsets) {
        for (int i = 0; i <= d; ++i) {
            for (int c = 0; c < d; ++c) homo[i][c] = coords[sub[i]][c];
            homo[i][d] = 1;
        }
        double full = det_double(homo);
        for (int i = 0; i <= d; ++i) {
            // Facet normal from cofactors of row i.
            double norm2 = 0;
            for (int c = 0; c < d; ++c) {
                std::vector<std::vector<double>> minor(d, std::vector<double>(d));
                int rr = 0;
                for (int r = 0; r <= d; ++r) {
                    if (r == i) continue;
                    int cc = 0;
                    for (int col = 0; col <= d; ++col) {
                        if (col == c) continue;
                        minor[rr][cc++] = homo[r][col];
                    }
                    ++rr;
                }
                double a = det_double(minor);
                norm2 += a * a;
            }
            if (norm2 > 0) best = std::min(best, full * full / norm2);
        }
    }
    return best;
}

TrialRecord theorem_trial(const ExperimentParams& params, long index) {
    TrialRecord r;
    r.trial = index;
    r.derived_seed = derive_seed(params.seed, static_cast<uint64_t>(index));

    SamplerConfig sc{params.domain, params.d, params.n, params.precision_bits,
                     r.derived_seed};
    PointConfig s = sample_config(sc);
    GridSpec g = grid_from_params(params.n, params.d, params.eps);
    r.M = g.M;
    std::vector<Point> rounded = round_config(s.points, g);

    r.collisions = count_collisions(rounded);
    r.min_sq_margin = min_squared_facet_margin(s.points, params.d);
    Chirotope before = compute_chirotope(s.points, params.d);
    Chirotope after = compute_chirotope(rounded, params.d);
    r.diff_count = static_cast<long>(chirotope_diff(before, after).size());

    if (r.collisions > 0)
        r.outcome = Outcome::Collision;
    else if (!before.general_position() || !after.general_position())
        r.outcome = Outcome::Degenerate;
    else if (r.diff_count > 0)
        r.outcome = Outcome::Flip;
    else
        r.outcome = Outcome::Preserved;
    return r;
}

ExperimentSummary run_theorem_experiment(const ExperimentParams& params,
                                         std::vector<TrialRecord>* records) {
    if (params.trials < 1)
        throw std::invalid_argument("run_theorem_experiment: trials must be >= 1");
    ExperimentSummary s;
    s.params = params;
    s.M = grid_from_params(params.n, params.d, params.eps).M;
    for (long i = 0; i < params.trials; ++i) {
        TrialRecord r = theorem_trial(params, i);
        switch (r.outcome) {
            case Outcome::Preserved: ++s.preserved; break;
            case Outcome::Flip: ++s.flip; break;
            case Outcome::Degenerate: ++s.degenerate; break;
            case Outcome::Collision: ++s.collision; break;
        }
        if (records) records->push_back(std::move(r));
    }
    s.freq = static_cast<double>(s.preserved) / static_cast<double>(params.trials);
    s.wilson95 = wilson(s.preserved, params.trials, 1.96);
    s.bounds = success_lower_bound(params.n, params.d, params.eps);
    return s;
}

PerEventEstimate estimate_per_event(int d, const Int& M, long samples, uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("estimate_per_event: samples must be >= 1");
    Rat t2(Int(4 * d), Int(M * M));
    t2.canonicalize();

    PerEventEstimate e;
    e.samples = samples;
    e.bound = per_event_bound(d, M);
    for (long i = 0; i < samples; ++i) {
        CounterRng rng{derive_seed(seed, static_cast<uint64_t>(i)), 0};
        while (true) {
            std::vector<Point> facet(d);
            for (int j = 0; j < d; ++j) facet[j] = sample_point(rng, d, 96, Domain::Ball);
            Point x = sample_point(rng, d, 96, Domain::Ball);
            Hyperplane h;
            try {
                h = hyperplane_through(facet);
            } catch (const std::invalid_argument&) {
                ++e.degenerate_redraws;
                continue;
            }
            if (!dist_at_least(h, x, t2)) ++e.bad;
            break;
        }
    }
    e.freq = static_cast<double>(e.bad) / static_cast<double>(samples);
    e.wilson95 = wilson(e.bad, samples, 1.96);
    return e;
}

namespace {

std::vector<Point> sample_nondegenerate_simplex(CounterRng& rng, int d) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Point> t(d + 1);
        for (int i = 0; i <= d; ++i) t[i] = sample_point(rng, d, 96, Domain::Ball);
        if (orientation(t) != Sign::Zero) return t;
    }
    throw std::runtime_error("sample_nondegenerate_simplex: too many degenerate draws");
}

}  // namespace

Lemma1Report lemma1_falsify(int d, long trials, uint64_t seed) {
    if (d < 2 || d > 4) throw std::invalid_argument("lemma1_falsify: d must be in {2,3,4}");
    Lemma1Report rep;
    rep.d = d;
    rep.trials = trials;
    for (long t = 0; t < trials; ++t) {
        CounterRng rng{derive_seed(seed, static_cast<uint64_t>(t)), 0};
        std::vector<Point> simplex = sample_nondegenerate_simplex(rng, d);
        Hyperplane h;
        while (true) {
            std::vector<Point> pts(d);
            for (int j = 0; j < d; ++j) pts[j] = sample_point(rng, d, 96, Domain::Ball);
            try {
                h = hyperplane_through(pts);
                break;
            } catch (const std::invalid_argument&) {
            }
        }
        auto met = lemma1_transversal_report(simplex, h);
        int rs = 0, ss = 0;
        for (const auto& cell : met) (cell.kind == CellKind::R ? rs : ss)++;
        if (rs == d + 1 || ss == d + 1) {
            ++rep.counterexamples;
            rep.witness_trials.push_back(t);
        }
    }
    return rep;
}

Lemma2Report lemma2_property_run(int d, long trials, const Int& M, uint64_t seed) {
    if (d < 1) throw std::invalid_argument("lemma2_property_run: d must be >= 1");
    Lemma2Report rep;
    rep.d = d;
    rep.trials = trials;
    GridSpec g{M};
    for (long t = 0; t < trials; ++t) {
        CounterRng rng{derive_seed(seed, static_cast<uint64_t>(t)), 0};
        std::vector<Point> p = sample_nondegenerate_simplex(rng, d);
        std::vector<Point> q = round_config(p, g);
        if (!lemma2_certificate(p, q)) continue;
        ++rep.certified;
        if (orientation(p) != orientation(q)) ++rep.violations;
    }
    return rep;
}

namespace {

using json = nlohmann::ordered_json;

json wilson_json(const WilsonInterval& w) {
    return json{{"lo", w.lo}, {"hi", w.hi}};
}

}  // namespace

std::string record_to_json(const TrialRecord& r) {
    json j{{"trial", r.trial},
           {"seed", r.derived_seed},
           {"M", r.M.get_str()},
           {"outcome", outcome_name(r.outcome)},
           {"diff_count", r.diff_count},
           {"collisions", r.collisions},
           {"min_sq_margin", r.min_sq_margin}};
    return j.dump();
}

std::string summary_to_json(const ExperimentSummary& s) {
    json j{{"params",
            {{"n", s.params.n},
             {"d", s.params.d},
             {"eps", s.params.eps.get_str()},
             {"trials", s.params.trials},
             {"seed", s.params.seed},
             {"domain", domain_name(s.params.domain)},
             {"precision_bits", s.params.precision_bits}}},
           {"M", s.M.get_str()},
           {"preserved", s.preserved},
           {"flip", s.flip},
           {"degenerate", s.degenerate},
           {"collision", s.collision},
           {"freq", s.freq},
           {"wilson95", wilson_json(s.wilson95)},
           {"bound_paper", s.bounds.paper},
           {"bound_exact", s.bounds.exact}};
    return j.dump();
}

std::string per_event_to_json(const PerEventEstimate& e, int d, const Int& M) {
    json j{{"d", d},
           {"M", M.get_str()},
           {"samples", e.samples},
           {"bad", e.bad},
           {"degenerate_redraws", e.degenerate_redraws},
           {"freq", e.freq},
           {"wilson95", wilson_json(e.wilson95)},
           {"bound_paper", e.bound.paper},
           {"bound_simplified", e.bound.simplified},
           {"bound_exact", e.bound.exact}};
    return j.dump();
}

std::string lemma1_to_json(const Lemma1Report& r) {
    json j{{"d", r.d},
           {"trials", r.trials},
           {"counterexamples", r.counterexamples},
           {"witness_trials", r.witness_trials}};
    return j.dump();
}

std::string lemma2_to_json(const Lemma2Report& r, const Int& M) {
    json j{{"d", r.d},
           {"M", M.get_str()},
           {"trials", r.trials},
           {"certified", r.certified},
           {"violations", r.violations}};
    return j.dump();
}

std::string summary_csv_header() {
    return "n,d,eps,M,trials,preserved,flip,degenerate,collision,freq,"
           "wilson_lo,wilson_hi,bound_paper,bound_exact";
}

std::string summary_csv_row(const ExperimentSummary& s) {
    std::ostringstream os;
    os << s.params.n << ',' << s.params.d << ',' << s.params.eps.get_str() << ','
       << s.M.get_str() << ',' << s.params.trials << ',' << s.preserved << ','
       << s.flip << ',' << s.degenerate << ',' << s.collision << ',' << s.freq << ','
       << s.wilson95.lo << ',' << s.wilson95.hi << ',' << s.bounds.paper << ','
       << s.bounds.exact;
    return os.str();
}

}  // namespace chirogrid
