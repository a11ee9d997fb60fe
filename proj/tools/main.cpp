// chirogrid CLI: sampling, rounding, chirotope extraction/comparison, the
// binary grid codec, closed-form bounds, and the experiment/verifier
// harness. All randomness flows from the --seed flag; re-running a command
// with the same flags reproduces its output byte for byte.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chirogrid/experiments.hpp"

using namespace chirogrid;
using json = nlohmann::ordered_json;

namespace {

Rat parse_eps(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0 || r < 0)
        throw CLI::ValidationError("--eps must be a nonnegative rational like 1/2");
    r.canonicalize();
    return r;
}

Int parse_big(const std::string& s) {
    Int v;
    if (v.set_str(s, 10) != 0 || v < 1)
        throw CLI::ValidationError("expected a positive integer");
    return v;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("cannot open output file " + path);
    return file;
}

std::vector<uint8_t> read_binary(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

void write_binary(const std::string& path, const std::vector<uint8_t>& bytes) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    os.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
}

GridSpec grid_for(const std::string& m_flag, const std::string& eps_flag, long n, int d) {
    if (!m_flag.empty()) return GridSpec{parse_big(m_flag)};
    return grid_from_params(n, d, parse_eps(eps_flag.empty() ? "0" : eps_flag));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chirotopes, grid rounding, and rounding experiments"};
    app.require_subcommand(1);

    long n = 32, trials = 100, samples = 100000;
    int d = 2, bits = 96;
    uint64_t seed = 0;
    std::string eps_str = "1/2", domain_str = "ball", m_str;
    std::string in_path, in_path_b, out_path, records_path, csv_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "64-bit master seed");
        cmd->add_option("--out", out_path, "output file ('-' for stdout)");
    };

    auto* c_sample = app.add_subcommand("sample", "sample a point configuration");
    c_sample->add_option("--n", n, "point count")->required();
    c_sample->add_option("--d", d, "dimension");
    c_sample->add_option("--domain", domain_str, "ball or cube");
    c_sample->add_option("--bits", bits, "dyadic precision bits");
    add_common(c_sample);

    auto* c_round = app.add_subcommand("round", "round a configuration to the grid");
    c_round->add_option("--in", in_path, "pointset file")->required();
    c_round->add_option("--M", m_str, "grid denominator (overrides --eps)");
    c_round->add_option("--eps", eps_str, "eps for M = ceil(n^(d+1+eps))");
    add_common(c_round);

    auto* c_chi = app.add_subcommand("chirotope", "compute the chirotope of a pointset");
    c_chi->add_option("--in", in_path, "pointset file")->required();
    add_common(c_chi);

    auto* c_cmp = app.add_subcommand("compare", "diff two chirotope files");
    c_cmp->add_option("--a", in_path, "first chirotope file")->required();
    c_cmp->add_option("--b", in_path_b, "second chirotope file")->required();
    add_common(c_cmp);

    auto* c_enc = app.add_subcommand("encode", "encode an on-grid pointset to binary");
    c_enc->add_option("--in", in_path, "pointset file")->required();
    c_enc->add_option("--M", m_str, "grid denominator (overrides --eps)");
    c_enc->add_option("--eps", eps_str, "eps for M = ceil(n^(d+1+eps))");
    add_common(c_enc);

    auto* c_dec = app.add_subcommand("decode", "decode a binary encoding to a pointset");
    c_dec->add_option("--in", in_path, "encoded file")->required();
    add_common(c_dec);

    auto* c_bound = app.add_subcommand("bound", "closed-form preservation bounds");
    c_bound->add_option("--n", n, "point count")->required();
    c_bound->add_option("--d", d, "dimension");
    c_bound->add_option("--eps", eps_str, "grid exponent offset");
    add_common(c_bound);

    auto* c_exp = app.add_subcommand("experiment", "randomized experiments");
    c_exp->require_subcommand(1);
    auto* c_thm = c_exp->add_subcommand("theorem", "rounding preservation experiment");
    c_thm->add_option("--n", n, "point count")->required();
    c_thm->add_option("--d", d, "dimension");
    c_thm->add_option("--eps", eps_str, "grid exponent offset");
    c_thm->add_option("--trials", trials, "number of trials");
    c_thm->add_option("--domain", domain_str, "ball or cube");
    c_thm->add_option("--records", records_path, "JSON-lines trial records file");
    c_thm->add_option("--csv", csv_path, "summary CSV file");
    add_common(c_thm);

    auto* c_pe = c_exp->add_subcommand("per-event", "per-facet slab event estimate");
    c_pe->add_option("--d", d, "dimension");
    c_pe->add_option("--M", m_str, "grid denominator")->required();
    c_pe->add_option("--samples", samples, "Monte Carlo samples");
    add_common(c_pe);

    auto* c_ver = app.add_subcommand("verify", "exact randomized verifiers");
    c_ver->require_subcommand(1);
    auto* c_l1 = c_ver->add_subcommand("lemma1", "cell-transversal impossibility");
    c_l1->add_option("--d", d, "dimension (2..4)");
    c_l1->add_option("--trials", trials, "number of trials");
    add_common(c_l1);

    auto* c_l2 = c_ver->add_subcommand("lemma2", "certificate soundness");
    c_l2->add_option("--d", d, "dimension");
    c_l2->add_option("--trials", trials, "number of trials");
    c_l2->add_option("--M", m_str, "grid denominator")->required();
    add_common(c_l2);

    CLI11_PARSE(app, argc, argv);

    try {
        std::ofstream file;
        if (c_sample->parsed()) {
            SamplerConfig cfg{domain_from_name(domain_str), d, n, bits, seed};
            save_config(open_out(file, out_path), sample_config(cfg));
        } else if (c_round->parsed()) {
            PointConfig cfg = load_config_file(in_path);
            GridSpec g = grid_for(m_str, eps_str, cfg.n, cfg.d);
            cfg.points = round_config(cfg.points, g);
            save_config(open_out(file, out_path), cfg);
        } else if (c_chi->parsed()) {
            PointConfig cfg = load_config_file(in_path);
            write_chirotope(open_out(file, out_path),
                            compute_chirotope(cfg.points, cfg.d));
        } else if (c_cmp->parsed()) {
            std::ifstream fa(in_path), fb(in_path_b);
            if (!fa || !fb) throw std::runtime_error("cannot open chirotope file");
            Chirotope a = read_chirotope(fa), b = read_chirotope(fb);
            auto diff = chirotope_diff(a, b);
            json out{{"d", a.d}, {"n", a.n}, {"differences", json::array()}};
            for (const auto& e : diff) {
                json sub = json::array();
                for (int idx : e.subset) sub.push_back(idx + 1);
                out["differences"].push_back(
                    {{"subset", sub},
                     {"a", std::string(1, sign_char(e.a))},
                     {"b", std::string(1, sign_char(e.b))},
                     {"kind", e.degenerate ? "DEGENERATE" : "FLIP"}});
            }
            open_out(file, out_path) << out.dump() << '\n';
        } else if (c_enc->parsed()) {
            PointConfig cfg = load_config_file(in_path);
            GridSpec g = grid_for(m_str, eps_str, cfg.n, cfg.d);
            EncodedConfig enc = encode(cfg.points, g);
            if (out_path.empty()) throw std::runtime_error("encode requires --out");
            write_binary(out_path, serialize(enc));
            std::cerr << "encoded " << enc.n << " points, payload " << enc.payload_bits
                      << " bits (width " << coord_bit_width(enc.M) << ")\n";
        } else if (c_dec->parsed()) {
            EncodedConfig enc = deserialize(read_binary(in_path));
            PointConfig cfg{enc.d, enc.n, decode(enc)};
            save_config(open_out(file, out_path), cfg);
        } else if (c_bound->parsed()) {
            Rat eps = parse_eps(eps_str);
            Int M = grid_from_params(n, d, eps).M;
            BoundValues b = success_lower_bound(n, d, eps);
            PerEventBound pe = per_event_bound(d, M);
            json out{{"n", n},          {"d", d},
                     {"eps", eps.get_str()}, {"M", M.get_str()},
                     {"bound_paper", b.paper}, {"bound_exact", b.exact},
                     {"per_event_paper", pe.paper},
                     {"per_event_simplified", pe.simplified},
                     {"per_event_exact", pe.exact}};
            open_out(file, out_path) << out.dump() << '\n';
        } else if (c_thm->parsed()) {
            ExperimentParams params{n, d, parse_eps(eps_str), trials, seed,
                                    domain_from_name(domain_str), bits};
            std::vector<TrialRecord> records;
            ExperimentSummary s =
                run_theorem_experiment(params, records_path.empty() ? nullptr : &records);
            if (!records_path.empty()) {
                std::ofstream rf(records_path);
                if (!rf) throw std::runtime_error("cannot open " + records_path);
                for (const auto& r : records) rf << record_to_json(r) << '\n';
            }
            if (!csv_path.empty()) {
                std::ofstream cf(csv_path);
                if (!cf) throw std::runtime_error("cannot open " + csv_path);
                cf << summary_csv_header() << '\n' << summary_csv_row(s) << '\n';
            }
            open_out(file, out_path) << summary_to_json(s) << '\n';
        } else if (c_pe->parsed()) {
            Int M = parse_big(m_str);
            PerEventEstimate e = estimate_per_event(d, M, samples, seed);
            open_out(file, out_path) << per_event_to_json(e, d, M) << '\n';
        } else if (c_l1->parsed()) {
            Lemma1Report rep = lemma1_falsify(d, trials, seed);
            open_out(file, out_path) << lemma1_to_json(rep) << '\n';
            return rep.counterexamples == 0 ? 0 : 1;
        } else if (c_l2->parsed()) {
            Int M = parse_big(m_str);
            Lemma2Report rep = lemma2_property_run(d, trials, M, seed);
            open_out(file, out_path) << lemma2_to_json(rep, M) << '\n';
            return rep.violations == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
