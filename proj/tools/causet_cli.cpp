// causet: sprinkle causal diamonds, build causal/link matrices, sum over
// world lines, and run the special-relativity and Schwartz-space checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "causet/causal.hpp"
#include "causet/io.hpp"
#include "causet/kcalculus.hpp"
#include "causet/schwartz.hpp"
#include "causet/sprinkle.hpp"
#include "causet/svg.hpp"
#include "causet/version.hpp"
#include "causet/worldline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// exit codes: 0 success, 1 validation, 2 I/O, 3 tolerance violated
struct ToleranceFailure : std::exception {
    explicit ToleranceFailure(std::string msg) : message(std::move(msg)) {}
    const char* what() const noexcept override { return message.c_str(); }
    std::string message;
};

struct CommonOpts {
    std::string out_dir = ".";
    std::string format = "both";  // csv | json | both
    bool quiet = false;
};

struct RunResult {
    std::vector<std::pair<std::string, std::string>> outputs;  // name, digest
};

class OutputDir {
public:
    explicit OutputDir(const fs::path& dir) : dir_(dir) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) throw std::runtime_error("cannot create output directory " + dir_.string());
    }

    void add(const std::string& name, const std::string& content) {
        causet::io::write_file(dir_ / name, content);
        outputs_.push_back({name, causet::io::digest_hex({content.data(), content.size()})});
    }

    const std::vector<std::pair<std::string, std::string>>& outputs() const { return outputs_; }

private:
    fs::path dir_;
    std::vector<std::pair<std::string, std::string>> outputs_;
};

void write_manifest(const fs::path& dir, const std::string& command, const json& config,
                    const std::vector<std::pair<std::string, std::string>>& outputs) {
    json out_list = json::array();
    for (const auto& [name, digest] : outputs) {
        out_list.push_back(json{{"path", name}, {"digest", digest}});
    }
    const json manifest{{"tool_version", causet::version},
                        {"command", command},
                        {"config", config},
                        {"outputs", out_list}};
    causet::io::write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

bool wants_csv(const CommonOpts& opts) { return opts.format != "json"; }
bool wants_json(const CommonOpts& opts) { return opts.format != "csv"; }

void say(const CommonOpts& opts, const std::string& line) {
    if (!opts.quiet) std::cout << line << "\n";
}

// ---------------------------------------------------------------- sprinkle

struct SprinkleParams {
    std::uint64_t n = 1000;
    double S = 1.0;
    std::uint64_t seed = 0;
    std::string mode = "fixed";

    json to_json() const { return {{"n", n}, {"S", S}, {"seed", seed}, {"mode", mode}}; }
    static SprinkleParams from_json(const json& j) {
        SprinkleParams p;
        p.n = j.at("n").get<std::uint64_t>();
        p.S = j.at("S").get<double>();
        p.seed = j.at("seed").get<std::uint64_t>();
        p.mode = j.at("mode").get<std::string>();
        return p;
    }
};

RunResult run_sprinkle(const SprinkleParams& params, const CommonOpts& opts) {
    const causet::SprinkleConfig config{params.n, params.S, params.seed,
                                        causet::sprinkle_mode_from_string(params.mode)};
    const causet::Sprinkle s = causet::sprinkle(config);

    OutputDir out(opts.out_dir);
    if (wants_csv(opts)) out.add("events.csv", causet::io::events_to_csv(s.events));
    if (wants_json(opts)) out.add("events.json", causet::io::sprinkle_to_json(s));
    out.add("events.svg", causet::svg::diamond_scatter(s));
    write_manifest(opts.out_dir, "sprinkle", params.to_json(), out.outputs());

    say(opts, "sprinkled " + std::to_string(s.events.size()) + " events (S=" +
                  causet::io::format_double(params.S) + ", seed=" + std::to_string(params.seed) +
                  ", mode=" + params.mode + ")");
    return {out.outputs()};
}

// ------------------------------------------------------------------ relate

struct RelateParams {
    std::string input;

    json to_json() const { return {{"input", input}}; }
    static RelateParams from_json(const json& j) {
        return RelateParams{j.at("input").get<std::string>()};
    }
};

RunResult run_relate(const RelateParams& params, const CommonOpts& opts) {
    std::vector<causet::Event> events = causet::io::load_events(params.input);
    if (events.empty()) {
        throw causet::io::ParseError(params.input, 0, "no events in input");
    }
    std::sort(events.begin(), events.end(), causet::event_less);

    const causet::CausalMatrix c = causet::build_causal_matrix(std::move(events));
    const causet::LinkMatrix l = causet::build_link_matrix(c);

    OutputDir out(opts.out_dir);
    if (wants_csv(opts)) {
        out.add("causal.csv", causet::io::matrix_to_csv(c.bits));
        out.add("links.csv", causet::io::matrix_to_csv(l.bits));
    }
    if (wants_json(opts)) {
        out.add("causal.json", causet::io::matrix_to_json(c.bits));
        out.add("links.json", causet::io::matrix_to_json(l.bits));
    }
    write_manifest(opts.out_dir, "relate", params.to_json(), out.outputs());

    say(opts, "n=" + std::to_string(c.size()) + " relations=" + std::to_string(c.relation_count()) +
                  " links=" + std::to_string(l.link_count()) +
                  " longest_chain=" + std::to_string(causet::longest_chain(l)));
    return {out.outputs()};
}

// ------------------------------------------------------- chains / pathsum

causet::LinkMatrix links_from_file(const std::string& input) {
    std::vector<causet::Event> events = causet::io::load_events(input);
    if (events.empty()) throw causet::io::ParseError(input, 0, "no events in input");
    std::sort(events.begin(), events.end(), causet::event_less);
    return causet::build_link_matrix(causet::build_causal_matrix(std::move(events)));
}

struct ChainsParams {
    std::string input;
    std::size_t source = 0;
    std::size_t target = 0;
    std::size_t cap = causet::default_chain_cap;
    bool relations = false;

    json to_json() const {
        return {{"input", input}, {"source", source}, {"target", target},
                {"cap", cap},     {"relations", relations}};
    }
    static ChainsParams from_json(const json& j) {
        ChainsParams p;
        p.input = j.at("input").get<std::string>();
        p.source = j.at("source").get<std::size_t>();
        p.target = j.at("target").get<std::size_t>();
        p.cap = j.at("cap").get<std::size_t>();
        p.relations = j.at("relations").get<bool>();
        return p;
    }
};

RunResult run_chains(const ChainsParams& params, const CommonOpts& opts) {
    const causet::LinkMatrix links = links_from_file(params.input);
    const causet::BitMatrix& relation =
        params.relations ? causet::transitive_closure(links).bits : links.bits;
    const causet::ChainEnumeration chains =
        causet::enumerate_chains(relation, params.source, params.target, params.cap);

    json chain_list = json::array();
    for (const causet::Chain& chain : chains.chains) chain_list.push_back(chain);
    const json report{{"source", params.source},
                      {"target", params.target},
                      {"count", chains.chains.size()},
                      {"truncated", chains.truncated},
                      {"chains", chain_list}};

    OutputDir out(opts.out_dir);
    out.add("chains.json", report.dump(2) + "\n");
    write_manifest(opts.out_dir, "chains", params.to_json(), out.outputs());

    say(opts, std::to_string(chains.chains.size()) + " chain(s)" +
                  (chains.truncated ? " [truncated]" : ""));
    if (!opts.quiet) {
        const std::size_t shown = std::min<std::size_t>(chains.chains.size(), 16);
        for (std::size_t c = 0; c < shown; ++c) {
            std::string line;
            for (std::size_t idx : chains.chains[c]) line += std::to_string(idx) + " ";
            std::cout << "  " << line << "\n";
        }
        if (shown < chains.chains.size()) std::cout << "  ...\n";
    }
    return {out.outputs()};
}

struct PathsumParams {
    std::string input;
    std::size_t source = 0;
    std::size_t target = 0;
    double hop_re = 1.0;
    double hop_im = 0.0;
    std::size_t cap = causet::default_chain_cap;
    bool relations = false;
    std::string weight_rule = "born";  // born | linear

    json to_json() const {
        return {{"input", input},   {"source", source},
                {"target", target}, {"hop_re", hop_re},
                {"hop_im", hop_im}, {"cap", cap},
                {"relations", relations}, {"weight_rule", weight_rule}};
    }
    static PathsumParams from_json(const json& j) {
        PathsumParams p;
        p.input = j.at("input").get<std::string>();
        p.source = j.at("source").get<std::size_t>();
        p.target = j.at("target").get<std::size_t>();
        p.hop_re = j.at("hop_re").get<double>();
        p.hop_im = j.at("hop_im").get<double>();
        p.cap = j.at("cap").get<std::size_t>();
        p.relations = j.at("relations").get<bool>();
        p.weight_rule = j.at("weight_rule").get<std::string>();
        return p;
    }
};

RunResult run_pathsum(const PathsumParams& params, const CommonOpts& opts) {
    if (params.weight_rule != "born" && params.weight_rule != "linear") {
        throw std::invalid_argument("pathsum: weight rule must be 'born' or 'linear'");
    }
    const causet::LinkMatrix links = links_from_file(params.input);
    const causet::BitMatrix& relation =
        params.relations ? causet::transitive_closure(links).bits : links.bits;

    const mpz_class count = causet::path_count(relation, params.source, params.target);
    const causet::AmplitudeModel model{{params.hop_re, params.hop_im}};
    const std::complex<double> total =
        causet::total_amplitude(relation, model, params.source, params.target);
    const causet::WorldlineEnsemble ensemble = causet::build_ensemble(
        relation, model, params.source, params.target, params.cap,
        params.weight_rule == "born" ? causet::WeightRule::BornSquared
                                     : causet::WeightRule::Linear);

    OutputDir out(opts.out_dir);
    out.add("ensemble.json", causet::io::ensemble_to_json(ensemble));
    write_manifest(opts.out_dir, "pathsum", params.to_json(), out.outputs());

    say(opts, "paths " + std::to_string(params.source) + " -> " + std::to_string(params.target) +
                  ": count=" + count.get_str() +
                  " total=" + causet::io::format_double(total.real()) + "+" +
                  causet::io::format_double(total.imag()) + "i" +
                  (ensemble.truncated ? " [ensemble truncated]" : ""));
    if (!opts.quiet && !ensemble.weights.empty()) {
        std::string line = "weights:";
        const std::size_t shown = std::min<std::size_t>(ensemble.weights.size(), 16);
        for (std::size_t c = 0; c < shown; ++c) {
            line += " " + causet::io::format_double(ensemble.weights[c]);
        }
        if (shown < ensemble.weights.size()) line += " ...";
        std::cout << line << "\n";
    }
    return {out.outputs()};
}

// -------------------------------------------------------------- boostcheck

struct BoostcheckParams {
    std::uint64_t n = 500;
    double S = 1.0;
    std::uint64_t seed = 0;
    std::vector<double> betas{0.0, 0.3, -0.3, 0.6, -0.6, 0.9, -0.9, 0.99, -0.99};

    json to_json() const { return {{"n", n}, {"S", S}, {"seed", seed}, {"betas", betas}}; }
    static BoostcheckParams from_json(const json& j) {
        BoostcheckParams p;
        p.n = j.at("n").get<std::uint64_t>();
        p.S = j.at("S").get<double>();
        p.seed = j.at("seed").get<std::uint64_t>();
        p.betas = j.at("betas").get<std::vector<double>>();
        return p;
    }
};

RunResult run_boostcheck(const BoostcheckParams& params, const CommonOpts& opts) {
    for (double beta : params.betas) {
        if (!(std::abs(beta) < 1.0)) {
            throw std::invalid_argument("boostcheck: |beta| must be < 1");
        }
    }
    const causet::Sprinkle s = causet::sprinkle(
        {params.n, params.S, params.seed, causet::SprinkleMode::FixedN});

    std::string csv = "beta,compared_pairs,differing_pairs,guarded_pairs\n";
    std::size_t total_differing = 0;
    for (double beta : params.betas) {
        const causet::BoostCheckResult r = causet::boost_invariance_check(s, beta);
        total_differing += r.differing_pairs;
        csv += causet::io::format_double(beta) + "," + std::to_string(r.compared_pairs) + "," +
               std::to_string(r.differing_pairs) + "," + std::to_string(r.guarded_pairs) + "\n";
        say(opts, "beta=" + causet::io::format_double(beta) +
                      (r.identical() ? ": causal matrix identical"
                                     : ": " + std::to_string(r.differing_pairs) + " pairs differ"));
    }

    OutputDir out(opts.out_dir);
    out.add("boostcheck.csv", csv);
    write_manifest(opts.out_dir, "boostcheck", params.to_json(), out.outputs());

    if (total_differing > 0) {
        throw ToleranceFailure("boostcheck: causal order changed under boost");
    }
    return {out.outputs()};
}

// ----------------------------------------------------------------- srcheck

struct SrcheckParams {
    std::vector<double> betas;  // empty = default grid
    double c = 1.0;

    json to_json() const { return {{"betas", betas}, {"c", c}}; }
    static SrcheckParams from_json(const json& j) {
        SrcheckParams p;
        p.betas = j.at("betas").get<std::vector<double>>();
        p.c = j.at("c").get<double>();
        return p;
    }
};

RunResult run_srcheck(const SrcheckParams& params, const CommonOpts& opts) {
    std::vector<double> betas = params.betas;
    if (betas.empty()) {
        for (int i = 0; i < 50; ++i) betas.push_back(0.99 * static_cast<double>(i) / 49.0);
    }
    for (double beta : betas) {
        if (beta < 0.0 || beta >= 1.0) {
            throw std::invalid_argument("srcheck: beta must be in [0, 1)");
        }
    }
    if (!(params.c > 0.0)) throw std::invalid_argument("srcheck: c must be positive");

    const std::vector<causet::SweepRow> rows = causet::relativity_sweep(betas, params.c);
    std::string csv = "beta,k,t1_over_t2,gamma_closed_form,L_over_L0\n";
    double worst = 0.0;
    for (const causet::SweepRow& row : rows) {
        csv += causet::io::format_double(row.beta) + "," + causet::io::format_double(row.k) + "," +
               causet::io::format_double(row.t1_over_t2) + "," +
               causet::io::format_double(row.gamma_closed_form) + "," +
               causet::io::format_double(row.length_ratio) + "\n";
        const double v = row.beta * params.c;
        const double k_sq_expected = (params.c + v) / (params.c - v);
        worst = std::max(worst, std::abs(row.t1_over_t2 - row.gamma_closed_form));
        worst = std::max(worst, std::abs(row.k * row.k - k_sq_expected));
        worst = std::max(worst, std::abs(row.length_ratio * row.t1_over_t2 - 1.0));
    }

    OutputDir out(opts.out_dir);
    out.add("srcheck.csv", csv);
    write_manifest(opts.out_dir, "srcheck", params.to_json(), out.outputs());

    say(opts, "srcheck: " + std::to_string(rows.size()) +
                  " beta values, worst deviation " + causet::io::format_double(worst));
    if (worst >= 1e-9) throw ToleranceFailure("srcheck: deviation exceeds 1e-9");
    return {out.outputs()};
}

// -------------------------------------------------------------------- qexp

struct QexpParams {
    std::string input;  // empty = built-in gaussian
    double center = 0.0;
    double width = 1.0;
    double half_width = causet::default_half_width;
    double spacing = causet::default_spacing;
    unsigned alpha = 0;
    unsigned beta = 0;
    std::vector<double> window;  // empty or [lo, hi]

    json to_json() const {
        return {{"input", input},   {"center", center},
                {"width", width},   {"half_width", half_width},
                {"spacing", spacing}, {"alpha", alpha},
                {"beta", beta},     {"window", window}};
    }
    static QexpParams from_json(const json& j) {
        QexpParams p;
        p.input = j.at("input").get<std::string>();
        p.center = j.at("center").get<double>();
        p.width = j.at("width").get<double>();
        p.half_width = j.at("half_width").get<double>();
        p.spacing = j.at("spacing").get<double>();
        p.alpha = j.at("alpha").get<unsigned>();
        p.beta = j.at("beta").get<unsigned>();
        p.window = j.at("window").get<std::vector<double>>();
        return p;
    }
};

RunResult run_qexp(const QexpParams& params, const CommonOpts& opts) {
    if (!params.window.empty() && params.window.size() != 2) {
        throw std::invalid_argument("qexp: window needs exactly two values lo,hi");
    }

    causet::TestFunction f =
        params.input.empty()
            ? causet::TestFunction::gaussian(params.center, params.width, params.half_width,
                                             params.spacing)
            : causet::io::function_from_csv(causet::io::read_file(params.input), params.input);
    if (!f.rapidly_decaying()) {
        throw std::invalid_argument(
            "qexp: function does not decay at the grid boundary (not Schwartz-like)");
    }

    const double semi = causet::seminorm(f, {params.alpha, params.beta});
    const double q = causet::expectation(f);

    json report{{"seminorm", semi},
                {"alpha", params.alpha},
                {"beta", params.beta},
                {"expectation", q}};
    say(opts, "seminorm(alpha=" + std::to_string(params.alpha) +
                  ", beta=" + std::to_string(params.beta) +
                  ") = " + causet::io::format_double(semi));
    say(opts, "expectation = " + causet::io::format_double(q));
    if (params.window.size() == 2) {
        const bool inside = causet::in_preimage(f, {params.window[0], params.window[1]});
        report["window"] = params.window;
        report["in_preimage"] = inside;
        say(opts, "window (" + causet::io::format_double(params.window[0]) + ", " +
                      causet::io::format_double(params.window[1]) + "): " +
                      (inside ? "inside" : "outside"));
    }

    OutputDir out(opts.out_dir);
    out.add("qexp.json", report.dump(2) + "\n");
    write_manifest(opts.out_dir, "qexp", params.to_json(), out.outputs());
    return {out.outputs()};
}

// ------------------------------------------------------------------ replay

int run_replay(const std::string& manifest_path, const CommonOpts& opts) {
    json manifest;
    try {
        manifest = json::parse(causet::io::read_file(manifest_path));
    } catch (const json::exception&) {
        throw causet::io::ParseError(manifest_path, 0, "invalid manifest JSON");
    }

    std::string command;
    json config;
    json outputs;
    try {
        command = manifest.at("command").get<std::string>();
        config = manifest.at("config");
        outputs = manifest.at("outputs");
    } catch (const json::exception&) {
        throw causet::io::ParseError(manifest_path, 0, "manifest missing command/config/outputs");
    }

    CommonOpts replay_opts = opts;
    replay_opts.quiet = true;

    RunResult result;
    try {
        if (command == "sprinkle") {
            result = run_sprinkle(SprinkleParams::from_json(config), replay_opts);
        } else if (command == "relate") {
            result = run_relate(RelateParams::from_json(config), replay_opts);
        } else if (command == "chains") {
            result = run_chains(ChainsParams::from_json(config), replay_opts);
        } else if (command == "pathsum") {
            result = run_pathsum(PathsumParams::from_json(config), replay_opts);
        } else if (command == "boostcheck") {
            result = run_boostcheck(BoostcheckParams::from_json(config), replay_opts);
        } else if (command == "srcheck") {
            result = run_srcheck(SrcheckParams::from_json(config), replay_opts);
        } else if (command == "qexp") {
            result = run_qexp(QexpParams::from_json(config), replay_opts);
        } else {
            throw causet::io::ParseError(manifest_path, 0, "unknown command '" + command + "'");
        }
    } catch (const json::exception&) {
        throw causet::io::ParseError(manifest_path, 0, "malformed config for '" + command + "'");
    }

    std::size_t mismatches = 0;
    for (const auto& recorded : outputs) {
        if (!recorded.is_object() || !recorded.contains("path") || !recorded.contains("digest") ||
            !recorded["path"].is_string() || !recorded["digest"].is_string()) {
            throw causet::io::ParseError(manifest_path, 0, "malformed outputs entry");
        }
        const std::string name = recorded["path"].get<std::string>();
        const std::string digest = recorded["digest"].get<std::string>();
        bool found = false;
        for (const auto& [got_name, got_digest] : result.outputs) {
            if (got_name != name) continue;
            found = true;
            if (got_digest != digest) {
                ++mismatches;
                say(opts, name + ": digest mismatch (" + got_digest + " != " + digest + ")");
            }
        }
        if (!found) {
            ++mismatches;
            say(opts, name + ": not produced by replay");
        }
    }
    if (mismatches > 0) {
        throw ToleranceFailure("replay: " + std::to_string(mismatches) + " output(s) differ");
    }
    say(opts, "replay: all " + std::to_string(result.outputs.size()) + " outputs reproduced");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"causal-diamond sprinkling and causal-set analysis"};
    app.set_version_flag("--version", causet::version);
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--out-dir", opts.out_dir, "directory for output files")
        ->capture_default_str();
    app.add_option("--format", opts.format, "file formats to write")
        ->check(CLI::IsMember({"csv", "json", "both"}))
        ->capture_default_str();
    app.add_flag("--quiet", opts.quiet, "suppress progress output");

    SprinkleParams sprinkle_params;
    CLI::App* cmd_sprinkle = app.add_subcommand("sprinkle", "sprinkle events into a diamond");
    cmd_sprinkle->add_option("-n,--count", sprinkle_params.n, "number of points (or Poisson mean)")
        ->capture_default_str();
    cmd_sprinkle->add_option("-S,--edge", sprinkle_params.S, "lightcone square edge length")
        ->capture_default_str();
    cmd_sprinkle->add_option("--seed", sprinkle_params.seed, "random seed")->capture_default_str();
    cmd_sprinkle->add_option("--mode", sprinkle_params.mode, "fixed or poisson point count")
        ->check(CLI::IsMember({"fixed", "poisson"}))
        ->capture_default_str();

    RelateParams relate_params;
    CLI::App* cmd_relate = app.add_subcommand("relate", "build causal and link matrices");
    cmd_relate->add_option("-i,--input", relate_params.input, "events file (.csv or .json)")
        ->required();

    ChainsParams chains_params;
    CLI::App* cmd_chains = app.add_subcommand("chains", "enumerate chains between two events");
    cmd_chains->add_option("-i,--input", chains_params.input, "events file (.csv or .json)")
        ->required();
    cmd_chains->add_option("-s,--source", chains_params.source, "source index")->required();
    cmd_chains->add_option("-t,--target", chains_params.target, "target index")->required();
    cmd_chains->add_option("--cap", chains_params.cap, "enumeration cap")->capture_default_str();
    cmd_chains->add_flag("--relations", chains_params.relations,
                         "walk relation-chains instead of link-chains");

    PathsumParams pathsum_params;
    CLI::App* cmd_pathsum = app.add_subcommand("pathsum", "amplitude-weighted sum over chains");
    cmd_pathsum->add_option("-i,--input", pathsum_params.input, "events file (.csv or .json)")
        ->required();
    cmd_pathsum->add_option("-s,--source", pathsum_params.source, "source index")->required();
    cmd_pathsum->add_option("-t,--target", pathsum_params.target, "target index")->required();
    cmd_pathsum->add_option("--hop-re", pathsum_params.hop_re, "per-link amplitude, real part")
        ->capture_default_str();
    cmd_pathsum->add_option("--hop-im", pathsum_params.hop_im, "per-link amplitude, imaginary part")
        ->capture_default_str();
    cmd_pathsum->add_option("--cap", pathsum_params.cap, "enumeration cap")->capture_default_str();
    cmd_pathsum->add_flag("--relations", pathsum_params.relations,
                          "walk relation-chains instead of link-chains");
    cmd_pathsum->add_option("--weights", pathsum_params.weight_rule, "born or linear weights")
        ->check(CLI::IsMember({"born", "linear"}))
        ->capture_default_str();

    BoostcheckParams boostcheck_params;
    CLI::App* cmd_boostcheck =
        app.add_subcommand("boostcheck", "verify causal order is boost invariant");
    cmd_boostcheck->add_option("-n,--count", boostcheck_params.n, "sprinkle size")
        ->capture_default_str();
    cmd_boostcheck->add_option("-S,--edge", boostcheck_params.S, "lightcone square edge length")
        ->capture_default_str();
    cmd_boostcheck->add_option("--seed", boostcheck_params.seed, "random seed")
        ->capture_default_str();
    cmd_boostcheck
        ->add_option("--betas", boostcheck_params.betas, "boost velocities to test")
        ->delimiter(',');

    SrcheckParams srcheck_params;
    CLI::App* cmd_srcheck =
        app.add_subcommand("srcheck", "time dilation / length contraction sweep");
    cmd_srcheck->add_option("--betas", srcheck_params.betas, "beta grid (default: 50 values)")
        ->delimiter(',');
    cmd_srcheck->add_option("--c", srcheck_params.c, "light speed")->capture_default_str();

    QexpParams qexp_params;
    CLI::App* cmd_qexp =
        app.add_subcommand("qexp", "seminorm, expectation value, and window membership");
    cmd_qexp->add_option("-i,--input", qexp_params.input, "sampled function CSV (x,re,im)");
    cmd_qexp->add_option("--center", qexp_params.center, "gaussian center")->capture_default_str();
    cmd_qexp->add_option("--width", qexp_params.width, "gaussian width")->capture_default_str();
    cmd_qexp->add_option("--half-width", qexp_params.half_width, "grid half-width R")
        ->capture_default_str();
    cmd_qexp->add_option("--spacing", qexp_params.spacing, "grid spacing h")->capture_default_str();
    cmd_qexp->add_option("--alpha", qexp_params.alpha, "power of x")->capture_default_str();
    cmd_qexp->add_option("--beta", qexp_params.beta, "derivative order")->capture_default_str();
    cmd_qexp->add_option("--window", qexp_params.window, "open window lo,hi")->delimiter(',');

    std::string replay_manifest;
    CLI::App* cmd_replay = app.add_subcommand("replay", "re-run a manifest and verify digests");
    cmd_replay->add_option("manifest", replay_manifest, "manifest.json to replay")->required();

    // let --out-dir / --format / --quiet appear after the subcommand too
    for (CLI::App* sub : {cmd_sprinkle, cmd_relate, cmd_chains, cmd_pathsum, cmd_boostcheck,
                          cmd_srcheck, cmd_qexp, cmd_replay}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_sprinkle->parsed()) run_sprinkle(sprinkle_params, opts);
        if (cmd_relate->parsed()) run_relate(relate_params, opts);
        if (cmd_chains->parsed()) run_chains(chains_params, opts);
        if (cmd_pathsum->parsed()) run_pathsum(pathsum_params, opts);
        if (cmd_boostcheck->parsed()) run_boostcheck(boostcheck_params, opts);
        if (cmd_srcheck->parsed()) run_srcheck(srcheck_params, opts);
        if (cmd_qexp->parsed()) run_qexp(qexp_params, opts);
        if (cmd_replay->parsed()) return run_replay(replay_manifest, opts);
    } catch (const ToleranceFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const causet::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {  // invalid_argument, domain_error
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
