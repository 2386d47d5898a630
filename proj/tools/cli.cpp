#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include <boost/version.hpp>

#include "CLI11.hpp"
#include "json.hpp"
#include "tdl/census.hpp"
#include "tdl/containment.hpp"
#include "tdl/digraph.hpp"
#include "tdl/extremal.hpp"
#include "tdl/sampler.hpp"
#include "tdl/structure.hpp"
#include "tdl/verify/acceptance.hpp"

namespace tdl::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kToolVersion = "1.0.0";

#if defined(__clang__)
constexpr const char* kCompiler = "clang " __clang_version__;
#elif defined(__GNUC__)
constexpr const char* kCompiler = "gcc " __VERSION__;
#else
constexpr const char* kCompiler = "unknown";
#endif

// Rounds to 10 significant digits so JSON and CSV output is stable.
double sig10(double x)
{
    if (!std::isfinite(x))
        return x;
    std::ostringstream os;
    os << std::setprecision(10) << x;
    return std::stod(os.str());
}

std::string fmt10(double x)
{
    std::ostringstream os;
    os << std::setprecision(10) << x;
    return os.str();
}

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < length; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

void put_weighted(ordered_json& j, const std::string& key, const WeightedValue& v)
{
    if (v.exact) {
        j[key + "_num"] = v.exact->numerator();
        j[key + "_den"] = v.exact->denominator();
    } else {
        j[key + "_float"] = sig10(v.approx);
    }
}

std::string rational_text(const std::optional<Rational>& r)
{
    if (!r)
        return "none";
    std::ostringstream os;
    os << r->numerator();
    if (r->denominator() != 1)
        os << '/' << r->denominator();
    return os.str();
}

ordered_json rational_json(const std::optional<Rational>& r)
{
    return r ? ordered_json(rational_text(r)) : ordered_json(nullptr);
}

std::string read_first_line(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty())
            return line;
    }
    throw std::invalid_argument("'" + path + "' holds no graph line");
}

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || !std::isfinite(v))
            throw std::invalid_argument("'" + text + "' is not a comma-separated list of numbers");
        values.push_back(v);
    }
    return values;
}

// Options shared by every subcommand, plus the bookkeeping for its manifest.
struct Common {
    int threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    std::string out_path;
    std::string manifest_path;
};

struct PatternArgs {
    std::string spec;
    std::string file;
    int r = 0;
    int t = 1;

    // The pattern and the class count it implies (0 when only a file is given).
    std::pair<Pattern, int> resolve() const
    {
        if (!spec.empty()) {
            auto p = parse_pattern_spec(spec);
            const int implied = std::stoi(spec.substr(0, spec.find(',')));
            return {p, implied};
        }
        if (!file.empty()) {
            auto g = parse_hex_line(read_first_line(file));
            return {pattern_stats(g, "H(" + file + ")"), 0};
        }
        if (r < 1)
            throw std::invalid_argument("give a pattern with --pattern r,t, --r/--t or --pattern-file");
        return {blow_up_pattern(r, t), r};
    }

    void add(CLI::App* app, bool with_r)
    {
        app->add_option("--pattern", spec, "forbidden T_{r+1}^t as 'r,t'");
        app->add_option("--pattern-file", file, "forbidden digraph, one hex line 'D <n> <hex>'");
        if (with_r)
            app->add_option("--r", r, "number of classes (also builds T_{r+1}^t with --t)")->check(CLI::PositiveNumber);
        app->add_option("--t", t, "blow-up factor for --r")->check(CLI::PositiveNumber);
    }

    int classes(int implied) const
    {
        const int chosen = r > 0 ? r : implied;
        if (chosen < 1)
            throw std::invalid_argument("--r is required with --pattern-file");
        return chosen;
    }
};

class Session {
public:
    Session(std::string subcommand, const Common& common, std::ostream& out, std::ostream& err)
        : subcommand_(std::move(subcommand)), common_(common), out_(out), err_(err),
          start_(std::chrono::steady_clock::now())
    {
    }

    ordered_json& params() { return params_; }
    void set_seed(std::uint64_t seed) { seed_ = seed; }

    void emit(const std::string& content) { write(common_.out_path, content, true); }

    // Secondary output file (e.g. per-sample CSV).
    void emit_file(const std::string& path, const std::string& content) { write(path, content, false); }

    void finish(int exit_code)
    {
        ordered_json m;
        m["subcommand"] = subcommand_;
        m["parameters"] = params_;
        m["versions"] = {{"tool", kToolVersion},
                         {"compiler", kCompiler},
                         {"boost", BOOST_LIB_VERSION},
                         {"cxx_standard", __cplusplus}};
        m["seed"] = seed_ ? ordered_json(*seed_) : ordered_json(nullptr);
        m["threads"] = common_.threads;
        m["wall_seconds"] = sig10(std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count());
        m["exit_code"] = exit_code;
        m["outputs"] = outputs_;
        const std::string text = m.dump(2) + "\n";
        std::string path = common_.manifest_path;
        if (path.empty() && !common_.out_path.empty())
            path = common_.out_path + ".manifest.json";
        if (path.empty()) {
            err_ << text;
            return;
        }
        std::ofstream file(path);
        if (!file)
            throw std::invalid_argument("cannot write manifest '" + path + "'");
        file << text;
    }

private:
    void write(const std::string& path, const std::string& content, bool primary)
    {
        if (path.empty()) {
            out_ << content << std::flush;
        } else {
            std::ofstream file(path);
            if (!file)
                throw std::invalid_argument("cannot write '" + path + "'");
            file << content;
        }
        outputs_.push_back({{"path", path.empty() ? "<stdout>" : path},
                            {"role", primary ? "result" : "auxiliary"},
                            {"bytes", content.size()},
                            {"sha256", sha256_hex(content)}});
    }

    std::string subcommand_;
    const Common& common_;
    std::ostream& out_;
    std::ostream& err_;
    std::chrono::steady_clock::time_point start_;
    ordered_json params_ = ordered_json::object();
    std::optional<std::uint64_t> seed_;
    ordered_json outputs_ = ordered_json::array();
};

ordered_json pattern_json(const Pattern& p, const std::vector<WeightParam>& weights)
{
    ordered_json j;
    j["name"] = p.name;
    j["hex"] = to_hex_line(p.graph);
    j["vertices"] = p.graph.order();
    j["arcs"] = p.graph.arc_count();
    j["max_degree"] = p.max_degree;
    j["m"] = rational_json(p.m_value);
    j["max_density"] = rational_json(p.density_threshold);
    j["has_dense_pair"] = p.has_dense_pair;
    ordered_json verdicts = ordered_json::array();
    for (const auto& a : weights)
        verdicts.push_back({{"a", a.to_string()}, {"condition_a", p.satisfies_condition_a(a)}});
    j["condition_a"] = verdicts;
    return j;
}

int run_pattern(Session& s, const PatternArgs& pa, const std::string& weights_text)
{
    const auto [p, r] = pa.resolve();
    std::vector<WeightParam> weights;
    std::stringstream ss(weights_text);
    std::string item;
    while (std::getline(ss, item, ','))
        weights.push_back(WeightParam::parse(item));
    s.params() = {{"pattern", p.name}, {"a", weights_text}};
    s.emit(pattern_json(p, weights).dump(2) + "\n");
    return kOk;
}

int run_extremal(Session& s, const Common& c, int n, const PatternArgs& pa, const std::string& a_text,
                 const std::string& kind_text, int gap_from)
{
    (void)c;
    const auto [p, implied_r] = pa.resolve();
    const auto a = WeightParam::parse(a_text);
    const auto kind = parse_graph_kind(kind_text);
    if (n < 0)
        throw std::invalid_argument("--n must be >= 0");
    s.params() = {{"n", n}, {"pattern", p.name}, {"a", a.to_string()}, {"kind", to_string(kind)}};
    ExtremalOptions opts;
    opts.budget = Budget::from_env();

    const auto cert = exact_extremal(n, p, a, kind, opts);
    ordered_json j;
    j["n"] = n;
    j["h_name"] = p.name;
    j["a"] = a.to_string();
    j["kind"] = to_string(kind);
    j["exact"] = cert.exact();
    put_weighted(j, "value", cert.value);
    j["witness_count"] = cert.witnesses.size();
    j["unique_up_to_iso"] = cert.unique_up_to_iso();
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : cert.witnesses)
        witnesses.push_back(to_hex_line(w));
    j["witnesses"] = witnesses;
    j["labelled_maximizers"] = cert.labelled_maximizers;
    j["search_nodes"] = cert.nodes;

    if (gap_from > 0) {
        const int r = pa.classes(implied_r);
        s.params()["gap_from"] = gap_from;
        s.params()["r"] = r;
        ordered_json rows = ordered_json::array();
        for (const auto& row : extremal_gap_scan(gap_from, n, p, r, a, kind, opts)) {
            ordered_json jr;
            jr["n"] = row.n;
            put_weighted(jr, "extremal", row.extremal);
            put_weighted(jr, "lower", row.lower);
            put_weighted(jr, "gap", row.gap);
            jr["witness_count"] = row.witness_count;
            rows.push_back(jr);
        }
        j["gap_scan"] = rows;
    }
    s.emit(j.dump(2) + "\n");
    return kOk;
}

int run_census(Session& s, const Common& c, int n, int n_min, const PatternArgs& pa, const std::string& kind_text,
               const std::string& alpha_text)
{
    const auto [p, implied_r] = pa.resolve();
    const int r = pa.classes(implied_r);
    const auto kind = parse_graph_kind(kind_text);
    const auto alphas = alpha_text.empty() ? std::vector<double>{} : parse_list(alpha_text);
    for (double alpha : alphas)
        if (alpha < 0)
            throw std::invalid_argument("--alpha values must be >= 0");
    if (n < 1)
        throw std::invalid_argument("--n must be >= 1");
    const int first = n_min > 0 ? n_min : n;
    if (first > n)
        throw std::invalid_argument("--n-min must not exceed --n");
    s.params() = {{"n", n}, {"n_min", first}, {"pattern", p.name}, {"r", r}, {"kind", to_string(kind)},
                  {"alpha", alpha_text}};
    CensusOptions opts;
    opts.threads = c.threads;
    opts.budget = Budget::from_env();
    std::ostringstream os;
    os << census_csv_header(alphas) << '\n';
    for (int m = first; m <= n; ++m)
        os << census_csv_row(labelled_census(m, p, r, kind, alphas, opts)) << '\n';
    s.emit(os.str());
    return kOk;
}

int run_partition(Session& s, const Common& c, const std::string& graph_text, const std::string& graph_file, int r,
                  const std::string& mode_text, std::optional<double> eta, std::optional<double> mu,
                  const std::string& a_text, std::uint64_t seed)
{
    (void)c;
    if (graph_text.empty() == graph_file.empty())
        throw std::invalid_argument("give exactly one of --graph and --graph-file");
    const auto g = parse_hex_line(graph_text.empty() ? read_first_line(graph_file) : graph_text);
    if (r < 1)
        throw std::invalid_argument("--r must be >= 1");
    PartitionMode mode;
    if (mode_text == "exact")
        mode = PartitionMode::Exact;
    else if (mode_text == "local")
        mode = PartitionMode::LocalSearch;
    else
        throw std::invalid_argument("--mode must be 'exact' or 'local'");
    if (eta.has_value() != mu.has_value())
        throw std::invalid_argument("--eta and --mu go together");
    const auto a = WeightParam::parse(a_text);
    s.params() = {{"graph", to_hex_line(g)}, {"r", r}, {"mode", mode_text}, {"a", a.to_string()}};
    if (mode == PartitionMode::LocalSearch) {
        s.params()["seed"] = seed;
        s.set_seed(seed);
    }
    PartitionOptions opts;
    opts.budget = Budget::from_env();
    opts.seed = seed;
    const auto report = optimal_partition(g, r, mode, opts);

    ordered_json j;
    j["n"] = g.order();
    j["r"] = r;
    j["mode"] = mode_text;
    j["classes"] = report.partition.classes();
    j["non_crossing_arcs"] = report.non_crossing_arcs;
    j["is_optimal"] = report.is_optimal;
    j["missing_crossing_arcs"] = report.f2_deficit;
    j["edit_distance_to_complete_partite"] = report.edit_distance_to_dtr;
    j["internal_degrees"] = internal_degree_profile(g, report.partition);
    ordered_json pairs = ordered_json::array();
    const auto& classes = report.partition.classes();
    for (int i = 0; i < r; ++i)
        for (int k = i + 1; k < r; ++k) {
            const auto& ci = classes[static_cast<std::size_t>(i)];
            const auto& ck = classes[static_cast<std::size_t>(k)];
            if (ci.empty() || ck.empty())
                continue;
            const auto d = pair_densities(g, ci, ck, a);
            ordered_json jp;
            jp["i"] = i;
            jp["j"] = k;
            jp["d2"] = rational_text(d.d2);
            jp["d1_ij"] = rational_text(d.d1_ab);
            jp["d1_ji"] = rational_text(d.d1_ba);
            put_weighted(jp, "w_ij", d.w_ab);
            put_weighted(jp, "w_ji", d.w_ba);
            pairs.push_back(jp);
        }
    j["pair_densities"] = pairs;
    if (eta) {
        if (*eta < 0 || *mu < 0)
            throw std::invalid_argument("--eta and --mu must be >= 0");
        s.params()["eta"] = *eta;
        s.params()["mu"] = *mu;
        const auto f = f_conditions_check(g, report.partition, *eta, *mu);
        ordered_json jf;
        jf["f1"] = f.f1;
        jf["f2"] = f.f2;
        jf["f3"] = f.f3;
        jf["f2_exhaustive"] = f.f2_exhaustive;
        jf["f2_subset_pairs"] = f.f2_subset_pairs;
        jf["f2_density_constant"] = "1/6";
        if (f.f2_witness)
            jf["f2_witness"] = {{"from_class", f.f2_witness->class_i},
                                {"to_class", f.f2_witness->class_j},
                                {"from", f.f2_witness->u_i},
                                {"to", f.f2_witness->u_j},
                                {"arcs", f.f2_witness->arcs}};
        jf["f3_violations"] = f.f3_violations;
        j["f_conditions"] = jf;
    }
    s.emit(j.dump(2) + "\n");
    return kOk;
}

int run_stability(Session& s, const Common& c, int n, const PatternArgs& pa, const std::string& a_text,
                  double gamma, const std::string& kind_text)
{
    if (!pa.spec.empty() || !pa.file.empty())
        throw std::invalid_argument("stability takes --r and --t, not a pattern");
    if (pa.r < 1)
        throw std::invalid_argument("--r is required");
    const auto a = WeightParam::parse(a_text);
    const auto kind = parse_graph_kind(kind_text);
    s.params() = {{"n", n}, {"r", pa.r}, {"t", pa.t}, {"a", a.to_string()}, {"gamma", gamma}, {"kind", to_string(kind)}};
    StabilityOptions opts;
    opts.threads = c.threads;
    opts.budget = Budget::from_env();
    s.emit(frontier_csv(stability_sweep(n, pa.r, pa.t, a, gamma, kind, opts)));
    return kOk;
}

struct SampleArgs {
    int n = 0;
    std::string kind = "digraph";
    std::uint64_t burn_in = 0;
    std::uint64_t thin = 0;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    int r = 0;
    double alpha = 0.05;
    int chains = 1;
    std::string defects_path;
};

int run_sample(Session& s, const Common& c, const SampleArgs& sa, const PatternArgs& pa)
{
    const auto [p, implied_r] = pa.resolve();
    const int r = sa.r > 0 ? sa.r : implied_r;
    if (r < 1)
        throw std::invalid_argument("--r is required with --pattern-file");
    if (sa.alpha < 0)
        throw std::invalid_argument("--alpha must be >= 0");
    auto cfg = ChainConfig::with_defaults(sa.n, parse_graph_kind(sa.kind), p, sa.samples, sa.seed);
    if (sa.burn_in > 0)
        cfg.burn_in = sa.burn_in;
    if (sa.thin > 0)
        cfg.thin = sa.thin;
    cfg.chains = sa.chains;
    cfg.threads = c.threads;
    cfg.validate();
    s.set_seed(sa.seed);
    s.params() = {{"n", sa.n},           {"pattern", p.name},     {"kind", to_string(cfg.kind)},
                  {"burn_in", cfg.burn_in}, {"thin", cfg.thin},   {"samples", cfg.samples},
                  {"seed", sa.seed},     {"chains", cfg.chains}, {"r", r},
                  {"alpha", sa.alpha}};

    const auto stats = typicality_experiment(cfg, r, sa.alpha);
    ordered_json j;
    j["n"] = sa.n;
    j["pattern"] = p.name;
    j["kind"] = to_string(cfg.kind);
    j["r"] = r;
    j["alpha"] = sig10(sa.alpha);
    j["samples"] = stats.samples;
    j["chains"] = cfg.chains;
    j["burn_in"] = stats.burn_in;
    j["thin"] = stats.thin;
    j["seed"] = sa.seed;
    j["fraction_r_partite"] = sig10(stats.fraction_r_partite);
    j["fraction_r_partite_half_width_95"] = sig10(stats.half_width);
    j["fraction_within_alpha"] = sig10(stats.fraction_within_alpha);
    j["mean_defect"] = sig10(stats.mean_defect);
    j["max_defect"] = sig10(stats.max_defect);
    j["acceptance_rate"] = sig10(stats.acceptance_rate);
    j["notes"] = {"defects come from local search and bound the true minimum from above",
                  "mixing is not proven; uniformity is only checked against exact counts at small n"};
    if (!sa.defects_path.empty()) {
        std::ostringstream csv;
        csv << "sample,defect\n";
        for (std::size_t i = 0; i < stats.defects.size(); ++i)
            csv << i << ',' << fmt10(stats.defects[i]) << '\n';
        s.emit_file(sa.defects_path, csv.str());
    }
    s.emit(j.dump(2) + "\n");
    return kOk;
}

int run_check(Session& s, const Common& c, std::ostream& err)
{
    std::ostringstream lines;
    const auto results = verify::run_acceptance(lines, err, c.threads);
    s.emit(lines.str());
    const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
    return ok ? kOk : kInvalidInput;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact and sampled computations on weighted Turan problems for digraphs", "tdl"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--threads", common.threads, "worker threads (results do not depend on it)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", common.out_path, "write the result here instead of stdout");
        sub->add_option("--manifest", common.manifest_path,
                        "run manifest path (default: <out>.manifest.json, or stderr without --out)");
    };

    PatternArgs pa;
    std::string a_text = "2", kind_text = "digraph", weights_text = "2,4", alpha_text, mode_text = "exact";
    std::string graph_text, graph_file;
    int n = 0, n_min = 0, gap_from = 0, part_r = 0;
    double gamma = 0;
    std::optional<double> eta, mu;
    std::uint64_t seed = 0x5eed;
    SampleArgs sa;

    auto* pattern = app.add_subcommand("pattern", "density parameters and condition-A verdicts of a pattern");
    pa.add(pattern, true);
    pattern->add_option("--a", weights_text, "comma-separated weights to test");
    add_common(pattern);

    auto* extremal = app.add_subcommand("extremal", "exact weighted extremal number with all maximisers");
    extremal->add_option("--n", n, "number of vertices")->required();
    pa.add(extremal, true);
    extremal->add_option("--a", a_text, "weight of a 2-cycle: integer, p/q, decimal or log2(3)");
    extremal->add_option("--kind", kind_text, "oriented or digraph");
    extremal->add_option("--gap-from", gap_from, "also scan ex_a(m) - a t_r(m) for m from this value to --n");
    add_common(extremal);

    auto* census = app.add_subcommand("census", "exact labelled counts of H-free and r-partite graphs");
    census->add_option("--n", n, "number of vertices (upper end with --n-min)")->required();
    census->add_option("--n-min", n_min, "emit one row per n from here to --n");
    pa.add(census, true);
    census->add_option("--kind", kind_text, "oriented or digraph");
    census->add_option("--alpha", alpha_text, "comma-separated near-partite thresholds");
    add_common(census);

    auto* partition = app.add_subcommand("partition", "optimal r-partition and structure report of one graph");
    partition->add_option("--graph", graph_text, "graph as 'D <n> <hex>'");
    partition->add_option("--graph-file", graph_file, "file whose first line is the graph");
    partition->add_option("--r", part_r, "number of classes")->required();
    partition->add_option("--mode", mode_text, "exact or local");
    partition->add_option("--eta", eta, "F1 tolerance (with --mu)");
    partition->add_option("--mu", mu, "F2/F3 tolerance (with --eta)");
    partition->add_option("--a", a_text, "weight used in pair densities");
    partition->add_option("--seed", seed, "local-search seed");
    add_common(partition);

    auto* stability = app.add_subcommand("stability", "deficit versus distance-to-Turan frontier");
    stability->add_option("--n", n, "number of vertices")->required();
    pa.add(stability, true);
    stability->add_option("--a", a_text, "weight of a 2-cycle");
    stability->add_option("--gamma", gamma, "admit graphs with deficit <= gamma n^2")->required();
    stability->add_option("--kind", kind_text, "oriented or digraph");
    add_common(stability);

    auto* sample = app.add_subcommand("sample", "Metropolis sampling of H-free graphs and partition defects");
    sample->add_option("--n", sa.n, "number of vertices")->required();
    pa.add(sample, false);
    sample->add_option("--kind", sa.kind, "oriented or digraph");
    sample->add_option("--burnin", sa.burn_in, "burn-in steps (default 50 n^2)");
    sample->add_option("--thin", sa.thin, "steps between samples (default n^2)");
    sample->add_option("--samples", sa.samples, "total samples over all chains");
    sample->add_option("--seed", sa.seed, "64-bit seed");
    sample->add_option("--r", sa.r, "classes for the defect (default from --pattern)");
    sample->add_option("--alpha", sa.alpha, "defect threshold as a fraction of n^2");
    sample->add_option("--chains", sa.chains, "independent chains, one RNG stream each")->check(CLI::PositiveNumber);
    sample->add_option("--defects", sa.defects_path, "write per-sample defects as CSV");
    add_common(sample);

    auto* check = app.add_subcommand("check", "run the full acceptance suite");
    add_common(check);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        for (auto* sub : app.get_subcommands())
            out << sub->help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << e.what() << '\n';
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    CLI::App* chosen = app.get_subcommands().front();
    Session session(chosen->get_name(), common, out, err);
    int code = kOk;
    try {
        if (chosen == pattern)
            code = run_pattern(session, pa, weights_text);
        else if (chosen == extremal)
            code = run_extremal(session, common, n, pa, a_text, kind_text, gap_from);
        else if (chosen == census)
            code = run_census(session, common, n, n_min, pa, kind_text, alpha_text);
        else if (chosen == partition)
            code = run_partition(session, common, graph_text, graph_file, part_r, mode_text, eta, mu, a_text, seed);
        else if (chosen == stability)
            code = run_stability(session, common, n, pa, a_text, gamma, kind_text);
        else if (chosen == sample)
            code = run_sample(session, common, sa, pa);
        else
            code = run_check(session, common, err);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        code = kBudgetExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        code = kInvalidInput;
    }
    try {
        session.finish(code);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return code;
}

}  // namespace tdl::cli
