// Command-line front end: experiment runner, metric comparison, stability
// analysis, manifest validation and a micro-benchmark.
//
// Exit codes: 0 success, 1 validation failure, 2 usage/config/IO error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdnn/hdnn.hpp"

namespace {

struct CommonOpts {
    std::string config;
    std::string manifest = "data/manifest.txt";
    std::string datasets = "all";
    std::string metric = "hassanat";
    int runs = 10;
    double test_fraction = 0.3;
    std::uint64_t seed = 42;
    std::string normalize = "none";
    bool extended = false;
    std::string format = "md";
    std::string out;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_metric = true) {
    cmd->add_option("--manifest", o.manifest, "Dataset manifest file")
        ->capture_default_str();
    cmd->add_option("--datasets", o.datasets,
                    "Comma-separated dataset names, or 'all'")
        ->capture_default_str();
    if (with_metric)
        cmd->add_option("--metric", o.metric, "hassanat|manhattan|euclidean")
            ->capture_default_str();
    cmd->add_option("--runs", o.runs, "Number of repeated splits")
        ->capture_default_str();
    cmd->add_option("--test-fraction", o.test_fraction,
                    "Fraction of examples held out for testing")
        ->capture_default_str();
    cmd->add_option("--seed", o.seed, "Base seed; run r uses seed+r")
        ->capture_default_str();
    cmd->add_option("--normalize", o.normalize, "none|train|all")
        ->capture_default_str();
    cmd->add_flag("--extended", o.extended,
                  "Include datasets with more than 1500 examples");
    cmd->add_option("--format", o.format, "md|csv")->capture_default_str();
    cmd->add_option("--out", o.out, "Write table as CSV to this path");
    cmd->add_option("--threads", o.threads, "Worker threads for classification")
        ->capture_default_str();
    cmd->add_option("--config", o.config, "Key-value config file; flags override it");
}

// Applies "key = value" lines from a config file to every option the user
// did not pass explicitly. '#' starts a comment line.
void apply_config_file(CLI::App* cmd, CommonOpts& o) {
    if (o.config.empty()) return;
    std::ifstream f(o.config);
    if (!f) throw hdnn::IoError("cannot open config file '" + o.config + "'");

    auto overridden = [&](const std::string& flag) {
        const auto* opt = cmd->get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    };
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw hdnn::FormatError("config '" + o.config + "' line " +
                                    std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));

        if (key == "manifest") { if (!overridden("--manifest")) o.manifest = value; }
        else if (key == "datasets") { if (!overridden("--datasets")) o.datasets = value; }
        else if (key == "metric") { if (!overridden("--metric")) o.metric = value; }
        else if (key == "runs") { if (!overridden("--runs")) o.runs = std::stoi(value); }
        else if (key == "test-fraction") {
            if (!overridden("--test-fraction")) o.test_fraction = std::stod(value);
        }
        else if (key == "seed") { if (!overridden("--seed")) o.seed = std::stoull(value); }
        else if (key == "normalize") { if (!overridden("--normalize")) o.normalize = value; }
        else if (key == "extended") {
            if (!overridden("--extended")) o.extended = (value == "true" || value == "1");
        }
        else if (key == "format") { if (!overridden("--format")) o.format = value; }
        else if (key == "out") { if (!overridden("--out")) o.out = value; }
        else if (key == "threads") { if (!overridden("--threads")) o.threads = std::stoi(value); }
        else
            throw hdnn::FormatError("config '" + o.config + "': unknown key '" + key + "'");
    }
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// Loads the manifest plus every requested dataset. File paths in the
// manifest are relative to the manifest itself.
std::map<std::string, hdnn::Dataset> load_datasets(
    const CommonOpts& o, std::vector<std::string>& names) {
    const auto entries = hdnn::load_manifest(o.manifest);
    const auto base = std::filesystem::path(o.manifest).parent_path();

    std::map<std::string, hdnn::ManifestEntry> by_name;
    for (const auto& e : entries) by_name[e.name] = e;

    if (o.datasets == "all") {
        names.clear();
        for (const auto& e : entries)
            if (o.extended || e.expected_examples <= 1500)
                names.push_back(e.name);
    } else {
        names = split_names(o.datasets);
    }

    std::map<std::string, hdnn::Dataset> loaded;
    for (const auto& name : names) {
        const auto it = by_name.find(name);
        if (it == by_name.end())
            throw hdnn::InvalidInput("dataset '" + name + "' is not in the manifest");
        const auto& e = it->second;
        const auto path = (base / e.file).string();
        loaded[name] = hdnn::load_csv(path, e.label_column, e.has_header, e.name);
    }
    return loaded;
}

hdnn::ExperimentConfig make_config(const CommonOpts& o,
                                   const std::vector<std::string>& names) {
    hdnn::ExperimentConfig cfg;
    cfg.datasets = names;
    cfg.metric = hdnn::parse_metric(o.metric);
    cfg.runs = o.runs;
    cfg.test_fraction = o.test_fraction;
    cfg.base_seed = o.seed;
    cfg.normalization = hdnn::parse_normalization(o.normalize);
    cfg.threads = o.threads;
    return cfg;
}

int emit(const hdnn::Table& table, const CommonOpts& o) {
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw hdnn::IoError("cannot write '" + o.out + "'");
        f << hdnn::to_csv(table);
        return 0;
    }
    if (o.format == "csv")
        std::cout << hdnn::to_csv(table);
    else if (o.format == "md")
        std::cout << hdnn::to_markdown(table);
    else
        throw hdnn::InvalidInput("unknown format '" + o.format + "' (expected md|csv)");
    return 0;
}

int cmd_run(const CommonOpts& o) {
    std::vector<std::string> names;
    const auto datasets = load_datasets(o, names);
    const auto table = hdnn::run_experiment(make_config(o, names), datasets);
    return emit(table, o);
}

int cmd_compare(const CommonOpts& o, const std::string& baseline,
                const std::string& treatment) {
    std::vector<std::string> names;
    const auto datasets = load_datasets(o, names);
    auto cfg = make_config(o, names);
    cfg.metric = hdnn::parse_metric(baseline);
    const auto base_table = hdnn::run_experiment(cfg, datasets);
    cfg.metric = hdnn::parse_metric(treatment);
    const auto treat_table = hdnn::run_experiment(cfg, datasets);
    return emit(hdnn::delta_table(base_table, treat_table), o);
}

int cmd_stability(const std::string& input, bool round_first,
                  const CommonOpts& o) {
    std::ifstream f(input);
    if (!f) throw hdnn::IoError("cannot open '" + input + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    const auto acc = hdnn::parse_table_csv(buf.str());
    return emit(hdnn::stability_table(acc, round_first), o);
}

int cmd_validate(const std::string& manifest_path) {
    const auto entries = hdnn::load_manifest(manifest_path);
    const auto base = std::filesystem::path(manifest_path).parent_path();
    bool all_pass = true;
    for (const auto& e : entries) {
        const auto path = (base / e.file).string();
        try {
            const auto ds = hdnn::load_csv(path, e.label_column, e.has_header, e.name);
            const auto report = hdnn::validate(ds, e);
            if (report.passed()) {
                std::cout << e.name << ": PASS\n";
            } else {
                std::cout << e.name << ": FAIL (" << report.summary() << ")\n";
                all_pass = false;
            }
        } catch (const std::exception& ex) {
            std::cout << e.name << ": FAIL (" << ex.what() << ")\n";
            all_pass = false;
        }
    }
    return all_pass ? 0 : 1;
}

std::uint64_t fnv1a(const hdnn::RankedNeighbors& ranked) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& r : ranked) {
        auto mix = [&](std::uint64_t v) {
            for (int b = 0; b < 8; ++b) {
                h ^= (v >> (8 * b)) & 0xff;
                h *= 1099511628211ULL;
            }
        };
        mix(static_cast<std::uint64_t>(r.train_index));
    }
    return h;
}

int cmd_bench(std::size_t n, std::size_t m, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    std::mt19937_64 rng(seed);
    auto uniform = [&] { return static_cast<double>(rng() % 2000001) / 1000.0 - 1000.0; };

    constexpr int kRepeats = 9;
    constexpr std::size_t kCalls = 1000000;
    std::vector<double> kernel_ms;
    volatile double sink = 0.0;
    for (int rep = 0; rep < kRepeats; ++rep) {
        std::vector<double> xs(1024), ys(1024);
        for (auto& v : xs) v = uniform();
        for (auto& v : ys) v = uniform();
        const auto t0 = clock::now();
        double acc = 0.0;
        for (std::size_t i = 0; i < kCalls; ++i)
            acc += hdnn::hassanat_component(xs[i & 1023], ys[(i * 7) & 1023]);
        sink = sink + acc;
        kernel_ms.push_back(std::chrono::duration<double, std::milli>(clock::now() - t0).count());
    }

    hdnn::Dataset train;
    train.name = "bench";
    train.feature_count = m;
    train.label_names = {"a", "b"};
    for (std::size_t i = 0; i < n; ++i) {
        hdnn::FeatureVector fv(m);
        for (auto& v : fv) v = uniform();
        train.features.push_back(std::move(fv));
        train.labels.push_back(static_cast<int>(i % 2));
    }
    hdnn::FeatureVector query(m);
    for (auto& v : query) v = uniform();

    std::vector<double> rank_ms;
    std::uint64_t order_hash = 0;
    for (int rep = 0; rep < kRepeats; ++rep) {
        const auto t0 = clock::now();
        const auto ranked = hdnn::rank_neighbors(train, query, hdnn::Metric::Hassanat);
        rank_ms.push_back(std::chrono::duration<double, std::milli>(clock::now() - t0).count());
        order_hash = fnv1a(ranked);
    }

    auto report = [](const char* what, std::vector<double> ms) {
        std::sort(ms.begin(), ms.end());
        double mean = 0.0;
        for (double v : ms) mean += v;
        mean /= static_cast<double>(ms.size());
        const double p95 = ms[std::min(ms.size() - 1,
                                       static_cast<std::size_t>(ms.size() * 95 / 100))];
        std::cout << what << ": mean " << mean << " ms, p95 " << p95 << " ms\n";
    };
    report("hassanat_component x 1e6", kernel_ms);
    report("rank_neighbors (full ranking)", rank_ms);
    std::cout << "ranking order hash: " << std::hex << order_hash << std::dec << "\n";
    (void)sink;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nearest-neighbour classification benchmark harness"};
    app.require_subcommand(1);

    CommonOpts run_opts;
    auto* run = app.add_subcommand("run", "Run an accuracy experiment");
    add_common(run, run_opts);

    CommonOpts cmp_opts;
    std::string baseline = "manhattan", treatment = "hassanat";
    auto* compare = app.add_subcommand(
        "compare", "Accuracy delta of treatment metric over baseline");
    add_common(compare, cmp_opts, /*with_metric=*/false);
    compare->add_option("--baseline", baseline, "Baseline metric")
        ->capture_default_str();
    compare->add_option("--treatment", treatment, "Treatment metric")
        ->capture_default_str();

    CommonOpts stab_opts;
    std::string stab_input;
    bool round_first = false;
    auto* stability = app.add_subcommand(
        "stability", "Deviation-from-best analysis of an accuracy table");
    stability->add_option("table", stab_input, "Accuracy table CSV")->required();
    stability->add_flag("--round-first", round_first,
                        "Round accuracies to 2 decimals before analysis");
    stability->add_option("--format", stab_opts.format, "md|csv")
        ->capture_default_str();
    stability->add_option("--out", stab_opts.out, "Write result as CSV to this path");

    std::string validate_manifest = "data/manifest.txt";
    auto* validate = app.add_subcommand("validate", "Validate datasets against the manifest");
    validate->add_option("--manifest", validate_manifest, "Dataset manifest file")
        ->capture_default_str();

    std::size_t bench_n = 1000, bench_m = 16;
    std::uint64_t bench_seed = 42;
    auto* bench = app.add_subcommand("bench", "Time the distance kernel and ranking");
    bench->add_option("--n", bench_n, "Training set size")->capture_default_str();
    bench->add_option("--m", bench_m, "Feature dimension")->capture_default_str();
    bench->add_option("--seed", bench_seed, "Data seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) {
            apply_config_file(run, run_opts);
            return cmd_run(run_opts);
        }
        if (compare->parsed()) {
            apply_config_file(compare, cmp_opts);
            return cmd_compare(cmp_opts, baseline, treatment);
        }
        if (stability->parsed()) return cmd_stability(stab_input, round_first, stab_opts);
        if (validate->parsed()) return cmd_validate(validate_manifest);
        if (bench->parsed()) {
            if (bench_n < 1 || bench_m < 1) {
                std::cerr << "error: --n and --m must be >= 1\n";
                return 2;
            }
            return cmd_bench(bench_n, bench_m, bench_seed);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
