// Command-line front end: analyze citation profiles, run the urn/pure-birth
// simulators, and fit previously emitted data files.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ysim/ysim.hpp"

namespace fs = std::filesystem;

namespace {

std::string sanitize_name(const std::string& stem) {
    std::string out;
    for (char c : stem) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')
            out.push_back(c);
        else
            out.push_back('_');
    }
    return out.empty() ? std::string("profile") : out;
}

std::string snapshot_label(double t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", t);
    return buf;
}

void write_file(const fs::path& path, const std::string& text) {
    ysim::write_text_file(path.string(), text);
}

ysim::csv_schema schema_for(const std::string& delimiter) {
    ysim::csv_schema schema;
    if (delimiter == "tab")
        schema.delimiter = '\t';
    else if (delimiter != "comma")
        throw ysim::input_error("unknown delimiter '" + delimiter + "' (expected comma|tab)");
    return schema;
}

int cmd_analyze(const std::vector<std::string>& inputs, int bins, const std::string& out_dir,
                const std::string& format, const std::string& delimiter) {
    const auto schema = schema_for(delimiter);
    fs::create_directories(out_dir);

    ysim::analysis_report report;
    std::set<std::string> used_names;

    for (const auto& input : inputs) {
        std::string name = sanitize_name(fs::path(input).stem().string());
        for (int k = 2; used_names.count(name); ++k)
            name = sanitize_name(fs::path(input).stem().string()) + "_" + std::to_string(k);
        used_names.insert(name);

        ysim::report_entry entry;
        entry.name = name;
        try {
            const auto profile = ysim::load_profile(input, schema, name);
            for (const auto& warning : ysim::validate_profile(profile))
                std::cerr << name << ": warning: " << warning << '\n';

            const auto result = ysim::analyze_profile(profile, {.bins = bins});
            entry.row = result.row;

            std::ostringstream hist;
            ysim::write_histogram_file(hist, result.points);
            write_file(fs::path(out_dir) / (name + "_histogram.csv"), hist.str());

            std::ostringstream line;
            ysim::write_fit_line_file(line, result.fit, result.points.y.front(),
                                      result.points.y.back());
            write_file(fs::path(out_dir) / (name + "_fitline.csv"), line.str());
        } catch (const ysim::error& e) {
            entry.error = e.what();
            std::cerr << name << ": error: " << e.what() << '\n';
        }
        report.entries.push_back(std::move(entry));
    }

    if (format == "machine") {
        const auto doc = ysim::report_to_json(report);
        const std::string text = doc.dump(2) + "\n";
        write_file(fs::path(out_dir) / "report.json", text);
        std::cout << text;
    } else if (format == "table") {
        const auto table = ysim::render_table(report);
        write_file(fs::path(out_dir) / "report.txt", table);
        std::cout << table;
    } else {
        throw ysim::input_error("unknown format '" + format + "' (expected table|machine)");
    }
    return report.all_succeeded() ? 0 : 1;
}

int cmd_simulate(bool urn_mode, double alpha, std::uint64_t epochs, std::uint64_t genera,
                 std::vector<double> snapshots, const std::string& arrival,
                 std::uint64_t seed, const std::string& out_dir) {
    if (urn_mode) {
        if (!(alpha > 0.0) || alpha > 1.0)
            throw ysim::input_error("simulate: --alpha must lie in (0,1]");
        if (epochs == 0) throw ysim::input_error("simulate: --epochs must be positive");

        const auto pop = ysim::run_simon({.alpha = alpha, .epochs = epochs,
                                          .initial_elements = 1, .seed = seed});
        const auto freq = pop.size_frequencies();

        fs::create_directories(out_dir);
        std::ostringstream sf;
        ysim::write_size_frequency_file(sf, freq);
        write_file(fs::path(out_dir) / "sizefreq.csv", sf.str());

        const auto n_elements = static_cast<double>(pop.sizes.size());
        std::vector<std::pair<std::uint64_t, double>> limit;
        const std::uint64_t max_size = freq.rbegin()->first;
        if (alpha < 1.0) {
            const double rho = 1.0 / (1.0 - alpha);
            for (std::uint64_t s = 1; s <= max_size; ++s)
                limit.emplace_back(s, n_elements * ysim::yule_limit_pmf(rho, s));
        } else {
            limit.emplace_back(1, n_elements);
        }
        std::ostringstream lf;
        ysim::write_size_frequency_file(lf, limit);
        write_file(fs::path(out_dir) / "limit.csv", lf.str());

        std::cout << "elements " << pop.sizes.size() << ", aggregate size "
                  << pop.aggregate_size() << ", files: sizefreq.csv limit.csv\n";
        return 0;
    }

    if (genera == 0) throw ysim::input_error("simulate: --genera must be positive");
    if (snapshots.empty()) throw ysim::input_error("simulate: --snapshots required");
    const auto model = ysim::parse_arrival_model(arrival);
    const double t_end = snapshots.back();

    // validates snapshots before anything is written
    const auto hists = ysim::simulate_genera(model, genera, t_end, snapshots, seed);

    fs::create_directories(out_dir);
    std::uint64_t max_size = 1;
    for (const auto& h : hists)
        if (!h.counts.empty()) max_size = std::max(max_size, h.counts.rbegin()->first);

    for (const auto& h : hists) {
        std::ostringstream sf;
        ysim::write_size_frequency_file(sf, h.counts);
        write_file(fs::path(out_dir) / ("sizefreq_t" + snapshot_label(h.t) + ".csv"),
                   sf.str());
    }

    std::vector<std::pair<std::uint64_t, double>> limit;
    for (std::uint64_t s = 1; s <= max_size; ++s)
        limit.emplace_back(s, static_cast<double>(genera) * ysim::yule_limit_pmf(1.0, s));
    std::ostringstream lf;
    ysim::write_size_frequency_file(lf, limit);
    write_file(fs::path(out_dir) / "limit.csv", lf.str());

    std::cout << hists.size() << " snapshot files plus limit.csv written to " << out_dir
              << "\n";
    return 0;
}

int cmd_fit(const std::string& input, const std::string& out_dir) {
    const auto text = ysim::read_text_file(input);
    const auto xy = ysim::read_fit_input(text);
    const auto fit = ysim::ols_fit(xy.x, xy.y);

    char buf[160];
    std::snprintf(buf, sizeof(buf), "slope = %.6g\nintercept = %.6g\n", fit.slope,
                  fit.intercept);
    std::cout << buf;
    if (std::isinf(fit.f_stat))
        std::snprintf(buf, sizeof(buf), "R2 = %.4f\nF = inf\n", fit.r_squared);
    else
        std::snprintf(buf, sizeof(buf), "R2 = %.4f\nF = %.2f\n", fit.r_squared, fit.f_stat);
    std::cout << buf;
    std::cout << "significance = " << ysim::to_string(fit.level) << "\n";
    std::cout << "n = " << fit.n << ", df = " << fit.df << "\n";

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        double y_min = xy.y.front(), y_max = xy.y.front();
        for (double v : xy.y) {
            y_min = std::min(y_min, v);
            y_max = std::max(y_max, v);
        }
        std::ostringstream line;
        ysim::write_fit_line_file(line, fit, y_min, y_max);
        const auto stem = sanitize_name(fs::path(input).stem().string());
        write_file(fs::path(out_dir) / (stem + "_fitline.csv"), line.str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Yule-Simon process simulation and citation-impact analysis"};
    app.set_config("--config", "", "read options from an INI file (flags win)");
    app.require_subcommand(1);
    app.fallthrough();

    auto* analyze = app.add_subcommand("analyze", "run the impact pipeline over profiles");
    std::vector<std::string> inputs;
    int bins = 25;
    std::string out_dir = ".";
    std::string format = "table";
    std::string delimiter = "comma";
    analyze->add_option("--input", inputs, "profile CSV files")->required();
    analyze->add_option("--bins", bins, "bin count")->check(CLI::Range(2, 10000));
    analyze->add_option("--out", out_dir, "output directory");
    analyze->add_option("--format", format, "report format: table|machine");
    analyze->add_option("--delimiter", delimiter, "input delimiter: comma|tab");

    auto* simulate = app.add_subcommand("simulate", "run the urn or genus simulators");
    double alpha = 0.0;
    std::uint64_t epochs = 0;
    std::uint64_t genera = 0;
    std::vector<double> snapshots;
    std::string arrival = "cohort";
    std::uint64_t seed = 0;
    std::string sim_out = ".";
    auto* alpha_opt = simulate->add_option("--alpha", alpha, "new-element probability");
    auto* epochs_opt = simulate->add_option("--epochs", epochs, "urn epochs");
    auto* genera_opt = simulate->add_option("--genera", genera, "number of genera");
    simulate->add_option("--snapshots", snapshots, "snapshot times, doubling periods");
    simulate->add_option("--arrival", arrival, "genus arrival model: cohort|stream");
    simulate->add_option("--seed", seed, "random seed");
    simulate->add_option("--out", sim_out, "output directory");

    auto* fit = app.add_subcommand("fit", "fit an emitted histogram or (x,y) file");
    std::string fit_input;
    std::string fit_out;
    fit->add_option("--input", fit_input, "histogram or xy file")->required();
    fit->add_option("--out", fit_out, "directory for the fit-line file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(inputs, bins, out_dir, format, delimiter);
        if (simulate->parsed()) {
            const bool urn_mode = alpha_opt->count() > 0 || epochs_opt->count() > 0;
            if (urn_mode && genera_opt->count() > 0)
                throw ysim::input_error(
                    "simulate: choose either --alpha/--epochs or --genera/--snapshots");
            if (!urn_mode && genera_opt->count() == 0)
                throw ysim::input_error(
                    "simulate: need --alpha/--epochs (urn) or --genera/--snapshots (genera)");
            return cmd_simulate(urn_mode, alpha, epochs, genera, snapshots, arrival, seed,
                                sim_out);
        }
        if (fit->parsed()) return cmd_fit(fit_input, fit_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
