// qrayleigh: figure datasets, Onsager sweeps and the invariant suite
//
//   qrayleigh <figure|sweep|checks> --config <path> [--out <path>] [--seed <u64>] [--units nats|bits]
//
// Exit codes: 0 ok, 1 check failure, 2 config error, 3 numerical error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "qrayleigh/checks.hpp"
#include "qrayleigh/config.hpp"
#include "qrayleigh/csv.hpp"
#include "qrayleigh/errors.hpp"
#include "qrayleigh/experiments.hpp"

namespace {

enum Exit { kOk = 0, kCheckFailure = 1, kConfigError = 2, kNumericalError = 3 };

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

int run(const std::string& command, const std::string& config_path, const std::string& out_flag,
        const std::string& seed_flag, const std::string& units_flag) {
    using namespace qrayleigh;

    auto doc = config::Document::load(config_path);
    if (!doc.has("", "experiment") && command != "figure") {
        config::Value v;
        v.type = config::Value::Type::String;
        v.text = command;
        doc.set("", "experiment", v);
    }
    auto rc = config::run_config_from(std::move(doc));
    const bool is_figure = rc.experiment.rfind("fig", 0) == 0 || rc.experiment == "onsager";
    if ((command == "figure" && !is_figure) || (command != "figure" && rc.experiment != command))
        throw config::ConfigError("experiment '" + rc.experiment + "' cannot run under '" + command + "'");
    if (!seed_flag.empty()) {
        config::Value v;
        v.text = seed_flag;
        config::Document seed_doc;
        seed_doc.set("", "seed", v);
        rc.seed = seed_doc.unsigned64("", "seed", rc.seed);
    }
    if (!units_flag.empty()) rc.units = measures::parse_log_unit(units_flag);
    const std::string out = out_flag.empty() ? rc.out : out_flag;

    if (command == "checks") {
        const auto options = checks::read_suite_options(rc);
        const auto unused = rc.doc.unused_keys();
        if (!unused.empty()) throw config::ConfigError("unknown config key: " + unused.front());
        const auto results = checks::invariant_suite(options);
        bool all = true;
        for (const auto& r : results) {
            all = all && r.passed;
            std::cerr << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        }
        emit(out, checks::json_report(results, rc.seed) + "\n");
        return all ? kOk : kCheckFailure;
    }

    const auto result = experiments::run(rc);
    std::ostringstream csv_text;
    csv::write(csv_text, result.table);
    emit(out, csv_text.str());
    for (const auto& note : result.notes) std::cerr << note << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collision-model heat and coherence transport"};
    app.require_subcommand(1);
    std::string config_path, out, seed, units;
    for (const char* name : {"figure", "sweep", "checks"}) {
        auto* sub = app.add_subcommand(name, std::string("run a ") + name + " configuration");
        sub->add_option("--config", config_path, "config file")->required();
        sub->add_option("--out", out, "output path (stdout if omitted)");
        sub->add_option("--seed", seed, "master seed (u64)");
        sub->add_option("--units", units, "log unit for entropic measures")
            ->check(CLI::IsMember({"nats", "bits"}));
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, config_path, out, seed, units);
    } catch (const qrayleigh::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kNumericalError;
    } catch (const qrayleigh::config::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumericalError;
    }
}
