// Scenario runner CLI: run a scenario in virtual or realtime mode, validate a
// scenario file, or recompute a summary from a JSONL event log.

#include <iostream>

#include <CLI11.hpp>

#include "mecsim/runner/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"mecsim - MEC system simulator"};
    app.require_subcommand(1);

    // run
    std::string scenarioPath;
    std::string mode = "virtual";
    double until = 60.0;
    std::optional<uint64_t> seed;
    std::string logPath;
    auto* run = app.add_subcommand("run", "Execute a scenario");
    run->add_option("scenario", scenarioPath, "Scenario JSON file")->required();
    run->add_option("--mode", mode, "virtual|realtime")
        ->check(CLI::IsMember({"virtual", "realtime"}));
    run->add_option("--until", until, "Virtual-time horizon in seconds");
    run->add_option("--seed", seed, "Seed override");
    run->add_option("--log", logPath, "JSONL event log output path");

    // validate
    std::string validatePath;
    auto* validate = app.add_subcommand("validate", "Check a scenario file");
    validate->add_option("scenario", validatePath, "Scenario JSON file")->required();

    // summarize
    std::string summaryLogPath;
    auto* summarize = app.add_subcommand("summarize", "Recompute a run summary from a log");
    summarize->add_option("log", summaryLogPath, "JSONL event log")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            mecsim::RunOptions options;
            options.mode = (mode == "realtime") ? mecsim::ClockMode::Realtime
                                                : mecsim::ClockMode::Virtual;
            options.until = until;
            options.seed = seed;
            options.logPath = logPath;
            auto summary = mecsim::runScenario(scenarioPath, options);
            std::cout << summary.toJson().dump(2) << "\n";
        } else if (validate->parsed()) {
            auto diags = mecsim::validateScenario(validatePath);
            for (const auto& d : diags)
                std::cerr << d.location << ": " << d.message << "\n";
            if (!diags.empty())
                return 1;
            std::cout << "ok\n";
        } else if (summarize->parsed()) {
            auto summary = mecsim::summarizeLog(summaryLogPath);
            std::cout << summary.toJson().dump(2) << "\n";
        }
    } catch (const mecsim::SimError& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
