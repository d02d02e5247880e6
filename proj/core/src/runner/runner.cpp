#include "mecsim/runner/runner.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mecsim/runner/world.hpp"

namespace mecsim {

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in.is_open())
        throw BadValueError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string parentDir(const std::string& path) {
    return std::filesystem::path(path).parent_path().string();
}

} // namespace

RunSummary runScenario(const std::string& scenarioPath, const RunOptions& options) {
    ScenarioConfig config = parseScenario(readFile(scenarioPath));
    if (options.seed)
        config.seed = *options.seed;
    if (config.declaresExternalTraffic() && options.mode == ClockMode::Virtual)
        throw ModeMismatchError(
            "scenario declares bridges; run with --mode realtime");

    EventLog log;
    if (!options.logPath.empty())
        log.openFile(options.logPath);

    World world(config, options.mode, parentDir(scenarioPath), &log);
    world.start(options.until);
    world.sim().run(options.until);
    log.close();

    return summarizeRecords(log.records());
}

std::vector<Diagnostic> validateScenario(const std::string& scenarioPath) {
    std::vector<Diagnostic> diags;

    std::string text;
    try {
        text = readFile(scenarioPath);
    } catch (const SimError& e) {
        diags.push_back({"file", e.what()});
        return diags;
    }

    ScenarioConfig config;
    try {
        config = parseScenario(text);
    } catch (const SimError& e) {
        diags.push_back({e.code(), e.what()});
        return diags;
    }

    for (const auto& host : config.hosts)
        for (const auto& serName : host.services)
            if (serName != "LocationService" && serName != "RNIService")
                diags.push_back({"hosts." + host.name,
                                 "unknown platform service: " + serName});

    std::string baseDir = parentDir(scenarioPath);
    std::vector<std::string> onboardedNames;
    for (const auto& path : config.orchestrator.onboardedPackages) {
        std::string resolved =
            (!path.empty() && path.front() != '/' && !baseDir.empty())
                ? baseDir + "/" + path
                : path;
        try {
            onboardedNames.push_back(
                parseAppDescriptor(readFile(resolved)).appName);
        } catch (const SimError& e) {
            diags.push_back({"orchestrator.onboardedPackages", e.what()});
        }
    }

    for (const auto& ue : config.ues)
        for (const auto& app : ue.apps) {
            if (app.appPackageSource)
                continue;
            bool known = false;
            for (const auto& name : onboardedNames)
                if (name == app.appName)
                    known = true;
            if (!known)
                diags.push_back({"ues." + ue.name,
                                 "app '" + app.appName +
                                     "' is neither onboarded nor loadable "
                                     "from appPackageSource"});
        }

    return diags;
}

} // namespace mecsim
