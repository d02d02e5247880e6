#include <doctest.h>

#include <random>

#include "mecsim/kernel/sim.hpp"
#include "mecsim/mechost/mec_host.hpp"

using namespace mecsim;
using nlohmann::json;

namespace {

AppDescriptor makeDescriptor(std::string appDId, int64_t cpu = 1500) {
    AppDescriptor d;
    d.appDId = std::move(appDId);
    d.appName = "app";
    d.appProvider = "lab";
    d.virtualComputeDescriptor = {10000000, 10000000, cpu};
    return d;
}

ResourceVector sumAllocated(const Vim& vim) {
    ResourceVector total;
    for (const auto& [id, entry] : vim.mecApps())
        total = total + entry.allocated;
    return total;
}

} // namespace

TEST_CASE("vim admission and release keep the conservation invariant") {
    Vim vim({32000000, 32000000, 3000}, SharingParadigm::Segregation);
    auto& e1 = vim.registerApp("a1", "h", {"10.0.1.1", 4001}, {10000000, 10000000, 1500});
    CHECK(e1.allocated.cpu == 1500);
    CHECK(vim.free().cpu == 1500);
    CHECK(vim.free() + sumAllocated(vim) == vim.budget());

    vim.registerApp("a2", "h", {"10.0.1.1", 4002}, {10000000, 10000000, 1500});
    CHECK(vim.free().cpu == 0);
    CHECK(vim.free() + sumAllocated(vim) == vim.budget());

    CHECK_THROWS_AS(
        vim.registerApp("a3", "h", {"10.0.1.1", 4003}, {1, 1, 1}),
        InsufficientResourcesError);

    vim.deregisterApp("a1", nullptr);
    CHECK(vim.free().cpu == 1500);
    CHECK(vim.free() + sumAllocated(vim) == vim.budget());
}

TEST_CASE("vim admission is randomly exercised without leaking resources") {
    std::mt19937_64 rng(17);
    Vim vim({1000, 1000, 1000}, SharingParadigm::FairSharing);
    std::vector<std::string> live;
    int next = 0;
    for (int step = 0; step < 2000; ++step) {
        if (live.empty() || rng() % 2 == 0) {
            ResourceVector demand{int64_t(rng() % 300), int64_t(rng() % 300),
                                  int64_t(1 + rng() % 300)};
            std::string id = "app-" + std::to_string(next++);
            if (resourceFits(demand, vim.free())) {
                vim.registerApp(id, "h", {"a", 1}, demand);
                live.push_back(id);
            } else {
                CHECK_THROWS_AS(vim.registerApp(id, "h", {"a", 1}, demand),
                                InsufficientResourcesError);
            }
        } else {
            size_t k = rng() % live.size();
            vim.deregisterApp(live[k], nullptr);
            live.erase(live.begin() + k);
        }
        CHECK(vim.free() + sumAllocated(vim) == vim.budget());
    }
}

TEST_CASE("segregation processing time is n over the allocated rate") {
    Vim vim({32000000, 32000000, 3000}, SharingParadigm::Segregation);
    vim.registerApp("a1", "h", {"a", 1}, {1, 1, 1500});
    CHECK(vim.computeProcessingTime("a1", 1500) == doctest::Approx(1.0).epsilon(1e-12));

    // independence: a second app does not change the first one's delay
    vim.registerApp("a2", "h", {"a", 2}, {1, 1, 1500});
    CHECK(vim.computeProcessingTime("a1", 1500) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fair sharing redistributes idle capacity") {
    Vim vim({32000000, 32000000, 3000}, SharingParadigm::FairSharing);
    vim.registerApp("a1", "h", {"a", 1}, {1, 1, 1500});

    // alone, the app gets the full 3000 instr/s: more than it stipulated
    CHECK(vim.computeProcessingTime("a1", 1500) == doctest::Approx(0.5).epsilon(1e-12));

    vim.registerApp("a2", "h", {"a", 2}, {1, 1, 1500});
    CHECK(vim.computeProcessingTime("a1", 1500) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(vim.computeProcessingTime("a2", 1500) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("processing-time formulas hold on random instances") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int64_t> rate(1, 1000);
    for (int i = 0; i < 1000; ++i) {
        int64_t c = 10000;
        Vim seg({1 << 30, 1 << 30, c}, SharingParadigm::Segregation);
        Vim fair({1 << 30, 1 << 30, c}, SharingParadigm::FairSharing);
        int apps = 1 + int(rng() % 5);
        std::vector<int64_t> rates;
        int64_t total = 0;
        for (int a = 0; a < apps; ++a) {
            int64_t r = rate(rng);
            if (total + r > c)
                break;
            total += r;
            rates.push_back(r);
            std::string id = "a" + std::to_string(a);
            seg.registerApp(id, "h", {"a", 1}, {0, 0, r});
            fair.registerApp(id, "h", {"a", 1}, {0, 0, r});
        }
        int64_t n = 1 + int64_t(rng() % 100000);
        for (size_t a = 0; a < rates.size(); ++a) {
            std::string id = "a" + std::to_string(a);
            double expectedSeg = double(n) / double(rates[a]);
            double expectedFair =
                double(n) * double(total) / (double(c) * double(rates[a]));
            CHECK(std::abs(seg.computeProcessingTime(id, n) - expectedSeg) <=
                  1e-9 * expectedSeg);
            CHECK(std::abs(fair.computeProcessingTime(id, n) - expectedFair) <=
                  1e-9 * expectedFair);
        }
    }
}

TEST_CASE("paradigms agree when requested rates sum to capacity") {
    Vim seg({1, 1, 3000}, SharingParadigm::Segregation);
    Vim fair({1, 1, 3000}, SharingParadigm::FairSharing);
    for (auto [id, r] : {std::pair{"a1", 1000}, {"a2", 2000}}) {
        seg.registerApp(id, "h", {"a", 1}, {0, 0, r});
        fair.registerApp(id, "h", {"a", 1}, {0, 0, r});
    }
    for (auto id : {"a1", "a2"})
        CHECK(seg.computeProcessingTime(id, 7777) ==
              fair.computeProcessingTime(id, 7777));
}

TEST_CASE("fair-sharing effective rates conserve capacity") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        int64_t c = 5000;
        Vim vim({1, 1, c}, SharingParadigm::FairSharing);
        std::vector<int64_t> rates;
        int64_t total = 0;
        int apps = 1 + int(rng() % 6);
        for (int a = 0; a < apps; ++a) {
            int64_t r = 1 + int64_t(rng() % 900);
            if (total + r > c)
                break;
            total += r;
            rates.push_back(r);
            vim.registerApp("a" + std::to_string(a), "h", {"a", 1}, {0, 0, r});
        }
        // effective rate of app a = n / t(a, n); the sum must equal C
        double sum = 0;
        const int64_t n = 123456;
        for (size_t a = 0; a < rates.size(); ++a)
            sum += double(n) / vim.computeProcessingTime("a" + std::to_string(a), n);
        CHECK(sum == doctest::Approx(double(c)).epsilon(1e-9));
    }
}

TEST_CASE("computeProcessingTime rejections") {
    Vim vim({1, 1, 3000}, SharingParadigm::Segregation);
    CHECK_THROWS_AS(vim.computeProcessingTime("ghost", 100), UnknownAppError);
    vim.registerApp("a1", "h", {"a", 1}, {0, 0, 1500});
    CHECK_THROWS_AS(vim.computeProcessingTime("a1", 0), BadValueError);
    CHECK_THROWS_AS(vim.computeProcessingTime("a1", -5), BadValueError);

    Vim zero(ResourceVector{1, 1, 3000}, SharingParadigm::Segregation);
    zero.registerApp("z", "h", {"a", 1}, {0, 0, 0});
    CHECK_THROWS_AS(zero.computeProcessingTime("z", 100), ZeroRateError);
}

TEST_CASE("service registry answers Mp1 discovery") {
    Simulator sim;
    MecHost host(sim, "mecHost1", "10.0.1.1", {32000000, 32000000, 3000},
                 SharingParadigm::Segregation);
    host.registry().addService(
        {"LocationService", "loc-1", {"10.0.1.1", kLocationServicePort}});

    HttpRequest req{"GET", "/mec_service_mgmt/v1/services",
                    {{"ser_name", "LocationService"}}, ""};
    bool unsupported = false;
    auto resp = host.registry().handleRaw(
        sim, "GET /mec_service_mgmt/v1/services?ser_name=LocationService HTTP/1.1\r\n\r\n");
    CHECK(resp.status == 200);
    auto doc = json::parse(resp.body);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["serName"] == "LocationService");
    CHECK(doc[0]["state"] == "ACTIVE");
    CHECK(doc[0]["transportInfo"]["endpoint"]["port"] == kLocationServicePort);

    // filter mismatch: empty array, still 200
    auto miss = host.registry().handleRaw(
        sim, "GET /mec_service_mgmt/v1/services?ser_name=Nope HTTP/1.1\r\n\r\n");
    CHECK(miss.status == 200);
    CHECK(json::parse(miss.body).empty());

    // unknown path
    auto bad = host.registry().handleRaw(sim, "GET /elsewhere HTTP/1.1\r\n\r\n");
    CHECK(bad.status == 404);

    // malformed and unsupported raw requests
    CHECK(host.registry().handleRaw(sim, "garbage").status == 400);
    CHECK(host.registry().handleRaw(sim, "PATCH /x HTTP/1.1\r\n\r\n").status == 501);
    (void)req;
    (void)unsupported;
}

TEST_CASE("host instantiates and terminates apps with port assignment") {
    Simulator sim;
    MecHost host(sim, "mecHost1", "10.0.1.1", {32000000, 32000000, 3000},
                 SharingParadigm::Segregation);
    sim.addNode(&host);

    MecAppFactory factory = [](const AppDescriptor&) {
        return std::make_unique<MecAppBase>();
    };
    auto e1 = host.instantiateApp(makeDescriptor("D1"), "app-1", factory);
    auto e2 = host.instantiateApp(makeDescriptor("D2"), "app-2", factory);
    CHECK(e1.endpoint.address == "10.0.1.1");
    CHECK(e1.endpoint.port == 4001);
    CHECK(e2.endpoint.port == 4002);
    CHECK(host.vim().mecApps().size() == 2);
    CHECK(host.vim().free().cpu == 0);

    host.terminateApp("app-1");
    CHECK(host.vim().mecApps().size() == 1);
    CHECK(host.vim().free().cpu == 1500);
}

TEST_CASE("executeInstructions completes after the modeled delay") {
    Simulator sim;
    MecHost host(sim, "mecHost1", "10.0.1.1", {32000000, 32000000, 3000},
                 SharingParadigm::Segregation);
    sim.addNode(&host);
    MecAppFactory factory = [](const AppDescriptor&) {
        return std::make_unique<MecAppBase>();
    };
    host.instantiateApp(makeDescriptor("D1"), "app-1", factory);

    double doneAt = -1;
    host.executeInstructions("app-1", 1500, [&] { doneAt = sim.now(); });
    sim.runAll();
    CHECK(doneAt == doctest::Approx(1.0));
}

TEST_CASE("terminating an app cancels its pending compute jobs") {
    Simulator sim;
    MecHost host(sim, "mecHost1", "10.0.1.1", {32000000, 32000000, 3000},
                 SharingParadigm::Segregation);
    sim.addNode(&host);
    MecAppFactory factory = [](const AppDescriptor&) {
        return std::make_unique<MecAppBase>();
    };
    host.instantiateApp(makeDescriptor("D1"), "app-1", factory);

    bool completed = false;
    host.executeInstructions("app-1", 1500, [&] { completed = true; });
    sim.scheduleAt(0.5, [&] { host.terminateApp("app-1"); });
    sim.runAll();
    CHECK_FALSE(completed);
}

TEST_CASE("service requests queue FIFO across clients") {
    // two requests arriving at the same instant answer in arrival order
    Simulator sim;
    MecHost host(sim, "mecHost1", "10.0.1.1", {1, 1, 1},
                 SharingParadigm::Segregation);
    sim.addNode(&host);
    host.registry().addService({"S", "s-1", {"10.0.1.1", 1}});

    std::vector<std::string> replies;
    class Sink : public Node {
    public:
        Sink(NodeId id, std::vector<std::string>& out) : Node(std::move(id)), out_(out) {}
        void onMessage(Simulator&, const Message& msg) override {
            out_.push_back(msg.data.value("requestId", ""));
        }
        std::vector<std::string>& out_;
    } sink("client", replies);
    sim.addNode(&sink);
    sim.transport().addLink({"client", "mecHost1", 0.001});
    sim.transport().bindAddress("10.0.0.9", "client");
    sim.transport().bindAddress("10.0.1.1", "mecHost1");

    for (int i = 0; i < 3; ++i) {
        Message req{"http.request",
                    {{"method", "GET"},
                     {"target", "/mec_service_mgmt/v1/services"},
                     {"requestId", "r" + std::to_string(i)}}};
        req.src = {"10.0.0.9", uint16_t(5000 + i)};
        req.dst = {"10.0.1.1", kRegistryPort};
        sim.sendDatagram("client", req);
    }
    sim.runAll();
    CHECK(replies == std::vector<std::string>{"r0", "r1", "r2"});
    CHECK(host.registry().processedRequests() == 3);
}
