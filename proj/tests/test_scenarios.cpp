#include <doctest.h>

#include <set>

#include "sinrgame/io.hpp"
#include "sinrgame/scenarios.hpp"

using namespace sinrgame;

TEST_CASE("the catalog builds and every static assertion passes") {
    auto cat = catalog(8);
    CHECK(cat.size() == 8);
    std::set<std::string> names;
    for (const Scenario& sc : cat) {
        names.insert(sc.name);
        for (const StaticCheck& c : sc.checks) {
            INFO(sc.name << ": " << c.what);
            CHECK(c.ok);
        }
        for (const ScriptedHistory& sh : sc.scripted)
            CHECK(sh.history.T() >= 1);
    }
    CHECK(names.count("scenario_a") == 1);
    CHECK(names.count("scenario_poa_pc") == 1);
    CHECK(scenario_by_name("scenario_d").name == "scenario_d");
    CHECK_THROWS_AS(scenario_by_name("nope"), std::invalid_argument);
}

TEST_CASE("a corrupted distance trips at least one static assertion") {
    Scenario a = scenario_a();
    Network bad = a.net.with_dist(2, 2, a.net.dist(2, 2) * 1.1);
    auto checks = scenario_a_checks(bad);
    bool any_failed = false;
    for (const StaticCheck& c : checks) any_failed = any_failed || !c.ok;
    CHECK(any_failed);

    Scenario d = scenario_d();
    Network bad_d = d.net.with_dist(2, 2, d.net.dist(2, 2) * 0.9);
    auto d_checks = scenario_d_checks(bad_d, 1.01);
    bool d_failed = false;
    for (const StaticCheck& c : d_checks) d_failed = d_failed || !c.ok;
    CHECK(d_failed);
}

TEST_CASE("the headline decode at r2 sits on the threshold within 1e-9") {
    Scenario a = scenario_a();
    double post = received_power(a.net, 1, 1, 1) /
                  (received_power(a.net, 2, 1, 1) + received_power(a.net, 3, 1, 1));
    CHECK(post >= a.net.beta());
    CHECK(std::fabs(post - 1.1) <= 1e-9);
}

TEST_CASE("chain delta and the equilibrium gap both grow with m") {
    double prev_delta = 0.0;
    for (int m : {6, 8, 10}) {
        Scenario sc = scenario_chain(m);
        double d = delta(sc.net);
        CHECK(d > prev_delta);
        prev_delta = d;
        CHECK(sc.net.n() == m);
    }
    CHECK_THROWS_AS(scenario_chain(4), std::invalid_argument);
}

TEST_CASE("random networks are reproducible and non-degenerate") {
    Network one = random_network(6, 42);
    Network two = random_network(6, 42);
    CHECK(one.dist_matrix() == two.dist_matrix());
    Network other = random_network(6, 43);
    CHECK(one.dist_matrix() != other.dist_matrix());

    CHECK(random_network(1, 7).n() == 1);

    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        Network net = random_network(5, seed);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) CHECK(net.dist(i, j) >= 1e-6);
        CHECK(net.embedded());
    }
}

TEST_CASE("scenario networks survive a JSON round trip") {
    for (const Scenario& sc : catalog(6)) {
        Network back = network_from_json(network_to_json(sc.net));
        CHECK(back.dist_matrix() == sc.net.dist_matrix());
        CHECK(back.beta() == sc.net.beta());
        CHECK(back.p_max() == sc.net.p_max());
    }
}

TEST_CASE("scenario catalog rows carry the table fields") {
    json row = scenario_to_json(scenario_poa_pc(8));
    CHECK(row.at("name") == "scenario_poa_pc");
    CHECK(row.at("reconstructed").get<bool>());
    CHECK(row.at("n").get<int>() == 9);
    CHECK(row.contains("claim"));
    CHECK(row.contains("delta"));
}
