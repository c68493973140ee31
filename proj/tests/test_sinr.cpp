#include <doctest.h>

#include <cmath>

#include "sinrgame/io.hpp"
#include "sinrgame/scenarios.hpp"

using namespace sinrgame;

namespace {

Network two_link_line() {
    // d(s1,r1)=2, d(s2,r2)=1, cross distances 3 and 4
    return Network::from_matrix(2, {2.0, 3.0, 4.0, 1.0}, 3.0, 0.0, 1.5, 2);
}

} // namespace

TEST_CASE("received power follows p / d^alpha") {
    Network net = two_link_line();
    CHECK(received_power(net, 0, 0, 2) == doctest::Approx(0.25).epsilon(1e-12)); // 2/2^3
    CHECK(received_power(net, 0, 0, 0) == 0.0);
    CHECK(received_power(net, 1, 0, 1) == doctest::Approx(1.0 / 64.0).epsilon(1e-12));
    CHECK_THROWS_AS(received_power(net, 2, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(received_power(net, 0, 0, 3), std::invalid_argument);

    // chain geometry: the power-1 side sender lands at 1/10 on the origin receivers
    Scenario chain = scenario_chain(8);
    CHECK(received_power(chain.net, 0, 4, 1) == doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("sinr sums interference over the other active links") {
    Scenario a = scenario_a();
    // oracle: raw arithmetic from the matrix entries with a = sqrt(8.8) - 3/2
    double aa = std::sqrt(8.8) - 1.5;
    double expected = (1.0 / 2.25) / (1.0 / (1.0 + aa * aa) + 1.0 / (4.0 + aa * aa));
    double got = sinr(a.net, PowerProfile({1, 1, 1, 0}), 2);
    CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    CHECK(got == doctest::Approx(0.926).epsilon(1e-3));
    CHECK(got < a.net.beta());

    // a lonely transmitter with zero noise sees infinite SINR
    Network net = two_link_line();
    CHECK(std::isinf(sinr(net, PowerProfile({2, 0}), 0)));

    // silent links have no SINR
    CHECK_THROWS_AS(sinr(net, PowerProfile({0, 2}), 0), std::invalid_argument);

    // threshold-paradox network: the short link clears the lowered threshold
    Scenario d = scenario_d();
    double k = 0.04 / (1.01 * 1.01);
    double expected_d = k / (0.01 + 0.72 * k); // 18/25 interference coefficient
    CHECK(sinr(d.net, PowerProfile({1, 1, 1}), 2) ==
          doctest::Approx(expected_d).epsilon(1e-9));
    CHECK(sinr(d.net, PowerProfile({1, 1, 1}), 2) ==
          doctest::Approx(100.0 / 97.0).epsilon(1e-2));
}

TEST_CASE("success without cancellation") {
    Scenario a = scenario_a();
    PowerProfile all = PowerProfile::uniform(4, 1);
    CHECK(succeeds_no_ic(a.net, all, 0, 1.1));           // link 1 always succeeds
    CHECK_FALSE(succeeds_no_ic(a.net, PowerProfile({1, 1, 0, 0}), 1, 1.1));
    CHECK_FALSE(succeeds_no_ic(a.net, PowerProfile({1, 0, 1, 1}), 1, 1.1)); // silent
}

TEST_CASE("sequential cancellation at a receiver") {
    Scenario a = scenario_a();

    SUBCASE("r2 cancels the stronger s1 then decodes its own sender") {
        DecodeOutcome d = ic_decode(a.net, PowerProfile({1, 1, 0, 0}), 1, 1.1);
        CHECK(d.success);
        CHECK(d.cancelled == std::vector<int>{0, 1});
        CHECK_FALSE(d.blocked_at.has_value());
    }
    SUBCASE("a single active link decodes itself") {
        DecodeOutcome d = ic_decode(a.net, PowerProfile({0, 1, 0, 0}), 1, 1.1);
        CHECK(d.success);
        CHECK(d.cancelled == std::vector<int>{1});
    }
    SUBCASE("inactive receiver is an error") {
        CHECK_THROWS_AS(ic_decode(a.net, PowerProfile({1, 0, 0, 0}), 1, 1.1),
                        std::invalid_argument);
    }

    SUBCASE("the chain Nash blocks the origin receivers") {
        Scenario chain = scenario_chain(8);
        // side links in the equilibrium pattern plus the probing chain link
        PowerProfile probe({1, 2, 2, 1, 2, 0, 0, 0});
        DecodeOutcome d = ic_decode(chain.net, probe, 4, 1.5);
        CHECK_FALSE(d.success);
        REQUIRE(d.blocked_at.has_value());
        CHECK(*d.blocked_at == 1); // the power-2 side sender is the strongest signal
        CHECK(d.cancelled.empty());

        // with only the tied pair in the air the chain stalls on the tie itself
        PowerProfile tied({1, 0, 2, 0, 2, 0, 0, 0});
        DecodeOutcome t = ic_decode(chain.net, tied, 4, 1.5);
        CHECK_FALSE(t.success);
        REQUIRE(t.blocked_at.has_value());
        CHECK(*t.blocked_at == 0);
    }
}

TEST_CASE("succeeds dispatches on the technology setting") {
    Scenario a = scenario_a();
    PowerProfile all = PowerProfile::uniform(4, 1);
    CHECK(succeeds(a.net, all, 1, TechSetting::with_ic()));
    CHECK_FALSE(succeeds(a.net, all, 1, TechSetting::vanilla()));
    CHECK_FALSE(succeeds(a.net, all, 2, TechSetting::with_ic())); // cancellation useless at r3
    CHECK_FALSE(succeeds(a.net, PowerProfile({1, 0, 1, 1}), 1, TechSetting::with_ic()));
}

TEST_CASE("affectance formula, clamping and edge cases") {
    Scenario a = scenario_a();
    PowerProfile all = PowerProfile::uniform(4, 1);
    // noise 0: c_v = beta, so a_w(v) = beta * P_wv / P_vv = 1.1 * (1/4) / 1
    CHECK(affectance(a.net, 1, 0, all, 1.1) == doctest::Approx(0.275).epsilon(1e-12));
    CHECK(affectance(a.net, 0, 0, all, 1.1) == 0.0);
    CHECK(affectance(a.net, 1, 0, PowerProfile({1, 0, 1, 1}), 1.1) == 0.0);

    // co-located equal links at beta=2 clamp to 1
    Scenario pair = scenario_pair();
    PowerProfile both = PowerProfile::uniform(2, 2);
    CHECK(affectance(pair.net, 0, 1, both, 2.0) == 1.0);
    CHECK(affectance(pair.net, 1, 0, both, 2.0) == 1.0);

    // a noise-dominated link cannot meet the threshold even alone
    Network noisy = Network::from_matrix(2, {2.0, 3.0, 4.0, 1.0}, 3.0, 1.0, 1.5, 2);
    CHECK_THROWS_WITH_AS(affectance(noisy, 1, 0, PowerProfile({2, 2}), 1.5),
                         doctest::Contains("infeasible in isolation"), std::invalid_argument);
}

TEST_CASE("affectance sums against feasibility") {
    SUBCASE("singleton has zero sums") {
        Network net = two_link_line();
        AffectanceSums s = affectance_sums(net, {0}, PowerProfile({2, 0}), 1.5);
        CHECK(s.caused[0] == 0.0);
        CHECK(s.suffered[0] == 0.0);
    }
    SUBCASE("feasible sets have column sums at most 1") {
        int found = 0;
        for (std::uint64_t seed = 900; seed < 940; ++seed) {
            Network net = random_network(5, seed);
            CapacityWitness w = opt_capacity(net, TechSetting::vanilla());
            if (w.size < 2) continue;
            ++found;
            AffectanceSums s = affectance_sums(net, w.subset, w.profile, net.beta());
            for (double col : s.suffered) CHECK(col <= 1.0 + 1e-12);
        }
        CHECK(found > 10);
    }
    SUBCASE("equivalence of success and unit affectance budget") {
        for (std::uint64_t seed = 950; seed < 980; ++seed) {
            Network net = random_network(4, seed);
            PowerProfile all = PowerProfile::uniform(4, net.p_max());
            for (int v = 0; v < 4; ++v) {
                double total = 0.0;
                bool clamped = false;
                for (int w = 0; w < 4; ++w) {
                    double a = affectance(net, w, v, all, net.beta());
                    total += a;
                    clamped = clamped || (w != v && a == 1.0 &&
                                          received_power(net, w, v, net.p_max()) >
                                              received_power(net, v, v, net.p_max()) / net.beta());
                }
                if (!clamped)
                    CHECK(succeeds_no_ic(net, all, v, net.beta()) == (total <= 1.0));
            }
        }
    }
}

TEST_CASE("feasibility of subsets") {
    Scenario a = scenario_a();
    SUBCASE("the three-link witness from the IC-paradox network") {
        // oracle: check the three SINR inequalities by raw arithmetic
        double aa = std::sqrt(8.8) - 1.5;
        double p13 = 1.0 / (1.0 + aa * aa), p43 = 1.0 / std::pow(2 * aa + 1.5, 2.0);
        REQUIRE((1.0 / 2.25) / (p13 + p43) >= 1.1);           // link 3 with s2 silent
        REQUIRE(1.0 / (2.0 / 8.8) > 1.1);                      // link 1 vs s3, s4
        CHECK(is_feasible(a.net, {0, 2, 3}, PowerProfile({1, 0, 1, 1}), TechSetting::vanilla()));
    }
    SUBCASE("empty set is feasible") {
        CHECK(is_feasible(a.net, {}, PowerProfile::silent(4), TechSetting::vanilla()));
    }
    SUBCASE("co-located pair is infeasible in every setting") {
        Scenario pair = scenario_pair();
        PowerProfile both = PowerProfile::uniform(2, 2);
        for (TechSetting s : {TechSetting::vanilla(), TechSetting::with_ic(),
                              TechSetting::with_pc(), TechSetting::pic()})
            CHECK_FALSE(is_feasible(pair.net, {0, 1}, both, s));
    }
    SUBCASE("profile support must match the subset") {
        CHECK_THROWS_AS(is_feasible(a.net, {0, 1}, PowerProfile({1, 0, 0, 0}),
                                    TechSetting::vanilla()),
                        std::invalid_argument);
    }
}

TEST_CASE("delta is longest link over closest pair") {
    Network equal = Network::from_matrix(2, {1.0, 1.0, 1.0, 1.0}, 2.0, 0.0, 1.5, 1);
    CHECK(delta(equal) == 1.0);
    Network two = Network::from_matrix(2, {4.0, 1.0, 2.0, 3.0}, 2.0, 0.0, 1.5, 1);
    CHECK(delta(two) == 4.0);
    for (int m : {6, 8, 10}) {
        Scenario chain = scenario_chain(m);
        CHECK(delta(chain.net) >= std::pow(2.0, (m - 1) / 2.0));
    }
}

TEST_CASE("amenable subsets keep at least half the links") {
    SUBCASE("a feasible singleton survives whole") {
        Network net = two_link_line();
        std::vector<int> amen = amenable_subset(net, {1}, PowerProfile({0, 1}), 1.5);
        CHECK(amen == std::vector<int>{1});
    }
    SUBCASE("far-separated pair survives whole") {
        Network net = random_network(2, 3, {100.0, 0.5, 1.0, 3.0, 0.0, 1.5, 1});
        CapacityWitness w = opt_capacity(net, TechSetting::vanilla());
        if (w.size == 2) {
            std::vector<int> amen = amenable_subset(net, w.subset, w.profile, net.beta());
            CHECK(amen == w.subset);
        }
    }
    SUBCASE("random feasible sets") {
        int found = 0;
        for (std::uint64_t seed = 1000; found < 25 && seed < 1200; ++seed) {
            Network net = random_network(6, seed);
            CapacityWitness w = opt_capacity(net, TechSetting::vanilla());
            if (w.size < 2) continue;
            ++found;
            std::vector<int> amen = amenable_subset(net, w.subset, w.profile, net.beta());
            CHECK(2 * static_cast<int>(amen.size()) >= w.size);
            AffectanceSums s = affectance_sums(net, w.subset, w.profile, net.beta());
            for (std::size_t i = 0; i < w.subset.size(); ++i) {
                bool kept = std::find(amen.begin(), amen.end(), w.subset[i]) != amen.end();
                if (kept) CHECK(s.caused[i] <= 2.0);
            }
        }
        CHECK(found == 25);
    }
    SUBCASE("infeasible input is rejected") {
        Scenario pair = scenario_pair();
        CHECK_THROWS_AS(amenable_subset(pair.net, {0, 1}, PowerProfile::uniform(2, 2), 2.0),
                        std::invalid_argument);
    }
}

TEST_CASE("plain-subset extraction from IC-feasible sets") {
    SUBCASE("plainly feasible sets come back whole") {
        int found = 0;
        for (std::uint64_t seed = 1300; found < 10 && seed < 1400; ++seed) {
            Network net = random_network(5, seed);
            CapacityWitness w = opt_capacity(net, TechSetting::vanilla());
            if (w.size < 2) continue;
            ++found;
            // feasible without IC means the own signal dominates, so receivers
            // cancel nothing and the extraction is the identity
            CHECK(ic_feasible_to_plain_subset(net, w.subset, w.profile) == w.subset);
        }
        CHECK(found == 10);
    }
    SUBCASE("the co-located chain collapses to one plainly feasible link") {
        Scenario poa = scenario_poa_ic(8);
        std::vector<int> chain_ids{0, 1, 2, 3, 4, 5, 6, 7};
        PowerProfile prof = PowerProfile::on_subset(poa.net.n(), chain_ids, 1);
        std::vector<int> plain = ic_feasible_to_plain_subset(poa.net, chain_ids, prof);
        CHECK(plain == std::vector<int>{0});
        PowerProfile only = PowerProfile::on_subset(poa.net.n(), plain, 1);
        CHECK(is_feasible(poa.net, plain, only, TechSetting::vanilla()));
        double x = std::ceil(std::log(std::pow(delta(poa.net), 2.0) * 1.0) / std::log(1.5)) - 1.0;
        CHECK(static_cast<double>(plain.size()) * x >= 8.0);
    }
    SUBCASE("precondition violations throw") {
        Scenario pair = scenario_pair();
        CHECK_THROWS_AS(
            ic_feasible_to_plain_subset(pair.net, {0, 1}, PowerProfile::uniform(2, 2)),
            std::invalid_argument);
    }
}

TEST_CASE("structural invariants of the success predicates") {
    SUBCASE("without IC success is monotone in the interference direction") {
        for (std::uint64_t seed = 1500; seed < 1540; ++seed) {
            Network net = random_network(4, seed, {10.0, 0.5, 1.5, 3.0, 0.0, 1.5, 3});
            CounterRng rng(seed, 11);
            std::vector<int> powers(4);
            for (int i = 0; i < 4; ++i)
                powers[static_cast<std::size_t>(i)] = static_cast<int>(rng.next_unit() * 4) % 4;
            PowerProfile prof(powers);
            for (int j = 0; j < 4; ++j) {
                if (prof.powers[static_cast<std::size_t>(j)] == 0) continue;
                if (!succeeds_no_ic(net, prof, j, net.beta())) continue;
                for (int other = 0; other < 4; ++other) {
                    if (other == j || prof.powers[static_cast<std::size_t>(other)] == 0) continue;
                    PowerProfile lowered = prof;
                    lowered.powers[static_cast<std::size_t>(other)] -= 1;
                    CHECK(succeeds_no_ic(net, lowered, j, net.beta()));
                }
                if (prof.powers[static_cast<std::size_t>(j)] < net.p_max()) {
                    PowerProfile raised = prof;
                    raised.powers[static_cast<std::size_t>(j)] += 1;
                    CHECK(succeeds_no_ic(net, raised, j, net.beta()));
                }
            }
        }
    }
    SUBCASE("with IC the monotonicity fails: lowering a power can break a link") {
        Scenario chain = scenario_chain(8);
        PowerProfile strong({2, 1, 0, 0, 0, 0, 0, 0});
        PowerProfile tied({1, 1, 0, 0, 0, 0, 0, 0});
        CHECK(succeeds(chain.net, strong, 1, TechSetting::pic()));
        CHECK_FALSE(succeeds(chain.net, tied, 1, TechSetting::pic()));
    }
    SUBCASE("a single active link decodes iff it succeeds plainly") {
        for (std::uint64_t seed = 1600; seed < 1630; ++seed) {
            Network net = random_network(3, seed, {10.0, 0.5, 1.5, 3.0, 0.05, 1.5, 2});
            for (int j = 0; j < 3; ++j) {
                PowerProfile solo = PowerProfile::on_subset(3, {j}, 1);
                CHECK(ic_decode(net, solo, j, net.beta()).success ==
                      succeeds_no_ic(net, solo, j, net.beta()));
            }
        }
    }
    SUBCASE("cancellation dominates plain decoding") {
        for (std::uint64_t seed = 1700; seed < 1760; ++seed) {
            Network net = random_network(5, seed, {8.0, 0.5, 1.5, 3.0, 0.0, 1.5, 2});
            CounterRng rng(seed, 13);
            std::vector<int> powers(5);
            for (int i = 0; i < 5; ++i)
                powers[static_cast<std::size_t>(i)] = static_cast<int>(rng.next_unit() * 3) % 3;
            PowerProfile prof(powers);
            for (int j = 0; j < 5; ++j) {
                if (prof.powers[static_cast<std::size_t>(j)] == 0) continue;
                if (succeeds_no_ic(net, prof, j, net.beta()))
                    CHECK(ic_decode(net, prof, j, net.beta()).success);
            }
        }
    }
    SUBCASE("outcomes are scale-free without noise") {
        for (std::uint64_t seed = 1800; seed < 1830; ++seed) {
            Network net = random_network(4, seed, {10.0, 0.5, 1.5, 2.0, 0.0, 1.5, 2});
            PowerProfile prof = PowerProfile::uniform(4, 2);
            for (double factor : {2.0, 0.5}) {
                Network scaled = net.scaled(factor);
                for (int j = 0; j < 4; ++j) {
                    CHECK(succeeds_no_ic(net, prof, j, net.beta()) ==
                          succeeds_no_ic(scaled, prof, j, net.beta()));
                    CHECK(ic_decode(net, prof, j, net.beta()).success ==
                          ic_decode(scaled, prof, j, net.beta()).success);
                }
            }
        }
    }
}

TEST_CASE("network JSON round-trips both representations") {
    SUBCASE("matrix form") {
        Network net = two_link_line();
        Network back = network_from_json(network_to_json(net));
        CHECK(back.dist_matrix() == net.dist_matrix());
        CHECK(back.embedded() == false);
        CHECK(back.p_max() == 2);
    }
    SUBCASE("point form") {
        Scenario chain = scenario_chain(6);
        json j = network_to_json(chain.net);
        CHECK(j.contains("points"));
        Network back = network_from_json(j);
        CHECK(back.embedded());
        CHECK(back.dist_matrix() == chain.net.dist_matrix());
    }
    SUBCASE("rejects malformed documents") {
        json j = network_to_json(two_link_line());
        j["points"] = {{"senders", {{0, 0}}}, {"receivers", {{1, 0}}}};
        CHECK_THROWS_AS(network_from_json(j), std::invalid_argument); // both forms present
        json missing = {{"n", 1}, {"alpha", 2.0}, {"noise", 0.0}, {"beta", 1.5}};
        CHECK_THROWS_AS(network_from_json(missing), std::invalid_argument);
    }
    SUBCASE("constructor rejects invalid parameters") {
        CHECK_THROWS_AS(Network::from_matrix(1, {0.0}, 2.0, 0.0, 1.5, 1), std::invalid_argument);
        CHECK_THROWS_AS(Network::from_matrix(1, {1.0}, 2.0, 0.0, 0.9, 1), std::invalid_argument);
        CHECK_THROWS_AS(Network::from_matrix(1, {1.0}, -1.0, 0.0, 1.5, 1), std::invalid_argument);
        CHECK_THROWS_AS(Network::from_matrix(1, {1.0}, 2.0, 0.0, 1.5, 0), std::invalid_argument);
    }
}
