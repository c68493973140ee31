#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sinrgame/analysis.hpp"
#include "sinrgame/io.hpp"
#include "sinrgame/scenarios.hpp"

using namespace sinrgame;

namespace {

// brute-force oracle for uniform-power capacity: test all subsets with raw
// SINR arithmetic, independent of the library's search
int brute_force_uniform_opt(const Network& net, double threshold) {
    int n = net.n();
    int best = 0;
    for (int mask = 1; mask < (1 << n); ++mask) {
        bool ok = true;
        for (int j = 0; ok && j < n; ++j) {
            if (!(mask & (1 << j))) continue;
            double num = net.p_max() / std::pow(net.dist(j, j), net.alpha());
            double den = net.noise();
            for (int i = 0; i < n; ++i)
                if (i != j && (mask & (1 << i)))
                    den += net.p_max() / std::pow(net.dist(i, j), net.alpha());
            ok = den == 0 ? true : num / den >= threshold;
        }
        if (ok) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
    }
    return best;
}

} // namespace

TEST_CASE("opt_capacity matches the brute-force oracle on the paradox network") {
    Scenario a = scenario_a();
    CHECK(brute_force_uniform_opt(a.net, 1.1) == 3);
    CapacityWitness w = opt_capacity(a.net, TechSetting::vanilla());
    CHECK(w.size == 3);
    CHECK(w.subset == std::vector<int>{0, 2, 3});
    CHECK(is_feasible(a.net, w.subset, w.profile, TechSetting::vanilla()));

    CapacityWitness wic = opt_capacity(a.net, TechSetting::with_ic());
    CHECK(wic.size >= w.size); // cancellation never shrinks the optimum
}

TEST_CASE("opt_capacity agrees with brute force on random instances") {
    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        Network net = random_network(5, seed);
        CapacityWitness w = opt_capacity(net, TechSetting::vanilla());
        CHECK(w.size == brute_force_uniform_opt(net, net.beta()));
    }
}

TEST_CASE("optimum is monotone across technologies and thresholds") {
    Scenario a = scenario_a();
    int van = opt_capacity(a.net, TechSetting::vanilla()).size;
    int ic = opt_capacity(a.net, TechSetting::with_ic()).size;
    CHECK(ic >= van);

    Scenario b = scenario_b();
    int b_van = opt_capacity(b.net, TechSetting::vanilla()).size;
    int b_pc = opt_capacity(b.net, TechSetting::with_pc()).size;
    int b_pic = opt_capacity(b.net, TechSetting::pic()).size;
    CHECK(b_pc >= b_van);
    CHECK(b_pic >= b_pc);

    Scenario d = scenario_d();
    int high = opt_capacity(d.net, TechSetting::vanilla()).size;
    int low = opt_capacity(d.net, TechSetting::vanilla().at_beta(1.01)).size;
    CHECK(low >= high);
}

TEST_CASE("the blocker-chain network has OPT m under IC") {
    Scenario poa = scenario_poa_ic(8);
    CapacityWitness w = opt_capacity(poa.net, TechSetting::with_ic());
    CHECK(w.size == 8);
    CHECK(w.subset == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("the nested network has OPT m under PC via minimal powers") {
    Scenario poa = scenario_poa_pc(8);
    CapacityWitness w = opt_capacity(poa.net, TechSetting::with_pc());
    CHECK(w.size == 8);
    std::vector<int> nested{0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(w.subset == nested);
    // powers must be genuinely mixed: the outer links need much more energy
    CHECK(w.profile.powers[7] > 10 * w.profile.powers[0]);

    auto direct = min_feasible_powers(poa.net, nested, poa.net.beta());
    REQUIRE(direct.has_value());
    CHECK(direct->powers == w.profile.powers);
}

TEST_CASE("minimal feasible powers bail out when no vector fits") {
    Scenario pair = scenario_pair();
    CHECK_FALSE(min_feasible_powers(pair.net, {0, 1}, 2.0).has_value());
}

TEST_CASE("budget guard reports the search size") {
    Scenario poa = scenario_poa_pc(8);
    CHECK_THROWS_WITH_AS(opt_capacity(poa.net, TechSetting::pic(), 1000),
                         doctest::Contains("exceeds budget"), std::runtime_error);
}

TEST_CASE("empirical anarchy bound") {
    Network lone = Network::from_matrix(1, {1.0}, 2.0, 0.1, 1.5, 1);
    CapacityWitness w = opt_capacity(lone, TechSetting::vanilla());
    History h = scripted_history(lone, TechSetting::vanilla(), {{1}, {1}});
    RegretReport rep = certify(lone, h, 0.0);
    CHECK(empirical_pota(w, {rep}) == 1.0);

    Scenario poa = scenario_poa_ic(8);
    CapacityWitness wic = opt_capacity(poa.net, TechSetting::with_ic());
    RegretReport nash = certify(poa.net, poa.scripted.front().history, 0.0);
    CHECK(empirical_pota(wic, {nash}) == doctest::Approx(4.0));

    // a history where the blockers idle has regret 1 for them, so it fails
    // certification and cannot feed the bound
    std::vector<int> idle(static_cast<std::size_t>(poa.net.n()), 0);
    idle[0] = 1;
    History bad = scripted_history(poa.net, TechSetting::with_ic(), {idle, idle});
    RegretReport uncertified = certify(poa.net, bad, 0.5);
    CHECK_FALSE(uncertified.certified);
    CHECK_THROWS_AS(empirical_pota(wic, {uncertified}), std::invalid_argument);
}

TEST_CASE("comparison report flags the cancellation paradox") {
    Scenario a = scenario_a();
    RunsConfig cfg;
    cfg.T = 30000;
    cfg.seeds = {1, 2};
    cfg.epsilon = 0.02;
    std::vector<LabeledScript> scripted;
    for (const ScriptedHistory& sh : a.scripted) scripted.push_back({sh.label, sh.history});
    BraessReport rep = braess_report(
        a.net, {{TechSetting::with_ic(), TechSetting::vanilla()}}, cfg, scripted);
    REQUIRE(rep.pairs.size() == 1);
    CHECK(rep.pairs[0].paradox);
    CHECK(rep.pairs[0].ratio >= 1.33);
    CHECK(rep.delta == doctest::Approx(delta(a.net)));

    bool saw_scripted = false, saw_learner = false;
    for (const auto& s : rep.settings) {
        CHECK(s.opt == 3);
        for (const auto& e : s.entries) {
            saw_scripted = saw_scripted || e.scripted;
            saw_learner = saw_learner || !e.scripted;
        }
    }
    CHECK(saw_scripted);
    CHECK(saw_learner);
    for (const std::string& f : rep.findings)
        MESSAGE("finding: " << f); // informational only

    std::ostringstream table;
    braess_print_table(rep, table);
    CHECK(table.str().find("PARADOX EXHIBITED") != std::string::npos);
    json j = braess_to_json(rep);
    CHECK(j.at("pairs")[0].at("paradox_exhibited").get<bool>());
}
