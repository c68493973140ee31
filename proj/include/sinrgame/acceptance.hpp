#pragma once
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "sinrgame/io.hpp"

namespace sinrgame {

struct AcceptanceConfig {
    long long T = 200000;
    double epsilon = 0.01;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    bool quick = false;

    static AcceptanceConfig quick_mode() {
        AcceptanceConfig cfg;
        cfg.T = 50000;
        cfg.epsilon = 0.02;
        cfg.quick = true;
        return cfg;
    }
};

struct CriterionResult {
    std::string id;
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& note) {
        pass = pass && ok;
        notes.push_back(std::string(ok ? "ok: " : "FAIL: ") + note);
    }
};

namespace detail {

inline std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

struct RunBatch {
    std::vector<RegretReport> reports;
    double min_value = std::numeric_limits<double>::infinity();
    double max_value = -std::numeric_limits<double>::infinity();
    bool all_certified = true;
};

inline RunBatch run_batch(const Network& net, const TechSetting& setting,
                          const AcceptanceConfig& cfg, std::size_t nseeds = 0) {
    RunBatch batch;
    double eta = hedge_default_eta(strategy_space(net, setting).size(), cfg.T);
    std::size_t count = nseeds == 0 ? cfg.seeds.size() : std::min(nseeds, cfg.seeds.size());
    for (std::size_t k = 0; k < count; ++k) {
        History h = hedge_run(net, setting, cfg.T, eta, cfg.seeds[k]);
        RegretReport r = certify(net, h, cfg.epsilon);
        batch.min_value = std::min(batch.min_value, r.value);
        batch.max_value = std::max(batch.max_value, r.value);
        batch.all_certified = batch.all_certified && r.certified;
        batch.reports.push_back(std::move(r));
    }
    return batch;
}

} // namespace detail

/// Runs every acceptance criterion at the configured scale and prints one
/// verdict line per criterion. Returns the structured results.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg, std::ostream& log) {
    using detail::fmt;
    std::vector<CriterionResult> results;
    std::vector<std::pair<RegretReport, int>> certified_pool; // for A7, with n

    auto pool_batch = [&](const detail::RunBatch& b, int n) {
        for (const auto& r : b.reports)
            if (r.certified) certified_pool.emplace_back(r, n);
    };

    // ---------------- A1: IC paradox dynamics on scenario A ----------------
    {
        CriterionResult res{"A1"};
        Scenario sc = scenario_a();
        detail::RunBatch van = detail::run_batch(sc.net, TechSetting::vanilla(), cfg);
        detail::RunBatch ic = detail::run_batch(sc.net, TechSetting::with_ic(), cfg);
        pool_batch(van, sc.net.n());
        pool_batch(ic, sc.net.n());
        double floor = 3.0 - 11.0 * cfg.epsilon;
        double ceil = 2.0 + 4.0 * cfg.epsilon;
        res.require(van.all_certified, "all vanilla runs certified");
        res.require(van.min_value >= floor,
                    fmt("vanilla min value %.4f >= %.4f", van.min_value, floor));
        res.require(ic.all_certified, "all IC runs certified");
        res.require(ic.max_value <= ceil, fmt("IC max value %.4f <= %.4f", ic.max_value, ceil));
        res.require(van.min_value / ic.max_value >= 1.33,
                    fmt("worst-vanilla / best-IC ratio %.4f >= 1.33",
                        van.min_value / ic.max_value));
        results.push_back(res);
    }

    // ---------------- A2: scenario A statics ----------------
    {
        CriterionResult res{"A2"};
        Scenario sc = scenario_a();
        for (const StaticCheck& c : sc.checks) res.require(c.ok, c.what);
        double post_cancel = received_power(sc.net, 1, 1, 1) /
                             (received_power(sc.net, 2, 1, 1) + received_power(sc.net, 3, 1, 1));
        res.require(std::fabs(post_cancel - 1.1) <= 1e-9,
                    fmt("post-cancellation SINR at r2 = %.12f within 1e-9 of 1.1", post_cancel));
        results.push_back(res);
    }

    // ---------------- A3: PC paradox on scenario B ----------------
    {
        CriterionResult res{"A3"};
        Scenario sc = scenario_b();
        TechSetting pc = TechSetting::with_pc();
        PowerProfile nash({2, 1, 0, 0});
        res.require(is_pure_nash(sc.net, nash, pc) && profile_value(sc.net, nash, pc) == 2,
                    "(2,1,0,0) is a pure Nash under PC with value 2");
        detail::RunBatch van = detail::run_batch(sc.net, TechSetting::vanilla(), cfg);
        pool_batch(van, sc.net.n());
        double floor = 3.0 - 15.0 * cfg.epsilon;
        res.require(van.all_certified, "all vanilla runs certified");
        res.require(van.min_value >= floor,
                    fmt("vanilla min value %.4f >= %.4f", van.min_value, floor));
        bool has_value2 = false;
        for (const auto& [profile, value] : enumerate_pure_nash(sc.net, pc))
            has_value2 = has_value2 || value == 2;
        res.require(has_value2, "PC Nash enumeration contains a value-2 equilibrium");
        results.push_back(res);
    }

    // ---------------- A4: PIC vs PC/vanilla on scenario C6 ----------------
    {
        CriterionResult res{"A4"};
        Scenario sc = scenario_c6();
        RegretReport script = certify(sc.net, sc.scripted.front().history, 0.0);
        if (script.certified) certified_pool.emplace_back(script, sc.net.n());
        res.require(script.certified && script.value == 3.0,
                    fmt("PIC scripted Nash certifies at eps=0 with value %.4f", script.value));
        detail::RunBatch pc = detail::run_batch(sc.net, TechSetting::with_pc(), cfg);
        detail::RunBatch van = detail::run_batch(sc.net, TechSetting::vanilla(), cfg);
        pool_batch(pc, sc.net.n());
        pool_batch(van, sc.net.n());
        res.require(pc.all_certified && pc.min_value >= 3.9,
                    fmt("PC runs certified with min value %.4f >= 3.9", pc.min_value));
        res.require(van.all_certified && van.min_value >= 3.9,
                    fmt("vanilla runs certified with min value %.4f >= 3.9", van.min_value));
        res.require(pc.min_value / 3.0 >= 1.3 && van.min_value / 3.0 >= 1.3,
                    fmt("ratios %.4f (PC) and %.4f (vanilla) >= 1.3", pc.min_value / 3.0,
                        van.min_value / 3.0));
        results.push_back(res);
    }

    // ---------------- A5: PIC vs IC on the chain ----------------
    {
        CriterionResult res{"A5"};
        const int m = 8;
        Scenario sc = scenario_chain(m);
        auto nash_list = enumerate_pure_nash(sc.net, TechSetting::pic());
        bool all4 = !nash_list.empty();
        for (const auto& [profile, value] : nash_list) all4 = all4 && value == 4;
        res.require(all4, fmt("PIC pure Nash enumeration nonempty (%g found), all values 4",
                              static_cast<double>(nash_list.size())));
        detail::RunBatch ic8 = detail::run_batch(sc.net, TechSetting::with_ic(), cfg);
        pool_batch(ic8, sc.net.n());
        res.require(ic8.all_certified, "all IC runs certified");
        res.require(ic8.min_value >= m - 1,
                    fmt("IC min value %.4f >= m-1 = %.0f", ic8.min_value, double(m - 1)));
        double ratio8 = ic8.min_value / 4.0;
        res.require(ratio8 >= 1.75, fmt("IC/PIC ratio %.4f >= 1.75", ratio8));
        std::vector<double> ratios;
        for (int mm : {6, 8, 10}) {
            if (mm == m) {
                ratios.push_back(ratio8);
                continue;
            }
            Scenario scm = scenario_chain(mm);
            detail::RunBatch icm = detail::run_batch(scm.net, TechSetting::with_ic(), cfg, 3);
            pool_batch(icm, scm.net.n());
            ratios.push_back(icm.min_value / 4.0);
        }
        res.require(ratios[0] < ratios[1] && ratios[1] < ratios[2],
                    fmt("ratio grows with m: %.3f < %.3f < %.3f", ratios[0], ratios[1],
                        ratios[2]));
        results.push_back(res);
    }

    // ---------------- A6: threshold paradox on scenario D ----------------
    {
        CriterionResult res{"A6"};
        Scenario sc = scenario_d();
        double beta_alt = sc.headline.at("beta_alt");
        detail::RunBatch high = detail::run_batch(sc.net, TechSetting::vanilla(), cfg);
        detail::RunBatch low = detail::run_batch(sc.net, TechSetting::vanilla().at_beta(beta_alt), cfg);
        pool_batch(high, sc.net.n());
        pool_batch(low, sc.net.n());
        double floor = 2.0 - 6.0 * cfg.epsilon;
        double ceil = 1.0 + cfg.epsilon;
        res.require(high.all_certified && high.min_value >= floor,
                    fmt("runs at beta certified with min value %.4f >= %.4f", high.min_value, floor));
        res.require(low.all_certified && low.max_value <= ceil,
                    fmt("runs at beta' certified with max value %.4f <= %.4f", low.max_value, ceil));
        for (const StaticCheck& c : sc.checks) res.require(c.ok, c.what);
        results.push_back(res);
    }

    // ---------------- A7: attempts/successes sandwich ----------------
    {
        CriterionResult res{"A7"};
        int checked = 0;
        bool all = true;
        for (const auto& [rep, n] : certified_pool) {
            all = all && attempts_successes_bound(rep, n, rep.epsilon);
            ++checked;
        }
        res.require(checked > 0 && all,
                    fmt("sum s <= sum p <= 2 sum s + eps*n on %g certified histories",
                        static_cast<double>(checked)));
        results.push_back(res);
    }

    // ---------------- A8: amenable subsets of random feasible sets ----------------
    {
        CriterionResult res{"A8"};
        int accepted = 0;
        bool all = true;
        std::uint64_t seed = 20000;
        while (accepted < 100 && seed < 22000) {
            int n = 4 + static_cast<int>(seed % 5);
            Network net = random_network(n, seed++);
            CapacityWitness opt = opt_capacity(net, TechSetting::vanilla());
            if (opt.size < 2) continue;
            ++accepted;
            std::vector<int> amen = amenable_subset(net, opt.subset, opt.profile, net.beta());
            bool half = 2 * static_cast<int>(amen.size()) >= opt.size;
            AffectanceSums sums = affectance_sums(net, opt.subset, opt.profile, net.beta());
            bool rows_ok = true;
            for (std::size_t a = 0; a < opt.subset.size(); ++a) {
                bool in_amen = std::find(amen.begin(), amen.end(), opt.subset[a]) != amen.end();
                if (in_amen && sums.caused[a] > 2.0) rows_ok = false;
            }
            all = all && half && rows_ok;
        }
        res.require(accepted == 100 && all,
                    fmt("amenable subset kept >= half with row sums <= 2 on %g random feasible sets",
                        static_cast<double>(accepted)));
        results.push_back(res);
    }

    // ---------------- A9: IC-feasible to plainly feasible extraction ----------------
    {
        CriterionResult res{"A9"};
        RandomNetParams params;
        params.p_max = 2;
        int accepted = 0;
        bool all = true;
        std::uint64_t seed = 30000;
        auto check_instance = [&](const Network& net, const std::vector<int>& subset,
                                  const PowerProfile& profile) {
            std::vector<int> plain = ic_feasible_to_plain_subset(net, subset, profile);
            PowerProfile restricted = PowerProfile::silent(net.n());
            for (int i : plain)
                restricted.powers[static_cast<std::size_t>(i)] =
                    profile.powers[static_cast<std::size_t>(i)];
            bool feas = is_feasible(net, plain, restricted, TechSetting::vanilla());
            double x = std::ceil(std::log(std::pow(delta(net), net.alpha()) * net.p_max()) /
                                 std::log(net.beta())) - 1.0;
            bool count = static_cast<double>(plain.size()) * x >= static_cast<double>(subset.size());
            return feas && count;
        };
        while (accepted < 50 && seed < 32000) {
            int n = 4 + static_cast<int>(seed % 4);
            Network net = random_network(n, seed++, params);
            CapacityWitness opt = opt_capacity(net, TechSetting::with_ic());
            if (opt.size < 2) continue;
            ++accepted;
            all = all && check_instance(net, opt.subset, opt.profile);
        }
        Scenario poa = scenario_poa_ic(8);
        std::vector<int> chain_ids;
        for (int i = 0; i < 8; ++i) chain_ids.push_back(i);
        bool chain_ok = check_instance(poa.net, chain_ids,
                                       PowerProfile::on_subset(poa.net.n(), chain_ids, 1));
        res.require(accepted == 50 && all,
                    fmt("plain extraction feasible with |L'|*x >= |L| on %g random IC-feasible sets",
                        static_cast<double>(accepted)));
        res.require(chain_ok, "plain extraction holds on the chain with co-located receivers");
        results.push_back(res);
    }

    // ---------------- A10: anarchy-gap scenarios ----------------
    {
        CriterionResult res{"A10"};
        Scenario poa_ic = scenario_poa_ic(8);
        CapacityWitness opt_ic = opt_capacity(poa_ic.net, TechSetting::with_ic());
        res.require(opt_ic.size == 8, fmt("OPT with IC = %.0f on the blocker chain",
                                          static_cast<double>(opt_ic.size)));
        RegretReport nash_ic = certify(poa_ic.net, poa_ic.scripted.front().history, 0.0);
        double pota = empirical_pota(opt_ic, {nash_ic});
        res.require(pota >= 4.0, fmt("empirical anarchy gap %.4f >= 4", pota));

        Scenario poa_pc = scenario_poa_pc(8);
        std::vector<int> star(static_cast<std::size_t>(poa_pc.net.n()), 0);
        star[static_cast<std::size_t>(poa_pc.net.n() - 1)] = poa_pc.net.p_max();
        res.require(is_pure_nash(poa_pc.net, PowerProfile(star), TechSetting::with_pc()),
                    "short-link-only profile is a pure Nash under PC");
        CapacityWitness opt_pc = opt_capacity(poa_pc.net, TechSetting::with_pc());
        res.require(opt_pc.size == 8, fmt("OPT with PC = %.0f on the nested set",
                                          static_cast<double>(opt_pc.size)));
        RegretReport nash_pc = certify(poa_pc.net, poa_pc.scripted.front().history, 0.0);
        res.require(nash_pc.certified && nash_pc.value <= 2.0,
                    fmt("short-link Nash certifies with value %.4f <= 2", nash_pc.value));
        results.push_back(res);
    }

    // ---------------- A11: uniform-power regret equivalence ----------------
    {
        CriterionResult res{"A11"};
        RandomNetParams params;
        params.p_max = 3;
        bool equal = true;
        for (std::uint64_t seed = 40000; seed < 40020; ++seed) {
            int n = 3 + static_cast<int>(seed % 3);
            Network net = random_network(n, seed, params);
            CounterRng rng(seed, 7);
            std::vector<std::vector<int>> script;
            for (int t = 0; t < 40; ++t) {
                std::vector<int> round(static_cast<std::size_t>(n), 0);
                for (int i = 0; i < n; ++i)
                    round[static_cast<std::size_t>(i)] = rng.next_unit() < 0.5 ? 0 : net.p_max();
                script.push_back(round);
            }
            History uniform = scripted_history(net, TechSetting::vanilla(), script);
            History pc = scripted_history(net, TechSetting::with_pc(), script);
            for (int i = 0; i < n; ++i)
                equal = equal &&
                        std::fabs(regret(net, uniform, i) - regret(net, pc, i)) <= 1e-12;
        }
        res.require(equal, "regret over the PC space equals regret over {0,p_max} "
                           "for 20 random uniform-power histories without IC");

        Scenario pair = scenario_pair();
        RegretReport ic_rep = certify(pair.net, pair.scripted[0].history, 0.0);
        RegretReport pic_rep = certify(pair.net, pair.scripted[1].history, 0.4);
        res.require(ic_rep.certified && ic_rep.value == 1.0,
                    fmt("alternating history certifies at eps=0 under uniform IC, value %.4f",
                        ic_rep.value));
        res.require(!pic_rep.certified,
                    fmt("alternating history fails at eps=0.4 under PIC (max regret %.4f)",
                        pic_rep.max_regret));
        results.push_back(res);
    }

    // ---------------- A12: noise-halving feasibility ----------------
    {
        CriterionResult res{"A12"};
        int accepted = 0;
        bool all = true;
        std::uint64_t seed = 50000;
        while (accepted < 50 && seed < 52000) {
            int n = 4 + static_cast<int>(seed % 4);
            Network net = random_network(n, seed++);
            double twice = 2.0 * net.beta();
            CapacityWitness opt = opt_capacity(net, TechSetting::vanilla().at_beta(twice));
            if (opt.size < 2) continue;
            ++accepted;
            double min_pvv = std::numeric_limits<double>::infinity();
            for (int v : opt.subset)
                min_pvv = std::min(min_pvv, received_power(net, v, v,
                                                           opt.profile.powers[static_cast<std::size_t>(v)]));
            double noise = min_pvv / twice;
            Network noisy = net.with_noise(noise);
            all = all && is_feasible(noisy, opt.subset, opt.profile, TechSetting::vanilla());
        }
        res.require(accepted == 50 && all,
                    fmt("2beta-feasible at zero noise stays beta-feasible at noise with "
                        "P_vv >= 2*beta*noise on %g sets",
                        static_cast<double>(accepted)));
        results.push_back(res);
    }

    // ---------------- report ----------------
    int passed = 0;
    for (const CriterionResult& r : results) {
        log << r.id << (r.pass ? "  PASS" : "  FAIL") << "\n";
        for (const std::string& note : r.notes) log << "    " << note << "\n";
        if (r.pass) ++passed;
    }
    log << passed << "/" << results.size() << " criteria passed"
        << (cfg.quick ? " (quick mode: T=50000, eps=0.02)" : "") << "\n";
    return results;
}

} // namespace sinrgame
