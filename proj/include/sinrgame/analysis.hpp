#pragma once
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sinrgame/regret.hpp"

namespace sinrgame {

/// A witness of achievable capacity: subset plus a profile under which every
/// member succeeds simultaneously.
struct CapacityWitness {
    std::vector<int> subset;
    PowerProfile profile;
    TechSetting setting;
    int size = 0;
};

namespace detail {

// all k-subsets of {0..n-1} in lexicographic order
inline void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
    if (k == 0) { fn(comb); return; }
    while (true) {
        if (fn(comb)) return;
        int pos = k - 1;
        while (pos >= 0 && comb[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) return;
        ++comb[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < k; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace detail

/// Componentwise-minimal integer powers in [1, p_max] making `subset`
/// feasible without IC at `threshold`, or nullopt. Monotone fixed-point
/// iteration from all-ones; since feasible vectors are closed under
/// componentwise min, the limit is also the lexicographically smallest one.
inline std::optional<PowerProfile> min_feasible_powers(const Network& net,
                                                       const std::vector<int>& subset,
                                                       double threshold) {
    Channel ch(net);
    std::vector<int> powers(static_cast<std::size_t>(net.n()), 0);
    for (int i : subset) {
        if (i < 0 || i >= net.n()) throw std::out_of_range("link index out of range");
        powers[static_cast<std::size_t>(i)] = 1;
    }
    if (subset.empty()) return PowerProfile(powers);

    const int max_sweeps = static_cast<int>(subset.size()) * net.p_max() + 8;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        for (int i : subset) {
            double interference = ch.noise();
            for (int j : subset)
                if (j != i) interference += ch.received(j, i, powers[static_cast<std::size_t>(j)]);
            double need = threshold * interference * ch.gain(i, i);
            if (!(need <= static_cast<double>(net.p_max()))) return std::nullopt;
            int p = std::max({1, powers[static_cast<std::size_t>(i)],
                              static_cast<int>(std::ceil(need))});
            powers[static_cast<std::size_t>(i)] = p;
            while (!detail::succeeds_no_ic(ch, powers, i, threshold)) {
                if (++p > net.p_max()) return std::nullopt;
                powers[static_cast<std::size_t>(i)] = p;
            }
        }
        bool stable = true;
        for (int i : subset)
            if (!detail::succeeds_no_ic(ch, powers, i, threshold)) { stable = false; break; }
        if (stable) return PowerProfile(powers);
    }
    return std::nullopt;
}

/// Maximum-cardinality feasible witness by search. Subsets are scanned from
/// large to small, lexicographically within a size, so the first hit is the
/// lexicographically smallest maximum subset; its power vector is minimal.
/// IC settings enumerate integer power vectors, uniform settings test the
/// single p_max assignment, and PC without IC uses the minimal-power fixed
/// point, which returns the same witness as full enumeration would.
inline CapacityWitness opt_capacity(const Network& net, const TechSetting& setting,
                                    double budget = 1'000'000) {
    const int n = net.n();
    const double beta = setting.effective_beta(net);
    const bool pc = setting.power_control;
    const bool ic = setting.ic;

    double space = (pc && ic) ? std::pow(1.0 + net.p_max(), n) : std::pow(2.0, n);
    if (!(space <= budget))
        throw std::runtime_error("search space exceeds budget: " + std::to_string(space) +
                                 " candidates > " + std::to_string(budget));

    Channel ch(net);
    auto feasible = [&](const std::vector<int>& subset, const std::vector<int>& powers) {
        for (int j : subset)
            if (!detail::succeeds(ch, powers, j, beta, ic)) return false;
        return true;
    };

    CapacityWitness best;
    best.setting = setting;
    for (int k = n; k >= 1 && best.size == 0; --k) {
        detail::for_each_subset(n, k, [&](const std::vector<int>& subset) {
            if (!pc) {
                std::vector<int> powers(static_cast<std::size_t>(n), 0);
                for (int i : subset) powers[static_cast<std::size_t>(i)] = net.p_max();
                if (feasible(subset, powers)) {
                    best = {subset, PowerProfile(powers), setting, k};
                    return true;
                }
                return false;
            }
            if (!ic) {
                if (auto powers = min_feasible_powers(net, subset, beta)) {
                    best = {subset, *powers, setting, k};
                    return true;
                }
                return false;
            }
            // PC + IC: odometer over {1..p_max}^k, lexicographic
            std::vector<int> levels(static_cast<std::size_t>(k), 1);
            std::vector<int> powers(static_cast<std::size_t>(n), 0);
            while (true) {
                for (int a = 0; a < k; ++a)
                    powers[static_cast<std::size_t>(subset[static_cast<std::size_t>(a)])] =
                        levels[static_cast<std::size_t>(a)];
                if (feasible(subset, powers)) {
                    best = {subset, PowerProfile(powers), setting, k};
                    return true;
                }
                int pos = k - 1;
                while (pos >= 0 && levels[static_cast<std::size_t>(pos)] == net.p_max()) {
                    levels[static_cast<std::size_t>(pos)] = 1;
                    --pos;
                }
                if (pos < 0) return false;
                ++levels[static_cast<std::size_t>(pos)];
            }
        });
    }
    if (best.size == 0) best = {{}, PowerProfile::silent(n), setting, 0};
    if (best.size > 0 && !is_feasible(net, best.subset, best.profile, setting))
        throw std::logic_error("opt_capacity: witness failed re-verification");
    return best;
}

/// OPT divided by the worst certified history value; an empirical lower
/// bound on the price of total anarchy.
inline double empirical_pota(const CapacityWitness& opt, const std::vector<RegretReport>& reports) {
    double worst = std::numeric_limits<double>::infinity();
    bool any = false;
    for (const RegretReport& r : reports)
        if (r.certified) {
            any = true;
            worst = std::min(worst, r.value);
        }
    if (!any) throw std::invalid_argument("empirical_pota: no certified histories");
    return static_cast<double>(opt.size) / worst;
}

// ---------- technology comparison reports ----------

struct RunsConfig {
    long long T = 200000;
    std::optional<double> eta;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    double epsilon = 0.01;
};

struct LabeledScript {
    std::string label;
    History history;
};

struct BraessEntry {
    std::string label;       // "hedge seed 3" or a script label
    bool scripted = false;   // scripted values lower-bound the best history;
                             // learner runs sample toward the worst
    double value = 0.0;
    double max_regret = 0.0;
    bool certified = false;
};

struct BraessSettingSummary {
    TechSetting setting;
    std::vector<BraessEntry> entries;
    double min_certified = std::numeric_limits<double>::quiet_NaN();
    double max_certified = std::numeric_limits<double>::quiet_NaN();
    double worst_eps = 0.0;
    int opt = -1; // -1 when the search was skipped (budget)
};

struct BraessPairVerdict {
    std::string better, baseline;
    double ratio = 0.0;       // worst certified baseline / best certified better
    double ratio_worst = 0.0; // worst certified baseline / worst certified better
    double eps_better = 0.0, eps_baseline = 0.0;
    bool paradox = false;
};

struct BraessReport {
    double delta = 0.0;
    std::vector<BraessSettingSummary> settings;
    std::vector<BraessPairVerdict> pairs;
    std::vector<std::string> findings; // ratio-sanity observations, non-fatal
};

/// Collects certified history values per setting (learner runs for every
/// seed plus any supplied scripted histories) and tabulates the pairwise
/// ratios. A pair is flagged "paradox exhibited" when the best certified
/// value under the better technology falls below the worst certified value
/// under the baseline.
inline BraessReport braess_report(const Network& net,
                                  const std::vector<std::pair<TechSetting, TechSetting>>& pairs,
                                  const RunsConfig& cfg,
                                  const std::vector<LabeledScript>& scripted = {}) {
    BraessReport rep;
    rep.delta = delta(net);

    auto summary_for = [&](const TechSetting& setting) -> BraessSettingSummary& {
        for (auto& s : rep.settings)
            if (s.setting.name() == setting.name()) return s;
        BraessSettingSummary s;
        s.setting = setting;
        double eta = cfg.eta ? *cfg.eta
                             : hedge_default_eta(strategy_space(net, setting).size(), cfg.T);
        for (std::uint64_t seed : cfg.seeds) {
            History h = hedge_run(net, setting, cfg.T, eta, seed);
            RegretReport r = certify(net, h, cfg.epsilon);
            s.entries.push_back({"hedge seed " + std::to_string(seed), false, r.value,
                                 r.max_regret, r.certified});
        }
        for (const LabeledScript& sc : scripted)
            if (sc.history.setting.name() == setting.name()) {
                RegretReport r = certify(net, sc.history, cfg.epsilon);
                s.entries.push_back({sc.label, true, r.value, r.max_regret, r.certified});
            }
        for (const BraessEntry& e : s.entries)
            if (e.certified) {
                if (std::isnan(s.min_certified) || e.value < s.min_certified)
                    s.min_certified = e.value;
                if (std::isnan(s.max_certified) || e.value > s.max_certified)
                    s.max_certified = e.value;
                s.worst_eps = std::max(s.worst_eps, e.max_regret);
            }
        try {
            s.opt = opt_capacity(net, setting).size;
        } catch (const std::runtime_error&) {
            s.opt = -1;
        }
        rep.settings.push_back(std::move(s));
        return rep.settings.back();
    };

    for (const auto& [better, baseline] : pairs) {
        // take copies: summary_for may reallocate rep.settings
        BraessSettingSummary sb = summary_for(better);
        BraessSettingSummary sa = summary_for(baseline);
        BraessPairVerdict v;
        v.better = better.name();
        v.baseline = baseline.name();
        v.eps_better = sb.worst_eps;
        v.eps_baseline = sa.worst_eps;
        if (!std::isnan(sb.max_certified) && !std::isnan(sa.min_certified) &&
            sb.max_certified > 0) {
            v.ratio = sa.min_certified / sb.max_certified;
            v.ratio_worst = sa.min_certified / sb.min_certified;
            v.paradox = sb.max_certified < sa.min_certified;
        }
        rep.pairs.push_back(v);
    }

    // ratio-sanity observations across whatever settings are present; the
    // universal constants are unknown, so these are findings, not failures
    auto lookup = [&](const std::string& name) -> const BraessSettingSummary* {
        for (const auto& s : rep.settings)
            if (s.setting.name() == name) return &s;
        return nullptr;
    };
    auto check_ratio = [&](const char* lo_name, const char* hi_name, double factor,
                           const std::string& desc) {
        const BraessSettingSummary* lo = lookup(lo_name);
        const BraessSettingSummary* hi = lookup(hi_name);
        if (!lo || !hi || std::isnan(lo->min_certified) || std::isnan(hi->max_certified)) return;
        if (lo->min_certified < hi->max_certified / factor)
            rep.findings.push_back("ratio-sanity: " + desc + " (" +
                                   std::to_string(lo->min_certified) + " < " +
                                   std::to_string(hi->max_certified) + "/" +
                                   std::to_string(factor) + ")");
    };
    check_ratio("ic", "vanilla", 10.0, "worst ic value fell below max vanilla value / 10");
    check_ratio("pc", "vanilla", 10.0, "worst pc value fell below max vanilla value / 10");
    double logd = std::max(1.0, std::log2(rep.delta));
    check_ratio("pic", "ic", 10.0 * logd, "worst pic value fell below max ic value / (10 log2 delta)");
    return rep;
}

} // namespace sinrgame
