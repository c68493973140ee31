#pragma once
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sinrgame/game.hpp"
#include "sinrgame/rng.hpp"

namespace sinrgame {

/// A T x n record of played powers under one setting.
struct History {
    std::vector<std::vector<int>> rounds;
    TechSetting setting;

    int T() const { return static_cast<int>(rounds.size()); }
    int n() const { return rounds.empty() ? 0 : static_cast<int>(rounds.front().size()); }
};

struct RegretReport {
    std::vector<double> regrets;   // R_i per player
    std::vector<double> attempts;  // p_u, fraction of rounds with power > 0
    std::vector<double> successes; // s_u
    double value = 0.0;            // sum_u s_u
    double max_regret = 0.0;
    double epsilon = 0.0;
    bool certified = false;
};

/// Utility player i would have earned playing each strategy against the
/// others' actual powers this round. Returned parallel to strategy_space.
inline std::vector<std::pair<int, int>>
counterfactual_utilities(const Network& net, const PowerProfile& round_profile, int i,
                         const TechSetting& setting) {
    round_profile.validate(net);
    if (i < 0 || i >= net.n()) throw std::out_of_range("link index out of range");
    Channel ch(net);
    double beta = setting.effective_beta(net);
    std::vector<int> powers = round_profile.powers;
    std::vector<std::pair<int, int>> out;
    for (int s : strategy_space(net, setting)) {
        powers[static_cast<std::size_t>(i)] = s;
        out.emplace_back(s, detail::utility(ch, powers, i, beta, setting.ic));
    }
    return out;
}

namespace detail {

// Per-player totals of realized utility and of counterfactual utility for
// every fixed strategy, accumulated in one pass over the history.
struct RegretTotals {
    std::vector<int> space;
    std::vector<long long> counterfactual; // n x |space|, row-major
    std::vector<long long> realized;       // n
    std::vector<long long> attempts;       // n
    std::vector<long long> successes;      // n
};

inline RegretTotals regret_totals(const Network& net, const History& history) {
    RegretTotals tot;
    tot.space = strategy_space(net, history.setting);
    const int n = net.n();
    const std::size_t K = tot.space.size();
    tot.counterfactual.assign(static_cast<std::size_t>(n) * K, 0);
    tot.realized.assign(static_cast<std::size_t>(n), 0);
    tot.attempts.assign(static_cast<std::size_t>(n), 0);
    tot.successes.assign(static_cast<std::size_t>(n), 0);

    Channel ch(net);
    double beta = history.setting.effective_beta(net);
    bool ic = history.setting.ic;
    std::vector<int> powers(static_cast<std::size_t>(n));
    for (const auto& round : history.rounds) {
        if (static_cast<int>(round.size()) != n)
            throw std::invalid_argument("history round width must equal network size");
        powers = round;
        for (int i = 0; i < n; ++i) {
            int played = powers[static_cast<std::size_t>(i)];
            int realized = utility(ch, powers, i, beta, ic);
            tot.realized[static_cast<std::size_t>(i)] += realized;
            if (played > 0) {
                ++tot.attempts[static_cast<std::size_t>(i)];
                if (realized == 1) ++tot.successes[static_cast<std::size_t>(i)];
            }
            for (std::size_t k = 0; k < K; ++k) {
                int s = tot.space[k];
                int u;
                if (s == played) {
                    u = realized;
                } else {
                    powers[static_cast<std::size_t>(i)] = s;
                    u = utility(ch, powers, i, beta, ic);
                    powers[static_cast<std::size_t>(i)] = played;
                }
                tot.counterfactual[static_cast<std::size_t>(i) * K + k] += u;
            }
        }
    }
    return tot;
}

inline double regret_from_totals(const RegretTotals& tot, int i, int T) {
    const std::size_t K = tot.space.size();
    long long best = tot.counterfactual[static_cast<std::size_t>(i) * K];
    for (std::size_t k = 1; k < K; ++k)
        best = std::max(best, tot.counterfactual[static_cast<std::size_t>(i) * K + k]);
    return (static_cast<double>(best) - static_cast<double>(tot.realized[static_cast<std::size_t>(i)])) / T;
}

} // namespace detail

/// Best fixed strategy's average utility minus the realized average; may be
/// negative.
inline double regret(const Network& net, const History& history, int i) {
    if (history.T() < 1) throw std::invalid_argument("history must have at least one round");
    if (i < 0 || i >= net.n()) throw std::out_of_range("link index out of range");
    detail::RegretTotals tot = detail::regret_totals(net, history);
    return detail::regret_from_totals(tot, i, history.T());
}

/// Full report: per-player regret, attempt and success fractions, history
/// value, and whether every player is within epsilon.
inline RegretReport certify(const Network& net, const History& history, double epsilon) {
    if (epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
    if (history.T() < 1) throw std::invalid_argument("history must have at least one round");
    const int T = history.T();
    const int n = net.n();
    detail::RegretTotals tot = detail::regret_totals(net, history);

    RegretReport rep;
    rep.epsilon = epsilon;
    rep.regrets.resize(static_cast<std::size_t>(n));
    rep.attempts.resize(static_cast<std::size_t>(n));
    rep.successes.resize(static_cast<std::size_t>(n));
    rep.max_regret = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        rep.regrets[static_cast<std::size_t>(i)] = detail::regret_from_totals(tot, i, T);
        rep.attempts[static_cast<std::size_t>(i)] =
            static_cast<double>(tot.attempts[static_cast<std::size_t>(i)]) / T;
        rep.successes[static_cast<std::size_t>(i)] =
            static_cast<double>(tot.successes[static_cast<std::size_t>(i)]) / T;
        rep.value += rep.successes[static_cast<std::size_t>(i)];
        rep.max_regret = std::max(rep.max_regret, rep.regrets[static_cast<std::size_t>(i)]);
    }
    rep.certified = rep.max_regret <= epsilon;
    return rep;
}

/// Wraps a proof-specified play sequence for certification and valuation.
inline History scripted_history(const Network& net, const TechSetting& setting,
                                const std::vector<std::vector<int>>& script) {
    if (script.empty()) throw std::invalid_argument("script must have at least one round");
    for (const auto& round : script) {
        if (static_cast<int>(round.size()) != net.n())
            throw std::invalid_argument("script round width must equal network size");
        for (int p : round)
            if (!in_strategy_space(net, setting, p))
                throw std::invalid_argument("script entry outside strategy space");
    }
    return History{script, setting};
}

inline double hedge_default_eta(std::size_t space_size, long long T) {
    // utilities span [-1, 1]; halve the usual unit-range rate
    return std::sqrt(8.0 * std::log(static_cast<double>(space_size)) / static_cast<double>(T)) / 2.0;
}

/// Full-information exponential weights. Every player keeps one weight per
/// strategy, samples by inverse CDF from its own counter-based stream, then
/// scales each weight by exp(eta * counterfactual utility). Deterministic in
/// (seed, T, eta, net, setting).
inline History hedge_run(const Network& net, const TechSetting& setting, long long T,
                         double eta, std::uint64_t seed) {
    if (T < 1) throw std::invalid_argument("T must be at least 1");
    if (!(eta > 0)) throw std::invalid_argument("eta must be positive");

    const std::vector<int> space = strategy_space(net, setting);
    const std::size_t K = space.size();
    const int n = net.n();
    Channel ch(net);
    const double beta = setting.effective_beta(net);
    const bool ic = setting.ic;
    const double scale[3] = {std::exp(-eta), 1.0, std::exp(eta)};

    std::vector<std::vector<double>> weights(static_cast<std::size_t>(n),
                                             std::vector<double>(K, 1.0 / static_cast<double>(K)));
    std::vector<CounterRng> streams;
    streams.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) streams.emplace_back(seed, static_cast<std::uint64_t>(i));

    History history;
    history.setting = setting;
    history.rounds.reserve(static_cast<std::size_t>(T));
    std::vector<int> powers(static_cast<std::size_t>(n), 0);

    for (long long t = 0; t < T; ++t) {
        for (int i = 0; i < n; ++i) {
            double u = streams[static_cast<std::size_t>(i)].unit_at(static_cast<std::uint64_t>(t));
            const std::vector<double>& w = weights[static_cast<std::size_t>(i)];
            double cum = 0.0;
            std::size_t pick = K - 1;
            for (std::size_t k = 0; k < K; ++k) {
                cum += w[k];
                if (u < cum) { pick = k; break; }
            }
            powers[static_cast<std::size_t>(i)] = space[pick];
        }
        history.rounds.push_back(powers);

        for (int i = 0; i < n; ++i) {
            int played = powers[static_cast<std::size_t>(i)];
            std::vector<double>& w = weights[static_cast<std::size_t>(i)];
            double sum = 0.0;
            for (std::size_t k = 0; k < K; ++k) {
                powers[static_cast<std::size_t>(i)] = space[k];
                int u = detail::utility(ch, powers, i, beta, ic);
                w[k] *= scale[u + 1];
                sum += w[k];
            }
            powers[static_cast<std::size_t>(i)] = played;
            for (std::size_t k = 0; k < K; ++k) w[k] /= sum;
        }
    }
    return history;
}

/// The attempts/successes sandwich: sum s <= sum p <= 2 sum s + eps*n.
inline bool attempts_successes_bound(const RegretReport& report, int n, double epsilon) {
    double sum_s = 0.0, sum_p = 0.0;
    for (double s : report.successes) sum_s += s;
    for (double p : report.attempts) sum_p += p;
    return sum_s <= sum_p && sum_p <= 2.0 * sum_s + epsilon * n;
}

} // namespace sinrgame
