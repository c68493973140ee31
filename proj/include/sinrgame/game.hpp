#pragma once
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sinrgame/sinr.hpp"

namespace sinrgame {

/// Allowed power levels under a setting: {0, p_max} without power control,
/// {0, 1, ..., p_max} with it. Always sorted ascending, always contains 0.
inline std::vector<int> strategy_space(const Network& net, const TechSetting& setting) {
    std::vector<int> s;
    if (setting.power_control) {
        s.resize(static_cast<std::size_t>(net.p_max()) + 1);
        for (int p = 0; p <= net.p_max(); ++p) s[static_cast<std::size_t>(p)] = p;
    } else {
        s = {0, net.p_max()};
    }
    return s;
}

inline bool in_strategy_space(const Network& net, const TechSetting& setting, int power) {
    if (power == 0 || power == net.p_max()) return true;
    return setting.power_control && power >= 1 && power <= net.p_max();
}

namespace detail {

inline int utility(const Channel& ch, const std::vector<int>& powers, int i,
                   double threshold, bool ic) {
    if (powers[static_cast<std::size_t>(i)] == 0) return 0;
    return succeeds(ch, powers, i, threshold, ic) ? 1 : -1;
}

} // namespace detail

/// 1 if transmitted and succeeded, -1 if transmitted and failed, 0 if silent.
inline int utility(const Network& net, const PowerProfile& profile, int i,
                   const TechSetting& setting) {
    profile.validate(net);
    if (i < 0 || i >= net.n()) throw std::out_of_range("link index out of range");
    if (!in_strategy_space(net, setting, profile.powers[static_cast<std::size_t>(i)]))
        throw std::invalid_argument("utility: strategy outside the setting's space");
    return detail::utility(Channel(net), profile.powers, i, setting.effective_beta(net),
                           setting.ic);
}

/// Number of links with utility 1 (the round's achieved capacity).
inline int profile_value(const Network& net, const PowerProfile& profile,
                         const TechSetting& setting) {
    profile.validate(net);
    Channel ch(net);
    double beta = setting.effective_beta(net);
    int count = 0;
    for (int i = 0; i < net.n(); ++i)
        if (detail::succeeds(ch, profile.powers, i, beta, setting.ic)) ++count;
    return count;
}

/// Best reply of player i with everyone else fixed; ties break toward the
/// lowest power level.
inline std::pair<int, int> best_response(const Network& net, const PowerProfile& profile,
                                         int i, const TechSetting& setting) {
    profile.validate(net);
    if (i < 0 || i >= net.n()) throw std::out_of_range("link index out of range");
    Channel ch(net);
    double beta = setting.effective_beta(net);
    std::vector<int> powers = profile.powers;
    int best_strategy = 0, best_utility = 0; // playing 0 always yields 0
    for (int s : strategy_space(net, setting)) {
        powers[static_cast<std::size_t>(i)] = s;
        int u = detail::utility(ch, powers, i, beta, setting.ic);
        if (u > best_utility) {
            best_utility = u;
            best_strategy = s;
        }
    }
    return {best_strategy, best_utility};
}

/// No unilateral deviation over the setting's full strategy space strictly
/// improves any player.
inline bool is_pure_nash(const Network& net, const PowerProfile& profile,
                         const TechSetting& setting) {
    profile.validate(net);
    Channel ch(net);
    double beta = setting.effective_beta(net);
    std::vector<int> powers = profile.powers;
    const std::vector<int> space = strategy_space(net, setting);
    for (int i = 0; i < net.n(); ++i) {
        int played = powers[static_cast<std::size_t>(i)];
        if (!in_strategy_space(net, setting, played))
            throw std::invalid_argument("is_pure_nash: profile outside strategy space");
        int current = detail::utility(ch, powers, i, beta, setting.ic);
        for (int s : space) {
            if (s == played) continue;
            powers[static_cast<std::size_t>(i)] = s;
            int u = detail::utility(ch, powers, i, beta, setting.ic);
            powers[static_cast<std::size_t>(i)] = played;
            if (u > current) return false;
        }
    }
    return true;
}

/// All pure Nash profiles with their values, by exhaustive enumeration in
/// lexicographic order (last player's power varies fastest).
inline std::vector<std::pair<PowerProfile, int>>
enumerate_pure_nash(const Network& net, const TechSetting& setting,
                    std::uint64_t budget = 1'000'000) {
    const std::vector<int> space = strategy_space(net, setting);
    double size_d = std::pow(static_cast<double>(space.size()), net.n());
    if (!(size_d <= static_cast<double>(budget)))
        throw std::runtime_error("search space exceeds budget: " + std::to_string(size_d) +
                                 " profiles > " + std::to_string(budget));

    Channel ch(net);
    double beta = setting.effective_beta(net);
    std::vector<std::pair<PowerProfile, int>> found;
    std::vector<std::size_t> idx(static_cast<std::size_t>(net.n()), 0);
    std::vector<int> powers(static_cast<std::size_t>(net.n()), 0);
    while (true) {
        for (int i = 0; i < net.n(); ++i) powers[static_cast<std::size_t>(i)] = space[idx[static_cast<std::size_t>(i)]];

        bool nash = true;
        for (int i = 0; nash && i < net.n(); ++i) {
            int played = powers[static_cast<std::size_t>(i)];
            int current = detail::utility(ch, powers, i, beta, setting.ic);
            for (int s : space) {
                if (s == played) continue;
                powers[static_cast<std::size_t>(i)] = s;
                int u = detail::utility(ch, powers, i, beta, setting.ic);
                powers[static_cast<std::size_t>(i)] = played;
                if (u > current) { nash = false; break; }
            }
        }
        if (nash) {
            int value = 0;
            for (int i = 0; i < net.n(); ++i)
                if (detail::succeeds(ch, powers, i, beta, setting.ic)) ++value;
            found.emplace_back(PowerProfile(powers), value);
        }

        int pos = net.n() - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == space.size()) {
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
    }
    return found;
}

} // namespace sinrgame
