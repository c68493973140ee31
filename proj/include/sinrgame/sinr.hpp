#pragma once
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "sinrgame/network.hpp"

namespace sinrgame {

/// Precomputed path-loss table: gain(i, j) = d(s_i, r_j)^alpha, so the
/// received power of sender i at receiver j is P_i / gain(i, j). Everything
/// in this header funnels through it; one-shot entry points build one on
/// the fly, hot loops (learning, enumeration) keep one alive.
class Channel {
public:
    explicit Channel(const Network& net) : n_(net.n()), noise_(net.noise()) {
        gain_.resize(static_cast<std::size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                gain_[static_cast<std::size_t>(i) * n_ + j] = std::pow(net.dist(i, j), net.alpha());
    }

    int n() const { return n_; }
    double noise() const { return noise_; }
    double gain(int i, int j) const { return gain_[static_cast<std::size_t>(i) * n_ + j]; }

    double received(int i, int j, int p) const {
        return p == 0 ? 0.0 : static_cast<double>(p) / gain(i, j);
    }

private:
    int n_;
    double noise_;
    std::vector<double> gain_;
};

namespace detail {

inline double sinr_at(const Channel& ch, const std::vector<int>& powers, int j) {
    double num = ch.received(j, j, powers[static_cast<std::size_t>(j)]);
    if (num <= 0) return 0.0;
    double den = ch.noise();
    for (int i = 0; i < ch.n(); ++i)
        if (i != j && powers[static_cast<std::size_t>(i)] > 0)
            den += ch.received(i, j, powers[static_cast<std::size_t>(i)]);
    if (den == 0) return std::numeric_limits<double>::infinity();
    return num / den;
}

inline bool succeeds_no_ic(const Channel& ch, const std::vector<int>& powers, int j,
                           double threshold) {
    if (powers[static_cast<std::size_t>(j)] <= 0) return false;
    return sinr_at(ch, powers, j) >= threshold;
}

inline DecodeOutcome ic_decode(const Channel& ch, const std::vector<int>& powers, int j,
                               double threshold) {
    if (powers[static_cast<std::size_t>(j)] <= 0)
        throw std::invalid_argument("ic_decode: link is not transmitting");

    struct Sig { double power; int link; };
    std::vector<Sig> sigs;
    sigs.reserve(static_cast<std::size_t>(ch.n()));
    for (int i = 0; i < ch.n(); ++i)
        if (powers[static_cast<std::size_t>(i)] > 0)
            sigs.push_back({ch.received(i, j, powers[static_cast<std::size_t>(i)]), i});
    // strongest first; ties by link index for determinism. Signals of equal
    // received power stay in each other's denominators, so exact ties at
    // beta > 1 block the chain.
    std::sort(sigs.begin(), sigs.end(), [](const Sig& a, const Sig& b) {
        return a.power != b.power ? a.power > b.power : a.link < b.link;
    });
    // once the chain reaches signal k everything stronger is cancelled, so
    // its denominator is the suffix sum; accumulating weakest-first keeps
    // widely spread magnitudes exact
    std::vector<double> rest_after(sigs.size() + 1, 0.0);
    for (std::size_t k = sigs.size(); k-- > 0;)
        rest_after[k] = rest_after[k + 1] + sigs[k].power;

    DecodeOutcome out;
    for (std::size_t k = 0; k < sigs.size(); ++k) {
        const Sig& s = sigs[k];
        double rest = rest_after[k + 1] + ch.noise();
        bool decodable = rest <= 0 ? s.power > 0 : (s.power / rest) >= threshold;
        if (!decodable) {
            out.success = false;
            if (s.link != j) out.blocked_at = s.link;
            return out;
        }
        out.cancelled.push_back(s.link);
        if (s.link == j) {
            out.success = true;
            return out;
        }
    }
    throw std::logic_error("ic_decode: own signal not in active set");
}

inline bool succeeds(const Channel& ch, const std::vector<int>& powers, int j,
                     double threshold, bool ic) {
    if (powers[static_cast<std::size_t>(j)] <= 0) return false;
    if (!ic) return succeeds_no_ic(ch, powers, j, threshold);
    return ic_decode(ch, powers, j, threshold).success;
}

} // namespace detail

/// P_{i,j} = P_i / d(s_i, r_j)^alpha.
inline double received_power(const Network& net, int i, int j, int p) {
    if (p < 0 || p > net.p_max()) throw std::invalid_argument("power outside [0, p_max]");
    if (p == 0) return 0.0;
    return static_cast<double>(p) / std::pow(net.dist(i, j), net.alpha());
}

/// SINR of link j under `profile`. Interference sums the other active links
/// only. With no interference and zero noise the result is +infinity, which
/// compares greater than any threshold.
inline double sinr(const Network& net, const PowerProfile& profile, int j) {
    profile.validate(net);
    if (j < 0 || j >= net.n()) throw std::out_of_range("link index out of range");
    if (profile.powers[static_cast<std::size_t>(j)] <= 0)
        throw std::invalid_argument("sinr: link is not transmitting");
    return detail::sinr_at(Channel(net), profile.powers, j);
}

inline bool succeeds_no_ic(const Network& net, const PowerProfile& profile, int j,
                           double threshold) {
    profile.validate(net);
    if (j < 0 || j >= net.n()) throw std::out_of_range("link index out of range");
    return detail::succeeds_no_ic(Channel(net), profile.powers, j, threshold);
}

/// Sequential interference cancellation at receiver r_j: repeatedly decode
/// the strongest not-yet-cancelled signal against everything else still in
/// the air, until the own signal is decoded or the chain stalls.
inline DecodeOutcome ic_decode(const Network& net, const PowerProfile& profile, int j,
                               double threshold) {
    profile.validate(net);
    if (j < 0 || j >= net.n()) throw std::out_of_range("link index out of range");
    return detail::ic_decode(Channel(net), profile.powers, j, threshold);
}

/// Success under a technology setting, at its effective threshold. Callers
/// in uniform settings must pass profiles restricted to {0, p_max}; this
/// dispatcher does not enforce the strategy space.
inline bool succeeds(const Network& net, const PowerProfile& profile, int j,
                     const TechSetting& setting) {
    profile.validate(net);
    if (j < 0 || j >= net.n()) throw std::out_of_range("link index out of range");
    return detail::succeeds(Channel(net), profile.powers, j, setting.effective_beta(net),
                            setting.ic);
}

/// Normalized, clamped-at-1 interference of link w on link v:
/// min{1, c_v * P_{w,v} / P_{v,v}} with c_v = beta / (1 - beta*N*d_vv^a / P_v).
inline double affectance(const Network& net, int w, int v, const PowerProfile& profile,
                         double threshold) {
    profile.validate(net);
    if (w < 0 || w >= net.n() || v < 0 || v >= net.n())
        throw std::out_of_range("link index out of range");
    int pv = profile.powers[static_cast<std::size_t>(v)];
    if (pv <= 0) throw std::invalid_argument("affectance: link v is not transmitting");
    double dvv_a = std::pow(net.dist(v, v), net.alpha());
    double denom = 1.0 - threshold * net.noise() * dvv_a / pv;
    if (denom <= 0)
        throw std::invalid_argument("affectance: link infeasible in isolation");
    if (w == v || profile.powers[static_cast<std::size_t>(w)] == 0) return 0.0;
    double cv = threshold / denom;
    double pwv = received_power(net, w, v, profile.powers[static_cast<std::size_t>(w)]);
    double pvv = static_cast<double>(pv) / dvv_a;
    return std::min(1.0, cv * pwv / pvv);
}

struct AffectanceSums {
    std::vector<int> links;      // the subset, in input order
    std::vector<double> caused;  // a_w(L') per link w in `links`
    std::vector<double> suffered; // a_{L'}(v) per link v in `links`
};

inline AffectanceSums affectance_sums(const Network& net, const std::vector<int>& subset,
                                      const PowerProfile& profile, double threshold) {
    AffectanceSums out;
    out.links = subset;
    out.caused.assign(subset.size(), 0.0);
    out.suffered.assign(subset.size(), 0.0);
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = 0; b < subset.size(); ++b) {
            if (a == b) continue;
            double v = affectance(net, subset[a], subset[b], profile, threshold);
            out.caused[a] += v;
            out.suffered[b] += v;
        }
    return out;
}

/// True iff every link in `subset` succeeds simultaneously. The profile must
/// assign positive power exactly to the subset members.
inline bool is_feasible(const Network& net, const std::vector<int>& subset,
                        const PowerProfile& profile, const TechSetting& setting) {
    profile.validate(net);
    std::vector<char> in(static_cast<std::size_t>(net.n()), 0);
    for (int i : subset) {
        if (i < 0 || i >= net.n()) throw std::out_of_range("link index out of range");
        in[static_cast<std::size_t>(i)] = 1;
    }
    for (int i = 0; i < net.n(); ++i)
        if ((profile.powers[static_cast<std::size_t>(i)] > 0) != (in[static_cast<std::size_t>(i)] != 0))
            throw std::invalid_argument("is_feasible: profile support must equal subset");
    Channel ch(net);
    double beta = setting.effective_beta(net);
    for (int j : subset)
        if (!detail::succeeds(ch, profile.powers, j, beta, setting.ic)) return false;
    return true;
}

/// Ratio of the longest link length to the minimum sender-receiver distance
/// over all pairs (not only matched pairs).
inline double delta(const Network& net) {
    double longest = 0.0, closest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < net.n(); ++i) {
        longest = std::max(longest, net.dist(i, i));
        for (int j = 0; j < net.n(); ++j) closest = std::min(closest, net.dist(i, j));
    }
    return longest / closest;
}

/// Links of a feasible set whose total caused affectance is at most 2.
/// Averaging over column sums <= 1 guarantees at least half the set survives.
inline std::vector<int> amenable_subset(const Network& net, const std::vector<int>& subset,
                                        const PowerProfile& profile, double threshold) {
    TechSetting plain = TechSetting::vanilla().at_beta(threshold);
    if (!is_feasible(net, subset, profile, plain))
        throw std::invalid_argument("amenable_subset: input set is not feasible");
    AffectanceSums sums = affectance_sums(net, subset, profile, threshold);
    std::vector<int> out;
    for (std::size_t a = 0; a < subset.size(); ++a)
        if (sums.caused[a] <= 2.0) out.push_back(subset[a]);
    return out;
}

/// Extracts from an IC-feasible set a subset that is feasible without IC at
/// the same powers. Walks the pool in ascending link order; a link joins the
/// output only if none of the signals its receiver cancelled were already
/// kept, and everything it cancelled is removed from the pool.
inline std::vector<int> ic_feasible_to_plain_subset(const Network& net,
                                                    const std::vector<int>& subset,
                                                    const PowerProfile& profile) {
    for (int i : subset) {
        int p = profile.powers.at(static_cast<std::size_t>(i));
        if (p < 1) throw std::invalid_argument("ic_feasible_to_plain_subset: powers on L must be >= 1");
    }
    TechSetting with_ic = TechSetting::with_ic();
    if (!is_feasible(net, subset, profile, with_ic))
        throw std::invalid_argument("ic_feasible_to_plain_subset: input set is not IC-feasible");

    Channel ch(net);
    double beta = net.beta();
    std::vector<int> pool = subset;
    std::sort(pool.begin(), pool.end());
    std::vector<char> removed(static_cast<std::size_t>(net.n()), 0);
    std::vector<char> kept(static_cast<std::size_t>(net.n()), 0);
    std::vector<int> out;
    for (int i : pool) {
        if (removed[static_cast<std::size_t>(i)]) continue;
        DecodeOutcome dec = detail::ic_decode(ch, profile.powers, i, beta);
        bool clash = false;
        for (int c : dec.cancelled)
            if (c != i && kept[static_cast<std::size_t>(c)]) { clash = true; break; }
        removed[static_cast<std::size_t>(i)] = 1;
        if (clash) continue;
        out.push_back(i);
        kept[static_cast<std::size_t>(i)] = 1;
        for (int c : dec.cancelled)
            if (c != i) removed[static_cast<std::size_t>(c)] = 1;
    }
    return out;
}

} // namespace sinrgame
