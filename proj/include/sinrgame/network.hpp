#pragma once
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sinrgame {

/// A set of n directed links in the SINR physical model. The canonical
/// representation is the full sender-to-receiver distance matrix
/// dist(i, j) = d(s_i, r_j); planar coordinates are an optional constructor
/// and are kept around for serialization when present.
class Network {
public:
    using Point = std::array<double, 2>;

    static Network from_matrix(int n, std::vector<double> dist, double alpha,
                               double noise, double beta, int p_max) {
        Network net;
        net.n_ = n;
        net.dist_ = std::move(dist);
        net.alpha_ = alpha;
        net.noise_ = noise;
        net.beta_ = beta;
        net.p_max_ = p_max;
        net.embedded_ = false;
        net.validate();
        return net;
    }

    static Network from_points(std::vector<Point> senders, std::vector<Point> receivers,
                               double alpha, double noise, double beta, int p_max) {
        if (senders.size() != receivers.size() || senders.empty())
            throw std::invalid_argument("from_points: sender/receiver counts must match and be nonzero");
        Network net;
        net.n_ = static_cast<int>(senders.size());
        net.dist_.resize(static_cast<std::size_t>(net.n_) * net.n_);
        for (int i = 0; i < net.n_; ++i)
            for (int j = 0; j < net.n_; ++j)
                net.dist_[static_cast<std::size_t>(i) * net.n_ + j] =
                    std::hypot(senders[i][0] - receivers[j][0], senders[i][1] - receivers[j][1]);
        net.alpha_ = alpha;
        net.noise_ = noise;
        net.beta_ = beta;
        net.p_max_ = p_max;
        net.embedded_ = true;
        net.senders_ = std::move(senders);
        net.receivers_ = std::move(receivers);
        net.validate();
        return net;
    }

    int n() const { return n_; }
    double alpha() const { return alpha_; }
    double noise() const { return noise_; }
    double beta() const { return beta_; }
    int p_max() const { return p_max_; }
    bool embedded() const { return embedded_; }
    const std::optional<std::vector<Point>>& senders() const { return senders_; }
    const std::optional<std::vector<Point>>& receivers() const { return receivers_; }

    /// d(s_i, r_j)
    double dist(int i, int j) const {
        check_index(i);
        check_index(j);
        return dist_[static_cast<std::size_t>(i) * n_ + j];
    }

    const std::vector<double>& dist_matrix() const { return dist_; }

    /// Returns a copy with one matrix entry replaced (drops any coordinate
    /// source, since the matrix no longer matches it).
    Network with_dist(int i, int j, double value) const {
        Network net = *this;
        net.check_index(i);
        net.check_index(j);
        net.dist_[static_cast<std::size_t>(i) * n_ + j] = value;
        net.embedded_ = false;
        net.senders_.reset();
        net.receivers_.reset();
        net.validate();
        return net;
    }

    Network scaled(double factor) const {
        if (!(factor > 0)) throw std::invalid_argument("scale factor must be positive");
        Network net = *this;
        for (double& d : net.dist_) d *= factor;
        if (net.senders_)
            for (auto& p : *net.senders_) { p[0] *= factor; p[1] *= factor; }
        if (net.receivers_)
            for (auto& p : *net.receivers_) { p[0] *= factor; p[1] *= factor; }
        return net;
    }

    Network with_noise(double noise) const {
        Network net = *this;
        net.noise_ = noise;
        net.validate();
        return net;
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("link index out of range");
    }

    void validate() const {
        if (n_ < 1) throw std::invalid_argument("network needs at least one link");
        if (dist_.size() != static_cast<std::size_t>(n_) * n_)
            throw std::invalid_argument("distance matrix size must be n*n");
        for (double d : dist_)
            if (!(d > 0) || !std::isfinite(d))
                throw std::invalid_argument("all distances must be positive finite reals");
        if (!(alpha_ > 0)) throw std::invalid_argument("alpha must be positive");
        if (!(noise_ >= 0)) throw std::invalid_argument("noise must be nonnegative");
        if (!(beta_ > 1)) throw std::invalid_argument("beta must exceed 1");
        if (p_max_ < 1) throw std::invalid_argument("p_max must be at least 1");
    }

    int n_ = 0;
    std::vector<double> dist_;
    double alpha_ = 2.0;
    double noise_ = 0.0;
    double beta_ = 2.0;
    int p_max_ = 1;
    bool embedded_ = false;
    std::optional<std::vector<Point>> senders_;
    std::optional<std::vector<Point>> receivers_;
};

/// One round of transmission powers, one integer per link in [0, p_max].
struct PowerProfile {
    std::vector<int> powers;

    PowerProfile() = default;
    explicit PowerProfile(std::vector<int> p) : powers(std::move(p)) {}

    static PowerProfile silent(int n) { return PowerProfile(std::vector<int>(n, 0)); }
    static PowerProfile uniform(int n, int p) { return PowerProfile(std::vector<int>(n, p)); }

    /// Positive power exactly on `subset`, all of it at level p.
    static PowerProfile on_subset(int n, const std::vector<int>& subset, int p) {
        PowerProfile prof = silent(n);
        for (int i : subset) prof.powers.at(static_cast<std::size_t>(i)) = p;
        return prof;
    }

    int size() const { return static_cast<int>(powers.size()); }

    void validate(const Network& net) const {
        if (size() != net.n()) throw std::invalid_argument("profile length must equal network size");
        for (int p : powers)
            if (p < 0 || p > net.p_max())
                throw std::invalid_argument("power outside [0, p_max]");
    }
};

/// Which technology is active. When power_control is false the strategy set
/// is {0, p_max}; when true it is {0, 1, ..., p_max}. The effective SINR
/// threshold is beta_override when present, else the network beta.
struct TechSetting {
    bool power_control = false;
    bool ic = false;
    std::optional<double> beta_override;

    static TechSetting vanilla() { return {false, false, std::nullopt}; }
    static TechSetting with_ic() { return {false, true, std::nullopt}; }
    static TechSetting with_pc() { return {true, false, std::nullopt}; }
    static TechSetting pic() { return {true, true, std::nullopt}; }

    TechSetting at_beta(double beta) const {
        TechSetting s = *this;
        s.beta_override = beta;
        return s;
    }

    double effective_beta(const Network& net) const {
        return beta_override ? *beta_override : net.beta();
    }

    std::string name() const {
        std::string base = power_control ? (ic ? "pic" : "pc") : (ic ? "ic" : "vanilla");
        if (beta_override) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "%s@beta=%g", base.c_str(), *beta_override);
            return buf;
        }
        return base;
    }
};

/// Result of sequential cancellation at one receiver. `cancelled` lists the
/// decoded-and-removed links in order of non-increasing received power; on
/// success the last entry is the receiver's own sender. `blocked_at` is set
/// only when the chain stalled before reaching the own signal.
struct DecodeOutcome {
    bool success = false;
    std::vector<int> cancelled;
    std::optional<int> blocked_at;
};

} // namespace sinrgame
