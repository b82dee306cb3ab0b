#include "hawkfs/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hawkfs/rng.hpp"

namespace hawkfs::synthetic {

namespace {

std::vector<std::string> numbered_names(const std::string& prefix, int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

void finish(Dataset& d) {
    d.row_ids.resize(d.labels.size());
    std::iota(d.row_ids.begin(), d.row_ids.end(), std::uint64_t{0});
    d.validate();
}

}  // namespace

Dataset two_blobs(int n_per_class, int dim, double separation, std::uint64_t seed) {
    Rng rng(seed);
    Vector direction(dim);
    for (int j = 0; j < dim; ++j) direction(j) = rng.normal();
    direction.normalize();

    Dataset d;
    d.features.resize(2 * n_per_class, dim);
    d.labels.reserve(static_cast<std::size_t>(2 * n_per_class));
    for (int c = 0; c < 2; ++c) {
        const double sign = c == 0 ? -0.5 : 0.5;
        for (int i = 0; i < n_per_class; ++i) {
            const Eigen::Index r = c * n_per_class + i;
            for (int j = 0; j < dim; ++j) {
                d.features(r, j) = sign * separation * direction(j) + rng.normal();
            }
            d.labels.push_back(c);
        }
    }
    d.feature_names = numbered_names("x", dim);
    d.class_names = {"neg", "pos"};
    finish(d);
    return d;
}

Dataset informative_noise(int n_samples, int n_informative, int n_noise, double gap,
                          double noise_sd, std::uint64_t seed) {
    Rng rng(seed);
    const int dim = n_informative + n_noise;

    Dataset d;
    d.features.resize(n_samples, dim);
    d.labels.resize(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const int y = i < n_samples / 2 ? 0 : 1;
        d.labels[static_cast<std::size_t>(i)] = y;
        const double mu = y == 0 ? 0.5 - gap / 2.0 : 0.5 + gap / 2.0;
        for (int j = 0; j < n_informative; ++j) {
            d.features(i, j) = std::clamp(mu + noise_sd * rng.normal(), 0.0, 1.0);
        }
        for (int j = n_informative; j < dim; ++j) {
            d.features(i, j) = rng.uniform();
        }
    }
    d.feature_names = numbered_names("feat", dim);
    d.class_names = {"neg", "pos"};
    finish(d);
    return d;
}

Dataset phishing_like(int n_samples, std::uint64_t seed) {
    Rng rng(seed);
    constexpr int kDim = 48;
    // signal strength per column, in class-mean gap units of one noise sd
    Vector strength = Vector::Zero(kDim);
    for (int j = 0; j < 6; ++j) strength(j) = 1.4;
    for (int j = 6; j < 14; ++j) strength(j) = 0.7;
    for (int j = 14; j < 24; ++j) strength(j) = 0.3;
    // columns 24..47 carry no signal

    // mixed scales: page-feature style counts and ratios
    Vector scale(kDim), offset(kDim);
    for (int j = 0; j < kDim; ++j) {
        const int kind = j % 3;
        scale(j) = kind == 0 ? 1.0 : (kind == 1 ? 25.0 : 400.0);
        offset(j) = kind == 2 ? 200.0 : 0.0;
    }

    Dataset d;
    d.features.resize(n_samples, kDim);
    d.labels.resize(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const int y = i < n_samples / 2 ? 0 : 1;
        d.labels[static_cast<std::size_t>(i)] = y;
        const double side = y == 0 ? -0.5 : 0.5;
        for (int j = 0; j < kDim; ++j) {
            const double z = side * strength(j) + rng.normal();
            d.features(i, j) = offset(j) + scale(j) * z;
        }
    }
    d.feature_names = numbered_names("page_feat_", kDim);
    d.class_names = {"legitimate", "phishing"};
    finish(d);
    return d;
}

Dataset botnet_device_like(int n_samples, std::uint64_t seed) {
    Rng rng(seed);
    constexpr int kDim = 115;
    const int n_benign = std::max(1, n_samples * 8 / 100);
    const int n_attack = n_samples - n_benign;

    // Traffic-statistic templates: benign baseline plus two attack modes
    // that inflate overlapping feature groups.
    Vector base(kDim), mode_a = Vector::Zero(kDim), mode_b = Vector::Zero(kDim), spread(kDim);
    for (int j = 0; j < kDim; ++j) {
        base(j) = std::exp(rng.uniform(-1.0, 6.0));  // wildly varying magnitudes
        spread(j) = 0.08 * base(j);
        if (j % 5 == 0 || j % 7 == 0) mode_a(j) = base(j) * rng.uniform(0.5, 2.0);
        if (j % 4 == 0 || j % 7 == 0) mode_b(j) = base(j) * rng.uniform(0.5, 2.0);
    }

    Dataset d;
    d.features.resize(n_samples, kDim);
    d.labels.resize(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const bool benign = i < n_benign;
        d.labels[static_cast<std::size_t>(i)] = benign ? 0 : 1;
        const bool first_mode = !benign && (i - n_benign) < n_attack / 2;
        for (int j = 0; j < kDim; ++j) {
            double v = base(j) + spread(j) * rng.normal();
            if (!benign) v += first_mode ? mode_a(j) : mode_b(j);
            d.features(i, j) = v;
        }
    }
    d.feature_names = numbered_names("traffic_stat_", kDim);
    d.class_names = {"benign", "attack"};
    finish(d);
    return d;
}

}  // namespace hawkfs::synthetic
