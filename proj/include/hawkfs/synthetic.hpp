#pragma once

#include <cstdint>

#include "hawkfs/dataset.hpp"

namespace hawkfs::synthetic {

// Two Gaussian clusters per class along a random direction; linearly
// separable for separation well above the unit noise scale.
Dataset two_blobs(int n_per_class, int dim, double separation, std::uint64_t seed);

// Binary task where the first n_informative features carry a class-mean gap
// and the rest are uniform noise. Every informative feature contributes an
// independent signal, so dropping one measurably hurts the Bayes error.
Dataset informative_noise(int n_samples, int n_informative, int n_noise, double gap,
                          double noise_sd, std::uint64_t seed);

// Balanced 48-feature web-page-style benchmark with a spread of strong,
// medium, and weak signals plus pure-noise columns and mixed feature
// scales. Stands in for the public phishing data when it is not on disk.
Dataset phishing_like(int n_samples, std::uint64_t seed);

// Heavily imbalanced 115-feature traffic-statistics benchmark: a small
// benign cluster against two attack modes, nearly separable, wildly varying
// feature scales. Stands in for one integrated device file of the public
// IoT botnet data.
Dataset botnet_device_like(int n_samples, std::uint64_t seed);

}  // namespace hawkfs::synthetic
