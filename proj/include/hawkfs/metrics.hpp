#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hawkfs {

// Rows are true classes, columns predicted classes.
struct ConfusionMatrix {
    std::vector<std::vector<std::int64_t>> counts;

    int n_classes() const { return static_cast<int>(counts.size()); }
    std::int64_t total() const;
    std::int64_t trace() const;
};

enum class Averaging {
    binary_positive_class,  // report the attack class (id 1); two-class only
    macro                   // unweighted mean over classes
};

Averaging default_averaging(int n_classes);
std::string to_string(Averaging a);
Averaging averaging_from_string(const std::string& s);

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    std::int64_t support = 0;
};

struct MetricsReport {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    Averaging averaging = Averaging::macro;
    std::vector<ClassMetrics> per_class;
};

ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred, int n_classes);

// Zero denominators yield zero metrics, so degenerate partitions (a class
// never predicted, or absent) still produce a defined report.
MetricsReport report(const ConfusionMatrix& cm, Averaging averaging);

}  // namespace hawkfs
