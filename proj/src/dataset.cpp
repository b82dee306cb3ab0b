#include "hawkfs/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hawkfs/rng.hpp"

namespace hawkfs {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw, std::size_t row, std::size_t col) {
    const std::string s = trim(raw);
    if (s.empty()) {
        throw std::runtime_error("missing value at row " + std::to_string(row) +
                                 ", column " + std::to_string(col));
    }
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("non-numeric value '" + s + "' at row " +
                                 std::to_string(row) + ", column " + std::to_string(col));
    }
}

struct RawTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

RawTable read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    RawTable t;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    t.header = split_line(line);
    for (auto& h : t.header) h = trim(h);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != t.header.size()) {
            throw std::runtime_error("row " + std::to_string(t.rows.size()) + " in " + path +
                                     " has " + std::to_string(cells.size()) + " cells, expected " +
                                     std::to_string(t.header.size()));
        }
        t.rows.push_back(std::move(cells));
    }
    if (t.rows.empty()) throw std::runtime_error("no data rows in " + path);
    return t;
}

Dataset from_table(const RawTable& t, int label_idx,
                   const std::optional<LabelRegistry>& fixed_labels) {
    const auto n_rows = t.rows.size();
    const auto n_cols = t.header.size();
    if (n_cols < 2) throw std::runtime_error("need at least one feature column and one label column");

    Dataset d;
    d.features.resize(static_cast<Eigen::Index>(n_rows), static_cast<Eigen::Index>(n_cols - 1));
    d.labels.resize(n_rows);
    d.row_ids.resize(n_rows);
    for (std::size_t c = 0; c < n_cols; ++c) {
        if (static_cast<int>(c) != label_idx) d.feature_names.push_back(t.header[c]);
    }

    std::unordered_map<std::string, int> label_map;
    if (fixed_labels) {
        d.class_names = *fixed_labels;
        for (std::size_t i = 0; i < fixed_labels->size(); ++i) {
            label_map[(*fixed_labels)[i]] = static_cast<int>(i);
        }
    }

    for (std::size_t r = 0; r < n_rows; ++r) {
        Eigen::Index fc = 0;
        for (std::size_t c = 0; c < n_cols; ++c) {
            if (static_cast<int>(c) == label_idx) continue;
            d.features(static_cast<Eigen::Index>(r), fc++) = parse_cell(t.rows[r][c], r, c);
        }
        const std::string lab = trim(t.rows[r][static_cast<std::size_t>(label_idx)]);
        if (lab.empty()) {
            throw std::runtime_error("missing value at row " + std::to_string(r) +
                                     ", column " + std::to_string(label_idx));
        }
        auto it = label_map.find(lab);
        if (it == label_map.end()) {
            if (fixed_labels) {
                throw std::runtime_error("label '" + lab + "' at row " + std::to_string(r) +
                                         " is not in the label registry");
            }
            const int id = static_cast<int>(d.class_names.size());
            it = label_map.emplace(lab, id).first;
            d.class_names.push_back(lab);
        }
        d.labels[r] = it->second;
        d.row_ids[r] = r;
    }
    d.validate();
    return d;
}

// Shuffled per-class index lists; class order is by id so the stream of
// random draws is reproducible.
std::vector<std::vector<Eigen::Index>> class_buckets(const Dataset& data, Rng& rng) {
    std::vector<std::vector<Eigen::Index>> buckets(static_cast<std::size_t>(data.n_classes()));
    for (Eigen::Index i = 0; i < data.n_samples(); ++i) {
        buckets[static_cast<std::size_t>(data.labels[static_cast<std::size_t>(i)])].push_back(i);
    }
    for (auto& b : buckets) {
        for (std::size_t i = b.size(); i > 1; --i) {
            std::swap(b[i - 1], b[rng.uniform_int(i)]);
        }
    }
    return buckets;
}

std::size_t floor_share(double fraction, std::size_t n) {
    return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n)));
}

}  // namespace

void Dataset::validate() const {
    if (features.rows() != static_cast<Eigen::Index>(labels.size())) {
        throw std::runtime_error("dataset: feature rows and label count differ");
    }
    if (features.cols() < 1) throw std::runtime_error("dataset: no feature columns");
    if (!feature_names.empty() &&
        static_cast<Eigen::Index>(feature_names.size()) != features.cols()) {
        throw std::runtime_error("dataset: feature name count mismatch");
    }
    if (!row_ids.empty() && row_ids.size() != labels.size()) {
        throw std::runtime_error("dataset: row id count mismatch");
    }
    const int c = n_classes();
    for (const int y : labels) {
        if (y < 0 || y >= c) throw std::runtime_error("dataset: label out of range");
    }
    if (!features.allFinite()) throw std::runtime_error("dataset: non-finite feature value");
}

Dataset load_csv(const std::string& path, const std::string& label_column,
                 const std::optional<LabelRegistry>& fixed_labels) {
    const RawTable t = read_table(path);
    const auto it = std::find(t.header.begin(), t.header.end(), trim(label_column));
    if (it == t.header.end()) {
        throw std::invalid_argument("label column '" + label_column + "' not found in " + path);
    }
    return from_table(t, static_cast<int>(it - t.header.begin()), fixed_labels);
}

Dataset load_csv(const std::string& path, const std::string& label_column) {
    return load_csv(path, label_column, std::nullopt);
}

Dataset load_csv(const std::string& path, int label_column) {
    const RawTable t = read_table(path);
    if (label_column < 0 || label_column >= static_cast<int>(t.header.size())) {
        throw std::invalid_argument("label column index " + std::to_string(label_column) +
                                    " out of range for " + path);
    }
    return from_table(t, label_column, std::nullopt);
}

Dataset integrate(const std::vector<IntegrateSource>& sources) {
    if (sources.empty()) throw std::invalid_argument("integrate: no source files");

    Dataset out;
    std::unordered_map<int, int> id_map;  // source class id -> dense id
    std::vector<Matrix> blocks;
    std::size_t total_rows = 0;

    for (const auto& src : sources) {
        const RawTable t = read_table(src.path);
        if (out.feature_names.empty()) {
            out.feature_names = t.header;
        } else if (t.header != out.feature_names) {
            throw std::runtime_error("schema mismatch: " + src.path +
                                     " does not match the first source file");
        }
        if (!id_map.contains(src.class_id)) {
            id_map[src.class_id] = static_cast<int>(out.class_names.size());
            out.class_names.push_back(src.class_name.empty() ? std::to_string(src.class_id)
                                                             : src.class_name);
        }
        const int dense_id = id_map[src.class_id];

        Matrix block(static_cast<Eigen::Index>(t.rows.size()),
                     static_cast<Eigen::Index>(t.header.size()));
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            for (std::size_t c = 0; c < t.header.size(); ++c) {
                block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    parse_cell(t.rows[r][c], r, c);
            }
        }
        total_rows += t.rows.size();
        out.labels.insert(out.labels.end(), t.rows.size(), dense_id);
        blocks.push_back(std::move(block));
    }

    out.features.resize(static_cast<Eigen::Index>(total_rows),
                        static_cast<Eigen::Index>(out.feature_names.size()));
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        out.features.middleRows(at, b.rows()) = b;
        at += b.rows();
    }
    out.row_ids.resize(total_rows);
    std::iota(out.row_ids.begin(), out.row_ids.end(), std::uint64_t{0});
    out.validate();
    return out;
}

NormalizationParams fit_normalizer(const Dataset& train) {
    if (train.n_samples() == 0) throw std::invalid_argument("fit_normalizer: empty dataset");
    return {train.features.colwise().minCoeff(), train.features.colwise().maxCoeff()};
}

Dataset apply_normalizer(const Dataset& data, const NormalizationParams& params) {
    if (data.n_features() != params.min.size() || data.n_features() != params.max.size()) {
        throw std::invalid_argument("apply_normalizer: dimension mismatch");
    }
    Dataset out = data;
    for (Eigen::Index j = 0; j < out.n_features(); ++j) {
        const double lo = params.min(j);
        const double range = params.max(j) - lo;
        if (range > 0.0) {
            out.features.col(j) = ((out.features.col(j).array() - lo) / range)
                                      .cwiseMax(0.0)
                                      .cwiseMin(1.0);
        } else {
            out.features.col(j).setZero();  // constant column
        }
    }
    return out;
}

Dataset take_rows(const Dataset& data, const std::vector<Eigen::Index>& rows) {
    Dataset out;
    out.feature_names = data.feature_names;
    out.class_names = data.class_names;  // full registry survives partitioning
    out.features.resize(static_cast<Eigen::Index>(rows.size()), data.n_features());
    out.labels.reserve(rows.size());
    out.row_ids.reserve(rows.size());
    Eigen::Index at = 0;
    for (const Eigen::Index r : rows) {
        out.features.row(at++) = data.features.row(r);
        out.labels.push_back(data.labels[static_cast<std::size_t>(r)]);
        out.row_ids.push_back(data.row_ids.empty() ? static_cast<std::uint64_t>(r)
                                                   : data.row_ids[static_cast<std::size_t>(r)]);
    }
    return out;
}

std::pair<Dataset, Dataset> split_two(const Dataset& data, double fraction,
                                      bool stratified, std::uint64_t seed) {
    if (fraction <= 0.0 || fraction >= 1.0) {
        throw std::invalid_argument("split fraction must lie strictly inside (0,1)");
    }
    Rng rng(seed);
    const std::size_t n = static_cast<std::size_t>(data.n_samples());
    const std::size_t target = floor_share(fraction, n);
    std::vector<Eigen::Index> first, second;

    if (stratified) {
        auto buckets = class_buckets(data, rng);
        // Largest-remainder apportionment: the first partition receives
        // floor(fraction * n) rows overall while every class lands within
        // one row of its proportional share.
        std::vector<std::size_t> take(buckets.size(), 0);
        std::vector<std::pair<double, std::size_t>> remainders;
        std::size_t assigned = 0;
        for (std::size_t c = 0; c < buckets.size(); ++c) {
            if (buckets[c].empty()) continue;
            const double share = fraction * static_cast<double>(buckets[c].size());
            take[c] = floor_share(fraction, buckets[c].size());
            assigned += take[c];
            remainders.emplace_back(-(share - static_cast<double>(take[c])), c);
        }
        std::sort(remainders.begin(), remainders.end());
        for (const auto& [neg_rem, c] : remainders) {
            if (assigned >= target) break;
            if (take[c] < buckets[c].size()) {
                ++take[c];
                ++assigned;
            }
        }
        for (std::size_t c = 0; c < buckets.size(); ++c) {
            if (buckets[c].empty()) continue;
            if (take[c] == 0 || take[c] == buckets[c].size()) {
                throw std::invalid_argument("class '" + data.class_names[c] +
                                            "' has too few samples to appear in every partition");
            }
            first.insert(first.end(), buckets[c].begin(),
                         buckets[c].begin() + static_cast<std::ptrdiff_t>(take[c]));
            second.insert(second.end(), buckets[c].begin() + static_cast<std::ptrdiff_t>(take[c]),
                          buckets[c].end());
        }
    } else {
        std::vector<Eigen::Index> all(n);
        std::iota(all.begin(), all.end(), Eigen::Index{0});
        for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.uniform_int(i)]);
        if (target == 0 || target == n) {
            throw std::invalid_argument("too few samples to split");
        }
        first.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(target));
        second.assign(all.begin() + static_cast<std::ptrdiff_t>(target), all.end());
    }

    // Partitions keep the original row order.
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());
    return {take_rows(data, first), take_rows(data, second)};
}

Splits split(const Dataset& data, const SplitSpec& spec) {
    if (spec.train_fraction <= 0.0 || spec.train_fraction >= 1.0 ||
        spec.validation_fraction_of_train <= 0.0 || spec.validation_fraction_of_train >= 1.0) {
        throw std::invalid_argument("split fractions must lie strictly inside (0,1)");
    }
    auto [pool, test] = split_two(data, spec.train_fraction, spec.stratified, spec.seed);
    auto [train, validation] = split_two(pool, 1.0 - spec.validation_fraction_of_train,
                                         spec.stratified, derive_seed(spec.seed, 0x5eed));
    return {std::move(train), std::move(validation), std::move(test)};
}

std::vector<Dataset> partition_clients(const Dataset& train, int n_clients, std::uint64_t seed) {
    if (n_clients < 1) throw std::invalid_argument("partition_clients: need at least one client");
    if (static_cast<Eigen::Index>(n_clients) > train.n_samples()) {
        throw std::invalid_argument("partition_clients: more clients than samples");
    }
    Rng rng(seed);
    auto buckets = class_buckets(train, rng);

    // Deal each class round-robin; the starting client advances with the
    // class remainders so global sizes stay within one of each other.
    std::vector<std::vector<Eigen::Index>> assigned(static_cast<std::size_t>(n_clients));
    std::size_t start = 0;
    for (auto& bucket : buckets) {
        for (std::size_t j = 0; j < bucket.size(); ++j) {
            assigned[(start + j) % static_cast<std::size_t>(n_clients)].push_back(bucket[j]);
        }
        start = (start + bucket.size()) % static_cast<std::size_t>(n_clients);
    }

    std::vector<Dataset> out;
    out.reserve(static_cast<std::size_t>(n_clients));
    for (auto& rows : assigned) {
        std::sort(rows.begin(), rows.end());
        out.push_back(take_rows(train, rows));
    }
    return out;
}

Dataset subsample_stratified(const Dataset& data, std::size_t cap, std::uint64_t seed) {
    if (cap == 0 || static_cast<std::size_t>(data.n_samples()) <= cap) return data;
    Rng rng(seed);
    auto buckets = class_buckets(data, rng);
    const double keep = static_cast<double>(cap) / static_cast<double>(data.n_samples());

    std::vector<std::size_t> take(buckets.size(), 0);
    std::size_t total = 0;
    for (std::size_t c = 0; c < buckets.size(); ++c) {
        take[c] = floor_share(keep, buckets[c].size());
        if (take[c] == 0 && !buckets[c].empty()) take[c] = 1;  // never drop a class entirely
        total += take[c];
    }
    // Flooring leaves headroom; fill it from the largest classes.
    while (total < cap) {
        std::size_t best = buckets.size();
        for (std::size_t c = 0; c < buckets.size(); ++c) {
            if (take[c] < buckets[c].size() &&
                (best == buckets.size() ||
                 buckets[c].size() - take[c] > buckets[best].size() - take[best])) {
                best = c;
            }
        }
        if (best == buckets.size()) break;
        ++take[best];
        ++total;
    }

    std::vector<Eigen::Index> rows;
    rows.reserve(total);
    for (std::size_t c = 0; c < buckets.size(); ++c) {
        rows.insert(rows.end(), buckets[c].begin(),
                    buckets[c].begin() + static_cast<std::ptrdiff_t>(take[c]));
    }
    std::sort(rows.begin(), rows.end());
    return take_rows(data, rows);
}

Dataset concat(const Dataset& a, const Dataset& b) {
    if (a.n_features() != b.n_features()) throw std::invalid_argument("concat: feature count mismatch");
    if (a.class_names != b.class_names) throw std::invalid_argument("concat: class registry mismatch");
    Dataset out;
    out.feature_names = a.feature_names;
    out.class_names = a.class_names;
    out.features.resize(a.n_samples() + b.n_samples(), a.n_features());
    out.features.topRows(a.n_samples()) = a.features;
    out.features.bottomRows(b.n_samples()) = b.features;
    out.labels = a.labels;
    out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
    out.row_ids = a.row_ids;
    out.row_ids.insert(out.row_ids.end(), b.row_ids.begin(), b.row_ids.end());
    return out;
}

}  // namespace hawkfs
