#include "hawkfs/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hawkfs::io {

void atomic_write_text(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, target);
}

void write_json(const nlohmann::json& j, const std::string& path) {
    atomic_write_text(path, j.dump(2) + "\n");
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return {buf, res.ptr};
}

void write_dataset_csv(const Dataset& d, const std::string& path) {
    std::string out;
    out.reserve(static_cast<std::size_t>(d.n_samples()) * 16);
    for (const auto& name : d.feature_names) {
        out += name;
        out += ',';
    }
    out += "label\n";
    for (Eigen::Index i = 0; i < d.n_samples(); ++i) {
        for (Eigen::Index j = 0; j < d.n_features(); ++j) {
            out += format_double(d.features(i, j));
            out += ',';
        }
        out += d.class_names[static_cast<std::size_t>(d.labels[static_cast<std::size_t>(i)])];
        out += '\n';
    }
    atomic_write_text(path, out);
}

void write_features_csv(const Dataset& d, const std::string& path) {
    std::string out;
    for (Eigen::Index j = 0; j < d.n_features(); ++j) {
        if (j > 0) out += ',';
        out += d.feature_names[static_cast<std::size_t>(j)];
    }
    out += '\n';
    for (Eigen::Index i = 0; i < d.n_samples(); ++i) {
        for (Eigen::Index j = 0; j < d.n_features(); ++j) {
            if (j > 0) out += ',';
            out += format_double(d.features(i, j));
        }
        out += '\n';
    }
    atomic_write_text(path, out);
}

void write_convergence_csv(const hho::ConvergenceCurve& curve, const std::string& path) {
    std::string out = "iteration,best_fitness\n";
    for (std::size_t t = 0; t < curve.best_fitness.size(); ++t) {
        out += std::to_string(t + 1);
        out += ',';
        out += format_double(curve.best_fitness[t]);
        out += '\n';
    }
    atomic_write_text(path, out);
}

nlohmann::json normalization_to_json(const NormalizationParams& params) {
    nlohmann::json j;
    j["min"] = std::vector<double>(params.min.begin(), params.min.end());
    j["max"] = std::vector<double>(params.max.begin(), params.max.end());
    return j;
}

NormalizationParams normalization_from_json(const nlohmann::json& j) {
    const auto lo = j.at("min").get<std::vector<double>>();
    const auto hi = j.at("max").get<std::vector<double>>();
    if (lo.size() != hi.size()) {
        throw std::invalid_argument("normalization params: min/max length mismatch");
    }
    NormalizationParams p;
    p.min = Eigen::Map<const Vector>(lo.data(), static_cast<Eigen::Index>(lo.size()));
    p.max = Eigen::Map<const Vector>(hi.data(), static_cast<Eigen::Index>(hi.size()));
    return p;
}

}  // namespace hawkfs::io
