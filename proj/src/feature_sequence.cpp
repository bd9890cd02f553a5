#include "eegvoc/feature_sequence.hpp"

#include <nlohmann/json.hpp>

#include "eegvoc/errors.hpp"
#include "eegvoc/io.hpp"

namespace eegvoc {

using ordered_json = nlohmann::ordered_json;

std::string feature_kind_name(FeatureKind k) {
    switch (k) {
        case FeatureKind::eeg_set1: return "eeg_set1";
        case FeatureKind::eeg_set2: return "eeg_set2";
        case FeatureKind::eeg_set3: return "eeg_set3";
        case FeatureKind::mfcc: return "mfcc";
        case FeatureKind::reduced: return "reduced";
    }
    throw InvalidInputError("unknown feature kind");
}

FeatureKind feature_kind_from_name(const std::string& name) {
    if (name == "eeg_set1") return FeatureKind::eeg_set1;
    if (name == "eeg_set2") return FeatureKind::eeg_set2;
    if (name == "eeg_set3") return FeatureKind::eeg_set3;
    if (name == "mfcc") return FeatureKind::mfcc;
    if (name == "reduced") return FeatureKind::reduced;
    throw InvalidInputError("unknown feature kind: " + name);
}

void FeatureSequence::validate() const {
    if (data.rows() < 1 || data.cols() < 1)
        throw ShapeError("feature sequence must have at least one frame and one dimension");
    if (!data.allFinite())
        throw InvalidInputError("feature sequence contains non-finite values");
}

static std::filesystem::path sidecar_path(const std::filesystem::path& f32_path) {
    auto p = f32_path;
    p.replace_extension(".json");
    return p;
}

void FeatureSequence::save(const std::filesystem::path& f32_path) const {
    validate();
    // row-major on disk
    Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = data;
    io::write_f32(f32_path, rm.data(), static_cast<size_t>(rm.size()));
    ordered_json j;
    j["kind"] = feature_kind_name(kind);
    j["dim"] = data.cols();
    j["frame_rate_hz"] = frame_rate_hz;
    io::write_text(sidecar_path(f32_path), j.dump(2) + "\n");
}

FeatureSequence FeatureSequence::load(const std::filesystem::path& f32_path) {
    const auto side = sidecar_path(f32_path);
    if (!std::filesystem::exists(f32_path))
        throw NotFoundError("missing feature file " + f32_path.string());
    if (!std::filesystem::exists(side))
        throw NotFoundError("missing feature sidecar " + side.string());
    const auto j = nlohmann::json::parse(io::read_text(side));
    FeatureSequence fs;
    fs.kind = feature_kind_from_name(j.at("kind").get<std::string>());
    fs.frame_rate_hz = j.at("frame_rate_hz").get<double>();
    const auto dim = j.at("dim").get<Eigen::Index>();
    const auto raw = io::read_f32(f32_path);
    if (dim < 1 || raw.size() % static_cast<size_t>(dim) != 0)
        throw CorruptBundleError(f32_path.string() + ": size inconsistent with dim");
    const auto frames = static_cast<Eigen::Index>(raw.size() / static_cast<size_t>(dim));
    Eigen::Map<const Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
        raw.data(), frames, dim);
    fs.data = m;
    fs.validate();
    return fs;
}

}  // namespace eegvoc
