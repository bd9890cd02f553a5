#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>

namespace eegvoc {

enum class FeatureKind { eeg_set1, eeg_set2, eeg_set3, mfcc, reduced };

std::string feature_kind_name(FeatureKind k);
FeatureKind feature_kind_from_name(const std::string& name);

// A fixed-rate sequence of feature vectors, time-major: data(t, i) is
// dimension i of frame t. Used for EEG feature streams, MFCC tracks and
// reduced (post-KPCA) features alike.
struct FeatureSequence {
    Eigen::MatrixXf data;  // frames x dim
    double frame_rate_hz = 0.0;
    FeatureKind kind = FeatureKind::mfcc;

    Eigen::Index frames() const { return data.rows(); }
    Eigen::Index dim() const { return data.cols(); }

    // Throws ShapeError when empty or InvalidInputError on non-finite values.
    void validate() const;

    // On-disk form: raw little-endian float32, row-major frames x dim, plus a
    // JSON sidecar "<stem>.json" holding {kind, dim, frame_rate_hz}.
    void save(const std::filesystem::path& f32_path) const;
    static FeatureSequence load(const std::filesystem::path& f32_path);
};

}  // namespace eegvoc
