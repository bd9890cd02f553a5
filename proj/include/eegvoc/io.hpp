#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace eegvoc::io {

// Raw little-endian float32 array files (no header).
std::vector<float> read_f32(const std::filesystem::path& path);
void write_f32(const std::filesystem::path& path, const float* data, size_t count);

// Mono 16-bit PCM RIFF/WAVE.
struct WavData {
    std::vector<int16_t> samples;
    int sample_rate_hz = 0;
};
WavData read_wav(const std::filesystem::path& path);
void write_wav(const std::filesystem::path& path, const std::vector<int16_t>& samples,
               int sample_rate_hz);

// Float samples are clamped to [-1, 1] and scaled by 32767.
std::vector<int16_t> pcm_from_float(const std::vector<double>& x);
std::vector<double> pcm_to_float(const std::vector<int16_t>& x);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

// FNV-1a, used for content ids in reports.
uint64_t fnv1a(const void* data, size_t len);
uint64_t fnv1a_file(const std::filesystem::path& path);
std::string hex64(uint64_t v);

}  // namespace eegvoc::io
