#include "eegvoc/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "eegvoc/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "on-disk formats are little-endian; big-endian hosts are unsupported");

namespace eegvoc::io {

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw NotFoundError("cannot open " + path.string());
    return f;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + path.string());
    return f;
}

template <typename T>
void put(std::ofstream& f, T v) {
    f.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& f) {
    T v{};
    f.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}

}  // namespace

std::vector<float> read_f32(const std::filesystem::path& path) {
    auto f = open_in(path);
    f.seekg(0, std::ios::end);
    const auto bytes = static_cast<size_t>(f.tellg());
    f.seekg(0);
    if (bytes % sizeof(float) != 0)
        throw CorruptBundleError(path.string() + ": size not a multiple of 4 bytes");
    std::vector<float> out(bytes / sizeof(float));
    f.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(bytes));
    if (!f) throw CorruptBundleError(path.string() + ": short read");
    return out;
}

void write_f32(const std::filesystem::path& path, const float* data, size_t count) {
    auto f = open_out(path);
    f.write(reinterpret_cast<const char*>(data),
            static_cast<std::streamsize>(count * sizeof(float)));
}

WavData read_wav(const std::filesystem::path& path) {
    auto f = open_in(path);
    char tag[4];
    f.read(tag, 4);
    if (!f || std::memcmp(tag, "RIFF", 4) != 0)
        throw CorruptBundleError(path.string() + ": not a RIFF file");
    get<uint32_t>(f);  // riff size
    f.read(tag, 4);
    if (!f || std::memcmp(tag, "WAVE", 4) != 0)
        throw CorruptBundleError(path.string() + ": not a WAVE file");

    WavData wav;
    bool have_fmt = false;
    uint16_t channels = 0, bits = 0;
    while (f.read(tag, 4)) {
        const auto chunk_size = get<uint32_t>(f);
        if (std::memcmp(tag, "fmt ", 4) == 0) {
            const auto audio_format = get<uint16_t>(f);
            channels = get<uint16_t>(f);
            wav.sample_rate_hz = static_cast<int>(get<uint32_t>(f));
            get<uint32_t>(f);  // byte rate
            get<uint16_t>(f);  // block align
            bits = get<uint16_t>(f);
            if (chunk_size > 16) f.seekg(chunk_size - 16, std::ios::cur);
            if (audio_format != 1)
                throw CorruptBundleError(path.string() + ": only PCM wav supported");
            have_fmt = true;
        } else if (std::memcmp(tag, "data", 4) == 0) {
            if (!have_fmt) throw CorruptBundleError(path.string() + ": data before fmt");
            if (channels != 1 || bits != 16)
                throw CorruptBundleError(path.string() + ": expected mono 16-bit PCM");
            wav.samples.resize(chunk_size / 2);
            f.read(reinterpret_cast<char*>(wav.samples.data()), chunk_size);
            if (!f) throw CorruptBundleError(path.string() + ": truncated data chunk");
            return wav;
        } else {
            f.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
        }
    }
    throw CorruptBundleError(path.string() + ": no data chunk");
}

void write_wav(const std::filesystem::path& path, const std::vector<int16_t>& samples,
               int sample_rate_hz) {
    auto f = open_out(path);
    const uint32_t data_bytes = static_cast<uint32_t>(samples.size() * 2);
    f.write("RIFF", 4);
    put<uint32_t>(f, 36 + data_bytes);
    f.write("WAVE", 4);
    f.write("fmt ", 4);
    put<uint32_t>(f, 16);
    put<uint16_t>(f, 1);  // PCM
    put<uint16_t>(f, 1);  // mono
    put<uint32_t>(f, static_cast<uint32_t>(sample_rate_hz));
    put<uint32_t>(f, static_cast<uint32_t>(sample_rate_hz * 2));
    put<uint16_t>(f, 2);
    put<uint16_t>(f, 16);
    f.write("data", 4);
    put<uint32_t>(f, data_bytes);
    f.write(reinterpret_cast<const char*>(samples.data()), data_bytes);
}

std::vector<int16_t> pcm_from_float(const std::vector<double>& x) {
    std::vector<int16_t> out(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        const double v = std::clamp(x[i], -1.0, 1.0) * 32767.0;
        out[i] = static_cast<int16_t>(std::lrint(v));
    }
    return out;
}

std::vector<double> pcm_to_float(const std::vector<int16_t>& x) {
    std::vector<double> out(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = static_cast<double>(x[i]) / 32768.0;
    return out;
}

std::string read_text(const std::filesystem::path& path) {
    auto f = open_in(path);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    auto f = open_out(path);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
}

uint64_t fnv1a(const void* data, size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

uint64_t fnv1a_file(const std::filesystem::path& path) {
    const std::string bytes = read_text(path);
    return fnv1a(bytes.data(), bytes.size());
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

}  // namespace eegvoc::io
