#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace eegvoc::dsp {

// One second-order section, normalized so a0 = 1:
//   y[n] = b0 x[n] + b1 x[n-1] + b2 x[n-2] - a1 y[n-1] - a2 y[n-2]
struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;
};

struct IirFilter {
    std::vector<Biquad> sections;
    std::string description;

    // Largest pole magnitude across sections.
    double max_pole_radius() const;
    bool is_stable() const { return max_pole_radius() < 1.0 - 1e-9; }

    // Frequency response at f (Hz) for sampling rate fs (Hz), evaluated
    // directly on the unit circle.
    std::complex<double> response(double f_hz, double fs_hz) const;

    std::string coefficient_table() const;
};

// Butterworth band-pass realized as a cascade of biquads. `order` is the
// order of the band-pass transfer function (2 poles per section, so it must
// be even); magnitude is 1/sqrt(2) at both cut-offs.
IirFilter design_bandpass(int order, double low_hz, double high_hz, double fs_hz);

// Second-order notch with -3 dB bandwidth f0/q.
IirFilter design_notch(double f0_hz, double q, double fs_hz);

// Cascade of direct-form-II-transposed sections, zero initial state, causal.
std::vector<double> apply_iir(const IirFilter& filter, const std::vector<double>& signal);

// Forward-backward pass (zero phase, squared magnitude response).
std::vector<double> apply_iir_zero_phase(const IirFilter& filter,
                                         const std::vector<double>& signal);

// ---------------------------------------------------------------------------
// Independent component analysis

struct IcaModel {
    Eigen::MatrixXd unmixing;   // components x channels
    Eigen::MatrixXd mixing;     // channels x components
    Eigen::MatrixXd whitening;  // components x channels
    Eigen::VectorXd means;      // per channel
    std::vector<int> unconverged;  // component indices that hit max_iter

    Eigen::Index n_components() const { return unmixing.rows(); }
};

// Deflationary FastICA with tanh contrast on whitened, mean-centred data.
// Components that fail to converge within max_iter are listed in
// IcaModel::unconverged; the model is returned regardless.
IcaModel fit_fastica(const Eigen::MatrixXd& eeg, int n_components, uint64_t seed,
                     int max_iter = 200, double tol = 1e-4);

// Zero the rejected components in source space and project back.
Eigen::MatrixXd remove_components(const IcaModel& model, const Eigen::MatrixXd& eeg,
                                  const std::vector<int>& reject);

// ---------------------------------------------------------------------------
// Short-time Fourier transform

enum class WindowType { hann };

struct ComplexSpectrogram {
    Eigen::MatrixXcd frames;  // frames x bins, bins = n_fft/2 + 1
    int n_fft = 0;
    int hop = 0;
    WindowType window = WindowType::hann;
    double sample_rate_hz = 0.0;

    Eigen::Index n_frames() const { return frames.rows(); }
    Eigen::Index n_bins() const { return frames.cols(); }
    Eigen::MatrixXd magnitude() const { return frames.cwiseAbs(); }
};

// Hann-windowed one-sided STFT. The signal is zero-padded at the end so the
// last partial frame is kept; a signal shorter than n_fft yields one frame.
ComplexSpectrogram stft(const std::vector<double>& signal, int n_fft, int hop,
                        double sample_rate_hz = 0.0);

// Weighted overlap-add inverse with Hann synthesis window and COLA
// normalization. Output length is (frames - 1) * hop + n_fft.
std::vector<double> istft(const ComplexSpectrogram& spec);

// Periodic Hann window of length n.
std::vector<double> hann_window(int n);

// One-sided DFT of a real signal (thin FFT wrapper; n arbitrary).
std::vector<std::complex<double>> real_fft(const std::vector<double>& x);

}  // namespace eegvoc::dsp
