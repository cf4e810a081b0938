#include "oensim/pixel_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oensim/common.hpp"
#include "oensim/energy_snr.hpp"
#include "oensim/rng.hpp"

namespace oensim::pixel {

SequenceMode mode_from_subcycles(std::uint64_t r) {
    switch (r) {
        case 1: return SequenceMode::kUnipolarSingle;
        case 2: return SequenceMode::kBipolarComplementary;
        case 4: return SequenceMode::kSymmetrizedBipolar;
    }
    throw std::invalid_argument("sub-cycle count must be one of {1, 2, 4}");
}

namespace {
double encode01(double v, const char* what, EncodeStats* stats) {
    if (std::isnan(v)) throw std::invalid_argument(std::string(what) + " is NaN");
    if (v < -1.0 || v > 1.0) {
        if (stats) ++stats->clipped;
        v = std::clamp(v, -1.0, 1.0);
    }
    return (v + 1.0) / 2.0;
}
}  // namespace

double encode_input(double x, EncodeStats* stats) { return encode01(x, "input", stats); }
double encode_weight(double w, EncodeStats* stats) { return encode01(w, "weight", stats); }
double decode_input(double r) { return 2.0 * r - 1.0; }
double decode_weight(double c) { return 2.0 * c - 1.0; }

PixelState make_pixel(const hw::OpticalParams& optics) {
    PixelState s;
    s.params = {optics.tap_gain_plus, optics.tap_gain_minus, optics.full_well_electrons,
                optics.c_pix_f, optics.reset_reference_v};
    return s;
}

void reset(PixelState& s) {
    s.q_plus_e = s.q_minus_e = s.q_plus_alt_e = s.q_minus_alt_e = 0.0;
    s.saturated = false;
}

double default_slot_energy(const hw::OpticalParams& optics, const hw::ClockingParams& clocking,
                           std::uint64_t n_vec) {
    return 2.0 * snr::min_pulse_energy(optics, clocking, n_vec).e_u_j;
}

double dot_gain_electrons(const hw::OpticalParams& optics, double full_scale_slot_energy_j,
                          SequenceMode mode) {
    const double per_pair =
        optics.eta_dm * optics.eta_em * full_scale_slot_energy_j / optics.photon_energy();
    return mode == SequenceMode::kSymmetrizedBipolar ? 2.0 * per_pair : per_pair;
}

namespace {

struct Collector {
    PixelState& state;
    const AccumulateOptions& opts;
    std::mt19937_64 rng;

    double sample(double mean) {
        if (mean < 0.0) mean = 0.0;
        if (!opts.noise_on) return mean;
        std::poisson_distribution<long long> dist(mean);
        return static_cast<double>(dist(rng));
    }

    void deposit(double& tap, double mean) {
        tap += sample(mean);
        if (tap >= state.params.full_well_electrons) {
            tap = state.params.full_well_electrons;
            state.saturated = true;
        }
    }
};

}  // namespace

void accumulate(PixelState& state, std::span<const DriveSample> sequence, SequenceMode mode,
                const hw::OpticalParams& optics, const hw::ClockingParams& clocking,
                const AccumulateOptions& opts) {
    for (const DriveSample& d : sequence) {
        if (std::isnan(d.photo_r) || std::isnan(d.gate_c) || d.photo_r < 0.0 || d.photo_r > 1.0 ||
            d.gate_c < 0.0 || d.gate_c > 1.0)
            throw std::invalid_argument("drive sample outside [0, 1]");
    }
    state.mode = mode;
    double slot_energy = opts.full_scale_slot_energy_j;
    if (slot_energy <= 0.0)
        slot_energy = default_slot_energy(optics, clocking, sequence.size() ? sequence.size() : 1);
    const double n_fs =
        optics.eta_dm * optics.eta_em * slot_energy / optics.photon_energy();  // e- per full slot
    const double dark_per_slot = optics.i_dark_a / (kElectronCharge * clocking.f_clk_hz);
    const double gp = state.params.tap_gain_plus;
    const double gm = state.params.tap_gain_minus;

    Collector col{state, opts, make_stream(opts.rng_seed), 0};

    // One slot: photo charge `photo * n_fs` steered C : (1-C) between the
    // given taps, plus dark on both.
    auto slot = [&](double photo, double c, double& tap_p, double& tap_m) {
        col.deposit(tap_p, gp * (n_fs * photo * c + dark_per_slot));
        col.deposit(tap_m, gm * (n_fs * photo * (1.0 - c) + dark_per_slot));
    };

    for (const DriveSample& d : sequence) {
        switch (mode) {
            case SequenceMode::kUnipolarSingle:
                slot(d.photo_r, d.gate_c, state.q_plus_e, state.q_minus_e);
                break;
            case SequenceMode::kBipolarComplementary:
                slot(d.photo_r, d.gate_c, state.q_plus_e, state.q_minus_e);
                slot(1.0 - d.photo_r, 1.0 - d.gate_c, state.q_plus_e, state.q_minus_e);
                break;
            case SequenceMode::kSymmetrizedBipolar:
                slot(d.photo_r, d.gate_c, state.q_plus_e, state.q_minus_e);
                slot(1.0 - d.photo_r, 1.0 - d.gate_c, state.q_plus_e, state.q_minus_e);
                slot(d.photo_r, 1.0 - d.gate_c, state.q_plus_alt_e, state.q_minus_alt_e);
                slot(1.0 - d.photo_r, d.gate_c, state.q_plus_alt_e, state.q_minus_alt_e);
                break;
        }
    }

    if (opts.kt_c_noise_on || opts.read_noise_electrons > 0.0) {
        // kTC at 300 K referred to electrons: sigma = sqrt(kB T C) / q.
        const double ktc_sigma = opts.kt_c_noise_on
                                     ? std::sqrt(1.380649e-23 * 300.0 * state.params.c_pix_f) /
                                           kElectronCharge
                                     : 0.0;
        const double sigma = std::hypot(ktc_sigma, opts.read_noise_electrons);
        std::normal_distribution<double> dist(0.0, sigma);
        for (double* tap : {&state.q_plus_e, &state.q_minus_e, &state.q_plus_alt_e,
                            &state.q_minus_alt_e})
            *tap += dist(col.rng);
    }
}

double differential_electrons(const PixelState& s) {
    switch (s.mode) {
        case SequenceMode::kUnipolarSingle: return s.q_plus_e;
        case SequenceMode::kBipolarComplementary: return s.q_plus_e - s.q_minus_e;
        case SequenceMode::kSymmetrizedBipolar:
            return (s.q_plus_e - s.q_minus_e) - (s.q_plus_alt_e - s.q_minus_alt_e);
    }
    return 0.0;
}

Readout read_out(const PixelState& state, std::uint64_t adc_bits, double range_electrons) {
    if (adc_bits < 1 || adc_bits > 62) throw std::domain_error("adc_bits must be in [1, 62]");
    if (range_electrons <= 0.0) throw std::domain_error("range must be > 0");
    const double lv = std::pow(2.0, static_cast<double>(adc_bits)) - 1.0;
    const double step = 2.0 * range_electrons / lv;
    const std::int64_t top = (std::int64_t{1} << (adc_bits - 1)) - 1;
    const double u = differential_electrons(state) / step;
    Readout r;
    r.overflow = std::abs(u) > static_cast<double>(top) + 0.5;
    r.code = std::clamp<std::int64_t>(std::llround(u), -top, top);
    r.value_electrons = static_cast<double>(r.code) * step;
    return r;
}

double tap_voltage(double charge_electrons, const PixelParams& params) {
    return charge_electrons * kElectronCharge / params.c_pix_f;
}

double mac_exact(std::span<const double> x, std::span<const double> w) {
    if (x.size() != w.size()) throw std::invalid_argument("mac_exact: length mismatch");
    // Neumaier summation in extended precision.
    long double sum = 0.0L, comp = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const long double term = static_cast<long double>(x[i]) * static_cast<long double>(w[i]);
        const long double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return static_cast<double>(sum + comp);
}

}  // namespace oensim::pixel
