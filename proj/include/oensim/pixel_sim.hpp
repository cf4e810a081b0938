#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oensim/hardware.hpp"

namespace oensim::pixel {

// Drive sequence family. The enum value is the sub-cycle count per element.
enum class SequenceMode : std::uint64_t {
    kUnipolarSingle = 1,        // computes sum R_k * C_k; cannot represent negative products
    kBipolarComplementary = 2,  // computes sum (2R-1)(2C-1) in the tap differential
    kSymmetrizedBipolar = 4,    // as above, with first-order tap-mismatch cancellation
};

SequenceMode mode_from_subcycles(std::uint64_t r);

// One element of the drive sequence: photo response R (input) and gate
// control C (weight), both in [0, 1]. Encoded value = 2R-1, weight = 2C-1.
struct DriveSample {
    double photo_r = 0.5;
    double gate_c = 0.5;
};

struct EncodeStats {
    std::uint64_t clipped = 0;
};

// x in [-1, 1] -> R in [0, 1]; out-of-range inputs clip and count. NaN throws.
double encode_input(double x, EncodeStats* stats = nullptr);
double encode_weight(double w, EncodeStats* stats = nullptr);
double decode_input(double r);
double decode_weight(double c);

struct PixelParams {
    double tap_gain_plus = 1.0;
    double tap_gain_minus = 1.0;
    double full_well_electrons = 1e7;
    double c_pix_f = 10e-15;
    double reset_reference_v = 1.0;
};

// Charge state of one two-tap demodulator pixel, in electrons. The
// symmetrized sequence integrates its two complementary pairs into separate
// accumulators (the pixel is sampled once per pair and the two differentials
// are combined with opposite sign), which is what cancels the tap mismatch.
struct PixelState {
    double q_plus_e = 0.0;
    double q_minus_e = 0.0;
    double q_plus_alt_e = 0.0;   // second phase, symmetrized sequence only
    double q_minus_alt_e = 0.0;
    bool saturated = false;
    SequenceMode mode = SequenceMode::kBipolarComplementary;
    PixelParams params;
};

PixelState make_pixel(const hw::OpticalParams& optics);
void reset(PixelState& state);

struct AccumulateOptions {
    bool noise_on = false;           // Poisson draw per (element, sub-cycle, tap)
    std::uint64_t rng_seed = 0;
    double full_scale_slot_energy_j = 0.0;  // 0 -> default_slot_energy at the sequence length
    bool kt_c_noise_on = false;      // optional Gaussian reset-noise add-on
    double read_noise_electrons = 0.0;  // optional Gaussian readout add-on (per tap)
};

// Full-scale per-sub-cycle emitter pulse energy at the shot-noise-optimal
// drive: twice the minimal unit pulse energy (the unit energy is the
// average-drive slot energy; the full swing is twice the average).
double default_slot_energy(const hw::OpticalParams& optics, const hw::ClockingParams& clocking,
                           std::uint64_t n_vec);

// Mean photoelectrons collected per unit of dot-product value, for scaling
// readouts back to value units.
double dot_gain_electrons(const hw::OpticalParams& optics, double full_scale_slot_energy_j,
                          SequenceMode mode);

// Runs the drive sequence on the pixel. Per element and sub-cycle, the
// full-scale slot energy is scaled by the photo response (or its complement)
// and split between the taps by the gate control (or its complement):
//   r=2: slot 1 collects (R*C -> tap+, R*(1-C) -> tap-),
//        slot 2 collects ((1-R)(1-C) -> tap+, (1-R)*C -> tap-);
//   r=4: the pair repeats with the gate complemented into the alt taps;
//   r=1: single slot, R*C -> tap+, R*(1-C) -> tap-.
// Tap gains multiply collected charge; dark electrons I_dark/(q f_clk) land
// on both taps every sub-cycle; each tap clamps at the full well.
void accumulate(PixelState& state, std::span<const DriveSample> sequence, SequenceMode mode,
                const hw::OpticalParams& optics, const hw::ClockingParams& clocking,
                const AccumulateOptions& opts = {});

// Mode-aware differential in electrons: q+ - q- for the bipolar modes
// (combining the two phases with opposite sign when symmetrized), the single
// tap+ charge for the unipolar mode.
double differential_electrons(const PixelState& state);

struct Readout {
    std::int64_t code = 0;       // in [-(2^(b-1)-1), 2^(b-1)-1]
    double value_electrons = 0;  // dequantized midpoint
    bool overflow = false;
};

// Mid-tread uniform quantizer with 2^b - 1 levels over +/- range_electrons.
// In-range values reconstruct within half a step; out-of-range clamps to the
// end codes and flags overflow.
Readout read_out(const PixelState& state, std::uint64_t adc_bits, double range_electrons);

double tap_voltage(double charge_electrons, const PixelParams& params);  // relative to reset

// Reference dot product oracle: compensated summation in extended precision.
double mac_exact(std::span<const double> x, std::span<const double> w);

}  // namespace oensim::pixel
