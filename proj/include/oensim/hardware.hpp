#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "oensim/dac_scaling.hpp"
#include "oensim/workload.hpp"

namespace oensim::hw {

// Pixel array geometry plus the ADC tiling that reads it out. One ADC serves
// a block of adc_block_rows x adc_block_cols pixels in sequence.
struct ArrayGeometry {
    std::uint64_t rows_ct = 2048;       // token direction
    std::uint64_t cols_cw = 3072;       // weight-row direction
    double pixel_pitch_um = 10.0;
    std::uint64_t adc_block_rows = 20;
    std::uint64_t adc_block_cols = 4;
    std::uint64_t adc_array_rows = 154;
    std::uint64_t adc_array_cols = 512;
    double adc_unit_area_um2 = 200.0 * 40.0;

    double pixel_area_um2() const { return pixel_pitch_um * pixel_pitch_um; }
    std::uint64_t num_pixels() const { return rows_ct * cols_cw; }
    std::uint64_t num_adcs() const { return adc_array_rows * adc_array_cols; }
    std::uint64_t pixels_per_adc() const { return adc_block_rows * adc_block_cols; }
};

struct ClockingParams {
    double f_clk_hz = 2e9;
    std::uint64_t subcycles_r = 2;      // 1 unipolar, 2 bipolar complementary, 4 symmetrized
    double adc_sample_rate_hz = 100e6;
    std::uint64_t adc_bits = 8;
    std::uint64_t dac_bits = 8;
};

struct OpticalParams {
    double wavelength_nm = 940.0;
    double photon_energy_j = 0.0;       // derived from wavelength when 0
    double eta_dm = 0.5;                // demodulator quantum efficiency
    double eta_em = 0.2;                // emitter power conversion efficiency
    double i_dark_a = 1e-12;
    double alpha_em_duty = 1.0;
    double tap_gain_plus = 1.0;
    double tap_gain_minus = 1.0;
    double full_well_electrons = 1e7;
    double c_pix_f = 10e-15;
    double reset_reference_v = 1.0;

    double photon_energy() const;       // J, consistent resolution of the two fields
};

struct EnergyParams {
    double e_read_j = 27.2e-12;         // HBM read per 8-bit value (8 x 3.4 pJ/bit)
    double e_write_j = 27.2e-12;
    double e_dm_j = 3e-15;              // demodulator pixel per update
    double e_adc_j = 1e-12;             // per conversion
    double idac_opt_factor = 1.85;      // row-count-specific IDAC optimization
    std::string dac_model_ref = "idac_100k";      // weight-side (Rx) DAC preset
    std::string dac_model_ref_em = "idac_100k";   // emitter-side (Tx) DAC preset
};

struct AreaParams {
    double a_dac_um2 = 4854.375;        // per DAC; back-solved default, see README
    double a_other_mm2 = 0.0;
};

struct HbmParams {
    std::uint64_t chips = 8;
    double capacity_per_chip_bytes = 24e9;
    double rate_per_chip_bytes_per_s = 1.2e12;
    double energy_per_bit_j = 3.4e-12;

    double total_capacity_bytes() const { return static_cast<double>(chips) * capacity_per_chip_bytes; }
    double total_rate_bytes_per_s() const { return static_cast<double>(chips) * rate_per_chip_bytes_per_s; }
};

struct HardwareConfig {
    ArrayGeometry geometry;
    ClockingParams clocking;
    OpticalParams optics;
    EnergyParams energy;
    AreaParams area;
    HbmParams hbm;
    std::map<std::string, dac::DacModel> dac_presets = dac::default_presets();

    const dac::DacModel& weight_dac() const;
    const dac::DacModel& emitter_dac() const;
};

// Invariant check. Violations are data, not exceptions; an empty list means
// the config is usable. `notes` carries informational findings (e.g. ADC
// coverage slack) that are not violations.
struct Violation {
    std::string field;
    std::string rule;
};

struct ValidationResult {
    std::vector<Violation> violations;
    std::vector<std::string> notes;
    bool ok() const { return violations.empty(); }
};

ValidationResult validate(const HardwareConfig& config);

struct MemoryBudget {
    double required_bytes = 0.0;
    double available_bytes = 0.0;
    bool ok = false;
    u128 weight_count = 0;
};

// Exact weight count L*(3*S*H*N + N*S*H + M*N + N*M) times bytes_per_weight
// against the aggregate HBM capacity.
MemoryBudget memory_budget(const HardwareConfig& config, const workload::TransformerDims& dims,
                           double bytes_per_weight);

struct IoRates {
    double dac_read_rate_bytes_per_s = 0.0;   // (C_T + C_W) DACs streaming dac_bits per cycle
    double adc_write_rate_bytes_per_s = 0.0;  // all ADCs sampling adc_bits
    double hbm_rate_bytes_per_s = 0.0;
    bool ok = false;                          // HBM sustains both
};

IoRates io_rates(const HardwareConfig& config);

// Shipped presets. "table1" is the 2 GHz / r=2 reference design point;
// "budget" is the same geometry at the 1 GHz clock used for the memory and
// I/O budget figures.
HardwareConfig table1_config();
HardwareConfig budget_config();

workload::TransformerDims gpt3_dims();
workload::TransformerDims unit_dims();

}  // namespace oensim::hw
