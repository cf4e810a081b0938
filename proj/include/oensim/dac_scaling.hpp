#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace oensim::dac {

enum class DacKind { kRdac, kIdac };

// Affine energy/area scaling model of an 8-bit DAC driving n pixels in
// parallel. The R-2R ladder (RDAC) halves its internal resistance every time
// the load doubles, so its energy is purely proportional and its area grows
// with the current demand. The current-steering DAC (IDAC) pays a fixed bias
// overhead and then scales its MOS aspect ratios, so its energy is nearly
// flat and its area constant.
//
// Coefficients are fitted calibration values (see README), not measurements.
struct DacModel {
    DacKind kind = DacKind::kIdac;
    double load_impedance_ohm = 100e3;
    double e_fixed_j = 0.0;          // per update; bias-circuit floor (IDAC), 0 for RDAC
    double e_per_pixel_j = 0.0;      // per update per driven pixel
    double a_fixed_um2 = 0.0;
    double a_per_pixel_um2 = 0.0;    // current-demand area slope; 0 for IDAC
    double clock_ref_hz = 1e9;
};

void validate_model(const DacModel& m);  // throws std::invalid_argument

double dac_energy_total(const DacModel& m, std::uint64_t n_pixels);      // J per update
double dac_energy_per_pixel(const DacModel& m, std::uint64_t n_pixels);  // J per update per pixel
double dac_area(const DacModel& m, std::uint64_t n_pixels);              // um^2

// Smallest n at which the IDAC total update energy drops below the RDAC's,
// or nullopt if the models never cross (searched analytically).
std::optional<std::uint64_t> energy_crossover(const DacModel& rdac, const DacModel& idac);

// Shipped presets for the two architectures at 100 kOhm and 1 MOhm pixel
// loads: idac_100k, rdac_100k, idac_1m, rdac_1m.
std::map<std::string, DacModel> default_presets();

const char* to_string(DacKind k);
DacKind kind_from_string(const std::string& s);

}  // namespace oensim::dac
