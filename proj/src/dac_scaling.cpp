#include "oensim/dac_scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace oensim::dac {

void validate_model(const DacModel& m) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("DacModel: ") + what);
    };
    require(m.e_fixed_j >= 0.0 && m.e_per_pixel_j >= 0.0, "energies must be >= 0");
    require(m.a_fixed_um2 >= 0.0 && m.a_per_pixel_um2 >= 0.0, "areas must be >= 0");
    require(m.load_impedance_ohm > 0.0, "load impedance must be > 0");
    if (m.kind == DacKind::kRdac) require(m.e_fixed_j == 0.0, "RDAC has no fixed energy term");
    if (m.kind == DacKind::kIdac) require(m.a_per_pixel_um2 == 0.0, "IDAC area is load independent");
}

namespace {
void require_pixels(std::uint64_t n) {
    if (n == 0) throw std::domain_error("n_pixels must be >= 1");
}
}  // namespace

double dac_energy_total(const DacModel& m, std::uint64_t n_pixels) {
    require_pixels(n_pixels);
    return m.e_fixed_j + m.e_per_pixel_j * static_cast<double>(n_pixels);
}

double dac_energy_per_pixel(const DacModel& m, std::uint64_t n_pixels) {
    require_pixels(n_pixels);
    return dac_energy_total(m, n_pixels) / static_cast<double>(n_pixels);
}

double dac_area(const DacModel& m, std::uint64_t n_pixels) {
    require_pixels(n_pixels);
    return m.a_fixed_um2 + m.a_per_pixel_um2 * static_cast<double>(n_pixels);
}

std::optional<std::uint64_t> energy_crossover(const DacModel& rdac, const DacModel& idac) {
    // e_idac_fixed + e_idac_pp * n < e_rdac_pp * n  <=>  n > e_fixed / (slope gap).
    const double gap = rdac.e_per_pixel_j - idac.e_per_pixel_j;
    if (gap <= 0.0) return std::nullopt;
    const double n = idac.e_fixed_j / gap;
    return static_cast<std::uint64_t>(std::floor(n)) + 1;
}

std::map<std::string, DacModel> default_presets() {
    std::map<std::string, DacModel> p;
    p["rdac_100k"] = DacModel{DacKind::kRdac, 100e3, 0.0, 12e-15, 1200.0, 6.0, 1e9};
    p["idac_100k"] = DacModel{DacKind::kIdac, 100e3, 39.8e-12, 0.02e-15, 4854.375, 0.0, 1e9};
    p["rdac_1m"] = DacModel{DacKind::kRdac, 1e6, 0.0, 1.2e-15, 1200.0, 0.6, 1e9};
    p["idac_1m"] = DacModel{DacKind::kIdac, 1e6, 3.98e-12, 0.002e-15, 4854.375, 0.0, 1e9};
    return p;
}

const char* to_string(DacKind k) { return k == DacKind::kRdac ? "rdac" : "idac"; }

DacKind kind_from_string(const std::string& s) {
    if (s == "rdac") return DacKind::kRdac;
    if (s == "idac") return DacKind::kIdac;
    throw std::invalid_argument("unknown DAC kind: " + s);
}

}  // namespace oensim::dac
