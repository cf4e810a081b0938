#include "oensim/hardware.hpp"

#include <cmath>
#include <stdexcept>

#include "oensim/common.hpp"

namespace oensim::hw {

double OpticalParams::photon_energy() const {
    if (photon_energy_j > 0.0) return photon_energy_j;
    return photon_energy_from_wavelength_nm(wavelength_nm);
}

const dac::DacModel& HardwareConfig::weight_dac() const {
    auto it = dac_presets.find(energy.dac_model_ref);
    if (it == dac_presets.end())
        throw std::invalid_argument("unknown dac_model_ref: " + energy.dac_model_ref);
    return it->second;
}

const dac::DacModel& HardwareConfig::emitter_dac() const {
    auto it = dac_presets.find(energy.dac_model_ref_em);
    if (it == dac_presets.end())
        throw std::invalid_argument("unknown dac_model_ref_em: " + energy.dac_model_ref_em);
    return it->second;
}

ValidationResult validate(const HardwareConfig& c) {
    ValidationResult r;
    auto check = [&](bool ok, const std::string& field, const std::string& rule) {
        if (!ok) r.violations.push_back({field, rule});
    };

    const auto& g = c.geometry;
    check(g.rows_ct >= 1, "geometry.rows_ct", "must be >= 1");
    check(g.cols_cw >= 1, "geometry.cols_cw", "must be >= 1");
    check(g.pixel_pitch_um > 0.0, "geometry.pixel_pitch_um", "must be > 0");
    check(g.adc_block_rows >= 1 && g.adc_block_cols >= 1, "geometry.adc_block", "must be >= 1");
    check(g.adc_array_rows >= 1 && g.adc_array_cols >= 1, "geometry.adc_array", "must be >= 1");
    check(g.adc_unit_area_um2 > 0.0, "geometry.adc_unit_area_um2", "must be > 0");
    const double coverage = static_cast<double>(g.num_adcs()) * static_cast<double>(g.pixels_per_adc());
    const double pixels = static_cast<double>(g.num_pixels());
    check(coverage >= pixels, "geometry.adc_array", "ADC coverage (ADCs x pixels per ADC) must be >= C_T * C_W");
    if (coverage > pixels)
        r.notes.push_back("ADC coverage exceeds the pixel count by " +
                          std::to_string(static_cast<std::uint64_t>(coverage - pixels)) + " pixels");

    const auto& k = c.clocking;
    check(k.f_clk_hz > 0.0, "clocking.f_clk_hz", "must be > 0");
    check(k.subcycles_r == 1 || k.subcycles_r == 2 || k.subcycles_r == 4, "clocking.subcycles_r",
          "must be one of {1, 2, 4}");
    check(k.adc_sample_rate_hz > 0.0, "clocking.adc_sample_rate_hz", "must be > 0");
    check(k.adc_bits >= 1 && k.adc_bits <= 16, "clocking.adc_bits", "must be in [1, 16]");
    check(k.dac_bits >= 1 && k.dac_bits <= 16, "clocking.dac_bits", "must be in [1, 16]");

    const auto& o = c.optics;
    check(o.wavelength_nm > 0.0 || o.photon_energy_j > 0.0, "optics.wavelength_nm",
          "wavelength or photon energy must be given");
    if (o.wavelength_nm > 0.0 && o.photon_energy_j > 0.0) {
        const double derived = photon_energy_from_wavelength_nm(o.wavelength_nm);
        check(rel_diff(o.photon_energy_j, derived) < 1e-6, "optics.photon_energy_j",
              "inconsistent with h*c/lambda for the given wavelength");
    }
    check(o.eta_dm > 0.0 && o.eta_dm <= 1.0, "optics.eta_dm", "must be in (0, 1]");
    check(o.eta_em > 0.0 && o.eta_em <= 1.0, "optics.eta_em", "must be in (0, 1]");
    check(o.i_dark_a >= 0.0, "optics.i_dark_a", "must be >= 0");
    check(o.alpha_em_duty > 0.0 && o.alpha_em_duty <= 1.0, "optics.alpha_em_duty", "must be in (0, 1]");
    check(o.tap_gain_plus > 0.0 && o.tap_gain_minus > 0.0, "optics.tap_gain", "must be > 0");
    check(o.full_well_electrons > 0.0, "optics.full_well_electrons", "must be > 0");
    check(o.c_pix_f > 0.0, "optics.c_pix_f", "must be > 0");

    const auto& e = c.energy;
    check(e.e_read_j >= 0.0 && e.e_write_j >= 0.0 && e.e_dm_j >= 0.0 && e.e_adc_j >= 0.0,
          "energy", "all energies must be >= 0");
    check(e.idac_opt_factor > 0.0, "energy.idac_opt_factor", "must be > 0");
    check(c.dac_presets.count(e.dac_model_ref) == 1, "energy.dac_model_ref",
          "must name a configured DAC preset");
    check(c.dac_presets.count(e.dac_model_ref_em) == 1, "energy.dac_model_ref_em",
          "must name a configured DAC preset");
    for (const auto& [name, model] : c.dac_presets) {
        try {
            dac::validate_model(model);
        } catch (const std::exception& ex) {
            r.violations.push_back({"dac." + name, ex.what()});
        }
    }

    check(c.area.a_dac_um2 >= 0.0, "area.a_dac_um2", "must be >= 0");
    check(c.area.a_other_mm2 >= 0.0, "area.a_other_mm2", "must be >= 0");

    check(c.hbm.chips >= 1, "hbm.chips", "must be >= 1");
    check(c.hbm.capacity_per_chip_bytes > 0.0, "hbm.capacity_per_chip_bytes", "must be > 0");
    check(c.hbm.rate_per_chip_bytes_per_s > 0.0, "hbm.rate_per_chip_bytes_per_s", "must be > 0");
    check(c.hbm.energy_per_bit_j >= 0.0, "hbm.energy_per_bit_j", "must be >= 0");

    return r;
}

MemoryBudget memory_budget(const HardwareConfig& c, const workload::TransformerDims& d,
                           double bytes_per_weight) {
    workload::validate_dims(d);
    if (bytes_per_weight <= 0.0) throw std::domain_error("bytes_per_weight must be > 0");
    const u128 sh = u128(d.head_dim_s) * u128(d.heads_h);
    const u128 n = d.embed_dim_n;
    const u128 m = d.ff_dim_m;
    const u128 weights = u128(d.layers_l) * (u128(3) * sh * n + n * sh + m * n + n * m);
    MemoryBudget b;
    b.weight_count = weights;
    b.required_bytes = to_double(weights) * bytes_per_weight;
    b.available_bytes = c.hbm.total_capacity_bytes();
    b.ok = b.required_bytes <= b.available_bytes;
    return b;
}

IoRates io_rates(const HardwareConfig& c) {
    IoRates r;
    const double dac_count = static_cast<double>(c.geometry.rows_ct + c.geometry.cols_cw);
    r.dac_read_rate_bytes_per_s =
        dac_count * c.clocking.f_clk_hz * (static_cast<double>(c.clocking.dac_bits) / 8.0);
    r.adc_write_rate_bytes_per_s = static_cast<double>(c.geometry.num_adcs()) *
                                   c.clocking.adc_sample_rate_hz *
                                   (static_cast<double>(c.clocking.adc_bits) / 8.0);
    r.hbm_rate_bytes_per_s = c.hbm.total_rate_bytes_per_s();
    r.ok = r.hbm_rate_bytes_per_s >= r.dac_read_rate_bytes_per_s &&
           r.hbm_rate_bytes_per_s >= r.adc_write_rate_bytes_per_s;
    return r;
}

HardwareConfig table1_config() {
    return HardwareConfig{};  // defaults are the 2 GHz reference design point
}

HardwareConfig budget_config() {
    HardwareConfig c;
    c.clocking.f_clk_hz = 1e9;
    return c;
}

workload::TransformerDims gpt3_dims() {
    return workload::TransformerDims{2048, 96, 96, 128, 12288, 49152};
}

workload::TransformerDims unit_dims() {
    return workload::TransformerDims{1, 1, 1, 1, 1, 1};
}

}  // namespace oensim::hw
