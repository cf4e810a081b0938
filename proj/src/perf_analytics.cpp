#include "oensim/perf_analytics.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "oensim/dac_scaling.hpp"
#include "oensim/energy_snr.hpp"

namespace oensim::perf {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

double computing_speed(const hw::HardwareConfig& c) {
    return 2.0 * c.clocking.f_clk_hz / static_cast<double>(c.clocking.subcycles_r) *
           static_cast<double>(c.geometry.rows_ct) * static_cast<double>(c.geometry.cols_cw);
}

double system_delay(const workload::TransformerDims& dims, const hw::HardwareConfig& c,
                    RepeatCounts* repeats_out) {
    const auto plan = workload::workload_plan(dims);
    const std::uint64_t c_t = c.geometry.rows_ct;
    const std::uint64_t c_w = c.geometry.cols_cw;
    RepeatCounts reps;
    reps.r_t = ceil_div(dims.tokens_t, c_t);
    reps.idle_rows = c_t > dims.tokens_t;
    reps.exact = dims.tokens_t % c_t == 0;

    double per_layer_s = 0.0;
    for (const auto& vmm : plan.layer_vmms) {
        const std::uint64_t r_w = ceil_div(vmm.out_dim, c_w);
        reps.r_w.push_back(r_w);
        if (vmm.out_dim % c_w != 0) reps.exact = false;
        per_layer_s += static_cast<double>(vmm.in_dim) *
                       static_cast<double>(c.clocking.subcycles_r) / c.clocking.f_clk_hz *
                       static_cast<double>(r_w);
    }
    if (repeats_out) *repeats_out = reps;
    return per_layer_s * static_cast<double>(reps.r_t) * static_cast<double>(plan.layers);
}

double effective_edac_dm(const hw::HardwareConfig& c, std::string* warning_out) {
    const dac::DacModel& model = c.weight_dac();
    if (model.kind == dac::DacKind::kRdac && warning_out) {
        *warning_out = "weight-side DAC preset '" + c.energy.dac_model_ref +
                       "' is an RDAC; the scaling analysis selects the IDAC for the full array";
    }
    return dac::dac_energy_total(model, c.geometry.rows_ct) / c.energy.idac_opt_factor;
}

PowerBreakdown system_power(const workload::TransformerDims& dims, const hw::HardwareConfig& c,
                            const PowerOptions& opts) {
    if (!dims.heads_match_embed())
        throw std::invalid_argument("system_power requires head_dim_s * heads_h == embed_dim_n");
    const double c_t = static_cast<double>(c.geometry.rows_ct);
    const double c_w = static_cast<double>(c.geometry.cols_cw);
    const double mult = c.clocking.f_clk_hz * c_t * c_w;
    const double r = static_cast<double>(c.clocking.subcycles_r);
    const double e_read = opts.exclude_hbm ? 0.0 : c.energy.e_read_j;
    const double e_write = opts.exclude_hbm ? 0.0 : c.energy.e_write_j;

    PowerBreakdown b;
    if (opts.form == PowerForm::kFull) {
        // Emitter pulse energy per VMM, weighted by that VMM's share of the
        // schedule cycles (share = out*in / sum(out*in)).
        const auto plan = workload::workload_plan(dims);
        double cycles_total = 0.0, weighted = 0.0;
        for (const auto& vmm : plan.layer_vmms) {
            const double share = static_cast<double>(vmm.out_dim) * static_cast<double>(vmm.in_dim);
            const double e_u = snr::min_pulse_energy(c.optics, c.clocking, vmm.in_dim).e_u_j;
            cycles_total += share;
            weighted += share * e_u;
        }
        b.emitter_w = weighted / cycles_total * mult;
        const double out_cycles = static_cast<double>(dims.embed_dim_n) * r;
        b.adc_w = c.energy.e_adc_j / out_cycles * mult;
        b.hbm_write_w = e_write / out_cycles * mult;
    }
    b.hbm_input_w = e_read / c_w * mult;
    b.demod_w = c.energy.e_dm_j * mult;
    b.dac_weight_w = effective_edac_dm(c) / c_t * mult;
    b.hbm_weight_w = e_read / c_t * mult;
    b.total_w = b.emitter_w + b.hbm_input_w + b.demod_w + b.dac_weight_w + b.hbm_weight_w +
                b.adc_w + b.hbm_write_w;
    return b;
}

double power_efficiency_closed_form(const hw::HardwareConfig& c, const PowerOptions& opts) {
    const double e_read = opts.exclude_hbm ? 0.0 : c.energy.e_read_j;
    const double c_t = static_cast<double>(c.geometry.rows_ct);
    const double c_w = static_cast<double>(c.geometry.cols_cw);
    const double denom =
        e_read / c_w + c.energy.e_dm_j + (effective_edac_dm(c) + e_read) / c_t;
    return 2.0 / static_cast<double>(c.clocking.subcycles_r) / denom;
}

double system_area(const hw::HardwareConfig& c) {
    const double pixel_mm2 =
        um2_to_mm2(c.geometry.pixel_area_um2()) * static_cast<double>(c.geometry.num_pixels());
    const double dac_mm2 = um2_to_mm2(c.area.a_dac_um2) *
                           static_cast<double>(c.geometry.rows_ct + c.geometry.cols_cw);
    return pixel_mm2 + dac_mm2 + c.area.a_other_mm2;
}

double area_efficiency(const hw::HardwareConfig& c) {
    const double r = static_cast<double>(c.clocking.subcycles_r);
    const double ct_cw = static_cast<double>(c.geometry.num_pixels());
    const double share = static_cast<double>(c.geometry.rows_ct + c.geometry.cols_cw) / ct_cw;
    const double denom = r * (um2_to_mm2(c.geometry.pixel_area_um2()) +
                              um2_to_mm2(c.area.a_dac_um2) * share + c.area.a_other_mm2 / ct_cw);
    return 2.0 * c.clocking.f_clk_hz / denom;
}

PerfReport evaluate(const workload::TransformerDims& dims, const hw::HardwareConfig& c,
                    const PowerOptions& opts) {
    PerfReport rep;
    rep.tasks_ops = workload::total_mac_ops(dims);
    rep.speed_ops_s = computing_speed(c);
    rep.delay_s = system_delay(dims, c, &rep.repeats);
    rep.breakdown = system_power(dims, c, opts);
    rep.power_w = rep.breakdown.total_w;
    rep.power_efficiency_ops_s_w = rep.speed_ops_s / rep.power_w;
    rep.eta_p_closed_form = power_efficiency_closed_form(c, opts);
    rep.area_mm2 = system_area(c);
    rep.area_efficiency_ops_s_mm2 = rep.speed_ops_s / rep.area_mm2;
    rep.power_handling_w_mm2 = rep.power_w / rep.area_mm2;
    return rep;
}

std::vector<SweepPoint> sweep(const workload::TransformerDims& dims,
                              const hw::HardwareConfig& config_template,
                              const std::vector<std::uint64_t>& c_t_range,
                              const std::vector<std::uint64_t>& c_w_range,
                              const PowerOptions& opts, unsigned threads) {
    if (c_t_range.empty() || c_w_range.empty())
        throw std::invalid_argument("sweep ranges must be non-empty");
    std::vector<SweepPoint> grid(c_t_range.size() * c_w_range.size());
    auto eval_point = [&](std::size_t idx) {
        const std::uint64_t c_t = c_t_range[idx / c_w_range.size()];
        const std::uint64_t c_w = c_w_range[idx % c_w_range.size()];
        hw::HardwareConfig c = config_template;
        c.geometry.rows_ct = c_t;
        c.geometry.cols_cw = c_w;
        c.geometry.adc_array_rows = ceil_div(c_w, c.geometry.adc_block_rows);
        c.geometry.adc_array_cols = ceil_div(c_t, c.geometry.adc_block_cols);
        grid[idx] = {c_t, c_w, evaluate(dims, c, opts)};
    };

    unsigned n_threads = threads == 0 ? std::thread::hardware_concurrency() : threads;
    n_threads = std::max(1u, std::min<unsigned>(n_threads, static_cast<unsigned>(grid.size())));
    if (n_threads == 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) eval_point(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < grid.size(); i += n_threads) eval_point(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    return grid;
}

std::vector<ComparisonRow> compare_reference(const PerfReport& report) {
    std::vector<ComparisonRow> rows;
    ComparisonRow oen;
    oen.system = "oen_npu";
    oen.tasks_to = to_double(report.tasks_ops) / 1e12;
    oen.speed_tops = report.speed_ops_s / 1e12;
    oen.power_eff_tops_w = report.power_efficiency_ops_s_w / 1e12;
    oen.area_eff_tops_mm2 = report.area_efficiency_ops_s_mm2 / 1e12;
    oen.delay_ms = report.delay_s * 1e3;
    oen.power_w = report.power_w;
    oen.area_mm2 = report.area_mm2;
    oen.handling_mw_mm2 = report.power_handling_w_mm2 * 1e3;
    rows.push_back(oen);

    // Published card specs, fixed constants.
    ComparisonRow t4{"nvidia_t4_x1", 712.0, 130.0, 0.32, 0.24, 5477.0, 406.25, 541.66, 750.0};
    ComparisonRow t4x100{"nvidia_t4_x100", 712.0, 13000.0, 0.32, 0.24, 54.77, 40625.0, 54166.0, 750.0};
    rows.push_back(t4x100);
    rows.push_back(t4);
    return rows;
}

CalibrationResult calibrate_table1(const hw::HardwareConfig& config,
                                   const CalibrationTargets& targets) {
    if (targets.eta_p_ops_s_w <= 0.0 || targets.area_mm2 <= 0.0)
        throw std::domain_error("calibration targets must be > 0");
    CalibrationResult res;
    res.config = config;
    const double c_t = static_cast<double>(config.geometry.rows_ct);
    const double r = static_cast<double>(config.clocking.subcycles_r);

    // Lumped per-pixel energy from the target efficiency (HBM excluded).
    res.lumped_energy_j = 2.0 / r / targets.eta_p_ops_s_w;
    const double current = config.energy.e_dm_j + effective_edac_dm(config) / c_t;
    if (current <= 0.0) throw std::domain_error("cannot calibrate a zero-energy configuration");
    res.scale = res.lumped_energy_j / current;

    res.config.energy.e_dm_j *= res.scale;
    auto& model = res.config.dac_presets.at(config.energy.dac_model_ref);
    model.e_fixed_j *= res.scale;
    model.e_per_pixel_j *= res.scale;
    res.e_dm_j = res.config.energy.e_dm_j;

    // Peripheral DAC area from the target footprint.
    const double pixel_mm2 = um2_to_mm2(config.geometry.pixel_area_um2()) *
                             static_cast<double>(config.geometry.num_pixels());
    const double residual_mm2 = targets.area_mm2 - pixel_mm2 - config.area.a_other_mm2;
    if (residual_mm2 < 0.0)
        throw std::domain_error("area target smaller than the pixel array itself");
    res.a_dac_um2 = residual_mm2 * 1e6 /
                    static_cast<double>(config.geometry.rows_ct + config.geometry.cols_cw);
    res.config.area.a_dac_um2 = res.a_dac_um2;
    return res;
}

const char* to_string(PowerForm f) {
    return f == PowerForm::kFull ? "full" : "large_n";
}

}  // namespace oensim::perf
