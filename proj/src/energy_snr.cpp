#include "oensim/energy_snr.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "oensim/common.hpp"

namespace oensim::snr {

namespace {
double levels(std::uint64_t bits) {
    return std::pow(2.0, static_cast<double>(bits)) - 1.0;
}
}  // namespace

SnrCheck snr_condition_holds(const OperatingPoint& op) {
    if (op.t_expo_s <= 0.0) throw std::domain_error("t_expo must be > 0");
    if (op.n_vec == 0) throw std::domain_error("n_vec must be >= 1");
    const double q = kElectronCharge;
    const double signal_e = op.i_avg_a * op.alpha_em_duty * op.t_expo_s / q;
    const double total_e = (op.i_avg_a * op.alpha_em_duty + op.i_dark_a) * op.t_expo_s / q;
    const double lhs = 2.0 * signal_e / (std::sqrt(12.0) * levels(op.adc_bits));
    const double rhs = std::sqrt(total_e);
    if (lhs == 0.0 && rhs == 0.0) return {true, 1.0};  // degenerate dark pixel
    return {lhs >= rhs, rhs > 0.0 ? lhs / rhs : std::numeric_limits<double>::infinity()};
}

double threshold_dark_current(const hw::ClockingParams& clocking, std::uint64_t n_vec) {
    if (n_vec == 0) throw std::domain_error("n_vec must be >= 1");
    const double lv = levels(clocking.adc_bits);
    const double cycles = static_cast<double>(n_vec) * static_cast<double>(clocking.subcycles_r);
    return 3.0 * kElectronCharge * lv * lv * clocking.f_clk_hz / (4.0 * cycles);
}

PulseEnergy min_pulse_energy(const hw::OpticalParams& optics, const hw::ClockingParams& clocking,
                             std::uint64_t n_vec) {
    if (n_vec == 0) throw std::domain_error("n_vec must be >= 1");
    const double q = kElectronCharge;
    const double hv = optics.photon_energy();
    const double eta = optics.eta_dm * optics.eta_em;
    const double lv = levels(clocking.adc_bits);
    const double cycles = static_cast<double>(n_vec) * static_cast<double>(clocking.subcycles_r);
    const double t_expo = cycles / clocking.f_clk_hz;

    PulseEnergy out;
    out.i_th_a = threshold_dark_current(clocking, n_vec);

    // Equality point of the noise condition: a * I_s^2 - I_s - I_dark = 0 with
    // I_s = I_avg * alpha and a = T_expo / (3 q (2^b - 1)^2).
    const double a = t_expo / (3.0 * q * lv * lv);
    const double i_signal = (1.0 + std::sqrt(1.0 + 4.0 * a * optics.i_dark_a)) / (2.0 * a);
    const double margin = 1.0 + 5e-10;
    out.e_u_j = i_signal * hv / (q * eta * clocking.f_clk_hz) * margin;

    const double dark_ratio = optics.i_dark_a / out.i_th_a;
    if (dark_ratio < 0.1) {
        out.regime = DarkRegime::kDarkNegligible;
        out.epsilon_j = 3.0 * hv * lv * lv / eta;
        out.delta = 1.0 / cycles;
    } else if (dark_ratio > 10.0) {
        out.regime = DarkRegime::kDarkDominated;
        out.epsilon_j = 3.0 * hv / eta * std::sqrt(optics.i_dark_a / (3.0 * q * clocking.f_clk_hz)) * lv;
        out.delta = 1.0 / std::sqrt(cycles);
    } else {
        out.regime = DarkRegime::kCrossover;
        const double e_neg = 3.0 * hv * lv * lv / eta / cycles;
        const double e_dom = 3.0 * hv / eta *
                             std::sqrt(optics.i_dark_a / (3.0 * q * clocking.f_clk_hz)) * lv /
                             std::sqrt(cycles);
        if (e_neg >= e_dom) {
            out.epsilon_j = 3.0 * hv * lv * lv / eta;
            out.delta = 1.0 / cycles;
        } else {
            out.epsilon_j = 3.0 * hv / eta * std::sqrt(optics.i_dark_a / (3.0 * q * clocking.f_clk_hz)) * lv;
            out.delta = 1.0 / std::sqrt(cycles);
        }
    }
    return out;
}

OperatingPoint make_operating_point(const hw::OpticalParams& optics,
                                    const hw::ClockingParams& clocking, std::uint64_t n_vec,
                                    double e_u_j) {
    if (n_vec == 0) throw std::domain_error("n_vec must be >= 1");
    if (e_u_j < 0.0) throw std::domain_error("pulse energy must be >= 0");
    const double eta = optics.eta_dm * optics.eta_em;
    const double i_signal = kElectronCharge / optics.photon_energy() * eta * e_u_j * clocking.f_clk_hz;
    OperatingPoint op;
    op.n_vec = n_vec;
    op.subcycles_r = clocking.subcycles_r;
    op.adc_bits = clocking.adc_bits;
    op.t_expo_s = static_cast<double>(n_vec) * static_cast<double>(clocking.subcycles_r) /
                  clocking.f_clk_hz;
    op.alpha_em_duty = optics.alpha_em_duty;
    op.i_avg_a = i_signal / optics.alpha_em_duty;
    op.i_max_a = 2.0 * op.i_avg_a;
    op.i_min_a = 0.0;
    op.i_dark_a = optics.i_dark_a;
    return op;
}

const char* to_string(DarkRegime r) {
    switch (r) {
        case DarkRegime::kDarkNegligible: return "dark_negligible";
        case DarkRegime::kCrossover: return "crossover";
        case DarkRegime::kDarkDominated: return "dark_dominated";
    }
    return "?";
}

}  // namespace oensim::snr
