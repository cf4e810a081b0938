#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oensim {

// Exact SI values (2019 redefinition).
inline constexpr double kElectronCharge = 1.602176634e-19;  // C
inline constexpr double kPlanck         = 6.62607015e-34;   // J*s
inline constexpr double kLightSpeed     = 299792458.0;      // m/s

inline double photon_energy_from_wavelength_nm(double wavelength_nm) {
    if (wavelength_nm <= 0.0) throw std::domain_error("wavelength must be > 0");
    return kPlanck * kLightSpeed / (wavelength_nm * 1e-9);
}

// 128-bit counts. Operation totals overflow uint64 for dimension fields up
// to 1e6 each (worst case ~1.2e25), so exact counting uses __int128.
using u128 = unsigned __int128;

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

inline double to_double(u128 v) {
    return static_cast<double>(v);
}

inline constexpr double um2_to_mm2(double um2) { return um2 * 1e-6; }

inline double rel_diff(double a, double b) {
    double scale = std::abs(b) > 0 ? std::abs(b) : 1.0;
    return std::abs(a - b) / scale;
}

inline const char* kToolVersion = "0.1.0";

}  // namespace oensim
