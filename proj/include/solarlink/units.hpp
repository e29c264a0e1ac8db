#pragma once

// Physical constants and the unit conversions used throughout the toolkit.
// Every dB/linear, dBm/dBW, SFU/SI and Celsius/Kelvin crossing goes through
// this header.

namespace solarlink {

namespace constants {

/// Boltzmann constant [J/K], at the three-digit value the analytical
/// noise figures (-173.9 / -173.6 dBm/Hz) are quoted with.
inline constexpr double boltzmann_k = 1.38e-23;
/// [m/s]
inline constexpr double speed_of_light_c = 299792458.0;
/// Mean solid angle subtended by the sun [sr].
inline constexpr double sun_solid_angle_omega_s = 6.8e-5;
/// One solar flux unit in W m^-2 Hz^-1.
inline constexpr double sfu_in_si = 1e-22;
/// Free-space wave impedance [ohm], rounded.
inline constexpr double free_space_impedance_eta = 377.0;
/// Angular diameter of the visible solar disc [deg].
inline constexpr double solar_disc_diameter_deg = 0.53;
inline constexpr double absolute_zero_c = -273.15;
inline constexpr double pi = 3.14159265358979323846;

} // namespace constants

/// 10 log10(x). Throws DomainError for x <= 0.
double db_from_linear(double ratio);
double linear_from_db(double db);

enum class PowerDirection { dbm_to_dbw, dbw_to_dbm };

double dbm_dbw_convert(double power, PowerDirection direction);

inline double dbm_to_dbw(double dbm) { return dbm - 30.0; }
inline double dbw_to_dbm(double dbw) { return dbw + 30.0; }

/// Throws DomainError below absolute zero.
double kelvin_from_celsius(double celsius);

inline constexpr double si_from_sfu(double sfu) { return sfu * constants::sfu_in_si; }

} // namespace solarlink
