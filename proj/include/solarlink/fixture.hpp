#pragma once

#include "solarlink/campaign.hpp"

#include <optional>
#include <string>
#include <vector>

namespace solarlink {

/// One fitted row of the published 60 GHz day/night comparison.
struct FixtureRow {
    std::string block;        ///< e.g. "Outdoor backhaul links"
    LinkType link_type;
    std::string environment;
    double tx_height_m;
    double rx_height_m;
    Los los;
    std::string weather_label; ///< as printed, e.g. "Sunny sky, 41 C"
    Weather weather;
    double temp_c;
    std::optional<double> visibility_km;
    double ple;
    double sigma_db;
    /// Printed percentage increase, carried on the day-time row of a pair.
    std::optional<double> pct_increase;
    /// Index of the night-time row the percentage is computed against.
    std::optional<std::size_t> paired_night_row;
    /// Set when the printed layout places the percentage next to a different row.
    std::optional<std::string> pairing_note;
};

struct ReferenceFixture {
    std::vector<FixtureRow> rows;

    struct Pair {
        const FixtureRow& day;
        const FixtureRow& night;
    };
    std::vector<Pair> pairs() const;

    /// First row matching (link type, los, ple), or nullptr.
    const FixtureRow* find(LinkType link_type, Los los, double ple) const;
};

/// The embedded read-only table (measurement setup: 60 GHz, 24/24 dBi,
/// 7.3 deg HPBW, d0 = 1 m, 10 dBm).
const ReferenceFixture& load_fixture();

} // namespace solarlink
