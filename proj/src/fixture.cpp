#include "solarlink/fixture.hpp"

namespace solarlink {

namespace {

constexpr const char* kBackhaulNote =
    "printed beside the 41 C / 20 C clear-night rows; the arithmetic pairs it with the "
    "20 C night-time row";

FixtureRow row(const char* block, LinkType link, const char* env, double tx_h, double rx_h,
               Los los, const char* label, Weather weather, double temp_c, double ple,
               double sigma)
{
    return FixtureRow{block, link,    env,   tx_h, rx_h, los,          label,
                      weather, temp_c, std::nullopt, ple, sigma, std::nullopt, std::nullopt,
                      std::nullopt};
}

ReferenceFixture build()
{
    using enum LinkType;
    ReferenceFixture fx;
    auto& r = fx.rows;

    const char* d2d_block = "Outdoor D2D links";
    const char* d2d_env = "rare vegetation";
    r.push_back(row(d2d_block, d2d, d2d_env, 1.9, 1.9, Los::los, "Sunny sky, 42 C, day time", Weather::sunny, 42, 2.559, 1.02));
    r.push_back(row(d2d_block, d2d, d2d_env, 1.9, 1.9, Los::nlos, "Sunny sky, 42 C, day time", Weather::sunny, 42, 4.219, 3.03));
    r.push_back(row(d2d_block, d2d, d2d_env, 1.9, 1.9, Los::los, "Night time, 38 C", Weather::night, 38, 2.239, 1.97));
    r.push_back(row(d2d_block, d2d, d2d_env, 1.9, 1.9, Los::nlos, "Night time, 38 C", Weather::night, 38, 4.141, 2.87));

    const char* bh_block = "Outdoor backhaul links";
    const char* bh_env = "hilly, some vegetation";
    r.push_back(row(bh_block, backhaul, bh_env, 8.5, 3.5, Los::los, "Sunny sky, 41 C", Weather::sunny, 41, 2.227, 3.89));   // 4
    r.push_back(row(bh_block, backhaul, bh_env, 8.5, 3.5, Los::nlos, "Sunny sky, 41 C", Weather::sunny, 41, 3.656, 3.64));  // 5
    r.push_back(row(bh_block, backhaul, bh_env, 8.5, 3.5, Los::los, "Clear night sky, 20 C", Weather::clear_night, 20, 2.018, 2.42));
    r.push_back(row(bh_block, backhaul, bh_env, 8.5, 3.5, Los::nlos, "Clear night sky, 20 C", Weather::clear_night, 20, 3.443, 1.75));
    r.push_back(row(bh_block, backhaul, bh_env, 8.5, 3.5, Los::los, "Day-time, 25 C", Weather::day, 25, 2.103, 3.39));     // 8
    r.push_back(row(bh_block, backhaul, bh_env, 8.5, 3.5, Los::nlos, "Day-time, 25 C", Weather::day, 25, 3.681, 4.81));    // 9
    r.push_back(row(bh_block, backhaul, bh_env, 8.5, 3.5, Los::los, "Night-time, 20 C", Weather::night, 20, 1.927, 3.43));  // 10
    r.push_back(row(bh_block, backhaul, bh_env, 8.5, 3.5, Los::nlos, "Night-time, 20 C", Weather::night, 20, 3.601, 4.13)); // 11
    r.push_back(row(bh_block, backhaul, bh_env, 8.5, 3.5, Los::los, "Dusty sky, visibility 3 km, 32 C", Weather::dusty, 32, 2.086, 2.51));
    r.push_back(row(bh_block, backhaul, bh_env, 8.5, 3.5, Los::nlos, "Dusty sky, visibility 3 km, 32 C", Weather::dusty, 32, 3.785, 4.44));
    r[12].visibility_km = 3.0;
    r[13].visibility_km = 3.0;

    const char* ar_block = "Outdoor access links (rare vegetation)";
    const char* ar_env = "rare vegetation";
    r.push_back(row(ar_block, access, ar_env, 14, 2, Los::los, "Sunny sky, 41 C", Weather::sunny, 41, 2.107, 2.94));  // 14
    r.push_back(row(ar_block, access, ar_env, 14, 2, Los::nlos, "Sunny sky, 41 C", Weather::sunny, 41, 3.638, 2.77)); // 15
    r.push_back(row(ar_block, access, ar_env, 14, 2, Los::los, "Clear night sky, 20 C", Weather::clear_night, 20, 1.854, 1.42));
    r.push_back(row(ar_block, access, ar_env, 14, 2, Los::nlos, "Clear night sky, 20 C", Weather::clear_night, 20, 3.263, 3.04));

    const char* ah_block = "Outdoor access links (some vegetation)";
    const char* ah_env = "hilly, some vegetation";
    r.push_back(row(ah_block, access, ah_env, 18, 3.5, Los::los, "Sunny sky, 41 C", Weather::sunny, 41, 2.199, 3.71));  // 18
    r.push_back(row(ah_block, access, ah_env, 18, 3.5, Los::nlos, "Sunny sky, 41 C", Weather::sunny, 41, 3.537, 2.18)); // 19
    r.push_back(row(ah_block, access, ah_env, 18, 3.5, Los::los, "Clear night sky, 30 C", Weather::clear_night, 30, 2.017, 1.15));
    r.push_back(row(ah_block, access, ah_env, 18, 3.5, Los::nlos, "Clear night sky, 30 C", Weather::clear_night, 30, 3.435, 2.91));

    auto pair = [&r](std::size_t day, std::size_t night, double pct) {
        r[day].pct_increase = pct;
        r[day].paired_night_row = night;
    };
    pair(0, 2, 14.3);
    pair(1, 3, 1.9);
    pair(4, 10, 15.6);
    pair(5, 11, 1.5);
    pair(8, 10, 9.1);
    pair(9, 11, 2.2);
    pair(14, 16, 13.7);
    pair(15, 17, 11.5);
    pair(18, 20, 9.0);
    pair(19, 21, 3.0);
    r[4].pairing_note = kBackhaulNote;
    r[5].pairing_note = kBackhaulNote;
    return fx;
}

} // namespace

std::vector<ReferenceFixture::Pair> ReferenceFixture::pairs() const
{
    std::vector<Pair> out;
    for (const auto& r : rows)
        if (r.pct_increase && r.paired_night_row)
            out.push_back({r, rows.at(*r.paired_night_row)});
    return out;
}

const FixtureRow* ReferenceFixture::find(LinkType link_type, Los los, double ple) const
{
    for (const auto& r : rows)
        if (r.link_type == link_type && r.los == los && r.ple == ple)
            return &r;
    return nullptr;
}

const ReferenceFixture& load_fixture()
{
    static const ReferenceFixture fixture = build();
    return fixture;
}

} // namespace solarlink
