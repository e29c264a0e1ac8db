#include "solarlink/units.hpp"

#include "solarlink/errors.hpp"

#include <cmath>
#include <fmt/format.h>

namespace solarlink {

double db_from_linear(double ratio)
{
    if (!(ratio > 0.0))
        throw DomainError(fmt::format("db_from_linear: ratio must be positive, got {}", ratio));
    return 10.0 * std::log10(ratio);
}

double linear_from_db(double db)
{
    return std::pow(10.0, db / 10.0);
}

double dbm_dbw_convert(double power, PowerDirection direction)
{
    switch (direction) {
    case PowerDirection::dbm_to_dbw:
        return dbm_to_dbw(power);
    case PowerDirection::dbw_to_dbm:
        return dbw_to_dbm(power);
    }
    return power;
}

double kelvin_from_celsius(double celsius)
{
    if (celsius < constants::absolute_zero_c)
        throw DomainError(fmt::format("temperature {} C is below absolute zero", celsius));
    return celsius - constants::absolute_zero_c;
}

} // namespace solarlink
