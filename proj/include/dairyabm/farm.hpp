#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace dairyabm {

/// The nine pieces of equipment modelled on the farm.
enum class AgentKind {
    WaterHeating,
    MilkHarvesting,
    MilkCooling,
    Lights,
    WashPump,
    Compressor,
    Scraper,
    EffluentPump,
    Other,
};

inline constexpr std::array<AgentKind, 9> kAllAgentKinds = {
    AgentKind::WaterHeating, AgentKind::MilkHarvesting, AgentKind::MilkCooling,
    AgentKind::Lights,       AgentKind::WashPump,       AgentKind::Compressor,
    AgentKind::Scraper,      AgentKind::EffluentPump,   AgentKind::Other,
};

// The six agents whose consumption comes from a generic per-litre coefficient
// (everything except water heating, harvesting and cooling).
inline constexpr std::array<AgentKind, 6> kPerLitreOtherKinds = {
    AgentKind::Lights,  AgentKind::WashPump,     AgentKind::Compressor,
    AgentKind::Scraper, AgentKind::EffluentPump, AgentKind::Other,
};

const char* to_string(AgentKind kind);
std::optional<AgentKind> agent_kind_from_string(std::string_view name);

enum class WaterHeatingMode { Electric, NonElectric };
enum class MilkCoolingMode { DirectExpansion, IceBulk };

const char* to_string(WaterHeatingMode mode);
const char* to_string(MilkCoolingMode mode);

/// Model coefficients. The three water-heating constants default to the
/// hand-tuned published values; the per-litre coefficients default to zero
/// and are normally filled in by calibration.
struct ConstantsTable {
    double wh_base = 1.84;        // kWh, day-factor group
    double wh_per_unit = 0.01345; // kWh per milking unit, day-factor group
    double wh_per_cow = 0.075392; // kWh per cow

    double cpl_harvest = 0.0;    // kWh per litre of milk harvested
    double cpl_cooling_dx = 0.0; // kWh per litre, direct expansion cooling
    double cpl_cooling_ib = 0.0; // kWh per litre, ice bulk cooling

    // Per-litre coefficients for the six remaining agents.
    std::map<AgentKind, double> cpl_other = {
        {AgentKind::Lights, 0.0},  {AgentKind::WashPump, 0.0},     {AgentKind::Compressor, 0.0},
        {AgentKind::Scraper, 0.0}, {AgentKind::EffluentPump, 0.0}, {AgentKind::Other, 0.0},
    };

    void validate() const;
};

/// Knobs that shape the hourly activation profile. They never change daily
/// or longer-horizon totals.
struct ScheduleParams {
    double row_minutes = 8.0;        // time to milk one row of cows
    double cooling_tail_hours = 2.0; // bulk-tank pull-down after each milking

    void validate() const;
};

/// Complete scenario description for one farm.
struct FarmConfig {
    int herd_size = 75;    // cows
    int milking_units = 8; // milking machine clusters
    WaterHeatingMode water_heating = WaterHeatingMode::Electric;
    MilkCoolingMode milk_cooling = MilkCoolingMode::DirectExpansion;
    double milk_per_cow_per_day = 22.0; // litres
    ConstantsTable constants;
    ScheduleParams schedule;

    void validate() const;
};

} // namespace dairyabm
