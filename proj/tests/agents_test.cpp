#include <doctest.h>

#include <random>

#include "dairyabm/agents.hpp"
#include "dairyabm/errors.hpp"

using namespace dairyabm;

namespace {

FarmConfig config_with_cpls() {
    FarmConfig config;
    config.constants.cpl_harvest = 0.006;
    config.constants.cpl_cooling_dx = 0.009;
    config.constants.cpl_cooling_ib = 0.007;
    config.constants.cpl_other = {
        {AgentKind::Lights, 0.002},  {AgentKind::WashPump, 0.002}, {AgentKind::Compressor, 0.001},
        {AgentKind::Scraper, 0.001}, {AgentKind::EffluentPump, 0.001}, {AgentKind::Other, 0.004},
    };
    return config;
}

FarmConfig random_config(std::mt19937& rng) {
    std::uniform_int_distribution<int> herd(1, 400);
    std::uniform_int_distribution<int> units(1, 30);
    std::uniform_real_distribution<double> mpd(1.0, 45.0);
    std::uniform_real_distribution<double> cpl(0.0, 0.2);
    std::bernoulli_distribution flip(0.5);
    FarmConfig config;
    config.herd_size = herd(rng);
    config.milking_units = units(rng);
    config.milk_per_cow_per_day = mpd(rng);
    config.water_heating = flip(rng) ? WaterHeatingMode::Electric : WaterHeatingMode::NonElectric;
    config.milk_cooling = flip(rng) ? MilkCoolingMode::DirectExpansion : MilkCoolingMode::IceBulk;
    config.constants.cpl_harvest = cpl(rng);
    config.constants.cpl_cooling_dx = cpl(rng);
    config.constants.cpl_cooling_ib = cpl(rng);
    for (AgentKind kind : kPerLitreOtherKinds) {
        config.constants.cpl_other[kind] = cpl(rng);
    }
    return config;
}

SimDate random_date(std::mt19937& rng) {
    std::uniform_int_distribution<int> month(1, 12);
    const int m = month(rng);
    std::uniform_int_distribution<int> day(1, days_in_month(m));
    return SimDate(m, day(rng));
}

} // namespace

TEST_SUITE_BEGIN("agents");

TEST_CASE("milking session duration") {
    SUBCASE("case-study farm: ten rows of eight minutes") {
        CHECK(milking_session_duration(75, 8) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("one full row") {
        CHECK(milking_session_duration(8, 8) == doctest::Approx(8.0 / 60.0).epsilon(1e-12));
    }
    SUBCASE("capped at ten hours") {
        CHECK(milking_session_duration(1000, 1) == 10.0);
    }
    SUBCASE("row time is configurable") {
        CHECK(milking_session_duration(75, 8, 6.0) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("schedules") {
    const FarmConfig config; // 75 cows, 8 units
    const double session = 4.0 / 3.0;

    SUBCASE("lights run around the clock") {
        const AgentSchedule schedule = schedule_for(AgentKind::Lights, config);
        REQUIRE(schedule.windows.size() == 1);
        CHECK(schedule.windows[0].start_hour == 0.0);
        CHECK(schedule.windows[0].hours == 24.0);
    }
    SUBCASE("compressor runs around the clock") {
        const AgentSchedule schedule = schedule_for(AgentKind::Compressor, config);
        REQUIRE(schedule.windows.size() == 1);
        CHECK(schedule.windows[0].hours == 24.0);
    }
    SUBCASE("harvesting anchors on the 07:00 and 17:00 sessions") {
        const AgentSchedule schedule = schedule_for(AgentKind::MilkHarvesting, config);
        REQUIRE(schedule.windows.size() == 2);
        CHECK(schedule.windows[0].start_hour == 7.0);
        CHECK(schedule.windows[0].hours == doctest::Approx(session).epsilon(1e-12));
        CHECK(schedule.windows[1].start_hour == 17.0);
        CHECK(schedule.windows[1].hours == doctest::Approx(session).epsilon(1e-12));
    }
    SUBCASE("cooling adds the pull-down tail") {
        const AgentSchedule schedule = schedule_for(AgentKind::MilkCooling, config);
        REQUIRE(schedule.windows.size() == 2);
        CHECK(schedule.windows[0].hours == doctest::Approx(session + 2.0).epsilon(1e-12));
    }
    SUBCASE("water heating follows each session end") {
        const AgentSchedule schedule = schedule_for(AgentKind::WaterHeating, config);
        REQUIRE(schedule.windows.size() == 2);
        CHECK(schedule.windows[0].start_hour == doctest::Approx(7.0 + session).epsilon(1e-12));
        CHECK(schedule.windows[0].hours == doctest::Approx(1.75).epsilon(1e-12));
    }
    SUBCASE("wash-down agents get half-hour windows") {
        for (AgentKind kind : {AgentKind::WashPump, AgentKind::Scraper, AgentKind::EffluentPump}) {
            const AgentSchedule schedule = schedule_for(kind, config);
            REQUIRE(schedule.windows.size() == 2);
            CHECK(schedule.windows[0].hours == 0.5);
            CHECK(schedule.windows[0].start_hour == doctest::Approx(7.0 + session).epsilon(1e-12));
        }
    }
}

TEST_CASE("windows always lie inside the day, sessions never overlap") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const FarmConfig config = random_config(rng);
        const double session = milking_session_duration(config.herd_size, config.milking_units,
                                                        config.schedule.row_minutes);
        CHECK(7.0 + session <= 17.0); // morning milking ends before the evening one
        for (AgentKind kind : kAllAgentKinds) {
            for (const ScheduleWindow& window : schedule_for(kind, config).windows) {
                CHECK(window.start_hour >= 0.0);
                CHECK(window.hours > 0.0);
                CHECK(window.start_hour + window.hours <= 24.0 + 1e-12);
            }
        }
    }
    // extreme herd-to-unit ratio still yields valid windows
    FarmConfig extreme;
    extreme.herd_size = 1000;
    extreme.milking_units = 1;
    for (AgentKind kind : kAllAgentKinds) {
        const AgentSchedule schedule = schedule_for(kind, extreme);
        CHECK(schedule.total_hours() > 0.0);
        for (const ScheduleWindow& window : schedule.windows) {
            CHECK(window.start_hour + window.hours <= 24.0 + 1e-12);
        }
    }
}

TEST_CASE("distribute") {
    SUBCASE("uniform around the clock") {
        const HourlyProfile profile =
            distribute(EnergyKwh(24.0), AgentSchedule{{ScheduleWindow{0.0, 24.0}}});
        for (double slot : profile.slots) {
            CHECK(slot == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("single partial hour") {
        const HourlyProfile profile =
            distribute(EnergyKwh(2.0), AgentSchedule{{ScheduleWindow{7.0, 0.5}}});
        CHECK(profile.slots[7] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(profile.total() == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(profile.slots[6] == 0.0);
        CHECK(profile.slots[8] == 0.0);
    }
    SUBCASE("proportional split across an hour boundary") {
        const HourlyProfile profile =
            distribute(EnergyKwh(3.0), AgentSchedule{{ScheduleWindow{7.0, 1.5}}});
        CHECK(profile.slots[7] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(profile.slots[8] == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("zero-duration schedule with positive energy is inconsistent") {
        CHECK_THROWS_AS(distribute(EnergyKwh(1.0), AgentSchedule{}), SimulationError);
    }
    SUBCASE("zero energy needs no schedule") {
        CHECK(distribute(EnergyKwh(0.0), AgentSchedule{}).total() == 0.0);
    }
}

TEST_CASE("distribution conserves energy") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> energy_dist(0.0, 50.0);
    for (int trial = 0; trial < 500; ++trial) {
        const FarmConfig config = random_config(rng);
        const double energy = energy_dist(rng);
        for (AgentKind kind : kAllAgentKinds) {
            const HourlyProfile profile =
                distribute(EnergyKwh(energy), schedule_for(kind, config));
            CHECK(profile.total() == doctest::Approx(energy).epsilon(1e-9));
            for (double slot : profile.slots) {
                CHECK(slot >= 0.0);
            }
        }
    }
}

TEST_CASE("agent daily energy") {
    SUBCASE("non-electric water heating is zero") {
        FarmConfig config = config_with_cpls();
        config.water_heating = WaterHeatingMode::NonElectric;
        for (int day = 1; day <= 30; ++day) {
            CHECK(agent_daily_energy(AgentKind::WaterHeating, config, SimDate(6, day)).value() ==
                  0.0);
        }
    }
    SUBCASE("cooling day delta telescopes the cumulative equation") {
        const FarmConfig config = config_with_cpls();
        const double delta =
            agent_daily_energy(AgentKind::MilkCooling, config, SimDate(6, 15)).value();
        const double expected = (1.0 / 30.0) * config.herd_size * config.milk_per_cow_per_day *
                                config.constants.cpl_cooling_dx;
        CHECK(delta == doctest::Approx(expected).epsilon(1e-12));
        const double cum15 = per_litre_consumption(15.0 / 30.0, config.herd_size,
                                                   config.milk_per_cow_per_day,
                                                   config.constants.cpl_cooling_dx)
                                 .value();
        const double cum14 = per_litre_consumption(14.0 / 30.0, config.herd_size,
                                                   config.milk_per_cow_per_day,
                                                   config.constants.cpl_cooling_dx)
                                 .value();
        CHECK(delta == doctest::Approx(cum15 - cum14).epsilon(1e-12));
    }
    SUBCASE("cooling mode selects the coefficient") {
        FarmConfig config = config_with_cpls();
        const double dx = agent_daily_energy(AgentKind::MilkCooling, config, SimDate(3, 10)).value();
        config.milk_cooling = MilkCoolingMode::IceBulk;
        const double ib = agent_daily_energy(AgentKind::MilkCooling, config, SimDate(3, 10)).value();
        CHECK(dx / ib == doctest::Approx(0.009 / 0.007).epsilon(1e-12));
    }
    SUBCASE("every day of a month carries the same delta") {
        const FarmConfig config = config_with_cpls();
        for (AgentKind kind : kAllAgentKinds) {
            const double first = agent_daily_energy(kind, config, SimDate(7, 1)).value();
            for (int day : {2, 11, 19, 31}) {
                CHECK(agent_daily_energy(kind, config, SimDate(7, day)).value() ==
                      doctest::Approx(first).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("non-electric water heating yields an all-zero profile") {
    FarmConfig config = config_with_cpls();
    config.water_heating = WaterHeatingMode::NonElectric;
    const HourlyProfile profile =
        distribute(agent_daily_energy(AgentKind::WaterHeating, config, SimDate(6, 15)),
                   schedule_for(AgentKind::WaterHeating, config));
    for (double slot : profile.slots) {
        CHECK(slot == 0.0);
    }
}

TEST_SUITE_END();
