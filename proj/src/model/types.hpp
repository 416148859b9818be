#ifndef EHPLAN_MODEL_TYPES_HPP
#define EHPLAN_MODEL_TYPES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "common/error.hpp"

namespace ehplan {

// Energy carriers at the hub output side.
enum class Carrier : int { Electricity = 0, Heat = 1, Cooling = 2 };
inline constexpr int kNumCarriers = 3;

enum class DeviceKind : int { CCHP = 0, GB = 1, AC = 2, TX = 3 };
enum class ResKind : int { WT = 0, PV = 1 };
enum class EssKind : int { BESS = 0, HESS = 1, CESS = 2 };

const char* to_string(DeviceKind k);
const char* to_string(ResKind k);
const char* to_string(EssKind k);
const char* to_string(Carrier c);

// Coupling matrix of a converter: rows are outputs (e,h,c), columns inputs (e,g).
struct CouplingMatrix {
    std::array<std::array<double, 2>, 3> c{};

    double at(Carrier out, int in_col) const { return c[static_cast<int>(out)][in_col]; }
};

// One candidate converter option: a device kind at a specific capacity.
struct DeviceOption {
    DeviceKind kind = DeviceKind::CCHP;
    std::string capacity_id;
    double invest_cost = 0.0;       // RMB per option (already sized)
    double maintenance_rate = 0.0;  // RMB per MWh of input throughput
    int lifetime_years = 20;
    double max_input_e = 0.0;  // MW
    double max_input_g = 0.0;  // MW
    CouplingMatrix coupling;

    void validate() const;
};

// One candidate renewable module type (wind turbine or PV panel block).
struct ResModuleSpec {
    ResKind kind = ResKind::WT;
    std::string id;
    double invest_cost = 0.0;       // RMB per module
    double maintenance_rate = 0.0;  // RMB per MWh generated
    int lifetime_years = 20;
    double rated_power = 0.0;  // MW per module

    // WT-only
    double cut_in = 0.0;    // m/s
    double cut_out = 0.0;   // m/s
    double rated_speed = 0.0;  // m/s
    double swept_area = 0.0;   // m^2
    double conversion_eff = 0.0;
    double air_density = 1.29;  // kg/m^3

    // PV-only
    double panel_area = 0.0;  // m^2
    double panel_eff = 0.0;
    double mppt_eff = 0.0;
    double tilt_angle_deg = 0.0;

    void validate() const;
};

// One candidate storage module type.
struct EssModuleSpec {
    EssKind kind = EssKind::BESS;
    std::string id;
    double energy_per_module = 1.0;    // MWh
    double max_charge_power = 0.5;     // MW per module
    double max_discharge_power = 0.5;  // MW per module
    double eta_ch = 0.95;
    double eta_dis = 0.95;
    double invest_cost = 0.0;       // RMB per module
    double maintenance_rate = 0.0;  // RMB per MWh of charge+discharge mileage
    int lifetime_years = 10;
    int max_modules = 100;

    // The carrier this storage serves on the balance equations.
    Carrier carrier() const {
        switch (kind) {
            case EssKind::BESS: return Carrier::Electricity;
            case EssKind::HESS: return Carrier::Heat;
            default: return Carrier::Cooling;
        }
    }

    void validate() const;
};

// One typical day: probability plus hourly series.
struct Scenario {
    double prob = 0.0;
    std::vector<double> load_e, load_h, load_c;  // MW
    std::vector<double> wind_speed;              // m/s
    std::vector<double> irradiance;              // W/m^2
    std::vector<double> price_e;                 // RMB per MWh

    int steps() const { return static_cast<int>(load_e.size()); }
    void validate() const;
};

// The full planning problem handed to the model builder.
struct EhInstance {
    std::vector<DeviceOption> devices;
    std::vector<ResModuleSpec> res_options;
    std::vector<EssModuleSpec> ess_options;
    std::vector<Scenario> scenarios;

    double gas_price = 340.0;  // RMB per MWh (after heating-value conversion)
    std::array<double, 3> shed_cost = {2000.0, 1800.0, 1800.0};  // RMB/MWh by carrier
    double res_penetration_cap = 0.5;  // sigma
    double discount_rate = 0.08;
    int res_max_modules = 100;
    double dt_hours = 1.0;

    void validate() const;
};

// First-stage decisions.
struct PlanDecision {
    std::vector<int> u;      // 0/1 per device option, same order as EhInstance::devices
    std::vector<int> z_res;  // modules per res option
    std::vector<int> z_ess;  // modules per ess option
};

// Second-stage operation of one scenario.
struct ScenarioSchedule {
    // Indexed [option][step]; absent carriers carry zero rows.
    std::vector<std::vector<double>> device_in_e;  // MW
    std::vector<std::vector<double>> device_in_g;  // MW
    std::vector<std::vector<double>> res_power;    // MW
    std::vector<std::vector<double>> ess_charge;       // MW
    std::vector<std::vector<double>> ess_discharge;    // MW
    std::vector<std::vector<double>> ess_soc;          // MWh, steps+1 entries (initial first)
    std::vector<std::vector<double>> ess_v_charge;     // 0/1 flags
    std::vector<std::vector<double>> ess_v_discharge;  // 0/1 flags
    std::array<std::vector<double>, 3> shed;           // MW per carrier
};

struct OperationSchedule {
    std::vector<ScenarioSchedule> per_scenario;
};

// Cost components, all in RMB (reports scale to 1e4 RMB).
struct CostBreakdown {
    double ic = 0.0;
    std::vector<double> tc, mc, lc;  // per scenario
    double expected_tc = 0.0, expected_mc = 0.0, expected_lc = 0.0;
    double oc_expected = 0.0;
    double var_alpha = 0.0;
    double cvar_alpha = 0.0;
    double objective = 0.0;

    double scenario_cost(int s) const { return tc[s] + mc[s] + lc[s]; }
};

}  // namespace ehplan

#endif
