#include "model/types.hpp"

#include <cmath>

namespace ehplan {

const char* to_string(DeviceKind k) {
    switch (k) {
        case DeviceKind::CCHP: return "CCHP";
        case DeviceKind::GB: return "GB";
        case DeviceKind::AC: return "AC";
        case DeviceKind::TX: return "TX";
    }
    return "?";
}

const char* to_string(ResKind k) { return k == ResKind::WT ? "WT" : "PV"; }

const char* to_string(EssKind k) {
    switch (k) {
        case EssKind::BESS: return "BESS";
        case EssKind::HESS: return "HESS";
        case EssKind::CESS: return "CESS";
    }
    return "?";
}

const char* to_string(Carrier c) {
    switch (c) {
        case Carrier::Electricity: return "e";
        case Carrier::Heat: return "h";
        case Carrier::Cooling: return "c";
    }
    return "?";
}

void DeviceOption::validate() const {
    for (const auto& row : coupling.c) {
        for (double v : row) {
            if (v < 0.0 || v > 2.0) {
                throw data_error("coupling entry out of [0,2] for device " + capacity_id);
            }
        }
    }
    if (invest_cost < 0.0 || maintenance_rate < 0.0) {
        throw data_error("negative cost on device " + capacity_id);
    }
    if (lifetime_years < 1) throw data_error("lifetime < 1 year on device " + capacity_id);
    if (max_input_e < 0.0 || max_input_g < 0.0) {
        throw data_error("negative max input on device " + capacity_id);
    }
    // Single-carrier converters must not couple the absent carrier.
    auto col_zero = [&](int col) {
        for (int r = 0; r < 3; ++r) {
            if (coupling.c[r][col] != 0.0) return false;
        }
        return true;
    };
    if ((kind == DeviceKind::GB && !(max_input_e == 0.0 && col_zero(0))) ||
        (kind == DeviceKind::AC && !(max_input_g == 0.0 && col_zero(1))) ||
        (kind == DeviceKind::TX && !(max_input_g == 0.0 && col_zero(1)))) {
        throw data_error(std::string("carrier mismatch on single-input device ") + to_string(kind) +
                         " " + capacity_id);
    }
}

void ResModuleSpec::validate() const {
    if (invest_cost < 0.0 || maintenance_rate < 0.0) throw data_error("negative cost on RES " + id);
    if (rated_power <= 0.0) throw data_error("nonpositive rated power on RES " + id);
    if (kind == ResKind::WT) {
        if (!(0.0 < cut_in && cut_in < rated_speed && rated_speed < cut_out)) {
            throw data_error("WT speeds must satisfy 0 < cut_in < rated < cut_out: " + id);
        }
        if (conversion_eff <= 0.0 || conversion_eff > 1.0 || swept_area <= 0.0 ||
            air_density <= 0.0) {
            throw data_error("bad WT physical parameters: " + id);
        }
    } else {
        if (panel_eff <= 0.0 || panel_eff > 1.0 || mppt_eff <= 0.0 || mppt_eff > 1.0 ||
            panel_area <= 0.0) {
            throw data_error("bad PV physical parameters: " + id);
        }
    }
}

void EssModuleSpec::validate() const {
    if (energy_per_module <= 0.0) throw data_error("nonpositive ESS energy per module: " + id);
    if (max_charge_power <= 0.0 || max_discharge_power <= 0.0) {
        throw data_error("nonpositive ESS power limit: " + id);
    }
    if (eta_ch <= 0.0 || eta_ch > 1.0 || eta_dis <= 0.0 || eta_dis > 1.0) {
        throw data_error("ESS efficiency out of (0,1]: " + id);
    }
    if (eta_ch * eta_dis >= 1.0) {
        // Round-trip losses are what makes simultaneous charge/discharge dominated.
        throw data_error("ESS round-trip efficiency must be < 1: " + id);
    }
    if (invest_cost < 0.0 || maintenance_rate < 0.0) throw data_error("negative ESS cost: " + id);
    if (max_modules < 0) throw data_error("negative ESS module cap: " + id);
}

void Scenario::validate() const {
    if (!(prob > 0.0 && prob <= 1.0)) throw data_error("scenario probability out of (0,1]");
    const size_t n = load_e.size();
    if (n == 0) throw data_error("empty scenario");
    if (load_h.size() != n || load_c.size() != n || wind_speed.size() != n ||
        irradiance.size() != n || price_e.size() != n) {
        throw data_error("scenario series length mismatch");
    }
    for (size_t t = 0; t < n; ++t) {
        if (load_e[t] < 0.0 || load_h[t] < 0.0 || load_c[t] < 0.0) {
            throw data_error("negative load at step " + std::to_string(t));
        }
        if (irradiance[t] < 0.0) throw data_error("negative irradiance at step " + std::to_string(t));
        if (wind_speed[t] < 0.0) throw data_error("negative wind speed at step " + std::to_string(t));
    }
}

void EhInstance::validate() const {
    bool has_cchp = false, has_tx = false;
    for (const auto& d : devices) {
        d.validate();
        has_cchp = has_cchp || d.kind == DeviceKind::CCHP;
        has_tx = has_tx || d.kind == DeviceKind::TX;
    }
    if (!has_cchp || !has_tx) {
        throw infeasible_error("instance needs at least one CCHP and one TX candidate");
    }
    for (const auto& r : res_options) r.validate();
    for (const auto& e : ess_options) e.validate();
    if (scenarios.empty()) throw data_error("instance has no scenarios");
    double total = 0.0;
    const int steps = scenarios.front().steps();
    for (const auto& s : scenarios) {
        s.validate();
        if (s.steps() != steps) throw data_error("scenarios have differing step counts");
        total += s.prob;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw data_error("scenario probabilities sum to " + std::to_string(total));
    }
    if (!(res_penetration_cap >= 0.0 && res_penetration_cap <= 1.0)) {
        throw data_error("res penetration cap out of [0,1]");
    }
    if (!(discount_rate > 0.0 && discount_rate < 1.0)) throw data_error("discount rate out of (0,1)");
    if (gas_price < 0.0) throw data_error("negative gas price");
    if (dt_hours <= 0.0) throw data_error("nonpositive time step");
}

}  // namespace ehplan
