#include "run/report.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace ehplan {

using nlohmann::json;

std::string money(double rmb) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", rmb / 1e4);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write " + path);
    return out;
}

std::string option_label(const EhInstance& inst, int flat) {
    const int nd = static_cast<int>(inst.devices.size());
    const int nm = static_cast<int>(inst.res_options.size());
    if (flat < nd) {
        return std::string(to_string(inst.devices[flat].kind)) + "-" +
               inst.devices[flat].capacity_id;
    }
    if (flat < nd + nm) return inst.res_options[flat - nd].id;
    return inst.ess_options[flat - nd - nm].id;
}

}  // namespace

void write_cost_report(const CostBreakdown& costs, double zeta, const std::string& path) {
    auto out = open_out(path);
    out << "component,value_1e4_rmb\n";
    out << "IC," << money(costs.ic) << "\n";
    out << "TC," << money(costs.expected_tc) << "\n";
    out << "MC," << money(costs.expected_mc) << "\n";
    out << "LC," << money(costs.expected_lc) << "\n";
    out << "OC," << money(costs.oc_expected) << "\n";
    out << "VaR," << money(costs.var_alpha) << "\n";
    out << "zeta," << money(zeta) << "\n";
    out << "CVaR," << money(costs.cvar_alpha) << "\n";
    out << "objective," << money(costs.objective) << "\n";
}

void write_plan_csv(const EhInstance& inst, const PlanDecision& plan, const std::string& path) {
    auto out = open_out(path);
    out << "option,kind,selected_or_modules,capacity_mw_or_mwh\n";
    for (size_t d = 0; d < inst.devices.size(); ++d) {
        const DeviceOption& dev = inst.devices[d];
        out << to_string(dev.kind) << '-' << dev.capacity_id << ',' << to_string(dev.kind) << ','
            << plan.u[d] << ',' << dev.max_input_e + dev.max_input_g << "\n";
    }
    for (size_t m = 0; m < inst.res_options.size(); ++m) {
        const ResModuleSpec& r = inst.res_options[m];
        out << r.id << ',' << to_string(r.kind) << ',' << plan.z_res[m] << ','
            << plan.z_res[m] * r.rated_power << "\n";
    }
    for (size_t n = 0; n < inst.ess_options.size(); ++n) {
        const EssModuleSpec& s = inst.ess_options[n];
        out << s.id << ',' << to_string(s.kind) << ',' << plan.z_ess[n] << ','
            << plan.z_ess[n] * s.energy_per_module << "\n";
    }
}

void write_shedding_csv(const EhInstance& inst, const OperationSchedule& sched,
                        const std::string& path) {
    auto out = open_out(path);
    out << "scenario,hour,shed_e_mw,shed_h_mw,shed_c_mw\n";
    for (size_t s = 0; s < sched.per_scenario.size(); ++s) {
        const ScenarioSchedule& ss = sched.per_scenario[s];
        for (int t = 0; t < inst.scenarios[s].steps(); ++t) {
            out << s << ',' << t << ',' << ss.shed[0][t] << ',' << ss.shed[1][t] << ','
                << ss.shed[2][t] << "\n";
        }
    }
}

void write_trading_csv(const EhInstance& inst, const OperationSchedule& sched,
                       const std::string& path) {
    auto out = open_out(path);
    out << "scenario,hour,grid_e_mw,gas_mw\n";
    for (size_t s = 0; s < sched.per_scenario.size(); ++s) {
        const ScenarioSchedule& ss = sched.per_scenario[s];
        for (int t = 0; t < inst.scenarios[s].steps(); ++t) {
            double e = 0.0, g = 0.0;
            for (size_t d = 0; d < inst.devices.size(); ++d) {
                e += ss.device_in_e[d][t];
                g += ss.device_in_g[d][t];
            }
            out << s << ',' << t << ',' << e << ',' << g << "\n";
        }
    }
}

void write_investment_grid_csv(const EhInstance& inst, const std::vector<GridRow>& rows,
                               const std::string& path) {
    auto out = open_out(path);
    out << "alpha,beta,solved,IC_1e4_rmb,objective_1e4_rmb,CVaR_1e4_rmb";
    const int nfs = static_cast<int>(inst.devices.size() + inst.res_options.size() +
                                     inst.ess_options.size());
    for (int i = 0; i < nfs; ++i) out << ',' << option_label(inst, i);
    out << "\n";
    for (const GridRow& r : rows) {
        out << r.alpha << ',' << r.beta << ',' << (r.solved ? 1 : 0);
        if (r.solved) {
            out << ',' << money(r.costs.ic) << ',' << money(r.costs.objective) << ','
                << money(r.costs.cvar_alpha);
            for (int v : r.plan.u) out << ',' << v;
            for (int v : r.plan.z_res) out << ',' << v;
            for (int v : r.plan.z_ess) out << ',' << v;
        } else {
            for (int i = 0; i < 3 + nfs; ++i) out << ',';
        }
        out << "\n";
    }
}

void write_deviation_csv(const std::vector<DeviationRow>& rows, const std::string& path) {
    auto out = open_out(path);
    out << "label,ic,tc,mc,lc,cvar,total\n";
    auto cell = [&](const std::optional<double>& v) {
        out << ',';
        if (v) out << *v;
    };
    for (const DeviationRow& r : rows) {
        out << r.label;
        cell(r.report.ic);
        cell(r.report.tc);
        cell(r.report.mc);
        cell(r.report.lc);
        cell(r.report.cvar);
        cell(r.report.total);
        out << "\n";
    }
}

namespace {

json scenario_to_json(const Scenario& s) {
    return {{"prob", s.prob},        {"load_e", s.load_e},
            {"load_h", s.load_h},    {"load_c", s.load_c},
            {"wind_speed", s.wind_speed}, {"irradiance", s.irradiance},
            {"price_e", s.price_e}};
}

Scenario scenario_from_json(const json& j) {
    Scenario s;
    s.prob = j.at("prob").get<double>();
    s.load_e = j.at("load_e").get<std::vector<double>>();
    s.load_h = j.at("load_h").get<std::vector<double>>();
    s.load_c = j.at("load_c").get<std::vector<double>>();
    s.wind_speed = j.at("wind_speed").get<std::vector<double>>();
    s.irradiance = j.at("irradiance").get<std::vector<double>>();
    s.price_e = j.at("price_e").get<std::vector<double>>();
    return s;
}

json matrix_to_json(const std::vector<std::vector<double>>& m) { return json(m); }

std::vector<std::vector<double>> matrix_from_json(const json& j) {
    return j.get<std::vector<std::vector<double>>>();
}

}  // namespace

std::string solution_json(const EhInstance& inst, const PlanSolution& sol) {
    json j;
    Catalog used{inst.devices, inst.res_options, inst.ess_options};
    j["catalog"] = json::parse(catalog_json_string(used));
    j["scenarios"] = json::array();
    for (const Scenario& s : inst.scenarios) j["scenarios"].push_back(scenario_to_json(s));
    j["physics"] = {{"gas_price", inst.gas_price},
                    {"shed_cost", inst.shed_cost},
                    {"res_penetration_cap", inst.res_penetration_cap},
                    {"discount_rate", inst.discount_rate},
                    {"res_max_modules", inst.res_max_modules},
                    {"dt_hours", inst.dt_hours}};
    j["plan"] = {{"u", sol.plan.u}, {"z_res", sol.plan.z_res}, {"z_ess", sol.plan.z_ess}};
    j["schedule"] = json::array();
    for (const ScenarioSchedule& ss : sol.schedule.per_scenario) {
        j["schedule"].push_back({{"device_in_e", matrix_to_json(ss.device_in_e)},
                                 {"device_in_g", matrix_to_json(ss.device_in_g)},
                                 {"res_power", matrix_to_json(ss.res_power)},
                                 {"ess_charge", matrix_to_json(ss.ess_charge)},
                                 {"ess_discharge", matrix_to_json(ss.ess_discharge)},
                                 {"ess_soc", matrix_to_json(ss.ess_soc)},
                                 {"ess_v_charge", matrix_to_json(ss.ess_v_charge)},
                                 {"ess_v_discharge", matrix_to_json(ss.ess_v_discharge)},
                                 {"shed_e", ss.shed[0]},
                                 {"shed_h", ss.shed[1]},
                                 {"shed_c", ss.shed[2]}});
    }
    j["costs"] = {{"ic", sol.costs.ic},
                  {"tc", sol.costs.tc},
                  {"mc", sol.costs.mc},
                  {"lc", sol.costs.lc},
                  {"oc_expected", sol.costs.oc_expected},
                  {"var_alpha", sol.costs.var_alpha},
                  {"cvar_alpha", sol.costs.cvar_alpha},
                  {"objective", sol.costs.objective}};
    j["achieved_gap"] = sol.achieved_gap;
    j["zeta_star"] = sol.zeta_star;
    return j.dump(1);
}

void write_solution_json(const EhInstance& inst, const PlanSolution& sol,
                         const std::string& path) {
    auto out = open_out(path);
    out << solution_json(inst, sol) << "\n";
}

LoadedSolution load_solution_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open solution: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw data_error("solution " + path + ": " + e.what());
    }
    try {
        LoadedSolution out;
        Catalog cat = catalog_from_json_string(j.at("catalog").dump());
        out.instance.devices = cat.devices;
        out.instance.res_options = cat.res_options;
        out.instance.ess_options = cat.ess_options;
        for (const json& s : j.at("scenarios")) {
            out.instance.scenarios.push_back(scenario_from_json(s));
        }
        const json& ph = j.at("physics");
        out.instance.gas_price = ph.at("gas_price").get<double>();
        out.instance.shed_cost = ph.at("shed_cost").get<std::array<double, 3>>();
        out.instance.res_penetration_cap = ph.at("res_penetration_cap").get<double>();
        out.instance.discount_rate = ph.at("discount_rate").get<double>();
        out.instance.res_max_modules = ph.at("res_max_modules").get<int>();
        out.instance.dt_hours = ph.at("dt_hours").get<double>();
        out.instance.validate();

        out.solution.plan.u = j.at("plan").at("u").get<std::vector<int>>();
        out.solution.plan.z_res = j.at("plan").at("z_res").get<std::vector<int>>();
        out.solution.plan.z_ess = j.at("plan").at("z_ess").get<std::vector<int>>();
        for (const json& ss : j.at("schedule")) {
            ScenarioSchedule sch;
            sch.device_in_e = matrix_from_json(ss.at("device_in_e"));
            sch.device_in_g = matrix_from_json(ss.at("device_in_g"));
            sch.res_power = matrix_from_json(ss.at("res_power"));
            sch.ess_charge = matrix_from_json(ss.at("ess_charge"));
            sch.ess_discharge = matrix_from_json(ss.at("ess_discharge"));
            sch.ess_soc = matrix_from_json(ss.at("ess_soc"));
            sch.ess_v_charge = matrix_from_json(ss.at("ess_v_charge"));
            sch.ess_v_discharge = matrix_from_json(ss.at("ess_v_discharge"));
            sch.shed[0] = ss.at("shed_e").get<std::vector<double>>();
            sch.shed[1] = ss.at("shed_h").get<std::vector<double>>();
            sch.shed[2] = ss.at("shed_c").get<std::vector<double>>();
            out.solution.schedule.per_scenario.push_back(std::move(sch));
        }
        const json& c = j.at("costs");
        out.solution.costs.ic = c.at("ic").get<double>();
        out.solution.costs.tc = c.at("tc").get<std::vector<double>>();
        out.solution.costs.mc = c.at("mc").get<std::vector<double>>();
        out.solution.costs.lc = c.at("lc").get<std::vector<double>>();
        out.solution.costs.oc_expected = c.at("oc_expected").get<double>();
        out.solution.costs.var_alpha = c.at("var_alpha").get<double>();
        out.solution.costs.cvar_alpha = c.at("cvar_alpha").get<double>();
        out.solution.costs.objective = c.at("objective").get<double>();
        out.solution.status = PlanStatus::OptimalWithinGap;
        out.solution.achieved_gap = j.at("achieved_gap").get<double>();
        out.solution.zeta_star = j.at("zeta_star").get<double>();
        return out;
    } catch (const json::exception& e) {
        throw data_error("solution " + path + ": " + e.what());
    }
}

void write_manifest(const RunConfig& cfg, const std::string& verb, const std::string& path,
                    const std::vector<std::string>& notes) {
    json j;
    j["tool"] = "ehplan";
    j["version"] = "1.0.0";
    j["verb"] = verb;
    j["config"] = json::parse(run_config_json(cfg));
    j["notes"] = notes;
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

}  // namespace ehplan
