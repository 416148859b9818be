#include "io/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace ehplan {

using nlohmann::json;

namespace {

DeviceKind parse_device_kind(const std::string& s) {
    if (s == "CCHP") return DeviceKind::CCHP;
    if (s == "GB") return DeviceKind::GB;
    if (s == "AC") return DeviceKind::AC;
    if (s == "TX") return DeviceKind::TX;
    throw data_error("unknown device kind: " + s);
}

ResKind parse_res_kind(const std::string& s) {
    if (s == "WT") return ResKind::WT;
    if (s == "PV") return ResKind::PV;
    throw data_error("unknown RES kind: " + s);
}

EssKind parse_ess_kind(const std::string& s) {
    if (s == "BESS") return EssKind::BESS;
    if (s == "HESS") return EssKind::HESS;
    if (s == "CESS") return EssKind::CESS;
    throw data_error("unknown ESS kind: " + s);
}

DeviceOption make_converter(DeviceKind kind, double capacity_mw, double invest_per_mw,
                            double maintenance_rate, const CouplingMatrix& coupling,
                            bool gas_input) {
    DeviceOption d;
    d.kind = kind;
    d.capacity_id = std::to_string(static_cast<int>(capacity_mw)) + "MW";
    d.invest_cost = invest_per_mw * capacity_mw;
    d.maintenance_rate = maintenance_rate;
    d.lifetime_years = 20;
    d.max_input_e = gas_input ? 0.0 : capacity_mw;
    d.max_input_g = gas_input ? capacity_mw : 0.0;
    d.coupling = coupling;
    return d;
}

json catalog_to_json(const Catalog& cat) {
    json j;
    j["devices"] = json::array();
    for (const DeviceOption& d : cat.devices) {
        j["devices"].push_back({{"kind", to_string(d.kind)},
                                {"capacity_id", d.capacity_id},
                                {"invest_cost_rmb", d.invest_cost},
                                {"maintenance_rmb_per_mwh", d.maintenance_rate},
                                {"lifetime_years", d.lifetime_years},
                                {"max_input_e_mw", d.max_input_e},
                                {"max_input_g_mw", d.max_input_g},
                                {"coupling",
                                 {{d.coupling.c[0][0], d.coupling.c[0][1]},
                                  {d.coupling.c[1][0], d.coupling.c[1][1]},
                                  {d.coupling.c[2][0], d.coupling.c[2][1]}}}});
    }
    j["res"] = json::array();
    for (const ResModuleSpec& r : cat.res_options) {
        json e = {{"kind", to_string(r.kind)},
                  {"id", r.id},
                  {"invest_cost_rmb_per_module", r.invest_cost},
                  {"maintenance_rmb_per_mwh", r.maintenance_rate},
                  {"lifetime_years", r.lifetime_years},
                  {"rated_power_mw", r.rated_power}};
        if (r.kind == ResKind::WT) {
            e["cut_in_mps"] = r.cut_in;
            e["rated_mps"] = r.rated_speed;
            e["cut_out_mps"] = r.cut_out;
            e["swept_area_m2"] = r.swept_area;
            e["conversion_eff"] = r.conversion_eff;
            e["air_density_kgpm3"] = r.air_density;
        } else {
            e["panel_area_m2"] = r.panel_area;
            e["panel_eff"] = r.panel_eff;
            e["mppt_eff"] = r.mppt_eff;
            e["tilt_angle_deg"] = r.tilt_angle_deg;
        }
        j["res"].push_back(e);
    }
    j["ess"] = json::array();
    for (const EssModuleSpec& s : cat.ess_options) {
        j["ess"].push_back({{"kind", to_string(s.kind)},
                            {"id", s.id},
                            {"energy_per_module_mwh", s.energy_per_module},
                            {"max_charge_power_mw", s.max_charge_power},
                            {"max_discharge_power_mw", s.max_discharge_power},
                            {"eta_ch", s.eta_ch},
                            {"eta_dis", s.eta_dis},
                            {"invest_cost_rmb_per_module", s.invest_cost},
                            {"maintenance_rmb_per_mwh", s.maintenance_rate},
                            {"lifetime_years", s.lifetime_years},
                            {"max_modules", s.max_modules}});
    }
    return j;
}

Catalog catalog_from_json(const json& j) {
    Catalog cat;
    for (const json& e : j.at("devices")) {
        DeviceOption d;
        d.kind = parse_device_kind(e.at("kind").get<std::string>());
        d.capacity_id = e.at("capacity_id").get<std::string>();
        d.invest_cost = e.at("invest_cost_rmb").get<double>();
        d.maintenance_rate = e.at("maintenance_rmb_per_mwh").get<double>();
        d.lifetime_years = e.at("lifetime_years").get<int>();
        d.max_input_e = e.at("max_input_e_mw").get<double>();
        d.max_input_g = e.at("max_input_g_mw").get<double>();
        const json& cm = e.at("coupling");
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 2; ++c) d.coupling.c[r][c] = cm.at(r).at(c).get<double>();
        }
        cat.devices.push_back(d);
    }
    for (const json& e : j.at("res")) {
        ResModuleSpec r;
        r.kind = parse_res_kind(e.at("kind").get<std::string>());
        r.id = e.at("id").get<std::string>();
        r.invest_cost = e.at("invest_cost_rmb_per_module").get<double>();
        r.maintenance_rate = e.at("maintenance_rmb_per_mwh").get<double>();
        r.lifetime_years = e.at("lifetime_years").get<int>();
        r.rated_power = e.at("rated_power_mw").get<double>();
        if (r.kind == ResKind::WT) {
            r.cut_in = e.at("cut_in_mps").get<double>();
            r.rated_speed = e.at("rated_mps").get<double>();
            r.cut_out = e.at("cut_out_mps").get<double>();
            r.swept_area = e.at("swept_area_m2").get<double>();
            r.conversion_eff = e.at("conversion_eff").get<double>();
            r.air_density = e.at("air_density_kgpm3").get<double>();
        } else {
            r.panel_area = e.at("panel_area_m2").get<double>();
            r.panel_eff = e.at("panel_eff").get<double>();
            r.mppt_eff = e.at("mppt_eff").get<double>();
            r.tilt_angle_deg = e.at("tilt_angle_deg").get<double>();
        }
        cat.res_options.push_back(r);
    }
    for (const json& e : j.at("ess")) {
        EssModuleSpec s;
        s.kind = parse_ess_kind(e.at("kind").get<std::string>());
        s.id = e.at("id").get<std::string>();
        s.energy_per_module = e.at("energy_per_module_mwh").get<double>();
        s.max_charge_power = e.at("max_charge_power_mw").get<double>();
        s.max_discharge_power = e.at("max_discharge_power_mw").get<double>();
        s.eta_ch = e.at("eta_ch").get<double>();
        s.eta_dis = e.at("eta_dis").get<double>();
        s.invest_cost = e.at("invest_cost_rmb_per_module").get<double>();
        s.maintenance_rate = e.at("maintenance_rmb_per_mwh").get<double>();
        s.lifetime_years = e.at("lifetime_years").get<int>();
        s.max_modules = e.at("max_modules").get<int>();
        cat.ess_options.push_back(s);
    }
    cat.validate();
    return cat;
}

}  // namespace

void Catalog::validate() const {
    for (const DeviceOption& d : devices) d.validate();
    for (const ResModuleSpec& r : res_options) r.validate();
    for (const EssModuleSpec& s : ess_options) s.validate();
}

Catalog default_catalog() {
    Catalog cat;

    // Converters: investment 900/80/150/30 x1e4 RMB per MW of input capacity,
    // maintenance 1.5/10/2/10 RMB per MWh of throughput; five sizes each.
    CouplingMatrix cchp{};  // gas -> electricity + heat + absorption cooling
    cchp.c[0][1] = 0.35;
    cchp.c[1][1] = 0.40;
    cchp.c[2][1] = 0.10;
    CouplingMatrix gb{};  // gas -> heat
    gb.c[1][1] = 0.90;
    CouplingMatrix ac{};  // electricity -> cooling
    ac.c[2][0] = 1.50;
    CouplingMatrix tx{};  // grid electricity pass-through
    tx.c[0][0] = 0.98;

    for (double cap : {5.0, 10.0, 15.0, 20.0, 25.0}) {
        cat.devices.push_back(make_converter(DeviceKind::CCHP, cap, 900.0e4, 1.5, cchp, true));
        cat.devices.push_back(make_converter(DeviceKind::GB, cap, 80.0e4, 10.0, gb, true));
        cat.devices.push_back(make_converter(DeviceKind::AC, cap, 150.0e4, 2.0, ac, false));
    }
    for (double cap : {10.0, 15.0, 20.0, 25.0, 30.0}) {
        cat.devices.push_back(make_converter(DeviceKind::TX, cap, 30.0e4, 10.0, tx, false));
    }

    // Wind turbine: 40 m blades, cut-in 2.5, rated 12, cut-out 25 m/s, eta 0.3,
    // air density 1.29; priced at 350 x1e4 RMB per MW of rated power.
    ResModuleSpec wt;
    wt.kind = ResKind::WT;
    wt.id = "WT-40m";
    wt.cut_in = 2.5;
    wt.rated_speed = 12.0;
    wt.cut_out = 25.0;
    wt.swept_area = std::numbers::pi * 40.0 * 40.0;
    wt.conversion_eff = 0.3;
    wt.air_density = 1.29;
    wt.rated_power =
        0.5 * wt.air_density * std::pow(wt.rated_speed, 3) * wt.swept_area * wt.conversion_eff /
        1e6;
    wt.invest_cost = 350.0e4 * wt.rated_power;
    wt.maintenance_rate = 120.0;
    wt.lifetime_years = 20;
    cat.res_options.push_back(wt);

    // PV block: 5000 m2 of panels, eta 0.2, MPPT 0.97, tilt 38 deg; priced at
    // 600 x1e4 RMB per MW rated at 1000 W/m2.
    ResModuleSpec pv;
    pv.kind = ResKind::PV;
    pv.id = "PV-5000m2";
    pv.panel_area = 5000.0;
    pv.panel_eff = 0.2;
    pv.mppt_eff = 0.97;
    pv.tilt_angle_deg = 38.0;
    pv.rated_power = 1000.0 * std::cos(pv.tilt_angle_deg * std::numbers::pi / 180.0) *
                     pv.panel_area * pv.mppt_eff * pv.panel_eff / 1e6;
    pv.invest_cost = 600.0e4 * pv.rated_power;
    pv.maintenance_rate = 625.0;
    pv.lifetime_years = 20;
    cat.res_options.push_back(pv);

    // Storage modules: 1 MWh each, charge/discharge limited to 50% of capacity
    // per hour; investment 90/9/19 x1e4 RMB and maintenance 90/9/19 RMB/MWh.
    auto make_ess = [](EssKind kind, const char* id, double invest, double maint, double eta) {
        EssModuleSpec s;
        s.kind = kind;
        s.id = id;
        s.energy_per_module = 1.0;
        s.max_charge_power = 0.5;
        s.max_discharge_power = 0.5;
        s.eta_ch = eta;
        s.eta_dis = eta;
        s.invest_cost = invest;
        s.maintenance_rate = maint;
        s.lifetime_years = 10;
        s.max_modules = 100;
        return s;
    };
    cat.ess_options.push_back(make_ess(EssKind::BESS, "BESS-1MWh", 90.0e4, 90.0, 0.95));
    cat.ess_options.push_back(make_ess(EssKind::HESS, "HESS-1MWh", 9.0e4, 9.0, 0.90));
    cat.ess_options.push_back(make_ess(EssKind::CESS, "CESS-1MWh", 19.0e4, 19.0, 0.90));

    cat.validate();
    return cat;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open catalog: " + path);
    json j;
    try {
        j = json::parse(in);
        return catalog_from_json(j);
    } catch (const json::exception& e) {
        throw data_error("catalog " + path + ": " + e.what());
    }
}

void write_catalog(const Catalog& catalog, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write catalog: " + path);
    out << catalog_to_json(catalog).dump(2) << "\n";
}

std::string catalog_json_string(const Catalog& catalog) {
    return catalog_to_json(catalog).dump();
}

Catalog catalog_from_json_string(const std::string& text) {
    try {
        return catalog_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw data_error(std::string("catalog json: ") + e.what());
    }
}

void RunConfig::validate() const {
    if (alpha < 0.0 || alpha >= 1.0) throw config_error("alpha must be in [0,1)");
    if (beta < 0.0 || beta > 1.0) throw config_error("beta must be in [0,1]");
    for (double a : alpha_list) {
        if (a < 0.0 || a >= 1.0) throw config_error("alpha_list entry out of [0,1)");
    }
    for (double b : beta_list) {
        if (b < 0.0 || b > 1.0) throw config_error("beta_list entry out of [0,1]");
    }
    if (reduction_method != "backward" && reduction_method != "kmeans" &&
        reduction_method != "none") {
        throw config_error("reduction_method must be backward|kmeans|none");
    }
    if (reduction_count < 1) throw config_error("reduction_count must be >= 1");
    if (solve_method != "monolithic" && solve_method != "benders" && solve_method != "oracle") {
        throw config_error("solve_method must be monolithic|benders|oracle");
    }
    if (mip_gap < 0.0) throw config_error("mip_gap must be >= 0");
    if (time_limit_s < 0.0) throw config_error("time_limit_s must be >= 0");
    if (max_iter < 1) throw config_error("max_iter must be >= 1");
    if (gas_price_rmb_per_m3 < 0.0) throw config_error("gas price must be >= 0");
    if (gas_heating_value_kwh_per_m3 <= 0.0) throw config_error("heating value must be > 0");
    if (discount_rate <= 0.0 || discount_rate >= 1.0) {
        throw config_error("discount_rate must be in (0,1)");
    }
    if (sigma < 0.0 || sigma > 1.0) throw config_error("sigma must be in [0,1]");
    if (shed_cost_e < 0.0 || shed_cost_h < 0.0 || shed_cost_c < 0.0) {
        throw config_error("shed costs must be >= 0");
    }
    if (dt_hours <= 0.0) throw config_error("dt_hours must be > 0");
    if (res_max_modules < 0) throw config_error("res_max_modules must be >= 0");
    if (steps_per_day < 1) throw config_error("steps_per_day must be >= 1");
    if (case_preset != "case1" && case_preset != "case2" && case_preset != "case3" &&
        case_preset != "case4" && case_preset != "custom") {
        throw config_error("case_preset must be case1..case4|custom");
    }
    if (synth_profile.empty()) throw config_error("synth_profile must be set");
    if (output_dir.empty()) throw config_error("output_dir must be set");
}

namespace {

template <typename T>
void read_key(const json& j, const char* key, T& dst) {
    if (j.contains(key)) dst = j.at(key).get<T>();
}

RunConfig config_from_json(const json& j) {
    RunConfig c;
    static const std::vector<std::string> known = {
        "year_csv", "synth_seed", "synth_profile", "catalog", "output_dir", "alpha", "beta",
        "alpha_list", "beta_list", "reduction_method", "reduction_count", "reduction_seed",
        "solve_method", "mip_gap", "time_limit_s", "max_iter", "gas_price_rmb_per_m3",
        "gas_heating_value_kwh_per_m3", "discount_rate", "sigma", "shed_cost_e", "shed_cost_h",
        "shed_cost_c", "dt_hours", "res_max_modules", "steps_per_day", "case_preset",
        "solution_file"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const std::string& k : known) ok = ok || k == key;
        if (!ok) throw config_error("unknown config key: " + key);
    }
    read_key(j, "year_csv", c.year_csv);
    read_key(j, "synth_seed", c.synth_seed);
    read_key(j, "synth_profile", c.synth_profile);
    read_key(j, "catalog", c.catalog);
    read_key(j, "output_dir", c.output_dir);
    read_key(j, "alpha", c.alpha);
    read_key(j, "beta", c.beta);
    read_key(j, "alpha_list", c.alpha_list);
    read_key(j, "beta_list", c.beta_list);
    read_key(j, "reduction_method", c.reduction_method);
    read_key(j, "reduction_count", c.reduction_count);
    read_key(j, "reduction_seed", c.reduction_seed);
    read_key(j, "solve_method", c.solve_method);
    read_key(j, "mip_gap", c.mip_gap);
    read_key(j, "time_limit_s", c.time_limit_s);
    read_key(j, "max_iter", c.max_iter);
    read_key(j, "gas_price_rmb_per_m3", c.gas_price_rmb_per_m3);
    read_key(j, "gas_heating_value_kwh_per_m3", c.gas_heating_value_kwh_per_m3);
    read_key(j, "discount_rate", c.discount_rate);
    read_key(j, "sigma", c.sigma);
    read_key(j, "shed_cost_e", c.shed_cost_e);
    read_key(j, "shed_cost_h", c.shed_cost_h);
    read_key(j, "shed_cost_c", c.shed_cost_c);
    read_key(j, "dt_hours", c.dt_hours);
    read_key(j, "res_max_modules", c.res_max_modules);
    read_key(j, "steps_per_day", c.steps_per_day);
    read_key(j, "case_preset", c.case_preset);
    read_key(j, "solution_file", c.solution_file);
    c.validate();
    return c;
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config: " + path);
    try {
        return config_from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw config_error("config " + path + ": " + e.what());
    }
}

void apply_override(RunConfig& cfg, const std::string& key, const std::string& value) {
    auto num = [&]() {
        try {
            size_t pos = 0;
            const double v = std::stod(value, &pos);
            if (pos != value.size()) throw std::invalid_argument("trailing");
            return v;
        } catch (const std::exception&) {
            throw config_error("bad numeric value for " + key + ": " + value);
        }
    };
    auto list = [&]() {
        std::vector<double> out;
        std::istringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                out.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw config_error("bad list value for " + key + ": " + value);
            }
        }
        return out;
    };
    if (key == "year_csv") cfg.year_csv = value;
    else if (key == "synth_seed") cfg.synth_seed = static_cast<uint64_t>(num());
    else if (key == "synth_profile") cfg.synth_profile = value;
    else if (key == "catalog") cfg.catalog = value;
    else if (key == "output_dir") cfg.output_dir = value;
    else if (key == "alpha") cfg.alpha = num();
    else if (key == "beta") cfg.beta = num();
    else if (key == "alpha_list") cfg.alpha_list = list();
    else if (key == "beta_list") cfg.beta_list = list();
    else if (key == "reduction_method") cfg.reduction_method = value;
    else if (key == "reduction_count") cfg.reduction_count = static_cast<int>(num());
    else if (key == "reduction_seed") cfg.reduction_seed = static_cast<uint64_t>(num());
    else if (key == "solve_method") cfg.solve_method = value;
    else if (key == "mip_gap") cfg.mip_gap = num();
    else if (key == "time_limit_s") cfg.time_limit_s = num();
    else if (key == "max_iter") cfg.max_iter = static_cast<int>(num());
    else if (key == "gas_price_rmb_per_m3") cfg.gas_price_rmb_per_m3 = num();
    else if (key == "gas_heating_value_kwh_per_m3") cfg.gas_heating_value_kwh_per_m3 = num();
    else if (key == "discount_rate") cfg.discount_rate = num();
    else if (key == "sigma") cfg.sigma = num();
    else if (key == "shed_cost_e") cfg.shed_cost_e = num();
    else if (key == "shed_cost_h") cfg.shed_cost_h = num();
    else if (key == "shed_cost_c") cfg.shed_cost_c = num();
    else if (key == "dt_hours") cfg.dt_hours = num();
    else if (key == "res_max_modules") cfg.res_max_modules = static_cast<int>(num());
    else if (key == "steps_per_day") cfg.steps_per_day = static_cast<int>(num());
    else if (key == "case_preset") cfg.case_preset = value;
    else if (key == "solution_file") cfg.solution_file = value;
    else throw config_error("unknown config key: " + key);
    cfg.validate();
}

std::string run_config_json(const RunConfig& c) {
    json j;
    j["year_csv"] = c.year_csv;
    j["synth_seed"] = c.synth_seed;
    j["synth_profile"] = c.synth_profile;
    j["catalog"] = c.catalog;
    j["output_dir"] = c.output_dir;
    j["alpha"] = c.alpha;
    j["beta"] = c.beta;
    j["alpha_list"] = c.alpha_list;
    j["beta_list"] = c.beta_list;
    j["reduction_method"] = c.reduction_method;
    j["reduction_count"] = c.reduction_count;
    j["reduction_seed"] = c.reduction_seed;
    j["solve_method"] = c.solve_method;
    j["mip_gap"] = c.mip_gap;
    j["time_limit_s"] = c.time_limit_s;
    j["max_iter"] = c.max_iter;
    j["gas_price_rmb_per_m3"] = c.gas_price_rmb_per_m3;
    j["gas_heating_value_kwh_per_m3"] = c.gas_heating_value_kwh_per_m3;
    j["discount_rate"] = c.discount_rate;
    j["sigma"] = c.sigma;
    j["shed_cost_e"] = c.shed_cost_e;
    j["shed_cost_h"] = c.shed_cost_h;
    j["shed_cost_c"] = c.shed_cost_c;
    j["dt_hours"] = c.dt_hours;
    j["res_max_modules"] = c.res_max_modules;
    j["steps_per_day"] = c.steps_per_day;
    j["case_preset"] = c.case_preset;
    j["solution_file"] = c.solution_file;
    return j.dump(2);
}

}  // namespace ehplan
