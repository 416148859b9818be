#include "support.hpp"

#include "io/synth.hpp"
#include "run/run.hpp"

namespace ehplan::testing {

DeviceOption make_device(DeviceKind kind, const std::string& id, double invest, double maint,
                         double cap_e, double cap_g, Carrier out, double eff) {
    DeviceOption d;
    d.kind = kind;
    d.capacity_id = id;
    d.invest_cost = invest;
    d.maintenance_rate = maint;
    d.lifetime_years = 20;
    d.max_input_e = cap_e;
    d.max_input_g = cap_g;
    d.coupling.c[static_cast<int>(out)][cap_g > 0.0 ? 1 : 0] = eff;
    return d;
}

EssModuleSpec make_ess(EssKind kind, double energy, double power, double eta, double invest,
                       double maint, int max_modules) {
    EssModuleSpec s;
    s.kind = kind;
    s.id = std::string(to_string(kind)) + "-test";
    s.energy_per_module = energy;
    s.max_charge_power = power;
    s.max_discharge_power = power;
    s.eta_ch = eta;
    s.eta_dis = eta;
    s.invest_cost = invest;
    s.maintenance_rate = maint;
    s.lifetime_years = 10;
    s.max_modules = max_modules;
    return s;
}

Scenario flat_scenario(int steps, double prob, double load_e, double load_h, double load_c,
                       double wind, double irradiance, double price_e) {
    Scenario s;
    s.prob = prob;
    s.load_e.assign(steps, load_e);
    s.load_h.assign(steps, load_h);
    s.load_c.assign(steps, load_c);
    s.wind_speed.assign(steps, wind);
    s.irradiance.assign(steps, irradiance);
    s.price_e.assign(steps, price_e);
    return s;
}

EhInstance tiny_fixed_instance() {
    EhInstance inst;
    inst.devices.push_back(make_device(DeviceKind::CCHP, "5MW", 5.0e6, 1.5, 0.0, 5.0,
                                       Carrier::Electricity, 0.35));
    inst.devices.back().coupling.c[1][1] = 0.4;  // heat cogeneration
    inst.devices.push_back(
        make_device(DeviceKind::TX, "10MW", 3.0e5, 10.0, 10.0, 0.0, Carrier::Electricity, 0.98));
    inst.scenarios.push_back(flat_scenario(4, 1.0, 3.0, 1.0, 0.0));
    inst.validate();
    return inst;
}

EhInstance random_tiny_instance(std::mt19937_64& rng) {
    auto unif = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    EhInstance inst;
    const bool with_ess = pick(0, 1) == 1;
    const int steps = with_ess ? 4 : 6;

    inst.devices.push_back(make_device(DeviceKind::CCHP, "a", unif(1e5, 1e6), unif(1.0, 5.0), 0.0,
                                       unif(2.0, 6.0), Carrier::Electricity, unif(0.3, 0.4)));
    inst.devices.back().coupling.c[1][1] = unif(0.3, 0.5);
    inst.devices.push_back(make_device(DeviceKind::TX, "a", unif(5e4, 3e5), unif(5.0, 15.0),
                                       unif(3.0, 8.0), 0.0, Carrier::Electricity,
                                       unif(0.9, 1.0)));
    if (pick(0, 1)) {
        inst.devices.push_back(make_device(DeviceKind::GB, "a", unif(5e4, 2e5), unif(5.0, 15.0),
                                           0.0, unif(2.0, 6.0), Carrier::Heat, unif(0.8, 0.95)));
    }
    if (pick(0, 1)) {
        inst.devices.push_back(make_device(DeviceKind::AC, "a", unif(5e4, 2e5), unif(1.0, 5.0),
                                           unif(1.0, 4.0), 0.0, Carrier::Cooling,
                                           unif(1.0, 1.8)));
    }

    if (pick(0, 1)) {
        ResModuleSpec wt;
        wt.kind = ResKind::WT;
        wt.id = "wt";
        wt.invest_cost = unif(1e5, 5e5);
        wt.maintenance_rate = unif(50.0, 150.0);
        wt.lifetime_years = 20;
        wt.cut_in = 2.5;
        wt.rated_speed = 12.0;
        wt.cut_out = 25.0;
        wt.swept_area = unif(500.0, 2000.0);
        wt.conversion_eff = unif(0.25, 0.4);
        wt.air_density = 1.29;
        wt.rated_power = 0.5 * wt.air_density * 12.0 * 12.0 * 12.0 * wt.swept_area *
                         wt.conversion_eff / 1e6;
        inst.res_options.push_back(wt);
    }
    if (with_ess) {
        const EssKind kind = static_cast<EssKind>(pick(0, 2));
        inst.ess_options.push_back(make_ess(kind, unif(0.5, 2.0), unif(0.3, 1.0),
                                            unif(0.85, 0.97), unif(1e4, 1e5), unif(5.0, 50.0),
                                            2));
    }

    const int ns = pick(1, 2);
    for (int s = 0; s < ns; ++s) {
        Scenario sc = flat_scenario(steps, 1.0 / ns, 0.0, 0.0, 0.0);
        for (int t = 0; t < steps; ++t) {
            sc.load_e[t] = unif(0.5, 5.0);
            sc.load_h[t] = unif(0.0, 2.0);
            sc.load_c[t] = unif(0.0, 2.0);
            sc.wind_speed[t] = unif(0.0, 15.0);
            sc.price_e[t] = unif(200.0, 900.0);
        }
        inst.scenarios.push_back(sc);
    }

    inst.res_penetration_cap = unif(0.3, 0.7);
    inst.res_max_modules = 2;
    inst.shed_cost = {unif(1500.0, 2500.0), unif(1000.0, 2000.0), unif(1000.0, 2000.0)};
    inst.validate();
    return inst;
}

YearSeries small_year(int days, uint64_t seed) {
    YearSeries year = synth_year(seed, "industrial-park-default");
    year.records.resize(static_cast<size_t>(days) * 24);
    return year;
}

EhInstance medium_instance(uint64_t seed) {
    RunConfig cfg;
    cfg.synth_seed = seed;
    cfg.reduction_count = 10;
    cfg.case_preset = "case4";
    Catalog cat = default_catalog();
    // Trimmed pool keeps the MILP small: two sizes per converter kind.
    Catalog trimmed;
    for (const DeviceOption& d : cat.devices) {
        if (d.capacity_id == "5MW" || d.capacity_id == "10MW") trimmed.devices.push_back(d);
    }
    trimmed.res_options = cat.res_options;
    trimmed.ess_options = cat.ess_options;
    for (EssModuleSpec& s : trimmed.ess_options) s.max_modules = 10;
    cfg.res_max_modules = 10;

    const YearSeries year = synth_year(seed, "industrial-park-default");
    ScenarioSet full = slice_days(year);
    auto [reduced, trace] = backward_reduce(full, cfg.reduction_count);
    (void)trace;
    return build_instance(cfg, trimmed, reduced.scenarios);
}

EhInstance synth_instance(uint64_t seed, int reduced_count, const std::string& case_preset,
                          const std::string& reduction_method) {
    RunConfig cfg;
    cfg.synth_seed = seed;
    cfg.reduction_count = reduced_count;
    cfg.case_preset = case_preset;
    const Catalog cat = apply_case_preset(default_catalog(), case_preset);

    const YearSeries year = synth_year(seed, "industrial-park-default");
    ScenarioSet full = slice_days(year);
    ScenarioSet reduced;
    if (reduction_method == "none" || full.size() <= reduced_count) {
        reduced = std::move(full);
    } else if (reduction_method == "backward") {
        reduced = backward_reduce(full, reduced_count).first;
    } else {
        reduced = kmeans_reduce(full, reduced_count, cfg.reduction_seed);
    }
    return build_instance(cfg, cat, reduced.scenarios);
}

}  // namespace ehplan::testing
