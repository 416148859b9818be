#include "model/validate.hpp"

#include <cmath>

#include "model/power.hpp"

namespace ehplan {

namespace {

struct Checker {
    ViolationReport report;
    double tol;

    // residual > 0 means the constraint is violated by that amount.
    void require(double residual, std::string label, int s, int t, std::string detail = {}) {
        if (residual > tol) {
            report.push_back({std::move(label), s, t, residual, std::move(detail)});
        }
    }
};

}  // namespace

ViolationReport validate_schedule(const EhInstance& inst, const PlanDecision& plan,
                                  const OperationSchedule& schedule, double tol) {
    Checker ck{{}, tol};
    const int ns = static_cast<int>(inst.scenarios.size());
    const int nd = static_cast<int>(inst.devices.size());
    const int nm = static_cast<int>(inst.res_options.size());
    const int nn = static_cast<int>(inst.ess_options.size());
    const double dt = inst.dt_hours;

    // C13: at least one CCHP and one TX invested.
    int cchp = 0, tx = 0;
    for (int d = 0; d < nd; ++d) {
        if (inst.devices[d].kind == DeviceKind::CCHP) cchp += plan.u[d];
        if (inst.devices[d].kind == DeviceKind::TX) tx += plan.u[d];
    }
    ck.require(1.0 - cchp, "C13a", -1, -1, "no CCHP selected");
    ck.require(1.0 - tx, "C13b", -1, -1, "no TX selected");

    // C14: module counts nonnegative and within caps.
    for (int m = 0; m < nm; ++m) {
        ck.require(static_cast<double>(-plan.z_res[m]), "C14a", -1, -1,
                   inst.res_options[m].id);
        ck.require(static_cast<double>(plan.z_res[m] - inst.res_max_modules), "C14a", -1, -1,
                   inst.res_options[m].id + " above module cap");
    }
    for (int n = 0; n < nn; ++n) {
        ck.require(static_cast<double>(-plan.z_ess[n]), "C14b", -1, -1, inst.ess_options[n].id);
        ck.require(static_cast<double>(plan.z_ess[n] - inst.ess_options[n].max_modules), "C14b",
                   -1, -1, inst.ess_options[n].id + " above module cap");
    }

    // C29: RES penetration cap.
    {
        double res_cap = 0.0, conv_cap = 0.0;
        for (int m = 0; m < nm; ++m) res_cap += plan.z_res[m] * inst.res_options[m].rated_power;
        for (int d = 0; d < nd; ++d) conv_cap += plan.u[d] * inst.devices[d].max_input_e;
        ck.require(res_cap - inst.res_penetration_cap * (conv_cap + res_cap), "C29", -1, -1,
                   "res capacity above penetration cap");
    }

    for (int s = 0; s < ns; ++s) {
        const Scenario& sc = inst.scenarios[s];
        const ScenarioSchedule& ss = schedule.per_scenario[s];
        const int T = sc.steps();

        for (int d = 0; d < nd; ++d) {
            const DeviceOption& dev = inst.devices[d];
            for (int t = 0; t < T; ++t) {
                const double pe = ss.device_in_e[d][t];
                const double pg = ss.device_in_g[d][t];
                ck.require(-pe, "C26", s, t, dev.capacity_id + " negative electric input");
                ck.require(pe - plan.u[d] * dev.max_input_e, "C26", s, t, dev.capacity_id);
                ck.require(-pg, "C27", s, t, dev.capacity_id + " negative gas input");
                ck.require(pg - plan.u[d] * dev.max_input_g, "C27", s, t, dev.capacity_id);
            }
        }

        for (int m = 0; m < nm; ++m) {
            const ResModuleSpec& spec = inst.res_options[m];
            for (int t = 0; t < T; ++t) {
                const double pr = ss.res_power[m][t];
                ck.require(-pr, spec.kind == ResKind::WT ? "C15" : "C17", s, t, spec.id);
                ck.require(pr - plan.z_res[m] * res_power_max(spec, sc, t),
                           spec.kind == ResKind::WT ? "C15" : "C17", s, t, spec.id);
            }
        }

        for (int n = 0; n < nn; ++n) {
            const EssModuleSpec& ess = inst.ess_options[n];
            for (int t = 0; t < T; ++t) {
                const double ch = ss.ess_charge[n][t];
                const double dis = ss.ess_discharge[n][t];
                const double vch = ss.ess_v_charge[n][t];
                const double vdis = ss.ess_v_discharge[n][t];
                ck.require(vch + vdis - 1.0, "C19", s, t, ess.id);
                ck.require(std::abs(vch - std::round(vch)), "C19", s, t,
                           ess.id + " fractional charge flag");
                ck.require(std::abs(vdis - std::round(vdis)), "C19", s, t,
                           ess.id + " fractional discharge flag");
                const double m_ch = ess.max_modules * ess.max_charge_power;
                const double m_dis = ess.max_modules * ess.max_discharge_power;
                ck.require(-ch, "C20a", s, t, ess.id);
                ck.require(ch - m_ch * vch, "C20a", s, t, ess.id);
                ck.require(ch - plan.z_ess[n] * ess.max_charge_power, "C20b", s, t, ess.id);
                ck.require(-dis, "C21a", s, t, ess.id);
                ck.require(dis - m_dis * vdis, "C21a", s, t, ess.id);
                ck.require(dis - plan.z_ess[n] * ess.max_discharge_power, "C21b", s, t, ess.id);
                // C23: state-of-charge recursion.
                const double next = ss.ess_soc[n][t + 1];
                const double expect =
                    ss.ess_soc[n][t] + (ch * ess.eta_ch - dis / ess.eta_dis) * dt;
                ck.require(std::abs(next - expect), "C23", s, t, ess.id);
            }
            for (int t = 0; t <= T; ++t) {
                const double e = ss.ess_soc[n][t];
                ck.require(-e, "C22", s, t, ess.id);
                ck.require(e - plan.z_ess[n] * ess.energy_per_module, "C22", s, t, ess.id);
            }
            ck.require(std::abs(ss.ess_soc[n][0] - ss.ess_soc[n][T]), "C24", s, -1, ess.id);
        }

        const std::array<const std::vector<double>*, 3> loads = {&sc.load_e, &sc.load_h,
                                                                 &sc.load_c};
        for (int t = 0; t < T; ++t) {
            for (int r = 0; r < kNumCarriers; ++r) {
                const double shed = ss.shed[r][t];
                ck.require(-shed, "C28", s, t, "negative shedding");
                ck.require(shed - (*loads[r])[t], "C28", s, t, "shedding above load");

                double supply = 0.0;
                for (int d = 0; d < nd; ++d) {
                    const CouplingMatrix& cm = inst.devices[d].coupling;
                    supply += cm.c[r][0] * ss.device_in_e[d][t] + cm.c[r][1] * ss.device_in_g[d][t];
                }
                if (r == static_cast<int>(Carrier::Electricity)) {
                    for (int m = 0; m < nm; ++m) supply += ss.res_power[m][t];
                }
                for (int n = 0; n < nn; ++n) {
                    if (static_cast<int>(inst.ess_options[n].carrier()) != r) continue;
                    supply += ss.ess_discharge[n][t] - ss.ess_charge[n][t];
                }
                const double lhs = supply + shed;
                const double load = (*loads[r])[t];
                if (r == static_cast<int>(Carrier::Electricity)) {
                    ck.require(std::abs(lhs - load), "C30", s, t, "electric balance");
                } else {
                    const char* label = r == static_cast<int>(Carrier::Heat) ? "C31" : "C32";
                    ck.require(load - lhs, label, s, t, "supply short of load");
                }
            }
        }
    }
    return ck.report;
}

}  // namespace ehplan
