#include "risk/risk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ehplan {

void LossDistribution::validate() const {
    if (losses.empty()) throw data_error("empty loss distribution");
    if (losses.size() != probs.size()) throw data_error("losses/probs length mismatch");
    double total = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw data_error("negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw data_error("probabilities sum to " + std::to_string(total));
    }
}

void RiskConfig::validate() const {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw config_error("alpha must lie in [0,1)");
    if (!(beta >= 0.0 && beta <= 1.0)) throw config_error("beta must lie in [0,1]");
}

namespace {

std::vector<size_t> ascending_order(const std::vector<double>& losses) {
    std::vector<size_t> idx(losses.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](size_t a, size_t b) { return losses[a] < losses[b]; });
    return idx;
}

}  // namespace

double empirical_var(const LossDistribution& dist, double alpha) {
    dist.validate();
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw data_error("alpha out of [0,1]");
    const auto order = ascending_order(dist.losses);
    double cum = 0.0;
    for (size_t i : order) {
        cum += dist.probs[i];
        if (cum >= alpha - 1e-15) return dist.losses[i];
    }
    return dist.losses[order.back()];
}

double cvar(const LossDistribution& dist, double alpha) {
    dist.validate();
    if (!(alpha >= 0.0 && alpha < 1.0)) throw data_error("cvar needs alpha in [0,1)");
    const auto order = ascending_order(dist.losses);
    // Average the worst (1-alpha) probability mass, walking from the largest loss
    // down; the atom straddling the quantile enters with its residual weight.
    double remaining = 1.0 - alpha;
    double acc = 0.0;
    for (auto it = order.rbegin(); it != order.rend() && remaining > 1e-15; ++it) {
        const double w = std::min(dist.probs[*it], remaining);
        acc += w * dist.losses[*it];
        remaining -= w;
    }
    return acc / (1.0 - alpha);
}

RiskTerms emit_risk_terms(const std::vector<LinearExpr>& scenario_losses,
                          const std::vector<double>& probs, const RiskConfig& risk, int zeta_col,
                          const std::vector<int>& excess_cols) {
    risk.validate();
    if (scenario_losses.size() != probs.size()) {
        throw data_error("one probability per scenario loss expression required");
    }
    if (excess_cols.size() != scenario_losses.size()) {
        throw data_error("one excess column per scenario required");
    }
    RiskTerms out;
    out.zeta_col = zeta_col;
    out.excess_cols = excess_cols;
    const size_t n = scenario_losses.size();
    const double tail = risk.beta / (1.0 - risk.alpha);
    for (size_t s = 0; s < n; ++s) {
        // excess_s >= loss_s - zeta  <=>  excess_s - loss_terms_s + zeta >= loss_const_s
        LinearExpr row;
        row.terms.emplace_back(excess_cols[s], 1.0);
        row.terms.emplace_back(zeta_col, 1.0);
        for (const auto& [col, coef] : scenario_losses[s].terms) {
            row.terms.emplace_back(col, -coef);
        }
        out.excess_rows.push_back(std::move(row));
        out.excess_rhs.push_back(scenario_losses[s].constant);

        const double pw = (1.0 - risk.beta) * probs[s];
        for (const auto& [col, coef] : scenario_losses[s].terms) {
            out.objective_terms.emplace_back(col, pw * coef);
        }
        out.objective_constant += pw * scenario_losses[s].constant;
        out.objective_terms.emplace_back(excess_cols[s], tail * probs[s]);
    }
    out.objective_terms.emplace_back(zeta_col, risk.beta);
    return out;
}

}  // namespace ehplan
