#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "model/milp.hpp"
#include "risk/risk.hpp"
#include "solve/backend.hpp"

using namespace ehplan;

namespace {

LossDistribution four_atoms() {
    return {{10.0, 20.0, 30.0, 40.0}, {0.25, 0.25, 0.25, 0.25}};
}

LossDistribution random_dist(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    LossDistribution d;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        d.losses.push_back(200.0 * u(rng) - 50.0);
        d.probs.push_back(0.05 + u(rng));
        total += d.probs.back();
    }
    for (double& p : d.probs) p /= total;
    return d;
}

}  // namespace

TEST_CASE("worked four-atom examples") {
    const LossDistribution d = four_atoms();
    CHECK(empirical_var(d, 0.75) == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(empirical_var(d, 0.9) == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(cvar(d, 0.75) == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(cvar(d, 0.5) == doctest::Approx(35.0).epsilon(1e-12));
    CHECK(cvar(d, 0.0) == doctest::Approx(25.0).epsilon(1e-12));  // mean
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(cvar({{1.0}, {0.5}}, 0.5), Error);              // probs sum != 1
    CHECK_THROWS_AS(cvar({{1.0, 2.0}, {1.0}}, 0.5), Error);        // shape mismatch
    CHECK_THROWS_AS(cvar(four_atoms(), 1.0), Error);               // alpha out of range
    CHECK_THROWS_AS(cvar(four_atoms(), -0.1), Error);
    const RiskConfig bad{0.95, 1.5};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("coherence properties on random distributions") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(u(rng) * 10);
        LossDistribution d = random_dist(rng, n);
        const double a1 = 0.9 * u(rng);
        const double a2 = a1 + (0.99 - a1) * u(rng);
        const double scale = std::max(1.0, std::abs(cvar(d, a2)));

        // monotone in alpha and dominates VaR
        CHECK(cvar(d, a2) >= cvar(d, a1) - 1e-9 * scale);
        CHECK(cvar(d, a1) >= empirical_var(d, a1) - 1e-9 * scale);

        // translation equivariance and positive homogeneity
        LossDistribution shifted = d;
        for (double& l : shifted.losses) l += 17.5;
        CHECK(cvar(shifted, a1) == doctest::Approx(cvar(d, a1) + 17.5).epsilon(1e-9));
        LossDistribution scaled = d;
        for (double& l : scaled.losses) l *= 3.25;
        CHECK(cvar(scaled, a1) == doctest::Approx(3.25 * cvar(d, a1)).epsilon(1e-9));

        // subadditivity on paired samples sharing probabilities
        LossDistribution other = random_dist(rng, n);
        other.probs = d.probs;
        LossDistribution sum = d;
        for (int i = 0; i < n; ++i) sum.losses[i] += other.losses[i];
        CHECK(cvar(sum, a1) <= cvar(d, a1) + cvar(other, a1) + 1e-9 * scale);
    }
}

TEST_CASE("cvar equals the minimized linearization") {
    // min over zeta of zeta + E[excess]/(1-alpha) reproduces the closed form;
    // solve it as an LP through the shared risk-term emitter.
    const LossDistribution d = four_atoms();
    const RiskConfig risk{0.75, 1.0};  // beta=1: objective is exactly CVaR

    MilpProblem p;
    const int zeta = p.add_var("zeta", -kInf, kInf, VarType::Continuous);
    std::vector<int> excess;
    std::vector<LinearExpr> losses;
    for (size_t s = 0; s < d.losses.size(); ++s) {
        excess.push_back(p.add_var("excess", 0.0, kInf, VarType::Continuous));
        losses.push_back(LinearExpr{{}, d.losses[s]});
    }
    const RiskTerms terms = emit_risk_terms(losses, d.probs, risk, zeta, excess);
    for (size_t r = 0; r < terms.excess_rows.size(); ++r) {
        p.add_row("excess", terms.excess_rows[r].terms, RowSense::GE, terms.excess_rhs[r]);
    }
    for (const auto& [col, coef] : terms.objective_terms) p.set_obj(col, coef);
    p.objective_constant += terms.objective_constant;

    auto backend = make_highs_backend();
    const SolveResult res = backend->solve_lp(p);
    REQUIRE(res.status == SolveStatus::Optimal);
    CHECK(res.objective == doctest::Approx(cvar(d, 0.75)).epsilon(1e-9));
    // the reported threshold must itself minimize the closed-form linearization
    double tail = 0.0;
    for (size_t s = 0; s < d.losses.size(); ++s) {
        tail += d.probs[s] * std::max(0.0, d.losses[s] - res.x[zeta]);
    }
    CHECK(res.x[zeta] + tail / (1.0 - 0.75) == doctest::Approx(cvar(d, 0.75)).epsilon(1e-9));
}
