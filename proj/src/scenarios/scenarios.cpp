#include "scenarios/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace ehplan {

void YearSeries::validate(int steps_per_day) const {
    if (records.empty()) throw data_error("year series is empty");
    if (records.size() % static_cast<size_t>(steps_per_day) != 0) {
        throw data_error("record count " + std::to_string(records.size()) +
                         " is not divisible into whole days of " + std::to_string(steps_per_day));
    }
    for (size_t i = 0; i < records.size(); ++i) {
        const YearRecord& r = records[i];
        if (r.load_e < 0.0 || r.load_h < 0.0 || r.load_c < 0.0) {
            throw data_error("negative load at hour " + std::to_string(i));
        }
        if (r.irradiance < 0.0) throw data_error("negative irradiance at hour " + std::to_string(i));
        if (r.wind_speed < 0.0) throw data_error("negative wind speed at hour " + std::to_string(i));
    }
}

void ScenarioSet::validate() const {
    if (scenarios.empty()) throw data_error("empty scenario set");
    if (origin.size() != scenarios.size()) throw data_error("origin tags missing");
    double total = 0.0;
    for (const auto& s : scenarios) total += s.prob;
    if (std::abs(total - 1.0) > 1e-9) {
        throw data_error("scenario probabilities sum to " + std::to_string(total));
    }
}

ScenarioSet slice_days(const YearSeries& year, int steps_per_day) {
    year.validate(steps_per_day);
    const int days = static_cast<int>(year.records.size()) / steps_per_day;
    ScenarioSet set;
    for (int d = 0; d < days; ++d) {
        Scenario sc;
        sc.prob = 1.0 / days;
        for (int t = 0; t < steps_per_day; ++t) {
            const YearRecord& r = year.records[d * steps_per_day + t];
            sc.load_e.push_back(r.load_e);
            sc.load_h.push_back(r.load_h);
            sc.load_c.push_back(r.load_c);
            sc.wind_speed.push_back(r.wind_speed);
            sc.irradiance.push_back(r.irradiance);
            sc.price_e.push_back(r.price_e);
        }
        set.scenarios.push_back(std::move(sc));
        set.origin.push_back(d);
    }
    return set;
}

namespace {

struct FeatureSpace {
    // One row per scenario; channels concatenated in a fixed order.
    std::vector<std::vector<double>> rows;
    std::vector<const std::vector<double> Scenario::*> channels;
    std::vector<double> ch_min, ch_scale;  // per channel, identity when not normalizing
    int steps = 0;
};

bool price_varies(const ScenarioSet& set) {
    for (size_t i = 1; i < set.scenarios.size(); ++i) {
        if (set.scenarios[i].price_e != set.scenarios[0].price_e) return true;
    }
    return false;
}

FeatureSpace make_features(const ScenarioSet& set, const DistanceOptions& opts) {
    FeatureSpace fs;
    fs.channels = {&Scenario::load_e, &Scenario::load_h, &Scenario::load_c, &Scenario::wind_speed,
                   &Scenario::irradiance};
    if (opts.include_price || price_varies(set)) fs.channels.push_back(&Scenario::price_e);
    fs.steps = set.scenarios.front().steps();
    for (const auto& s : set.scenarios) {
        if (s.steps() != fs.steps) throw data_error("scenario step counts differ");
    }

    const size_t nc = fs.channels.size();
    fs.ch_min.assign(nc, 0.0);
    fs.ch_scale.assign(nc, 1.0);
    if (opts.normalize) {
        for (size_t c = 0; c < nc; ++c) {
            double lo = std::numeric_limits<double>::infinity(), hi = -lo;
            for (const auto& s : set.scenarios) {
                for (double v : s.*fs.channels[c]) {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            }
            fs.ch_min[c] = lo;
            fs.ch_scale[c] = hi > lo ? hi - lo : 1.0;
        }
    }
    for (const auto& s : set.scenarios) {
        std::vector<double> row;
        row.reserve(nc * fs.steps);
        for (size_t c = 0; c < nc; ++c) {
            for (double v : s.*fs.channels[c]) {
                row.push_back((v - fs.ch_min[c]) / fs.ch_scale[c]);
            }
        }
        fs.rows.push_back(std::move(row));
    }
    return fs;
}

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

}  // namespace

std::vector<std::vector<double>> kantorovich_matrix(const ScenarioSet& set,
                                                    const DistanceOptions& opts) {
    if (set.size() < 2) throw data_error("distance matrix needs at least two scenarios");
    const FeatureSpace fs = make_features(set, opts);
    const int n = set.size();
    std::vector<std::vector<double>> kd(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            kd[i][j] = kd[j][i] = euclidean(fs.rows[i], fs.rows[j]);
        }
    }
    return kd;
}

std::pair<ScenarioSet, ReductionTrace> backward_reduce(const ScenarioSet& set, int target,
                                                       const DistanceOptions& opts) {
    set.validate();
    const int n = set.size();
    if (target < 1 || target > n) throw data_error("reduction target out of range");
    ReductionTrace trace;
    if (target == n) return {set, trace};

    const auto kd = kantorovich_matrix(set, opts);
    std::vector<bool> alive(n, true);
    std::vector<double> prob(n);
    for (int i = 0; i < n; ++i) prob[i] = set.scenarios[i].prob;

    // Nearest surviving neighbor; ties go to the lowest index.
    auto nearest = [&](int i) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            if (j == i || !alive[j]) continue;
            if (kd[i][j] < best_d) {
                best_d = kd[i][j];
                best = j;
            }
        }
        return std::pair<int, double>{best, best_d};
    };

    int remaining = n;
    while (remaining > target) {
        int victim = -1, absorber = -1;
        double victim_pd = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            const auto [j, d] = nearest(i);
            const double pd = prob[i] * d;
            if (pd < victim_pd) {
                victim_pd = pd;
                victim = i;
                absorber = j;
            }
        }
        alive[victim] = false;
        prob[absorber] += prob[victim];
        trace.push_back({static_cast<int>(trace.size()) + 1, set.origin[victim],
                         set.origin[absorber], victim_pd});
        --remaining;
    }

    ScenarioSet out;
    for (int i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        Scenario sc = set.scenarios[i];
        sc.prob = prob[i];
        out.scenarios.push_back(std::move(sc));
        out.origin.push_back(set.origin[i]);
    }
    out.validate();
    return {std::move(out), std::move(trace)};
}

ScenarioSet kmeans_reduce(const ScenarioSet& set, int k, uint64_t seed,
                          const DistanceOptions& opts) {
    set.validate();
    const int n = set.size();
    if (k < 1 || k > n) throw data_error("k out of range");
    const FeatureSpace fs = make_features(set, opts);
    const size_t dim = fs.rows.front().size();

    std::mt19937_64 rng(seed);
    // k-means++ seeding.
    std::vector<std::vector<double>> centroids;
    {
        std::uniform_int_distribution<int> first(0, n - 1);
        centroids.push_back(fs.rows[first(rng)]);
        std::vector<double> d2(n);
        while (static_cast<int>(centroids.size()) < k) {
            double total = 0.0;
            for (int i = 0; i < n; ++i) {
                double best = std::numeric_limits<double>::infinity();
                for (const auto& c : centroids) {
                    const double d = euclidean(fs.rows[i], c);
                    best = std::min(best, d * d);
                }
                d2[i] = best;
                total += best;
            }
            if (total <= 0.0) {
                // All points already covered; duplicate any point.
                centroids.push_back(fs.rows[centroids.size() % n]);
                continue;
            }
            std::uniform_real_distribution<double> pick(0.0, total);
            double target_mass = pick(rng), cum = 0.0;
            int chosen = n - 1;
            for (int i = 0; i < n; ++i) {
                cum += d2[i];
                if (cum >= target_mass) {
                    chosen = i;
                    break;
                }
            }
            centroids.push_back(fs.rows[chosen]);
        }
    }

    std::vector<int> assign(n, 0);
    for (int iter = 0; iter < 300; ++iter) {
        for (int i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (int c = 0; c < k; ++c) {
                const double d = euclidean(fs.rows[i], centroids[c]);
                if (d < best) {
                    best = d;
                    assign[i] = c;
                }
            }
        }
        std::vector<std::vector<double>> next(k, std::vector<double>(dim, 0.0));
        std::vector<int> count(k, 0);
        for (int i = 0; i < n; ++i) {
            ++count[assign[i]];
            for (size_t d = 0; d < dim; ++d) next[assign[i]][d] += fs.rows[i][d];
        }
        for (int c = 0; c < k; ++c) {
            if (count[c] == 0) {
                // Re-seed an empty cluster at the point farthest from its centroid.
                int far = 0;
                double far_d = -1.0;
                for (int i = 0; i < n; ++i) {
                    const double d = euclidean(fs.rows[i], centroids[assign[i]]);
                    if (d > far_d) {
                        far_d = d;
                        far = i;
                    }
                }
                next[c] = fs.rows[far];
                count[c] = 1;
                assign[far] = c;
            } else {
                for (size_t d = 0; d < dim; ++d) next[c][d] /= count[c];
            }
        }
        double moved = 0.0;
        for (int c = 0; c < k; ++c) moved = std::max(moved, euclidean(centroids[c], next[c]));
        centroids = std::move(next);
        if (moved < 1e-6) break;
    }

    // Final assignment and member counts.
    std::vector<int> count(k, 0);
    for (int i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c) {
            const double d = euclidean(fs.rows[i], centroids[c]);
            if (d < best) {
                best = d;
                assign[i] = c;
            }
        }
        ++count[assign[i]];
    }

    ScenarioSet out;
    const size_t nc = fs.channels.size();
    const bool has_price = nc == 6;
    for (int c = 0; c < k; ++c) {
        Scenario sc;
        sc.prob = static_cast<double>(count[c]) / n;
        auto channel = [&](size_t idx) {
            std::vector<double> raw(fs.steps);
            for (int t = 0; t < fs.steps; ++t) {
                raw[t] = centroids[c][idx * fs.steps + t] * fs.ch_scale[idx] + fs.ch_min[idx];
            }
            return raw;
        };
        sc.load_e = channel(0);
        sc.load_h = channel(1);
        sc.load_c = channel(2);
        sc.wind_speed = channel(3);
        sc.irradiance = channel(4);
        sc.price_e = has_price ? channel(5) : set.scenarios.front().price_e;
        // Clip normalization round-off that would trip series validation.
        for (auto* series : {&sc.load_e, &sc.load_h, &sc.load_c, &sc.wind_speed, &sc.irradiance}) {
            for (double& v : *series) v = std::max(v, 0.0);
        }
        out.scenarios.push_back(std::move(sc));
        out.origin.push_back(-1);
    }
    out.validate();
    return out;
}

DeviationReport deviation_report(const CostBreakdown& full, const CostBreakdown& reduced) {
    auto delta = [](double full_v, double reduced_v) -> std::optional<double> {
        if (full_v == 0.0) return std::nullopt;
        return (reduced_v - full_v) / full_v;
    };
    DeviationReport rep;
    rep.ic = delta(full.ic, reduced.ic);
    rep.tc = delta(full.expected_tc, reduced.expected_tc);
    rep.mc = delta(full.expected_mc, reduced.expected_mc);
    rep.lc = delta(full.expected_lc, reduced.expected_lc);
    rep.cvar = delta(full.cvar_alpha, reduced.cvar_alpha);
    rep.total = delta(full.objective, reduced.objective);
    return rep;
}

}  // namespace ehplan
