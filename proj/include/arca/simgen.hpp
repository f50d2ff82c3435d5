#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arca/core.hpp"
#include "arca/errors.hpp"
#include "arca/rng.hpp"

namespace arca::simgen {

enum class VariableKind { Pressure, Flow, Temperature, Level, Other };

inline const char* to_string(VariableKind k) {
    switch (k) {
        case VariableKind::Pressure: return "Pressure";
        case VariableKind::Flow: return "Flow";
        case VariableKind::Temperature: return "Temperature";
        case VariableKind::Level: return "Level";
        default: return "Other";
    }
}

struct VariableSpec {
    std::string variable_name;
    VariableKind kind = VariableKind::Other;
    double mu = 0.0;
    double sigma = 1.0;

    void validate() const {
        if (!(sigma > 0.0)) throw ConfigError("sigma must be > 0 for " + variable_name);
    }
};

struct AlarmLimits {
    double high = 0.0;
    double low = 0.0;
};

inline AlarmLimits limits_for(const VariableSpec& spec,
                              const std::optional<AlarmLimits>& override_limits = {}) {
    spec.validate();
    if (override_limits) {
        if (!(override_limits->low < override_limits->high))
            throw ConfigError("alarm limit override must have low < high for " + spec.variable_name);
        return *override_limits;
    }
    return AlarmLimits{spec.mu + 3.0 * spec.sigma, spec.mu - 3.0 * spec.sigma};
}

struct DelayTimer {
    double delay_s = 15.0;
};

// ISA 18.2 style defaults: pressure/flow 15 s, temperature/level 60 s.
inline DelayTimer delay_for(VariableKind kind, double other_default_s = 15.0) {
    switch (kind) {
        case VariableKind::Pressure:
        case VariableKind::Flow: return DelayTimer{15.0};
        case VariableKind::Temperature:
        case VariableKind::Level: return DelayTimer{60.0};
        default: return DelayTimer{other_default_s};
    }
}

using Excursion = std::pair<double, double>; // [start_s, end_s)

// On-delay semantics: one activation at start+delay for every excursion that
// persists at least `delay`; shorter excursions are suppressed entirely and
// the alarm re-arms only once the excursion ends.
inline std::vector<double> apply_delay_timer(const std::vector<Excursion>& excursions,
                                             const DelayTimer& timer) {
    double prev_end = -1.0;
    std::vector<double> activations;
    for (const auto& [start, end] : excursions) {
        if (!(start < end)) throw DataError("excursion with start >= end");
        if (start < prev_end) throw DataError("excursions overlap or are unsorted");
        prev_end = end;
        if (end - start >= timer.delay_s) activations.push_back(start + timer.delay_s);
    }
    return activations;
}

struct SignatureStep {
    std::string variable_name;
    Direction direction = Direction::High;
    double onset_mean_s = 0.0;
    double onset_jitter_s = 0.0;
};

struct FaultSignature {
    int scenario_id = 0;
    std::vector<SignatureStep> steps;
    std::vector<std::pair<std::string, Direction>> tail_pool;
};

struct GenConfig {
    std::vector<VariableSpec> plant;
    std::vector<FaultSignature> signatures;
    int occurrences_per_fault = 10;
    int alarms_per_occurrence = 20;
    double chattering_rate = 0.2; // probability of a burst per base alarm
    int burst_len = 3;
    double burst_gap_s = 2.0;
    std::uint64_t seed = 1;

    const VariableSpec& variable(const std::string& name) const {
        for (const auto& v : plant)
            if (v.variable_name == name) return v;
        throw ConfigError("signature references unknown variable: " + name);
    }

    void validate() const {
        if (plant.empty()) throw ConfigError("plant has no variables");
        for (const auto& v : plant) v.validate();
        if (signatures.empty()) throw ConfigError("no fault signatures configured");
        if (occurrences_per_fault < 1) throw ConfigError("occurrences_per_fault must be >= 1");
        if (alarms_per_occurrence < 1) throw ConfigError("alarms_per_occurrence must be >= 1");
        if (chattering_rate < 0.0 || chattering_rate > 1.0)
            throw ConfigError("chattering_rate must be in [0,1]");
        if (burst_len < 1) throw ConfigError("burst_len must be >= 1");
        if (!(burst_gap_s > 0.0)) throw ConfigError("burst_gap_s must be > 0");

        double min_delay = 1e300;
        for (const auto& sig : signatures) {
            if (sig.steps.empty())
                throw ConfigError("signature for scenario " + std::to_string(sig.scenario_id) +
                                  " has no steps");
            for (const auto& st : sig.steps)
                min_delay = std::min(min_delay, delay_for(variable(st.variable_name).kind).delay_s);
            for (const auto& [name, dir] : sig.tail_pool) { (void)dir; variable(name); }
        }
        if (!(burst_gap_s < min_delay))
            throw ConfigError("burst_gap_s must be below the minimum delay of used variables");

        // Distinct faults must not share their opening alarm pattern.
        constexpr std::size_t prefix = 5;
        for (std::size_t i = 0; i < signatures.size(); ++i) {
            for (std::size_t j = i + 1; j < signatures.size(); ++j) {
                const auto& a = signatures[i].steps;
                const auto& b = signatures[j].steps;
                const std::size_t n = std::min({prefix, a.size(), b.size()});
                bool same = true;
                for (std::size_t t = 0; t < n && same; ++t)
                    same = a[t].variable_name == b[t].variable_name &&
                           a[t].direction == b[t].direction;
                if (same)
                    throw ConfigError("signatures " + std::to_string(signatures[i].scenario_id) +
                                      " and " + std::to_string(signatures[j].scenario_id) +
                                      " share their first " + std::to_string(n) + " steps");
            }
        }
    }

    ScenarioSet scenario_set() const {
        std::vector<int> ids;
        ids.reserve(signatures.size());
        for (const auto& s : signatures) ids.push_back(s.scenario_id);
        return ScenarioSet(ids);
    }
};

// 41 variables V01..V41 with kinds cycling pressure/flow/temperature/level:
// 82 possible alarm tags.
inline std::vector<VariableSpec> default_plant(int count = 41) {
    std::vector<VariableSpec> plant;
    plant.reserve(static_cast<std::size_t>(count));
    constexpr VariableKind kinds[4] = {VariableKind::Pressure, VariableKind::Flow,
                                       VariableKind::Temperature, VariableKind::Level};
    for (int i = 0; i < count; ++i) {
        char name[8];
        std::snprintf(name, sizeof name, "V%02d", i + 1);
        plant.push_back(VariableSpec{name, kinds[i % 4], 50.0 + i, 1.0 + 0.05 * i});
    }
    return plant;
}

// Each fault owns four variables; its signature walks their eight tags with a
// period-8 pattern, so repeats of a tag are 80 s apart and survive repeat
// suppression while staying fault-specific.
inline std::vector<FaultSignature> default_signatures(const std::vector<VariableSpec>& plant,
                                                      const std::vector<int>& scenario_ids,
                                                      int steps_per_fault = 20,
                                                      double step_spacing_s = 10.0,
                                                      double jitter_s = 2.0) {
    if (plant.size() < scenario_ids.size() * 4)
        throw ConfigError("default signatures need 4 plant variables per fault");
    std::vector<FaultSignature> sigs;
    sigs.reserve(scenario_ids.size());
    for (std::size_t f = 0; f < scenario_ids.size(); ++f) {
        FaultSignature sig;
        sig.scenario_id = scenario_ids[f];
        for (int j = 0; j < steps_per_fault; ++j) {
            const auto& var = plant[f * 4 + static_cast<std::size_t>(j % 4)];
            const Direction dir = (j % 8) < 4 ? Direction::High : Direction::Low;
            sig.steps.push_back(
                SignatureStep{var.variable_name, dir, 5.0 + step_spacing_s * j, jitter_s});
        }
        if (plant.size() > scenario_ids.size() * 4) {
            const auto& shared = plant.back();
            sig.tail_pool.emplace_back(shared.variable_name, Direction::High);
            sig.tail_pool.emplace_back(shared.variable_name, Direction::Low);
        }
        for (int j = 0; j < 8; ++j) {
            const auto& var = plant[f * 4 + static_cast<std::size_t>(j % 4)];
            sig.tail_pool.emplace_back(var.variable_name,
                                       (j % 8) < 4 ? Direction::High : Direction::Low);
        }
        sigs.push_back(std::move(sig));
    }
    return sigs;
}

inline GenConfig default_config() {
    GenConfig cfg;
    cfg.plant = default_plant();
    cfg.signatures = default_signatures(cfg.plant, ScenarioSet::default_set().ids());
    return cfg;
}

namespace detail {

inline int priority_for(const VariableSpec& spec, const std::vector<VariableSpec>& plant) {
    for (std::size_t i = 0; i < plant.size(); ++i)
        if (plant[i].variable_name == spec.variable_name) return static_cast<int>(i % 3) + 1;
    return 1;
}

// Events that survive per-tag suppression with that variable's delay timer.
inline int retained_after_timers(std::vector<AlarmEvent> events, const GenConfig& cfg) {
    sort_events(events);
    std::map<std::string, double> last_retained;
    int kept = 0;
    for (const auto& ev : events) {
        const double window = delay_for(cfg.variable(ev.variable_name).kind).delay_s;
        const auto it = last_retained.find(ev.tag_token);
        if (it != last_retained.end() && ev.timestamp - it->second < window) continue;
        last_retained[ev.tag_token] = ev.timestamp;
        ++kept;
    }
    return kept;
}

} // namespace detail

// One fault execution. Draw order is fixed: step jitters in signature order,
// then chattering decisions per base alarm in chronological order.
inline Occurrence generate_occurrence(const FaultSignature& sig, const GenConfig& cfg, Rng& rng) {
    std::vector<AlarmEvent> base;
    base.reserve(sig.steps.size());
    double max_onset = 0.0;
    for (const auto& st : sig.steps) {
        const auto& var = cfg.variable(st.variable_name);
        double onset = st.onset_mean_s + st.onset_jitter_s * rng.normal();
        if (onset < 0.0) onset = 0.0;
        max_onset = std::max(max_onset, onset);
        base.emplace_back(onset, var.variable_name, st.direction,
                          detail::priority_for(var, cfg.plant));
    }

    std::size_t tail_used = 0;
    while (detail::retained_after_timers(base, cfg) < cfg.alarms_per_occurrence) {
        if (tail_used >= sig.tail_pool.size())
            throw DataError("scenario " + std::to_string(sig.scenario_id) +
                            ": signature exhausted before reaching " +
                            std::to_string(cfg.alarms_per_occurrence) + " alarms");
        const auto& [name, dir] = sig.tail_pool[tail_used++];
        const auto& var = cfg.variable(name);
        max_onset += 10.0;
        base.emplace_back(max_onset, var.variable_name, dir,
                          detail::priority_for(var, cfg.plant));
    }

    sort_events(base);
    std::vector<AlarmEvent> events = base;
    for (const auto& ev : base) {
        if (!rng.bernoulli(cfg.chattering_rate)) continue;
        for (int r = 1; r <= cfg.burst_len; ++r) {
            AlarmEvent repeat = ev;
            repeat.timestamp = ev.timestamp + cfg.burst_gap_s * r;
            events.push_back(repeat);
        }
    }
    sort_events(events);

    Occurrence occ;
    occ.label.scenario_id = sig.scenario_id;
    occ.events = std::move(events);
    return occ;
}

inline std::vector<Occurrence> generate_corpus(const GenConfig& cfg) {
    cfg.validate();
    const ScenarioSet scenarios = cfg.scenario_set();
    std::vector<Occurrence> corpus;
    corpus.reserve(cfg.signatures.size() * static_cast<std::size_t>(cfg.occurrences_per_fault));
    for (std::size_t s = 0; s < cfg.signatures.size(); ++s) {
        const auto& sig = cfg.signatures[s];
        for (int j = 0; j < cfg.occurrences_per_fault; ++j) {
            Rng rng(derive_seed(cfg.seed, s, static_cast<std::uint64_t>(j)));
            Occurrence occ = generate_occurrence(sig, cfg, rng);
            occ.occurrence_id =
                "occ-" + std::to_string(sig.scenario_id) + "-" + std::to_string(j);
            occ.label = scenarios.label_of(sig.scenario_id);
            corpus.push_back(std::move(occ));
        }
    }
    return corpus;
}

} // namespace arca::simgen
