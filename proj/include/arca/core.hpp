#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "arca/errors.hpp"
#include "arca/matrix.hpp"
#include "arca/rng.hpp"

namespace arca {

enum class Direction { High, Low };

inline const char* to_string(Direction d) { return d == Direction::High ? "High" : "Low"; }

inline Direction direction_from(const std::string& s) {
    if (s == "High") return Direction::High;
    if (s == "Low") return Direction::Low;
    throw DataError("unknown alarm identifier: \"" + s + "\" (expected High or Low)");
}

// "Reactor Coolant Temp", High -> "Reactor_Coolant_Temp+High".
// Whitespace runs collapse to one underscore; outer whitespace is dropped.
inline std::string tokenize(const std::string& variable_name, Direction dir) {
    if (variable_name.find('+') != std::string::npos)
        throw DataError("malformed variable name (contains '+'): " + variable_name);
    std::string out;
    out.reserve(variable_name.size() + 5);
    bool pending_sep = false;
    for (const char ch : variable_name) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!out.empty()) pending_sep = true;
        } else {
            if (pending_sep) out.push_back('_');
            pending_sep = false;
            out.push_back(ch);
        }
    }
    if (out.empty()) throw DataError("malformed variable name: empty");
    out.push_back('+');
    out += to_string(dir);
    return out;
}

struct AlarmEvent {
    double timestamp = 0.0; // seconds since corpus epoch
    std::string variable_name;
    Direction direction = Direction::High;
    int priority = 0;
    std::string tag_token;

    AlarmEvent() = default;
    AlarmEvent(double ts, std::string var, Direction dir, int prio)
        : timestamp(ts), variable_name(std::move(var)), direction(dir), priority(prio) {
        if (!(ts >= 0.0) || !std::isfinite(ts))
            throw DataError("alarm timestamp must be finite and non-negative");
        tag_token = tokenize(variable_name, direction);
    }
};

// Chronological order; equal timestamps break ties on (variable, direction)
// so corpora serialize reproducibly.
inline bool event_before(const AlarmEvent& x, const AlarmEvent& y) {
    return std::tie(x.timestamp, x.variable_name, x.direction) <
           std::tie(y.timestamp, y.variable_name, y.direction);
}

inline void sort_events(std::vector<AlarmEvent>& events) {
    std::stable_sort(events.begin(), events.end(), event_before);
}

struct FaultLabel {
    int scenario_id = 0;  // e.g. 1, 2, 6, ...
    int class_index = 0;  // dense 0-based index into the scenario set
};

// Fixed sorted bijection scenario_id <-> class_index.
class ScenarioSet {
public:
    ScenarioSet() = default;
    explicit ScenarioSet(std::vector<int> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
        if (ids_.empty()) throw ConfigError("scenario set is empty");
        if (ids_.front() <= 0) throw ConfigError("scenario ids must be positive");
    }

    static ScenarioSet default_set() { return ScenarioSet({1, 2, 6, 7, 8, 10, 11, 12, 13, 17}); }

    int size() const { return static_cast<int>(ids_.size()); }
    int scenario_of(int class_index) const {
        if (class_index < 0 || class_index >= size())
            throw DataError("class index out of range: " + std::to_string(class_index));
        return ids_[static_cast<std::size_t>(class_index)];
    }
    FaultLabel label_of(int scenario_id) const {
        const auto it = std::lower_bound(ids_.begin(), ids_.end(), scenario_id);
        if (it == ids_.end() || *it != scenario_id)
            throw DataError("unknown fault scenario: " + std::to_string(scenario_id));
        return FaultLabel{scenario_id, static_cast<int>(it - ids_.begin())};
    }
    const std::vector<int>& ids() const { return ids_; }

private:
    std::vector<int> ids_;
};

struct Occurrence {
    std::string occurrence_id;
    FaultLabel label;
    std::vector<AlarmEvent> events; // sorted chronologically
};

struct Sample {
    Mat window;        // v x d, row t = embedding of the t-th alarm token
    Vec target;        // one-hot, length C
    std::string occurrence_id;
    int start_index = 0;
};

inline Vec one_hot(const FaultLabel& label, int classes) {
    if (label.class_index < 0 || label.class_index >= classes)
        throw DataError("label class index " + std::to_string(label.class_index) +
                        " out of range for " + std::to_string(classes) + " classes");
    Vec v(static_cast<std::size_t>(classes), 0.0);
    v[static_cast<std::size_t>(label.class_index)] = 1.0;
    return v;
}

inline int argmax(const Vec& v) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(v.size()); ++i)
        if (v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(best)]) best = i;
    return best;
}

struct SplitConfig {
    double train_fraction = 0.70;
    double val_fraction = 0.15;
    double test_fraction = 0.15;
    std::uint64_t seed = 1;

    void validate() const {
        for (const double f : {train_fraction, val_fraction, test_fraction})
            if (!(f > 0.0 && f < 1.0)) throw ConfigError("split fractions must be in (0,1)");
        if (std::abs(train_fraction + val_fraction + test_fraction - 1.0) > 1e-12)
            throw ConfigError("split fractions must sum to 1");
    }
};

struct SplitResult {
    std::vector<Sample> train, val, test;
};

// Sizes are round(N*fraction) for val and test, remainder to train.
// The permutation is a pure function of cfg.seed.
inline SplitResult split_samples(const std::vector<Sample>& samples, const SplitConfig& cfg) {
    cfg.validate();
    const std::size_t n = samples.size();
    if (n < 3) throw DataError("need at least 3 samples to split");
    const auto n_val = static_cast<std::size_t>(std::llround(static_cast<double>(n) * cfg.val_fraction));
    const auto n_test = static_cast<std::size_t>(std::llround(static_cast<double>(n) * cfg.test_fraction));
    if (n_val == 0 || n_test == 0 || n_val + n_test >= n)
        throw DataError("degenerate split: fractions produce an empty part");
    const std::size_t n_train = n - n_val - n_test;

    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    Rng rng(cfg.seed);
    shuffle(idx, rng);

    SplitResult out;
    out.train.reserve(n_train);
    out.val.reserve(n_val);
    out.test.reserve(n_test);
    for (std::size_t i = 0; i < n_train; ++i) out.train.push_back(samples[idx[i]]);
    for (std::size_t i = n_train; i < n_train + n_val; ++i) out.val.push_back(samples[idx[i]]);
    for (std::size_t i = n_train + n_val; i < n; ++i) out.test.push_back(samples[idx[i]]);
    return out;
}

} // namespace arca
