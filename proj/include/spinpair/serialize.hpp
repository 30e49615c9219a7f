// JSON serialization helpers for the CLI and golden-file tests.
// Directions serialize as {"theta": t, "phi": p}; vectors and matrices as
// nested arrays of [re, im] pairs, row-major; sample runs carry their seed.
#pragma once

#include "spinpair/core.hpp"
#include "spinpair/entanglement.hpp"
#include "spinpair/matrix_rep.hpp"

#include "json.hpp"

namespace spinpair {

inline nlohmann::json to_json(const Direction& d) {
    return {{"theta", d.theta()}, {"phi", d.phi()}};
}

inline nlohmann::json to_json(const Amplitude& a) {
    return nlohmann::json::array({a.real(), a.imag()});
}

inline nlohmann::json to_json(const StateVector& v) {
    auto arr = nlohmann::json::array();
    for (const auto& c : v.components) arr.push_back(to_json(c));
    return arr;
}

inline nlohmann::json to_json(const ObservableMatrix& m) {
    auto rows = nlohmann::json::array();
    for (int i = 0; i < m.dim; ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < m.dim; ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::json to_json(const SampleCounts& s) {
    nlohmann::json counts;
    const auto& outs = joint_outcomes();
    for (int i = 0; i < 4; ++i)
        counts[outcome_label(outs[i])] = s.counts[static_cast<std::size_t>(i)];
    return {{"n", s.n},
            {"seed", s.seed},
            {"counts", counts},
            {"empirical_correlation", s.empirical_correlation()}};
}

}  // namespace spinpair
