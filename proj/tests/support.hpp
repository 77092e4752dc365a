#pragma once

#include "mhc/spec_io.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <string>

namespace test {

inline mhc::Vec random_vec(std::mt19937& rng, std::size_t dim, const mhc::Field* f) {
    std::uniform_int_distribution<int> coin(0, 2), val(-3, 3);
    mhc::Vec v = mhc::zero_vec(dim, f);
    for (auto& s : v) {
        if (coin(rng) == 0) continue;
        std::vector<mpq_class> co;
        for (std::size_t k = 0; k < f->degree(); ++k) co.emplace_back(val(rng));
        s = mhc::Scalar(f, co);
    }
    return v;
}

/// Dimensions frozen from the independent Python bar-complex oracle.
inline const nlohmann::json& frozen() {
    static const nlohmann::json j = [] {
        std::ifstream in(std::string(MHC_SOURCE_DIR) + "/tests/oracle/frozen_dims.json");
        return nlohmann::json::parse(in);
    }();
    return j;
}

/// Oracle key for a fixture alias (the oracle names dihedral groups by u).
inline std::string frozen_key(const std::string& fixture) {
    if (fixture == "dihedral6") return "dihedral3";
    if (fixture == "dihedral8") return "dihedral4";
    return fixture;
}

inline std::vector<std::size_t> frozen_dims(const std::string& fixture, const std::string& kind) {
    return frozen().at(frozen_key(fixture)).at(kind).get<std::vector<std::size_t>>();
}

}  // namespace test
