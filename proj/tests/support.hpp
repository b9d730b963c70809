#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "tknot/diagram.hpp"
#include "tknot/enumerate.hpp"

namespace testsupport {

// Every single-strand shadow with 1..4 crossings, built once.
inline const std::vector<tknot::Projection>& shadow_pool() {
    static const std::vector<tknot::Projection> pool = [] {
        std::vector<tknot::Projection> v;
        for (int n = 1; n <= 4; ++n)
            for (auto& p : tknot::enum_shadows(n)) v.push_back(std::move(p));
        return v;
    }();
    return pool;
}

inline tknot::Diagram random_diagram(std::mt19937& rng) {
    const auto& pool = shadow_pool();
    const auto& p = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    tknot::Diagram d{p, std::vector<int>(p.n)};
    for (auto& b : d.over) b = static_cast<int>(rng() & 1u);
    return d;
}

inline std::vector<int> random_perm(int n, std::mt19937& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline std::vector<int> random_shift(int n, std::mt19937& rng) {
    std::vector<int> s(n);
    for (auto& x : s) x = static_cast<int>(rng() % 4);
    return s;
}

inline std::vector<tknot::Vec2> random_potential(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> u(-3, 3);
    std::vector<tknot::Vec2> pot(n);
    for (auto& v : pot) v = {u(rng), u(rng)};
    return pot;
}

}  // namespace testsupport
