#pragma once

#include <random>
#include <string>
#include <vector>

#include "coev/measure.hpp"

namespace coev::bench {

inline SpacePtr make_space(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("h" + std::to_string(i));
    return HistorySpace::make(std::move(labels));
}

// Rank-1 quantum measure with small rational amplitudes and a nonzero total.
inline QuantumMeasure random_rank1(std::size_t n, unsigned seed = 12345) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    const SpacePtr space = make_space(n);
    while (true) {
        std::vector<ComplexRational> amplitudes;
        Rational re_total = 0, im_total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            ComplexRational a{Rational(num(rng), 2), Rational(num(rng), 2)};
            re_total += a.re;
            im_total += a.im;
            amplitudes.push_back(std::move(a));
        }
        if (re_total == 0 && im_total == 0) continue;
        return QuantumMeasure::from_amplitudes(space, std::move(amplitudes), true);
    }
}

}  // namespace coev::bench
