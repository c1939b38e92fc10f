#pragma once

#include <random>

#include "ncalg/presentations.hpp"

namespace testing {

/// Random element over `p`: up to `terms` words of length <= `max_len` with
/// small rational coefficients. Not reduced.
inline ncalg::Element random_element(std::mt19937& rng, const ncalg::Presentation& p, int terms = 4,
                                     int max_len = 3) {
    const auto& alphabet = p.alphabet();
    std::uniform_int_distribution<int> len(0, max_len), sym(0, static_cast<int>(alphabet->size()) - 1),
        num(-5, 5), den(1, 3), count(0, terms);
    ncalg::Element e(alphabet);
    for (int t = count(rng); t > 0; --t) {
        std::string w;
        for (int k = len(rng); k > 0; --k) w.push_back(static_cast<char>(sym(rng)));
        e.add_term(ncalg::Word(w), ncalg::Scalar(num(rng), den(rng)));
    }
    return e;
}

}  // namespace testing
