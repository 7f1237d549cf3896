// qbinom.hpp
//
// Gaussian binomial coefficients.  (m i)_{q^e} is defined by expanding
// (x+y)^m in the quantum plane yx = q^e xy:
//
//   (x+y)^m = sum_i (m i)_{q^e} x^{m-i} y^i
//
// and is computed here by the Pascal-type recurrence
//
//   (m+1 i) = (m i-1) + q^{e*i} (m i),   1 <= i <= m.

#pragma once

#include <stdexcept>
#include <vector>

#include "uqp/laurent.hpp"

namespace uqp {

inline Laurent q_binomial(int m, int i, int base_exponent) {
    if (m < 0 || i < 0 || i > m)
        throw std::domain_error("q_binomial: need 0 <= i <= m");
    std::vector<Laurent> row{Laurent(1)};  // row for m = 0
    for (int mm = 1; mm <= m; ++mm) {
        std::vector<Laurent> next(static_cast<size_t>(mm) + 1);
        next[0] = Laurent(1);
        next[mm] = Laurent(1);
        for (int k = 1; k < mm; ++k)
            next[k] = row[k - 1] + Laurent::q_power(static_cast<long>(base_exponent) * k) * row[k];
        row = std::move(next);
    }
    return row[i];
}

}  // namespace uqp
