// oracles.hpp
//
// Test-side oracles, deliberately independent of the implementation paths
// they are used to check:
//
//  * quantum_plane_expansion: brute-force expansion of (x+y)^m in the
//    two-letter rewriting system yx -> q^e xy, the defining model of the
//    Gaussian binomials;
//  * c_via_weights: the pairing recomputed from explicit weight vectors;
//  * classical straightening at q = 1 with plain integer coefficients.

#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "uqp/algebra.hpp"
#include "uqp/laurent.hpp"

namespace oracles {

// coefficients of x^{m-i} y^i in (x+y)^m with yx = q^e xy; index by i
inline std::vector<uqp::Laurent> quantum_plane_expansion(int m, int e) {
    using uqp::Laurent;
    std::map<std::pair<int, int>, Laurent> state{{{0, 0}, Laurent(1)}};
    for (int step = 0; step < m; ++step) {
        std::map<std::pair<int, int>, Laurent> next;
        auto add = [&next](std::pair<int, int> key, const Laurent& c) {
            auto [it, inserted] = next.emplace(key, c);
            if (!inserted) it->second += c;
        };
        for (const auto& [xy, c] : state) {
            const auto [a, b] = xy;
            // (x^a y^b) * x = q^{e b} x^{a+1} y^b
            add({a + 1, b}, c * Laurent::q_power(static_cast<long>(e) * b));
            add({a, b + 1}, c);
        }
        state = std::move(next);
    }
    std::vector<Laurent> by_i(static_cast<size_t>(m) + 1);
    for (const auto& [xy, c] : state) by_i[static_cast<size_t>(xy.second)] = c;
    return by_i;
}

inline int c_via_weights(const uqp::Letter& u, const uqp::Letter& v) {
    const int dim = std::max(u.j, v.j) + 1;
    std::vector<int> wu(static_cast<size_t>(dim), 0), wv(static_cast<size_t>(dim), 0);
    wu[static_cast<size_t>(u.i)] = 1;
    wu[static_cast<size_t>(u.j)] = -1;
    wv[static_cast<size_t>(v.i)] = 1;
    wv[static_cast<size_t>(v.j)] = -1;
    int dot = 0;
    for (int k = 0; k < dim; ++k) dot += wu[static_cast<size_t>(k)] * wv[static_cast<size_t>(k)];
    return dot;
}

// ---------------------------------------------------------------------------
// Classical U(sl_{n+1}^+): same letters and order, straightening
// v u -> u v - delta_{j,a} e_{ib} over the integers.

using ClassicalElement = std::map<uqp::Monomial, mpz_class, uqp::MonomialLess>;

inline void classical_add(ClassicalElement& e, const uqp::Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = e.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

inline ClassicalElement classical_normalize(const std::vector<uqp::Letter>& word,
                                            const mpz_class& coeff = 1) {
    ClassicalElement out;
    std::vector<std::pair<std::vector<uqp::Letter>, mpz_class>> agenda{{word, coeff}};
    while (!agenda.empty()) {
        auto [w, c] = std::move(agenda.back());
        agenda.pop_back();
        int p = -1;
        for (size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k + 1] < w[k]) {
                p = static_cast<int>(k);
                break;
            }
        if (p < 0) {
            std::vector<std::pair<uqp::Letter, int>> factors;
            for (const uqp::Letter& l : w) {
                if (!factors.empty() && factors.back().first == l)
                    ++factors.back().second;
                else
                    factors.emplace_back(l, 1);
            }
            classical_add(out, uqp::Monomial::from_factors(std::move(factors)), c);
            continue;
        }
        const uqp::Letter v = w[static_cast<size_t>(p)];
        const uqp::Letter u = w[static_cast<size_t>(p) + 1];
        auto swapped = w;
        std::swap(swapped[static_cast<size_t>(p)], swapped[static_cast<size_t>(p) + 1]);
        agenda.emplace_back(std::move(swapped), c);
        if (u.j == v.i) {  // [e_{ij}, e_{jb}] = e_{ib}
            std::vector<uqp::Letter> contracted(w.begin(), w.begin() + p);
            contracted.push_back(uqp::Letter{u.i, v.j});
            contracted.insert(contracted.end(), w.begin() + p + 2, w.end());
            agenda.emplace_back(std::move(contracted), -c);
        }
    }
    return out;
}

inline ClassicalElement classical_multiply(const ClassicalElement& a, const ClassicalElement& b) {
    ClassicalElement out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto w = ma.word();
            const auto wb = mb.word();
            w.insert(w.end(), wb.begin(), wb.end());
            for (const auto& [m, c] : classical_normalize(w, ca * cb)) classical_add(out, m, c);
        }
    return out;
}

// specialize an exact element at q = 1
inline ClassicalElement at_q_one(const uqp::Element& e) {
    ClassicalElement out;
    for (const auto& [m, c] : e.terms()) {
        mpz_class sum = 0;
        for (const auto& [exp, k] : c.terms()) sum += k;
        classical_add(out, m, sum);
    }
    return out;
}

}  // namespace oracles
