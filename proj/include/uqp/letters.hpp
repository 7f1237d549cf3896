// letters.hpp
//
// The PBW alphabet of U_q^+(sl_{n+1}): root-vector symbols e_{ij} with
// 1 <= i < j <= n+1, so rank n gives m = n(n+1)/2 letters and the
// generators are x_k = e_{k,k+1}.  The total order is
//
//   e_{ij} < e_{ab}  iff  i+j < a+b, or i+j = a+b and j < b,
//
// and the integer pairing c_{ij,ab} = -d(b,i) + d(b,j) + d(i,a) - d(j,a)
// equals the dot product of the letters' weights eps_i - eps_j.

#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqp {

struct Letter {
    int i = 0;
    int j = 0;
    bool operator==(const Letter&) const = default;
};

inline std::strong_ordering compare_letters(const Letter& u, const Letter& v) {
    if (auto c = (u.i + u.j) <=> (v.i + v.j); c != 0) return c;
    return u.j <=> v.j;
}

inline bool operator<(const Letter& u, const Letter& v) {
    return compare_letters(u, v) == std::strong_ordering::less;
}

inline void check_letter(const Letter& l, int n) {
    if (!(1 <= l.i && l.i < l.j && l.j <= n + 1))
        throw std::domain_error("letter e[" + std::to_string(l.i) + "," + std::to_string(l.j) +
                                "] out of range for rank " + std::to_string(n));
}

inline int c_pairing(const Letter& u, const Letter& v) {
    const auto d = [](int a, int b) { return a == b ? 1 : 0; };
    return -d(v.j, u.i) + d(v.j, u.j) + d(u.i, v.i) - d(u.j, v.i);
}

inline bool is_generator(const Letter& l) { return l.j == l.i + 1; }

inline Letter generator_letter(int k) {
    if (k < 1) throw std::domain_error("generator index must be >= 1");
    return Letter{k, k + 1};
}

// number of generators consumed: e_{ij} = degree j - i word in the x_k
inline int letter_degree(const Letter& l) { return l.j - l.i; }

// weight of e_{ij} is eps_i - eps_j; accumulated sparsely
inline void add_weight(std::map<int, int>& w, const Letter& l, int multiplicity = 1) {
    auto bump = [&w](int idx, int by) {
        auto it = w.emplace(idx, 0).first;
        it->second += by;
        if (it->second == 0) w.erase(it);
    };
    bump(l.i, multiplicity);
    bump(l.j, -multiplicity);
}

inline int weight_dot(const std::map<int, int>& a, const std::map<int, int>& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    int dot = 0;
    for (const auto& [idx, c] : small) {
        auto it = large.find(idx);
        if (it != large.end()) dot += c * it->second;
    }
    return dot;
}

// all letters of rank n, in ascending basis order
inline std::vector<Letter> letters(int n) {
    if (n < 1) throw std::domain_error("rank must be >= 1");
    std::vector<Letter> out;
    out.reserve(static_cast<size_t>(n) * (n + 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n + 1; ++j) out.push_back(Letter{i, j});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace uqp
