// oracle.hpp
//
// Independent brute-force model of U_q^+(sl_{n+1}) as the free algebra on
// x_1..x_n modulo the two-sided ideal of the quantum Serre relations.  Each
// multidegree component is certified by exact linear algebra: the span of
// all padded relations w * r * w' is row-reduced by fraction-free
// (Bareiss) elimination over Z[q,q^-1], so the quotient dimension needs no
// rational-function arithmetic.  This is the yardstick the PBW basis and
// the straightening product are checked against.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "uqp/algebra.hpp"
#include "uqp/laurent.hpp"
#include "uqp/letters.hpp"

namespace uqp {

using FreeWord = std::vector<int>;
using FreeCombination = std::map<FreeWord, Laurent>;

inline int default_degree_limit(int n) { return n <= 3 ? 6 : (n == 4 ? 4 : 3); }

inline std::vector<int> word_multidegree(const FreeWord& w, int n) {
    std::vector<int> d(static_cast<size_t>(n), 0);
    for (int k : w) {
        if (k < 1 || k > n) throw std::domain_error("free word: generator index out of range");
        ++d[static_cast<size_t>(k) - 1];
    }
    return d;
}

inline std::string word_str(const FreeWord& w) {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) out << '*';
        out << 'x' << w[k];
    }
    return out.str();
}

// all words of the given multidegree, lexicographically
inline std::vector<FreeWord> words_of_multidegree(int n, const std::vector<int>& d) {
    std::vector<FreeWord> out;
    FreeWord current;
    const int total = std::accumulate(d.begin(), d.end(), 0);
    std::vector<int> rest = d;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == total) {
            out.push_back(current);
            return;
        }
        for (int k = 1; k <= n; ++k) {
            if (rest[static_cast<size_t>(k) - 1] == 0) continue;
            --rest[static_cast<size_t>(k) - 1];
            current.push_back(k);
            self(self);
            current.pop_back();
            ++rest[static_cast<size_t>(k) - 1];
        }
    };
    rec(rec);
    return out;
}

// the defining relations: x_i x_j - x_j x_i (|i-j| > 1) and
// x_i^2 x_j - (q + q^-1) x_i x_j x_i + x_j x_i^2 (|i-j| = 1)
inline std::vector<FreeCombination> serre_relations(int n) {
    std::vector<FreeCombination> rels;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) {
            FreeCombination r;
            r[{i, j}] = Laurent(1);
            r[{j, i}] = Laurent(-1);
            rels.push_back(std::move(r));
        }
    const Laurent q_plus_qinv = Laurent::q_power(1) + Laurent::q_power(-1);
    for (int i = 1; i <= n; ++i)
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j > n) continue;
            FreeCombination r;
            r[{i, i, j}] = Laurent(1);
            r[{i, j, i}] = -q_plus_qinv;
            r[{j, i, i}] = Laurent(1);
            rels.push_back(std::move(r));
        }
    return rels;
}

// ---------------------------------------------------------------------------
// Graded components.

struct GradedComponent {
    int n = 0;
    std::vector<int> multidegree;
    std::vector<FreeWord> words;                       // component basis
    std::vector<std::vector<Laurent>> relation_rows;   // over `words`
};

namespace detail {

inline size_t word_index(const std::vector<FreeWord>& words, const FreeWord& w) {
    const auto it = std::lower_bound(words.begin(), words.end(), w);
    if (it == words.end() || *it != w) throw std::domain_error("oracle: word outside component");
    return static_cast<size_t>(it - words.begin());
}

// enumerate multidegree vectors <= bound componentwise
inline void enumerate_subdegrees(const std::vector<int>& bound,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> d(bound.size(), 0);
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == bound.size()) {
            fn(d);
            return;
        }
        for (int v = 0; v <= bound[k]; ++v) {
            d[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace detail

inline GradedComponent graded_component(int n, const std::vector<int>& d, int degree_limit = -1) {
    if (static_cast<int>(d.size()) != n) throw std::domain_error("graded_component: bad multidegree size");
    if (degree_limit < 0) degree_limit = default_degree_limit(n);
    const int total = std::accumulate(d.begin(), d.end(), 0);
    if (total > degree_limit) throw std::domain_error("graded_component: degree limit exceeded");

    GradedComponent comp;
    comp.n = n;
    comp.multidegree = d;
    comp.words = words_of_multidegree(n, d);

    for (const FreeCombination& rel : serre_relations(n)) {
        std::vector<int> rel_deg(static_cast<size_t>(n), 0);
        for (int k : rel.begin()->first) ++rel_deg[static_cast<size_t>(k) - 1];
        std::vector<int> room(static_cast<size_t>(n));
        bool fits = true;
        for (size_t k = 0; k < room.size(); ++k) {
            room[k] = d[k] - rel_deg[k];
            if (room[k] < 0) fits = false;
        }
        if (!fits) continue;
        detail::enumerate_subdegrees(room, [&](const std::vector<int>& left_deg) {
            std::vector<int> right_deg(room.size());
            for (size_t k = 0; k < room.size(); ++k) right_deg[k] = room[k] - left_deg[k];
            for (const FreeWord& wl : words_of_multidegree(n, left_deg))
                for (const FreeWord& wr : words_of_multidegree(n, right_deg)) {
                    std::vector<Laurent> row(comp.words.size());
                    for (const auto& [wm, c] : rel) {
                        FreeWord w = wl;
                        w.insert(w.end(), wm.begin(), wm.end());
                        w.insert(w.end(), wr.begin(), wr.end());
                        row[detail::word_index(comp.words, w)] += c;
                    }
                    comp.relation_rows.push_back(std::move(row));
                }
        });
    }
    return comp;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination.

struct Echelon {
    std::vector<std::vector<Laurent>> rows;  // the nonzero echelon rows
    std::vector<int> pivot_cols;
    std::vector<Laurent> pivots;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

namespace detail {

// clear the unit +-q^k content so exponents do not drift
inline void strip_row_units(std::vector<Laurent>& row) {
    long shift = 0;
    bool seen = false;
    for (const Laurent& e : row) {
        if (e.is_zero()) continue;
        shift = seen ? std::min(shift, e.min_exponent()) : e.min_exponent();
        seen = true;
    }
    if (!seen || shift == 0) return;
    for (Laurent& e : row)
        if (!e.is_zero()) e = e.shifted(-shift);
}

}  // namespace detail

inline Echelon bareiss_echelon(std::vector<std::vector<Laurent>> rows) {
    Echelon result;
    if (rows.empty()) return result;
    const size_t cols = rows[0].size();
    for (auto& row : rows) detail::strip_row_units(row);
    size_t rank = 0;
    Laurent prev(1);
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t pr = rank;
        while (pr < rows.size() && rows[pr][col].is_zero()) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[rank], rows[pr]);
        const Laurent pivot = rows[rank][col];
        for (size_t k = rank + 1; k < rows.size(); ++k) {
            const Laurent factor = rows[k][col];
            for (size_t c = col; c < cols; ++c) {
                Laurent next = pivot * rows[k][c] - factor * rows[rank][c];
                rows[k][c] = Laurent::exact_div(next, prev);
            }
        }
        result.pivot_cols.push_back(static_cast<int>(col));
        result.pivots.push_back(pivot);
        prev = pivot;
        ++rank;
    }
    rows.resize(rank);
    result.rows = std::move(rows);
    return result;
}

// Gaussian rank over Q after substituting q = q_value
inline int rank_at(const std::vector<std::vector<Laurent>>& rows, const mpq_class& q_value) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols; ++c) m[r][c] = rows[r][c].evaluate(q_value);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < m.size(); ++col) {
        size_t pr = rank;
        while (pr < m.size() && m[pr][col] == 0) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[rank], m[pr]);
        for (size_t k = rank + 1; k < m.size(); ++k) {
            if (m[k][col] == 0) continue;
            const mpq_class f = m[k][col] / m[rank][col];
            for (size_t c = col; c < cols; ++c) m[k][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

enum class RankMode { exact, probabilistic };

inline int matrix_rank(const std::vector<std::vector<Laurent>>& rows, RankMode mode) {
    if (mode == RankMode::exact) return bareiss_echelon(rows).rank();
    int best = 0;
    for (long t : {2L, 3L, 5L}) best = std::max(best, rank_at(rows, mpq_class(t)));
    return best;
}

// ---------------------------------------------------------------------------
// Dimensions.

inline int component_dimension(int n, const std::vector<int>& d, RankMode mode = RankMode::exact,
                               int degree_limit = -1) {
    const GradedComponent comp = graded_component(n, d, degree_limit);
    return static_cast<int>(comp.words.size()) - matrix_rank(comp.relation_rows, mode);
}

// PBW monomials of the given multidegree, ascending in the canonical order
inline std::vector<Monomial> pbw_monomials(int n, const std::vector<int>& d) {
    const auto alphabet = letters(n);
    std::vector<Monomial> out;
    std::vector<std::pair<Letter, int>> factors;
    std::vector<int> rest = d;
    auto rec = [&](auto&& self, size_t next) -> void {
        if (std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; })) {
            out.push_back(Monomial::from_factors(factors));
            return;
        }
        if (next == alphabet.size()) return;
        const Letter l = alphabet[next];
        int max_exp = rest[static_cast<size_t>(l.i) - 1];
        for (int k = l.i; k < l.j; ++k) max_exp = std::min(max_exp, rest[static_cast<size_t>(k) - 1]);
        self(self, next + 1);  // exponent 0
        for (int e = 1; e <= max_exp; ++e) {
            for (int k = l.i; k < l.j; ++k) --rest[static_cast<size_t>(k) - 1];
            factors.emplace_back(l, e);
            self(self, next + 1);
            factors.pop_back();
        }
        for (int e = 0; e < max_exp; ++e)
            for (int k = l.i; k < l.j; ++k) ++rest[static_cast<size_t>(k) - 1];
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return MonomialLess{}(a, b);
    });
    return out;
}

inline long pbw_count(int n, const std::vector<int>& d) {
    return static_cast<long>(pbw_monomials(n, d).size());
}

// ---------------------------------------------------------------------------
// Oracle normal forms: coordinates in the complement of the relation span.
// The reduction stays in Z[q,q^-1]; coordinates are represented as a vector
// of numerators with a common denominator (a product of pivots), so
// equality is tested by cross-multiplication.

struct OracleCoords {
    std::vector<int> multidegree;
    std::vector<FreeWord> words;
    std::vector<Laurent> num;
    Laurent den = Laurent(1);

    bool is_zero() const {
        return std::all_of(num.begin(), num.end(), [](const Laurent& c) { return c.is_zero(); });
    }
};

inline bool coords_equal(const OracleCoords& a, const OracleCoords& b) {
    if (a.multidegree != b.multidegree || a.num.size() != b.num.size()) return false;
    for (size_t k = 0; k < a.num.size(); ++k)
        if (a.num[k] * b.den != b.num[k] * a.den) return false;
    return true;
}

inline OracleCoords oracle_reduce(int n, const FreeCombination& comb, int degree_limit = -1) {
    if (comb.empty()) throw std::domain_error("oracle_reduce: empty combination");
    const std::vector<int> d = word_multidegree(comb.begin()->first, n);
    const GradedComponent comp = graded_component(n, d, degree_limit);
    const Echelon ech = bareiss_echelon(comp.relation_rows);

    OracleCoords coords;
    coords.multidegree = d;
    coords.words = comp.words;
    coords.num.assign(comp.words.size(), Laurent());
    for (const auto& [w, c] : comb) {
        if (word_multidegree(w, n) != d)
            throw std::domain_error("oracle_reduce: mixed multidegrees");
        coords.num[detail::word_index(comp.words, w)] += c;
    }
    for (int t = 0; t < ech.rank(); ++t) {
        const size_t pc = static_cast<size_t>(ech.pivot_cols[static_cast<size_t>(t)]);
        const Laurent lead = coords.num[pc];
        if (lead.is_zero()) continue;
        const Laurent& pivot = ech.pivots[static_cast<size_t>(t)];
        for (size_t c = 0; c < coords.num.size(); ++c)
            coords.num[c] = pivot * coords.num[c] - lead * ech.rows[static_cast<size_t>(t)][c];
        coords.den *= pivot;
    }
    // semi-canonical: shared q-power content stripped, denominator sign positive
    long shift = coords.den.min_exponent();
    for (const Laurent& c : coords.num)
        if (!c.is_zero()) shift = std::min(shift, c.min_exponent());
    if (shift != 0) {
        coords.den = coords.den.shifted(-shift);
        for (Laurent& c : coords.num)
            if (!c.is_zero()) c = c.shifted(-shift);
    }
    if (coords.den.coefficient(coords.den.min_exponent()) < 0) {
        coords.den = -coords.den;
        for (Laurent& c : coords.num) c = -c;
    }
    return coords;
}

inline OracleCoords oracle_normal_form(int n, const FreeWord& w, int degree_limit = -1) {
    return oracle_reduce(n, FreeCombination{{w, Laurent(1)}}, degree_limit);
}

// ---------------------------------------------------------------------------
// PBW certification.

struct ComponentCertificate {
    std::vector<int> degree;
    long words = 0;
    long rank = 0;
    long quotient_dim = 0;
    long pbw = 0;
    bool match = false;
};

struct PbwReport {
    int n = 0;
    int limit = 0;
    std::vector<ComponentCertificate> components;
    bool ok() const {
        return std::all_of(components.begin(), components.end(),
                           [](const ComponentCertificate& c) { return c.match; });
    }
};

// Certifies, for every multidegree with 1 <= |d| <= degree_limit, that
//   #PBW monomials == #words - rank(relation span)
// and that the evaluation map FreeWord -> PBW normal form kills the
// relation span and is injective on the quotient.
inline PbwReport certify_pbw(int n, int degree_limit = -1, RankMode mode = RankMode::exact) {
    if (degree_limit < 0) degree_limit = default_degree_limit(n);
    PbwReport report;
    report.n = n;
    report.limit = degree_limit;

    std::vector<std::vector<int>> degrees;
    std::vector<int> bound(static_cast<size_t>(n), degree_limit);
    detail::enumerate_subdegrees(bound, [&](const std::vector<int>& d) {
        const int total = std::accumulate(d.begin(), d.end(), 0);
        if (1 <= total && total <= degree_limit) degrees.push_back(d);
    });
    std::sort(degrees.begin(), degrees.end(), [](const auto& a, const auto& b) {
        const int ta = std::accumulate(a.begin(), a.end(), 0);
        const int tb = std::accumulate(b.begin(), b.end(), 0);
        if (ta != tb) return ta < tb;
        return a < b;
    });

    for (const auto& d : degrees) {
        const GradedComponent comp = graded_component(n, d, degree_limit);
        ComponentCertificate cert;
        cert.degree = d;
        cert.words = static_cast<long>(comp.words.size());
        cert.rank = matrix_rank(comp.relation_rows, mode);
        cert.quotient_dim = cert.words - cert.rank;
        const auto basis = pbw_monomials(n, d);
        cert.pbw = static_cast<long>(basis.size());

        bool injective = cert.quotient_dim == cert.pbw;
        if (injective) {
            // evaluation matrix: straightened normal form of every word
            std::map<Monomial, size_t, MonomialLess> col;
            for (size_t k = 0; k < basis.size(); ++k) col.emplace(basis[k], k);
            std::vector<std::vector<Laurent>> eval_rows;
            eval_rows.reserve(comp.words.size());
            std::vector<Element> normal_forms;
            normal_forms.reserve(comp.words.size());
            for (const FreeWord& w : comp.words) {
                const Element nf = eval_generator_word(w);
                std::vector<Laurent> row(basis.size());
                for (const auto& [m, c] : nf.terms()) {
                    auto it = col.find(m);
                    if (it == col.end()) {
                        injective = false;
                        break;
                    }
                    row[it->second] = c;
                }
                if (!injective) break;
                normal_forms.push_back(nf);
                eval_rows.push_back(std::move(row));
            }
            if (injective && matrix_rank(eval_rows, mode) != cert.pbw) injective = false;
            if (injective) {
                // relation span must evaluate to zero
                for (const auto& row : comp.relation_rows) {
                    Element image;
                    for (size_t k = 0; k < row.size(); ++k)
                        if (!row[k].is_zero()) image += normal_forms[k].scaled(row[k]);
                    if (!image.is_zero()) {
                        injective = false;
                        break;
                    }
                }
            }
        }
        cert.match = injective && cert.quotient_dim == cert.pbw;
        report.components.push_back(std::move(cert));
    }
    return report;
}

}  // namespace uqp
