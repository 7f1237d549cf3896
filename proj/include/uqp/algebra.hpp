// algebra.hpp
//
// U_q^+(sl_{n+1}) with its PBW basis.  Elements are Z[q,q^-1]-linear
// combinations of normal-ordered monomials in the letters e_{ij}; products
// are computed by straightening: for u < v the defining relation
//
//   u v - q^{c(u,v)} v u = [u,v]_q + m<u,v>
//
// is oriented as the rewrite
//
//   v u -> q^{-c} u v - q^{-c} [u,v]_q - q^{-c} (q - q^-1) e_{aj} e_{ib},
//
// where the bracket term delta_{j,a} e_{ib} appears when u, v share the
// middle index and the pseudobracket term when i < a < j < b
// (u = e_{ij}, v = e_{ab}).  Rewriting terminates: a swap removes an
// inversion, and both correction terms strictly lower the multiset of
// (i+j)-degrees of the word.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uqp/laurent.hpp"
#include "uqp/letters.hpp"

namespace uqp {

// ---------------------------------------------------------------------------
// PBW monomials: strictly ascending letters with positive exponents.

class Monomial {
public:
    Monomial() = default;  // the unit

    static Monomial letter(Letter l, int exp = 1) {
        if (exp < 0) throw std::domain_error("Monomial: negative exponent");
        Monomial m;
        if (exp > 0) m.factors_.emplace_back(l, exp);
        return m;
    }

    static Monomial from_factors(std::vector<std::pair<Letter, int>> factors) {
        for (size_t k = 0; k < factors.size(); ++k) {
            if (factors[k].second <= 0) throw std::domain_error("Monomial: exponent must be positive");
            if (k > 0 && !(factors[k - 1].first < factors[k].first))
                throw std::domain_error("Monomial: letters must strictly ascend");
        }
        Monomial m;
        m.factors_ = std::move(factors);
        return m;
    }

    const std::vector<std::pair<Letter, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    // total generator degree
    int degree() const {
        int d = 0;
        for (const auto& [l, e] : factors_) d += e * letter_degree(l);
        return d;
    }

    std::vector<Letter> word() const {
        std::vector<Letter> w;
        for (const auto& [l, e] : factors_)
            for (int k = 0; k < e; ++k) w.push_back(l);
        return w;
    }

    std::map<int, int> weight() const {
        std::map<int, int> w;
        for (const auto& [l, e] : factors_) add_weight(w, l, e);
        return w;
    }

    // counts of each generator x_k consumed; e_{ij} uses x_i..x_{j-1} once
    std::map<int, int> multidegree() const {
        std::map<int, int> d;
        for (const auto& [l, e] : factors_)
            for (int k = l.i; k < l.j; ++k) d[k] += e;
        return d;
    }

    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::pair<Letter, int>> factors_;
};

// Canonical order: total degree, then the expanded letter word
// lexicographically in the basis order.  Used everywhere output is rendered,
// so reports are diff-stable.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (int da = a.degree(), db = b.degree(); da != db) return da < db;
        const auto wa = a.word(), wb = b.word();
        return std::lexicographical_compare(
            wa.begin(), wa.end(), wb.begin(), wb.end(),
            [](const Letter& x, const Letter& y) { return x < y; });
    }
};

// ---------------------------------------------------------------------------
// T-Lie data on letters.

// [u,v]_q: for u <= v the gl bracket delta_{j,a} e_{ib}; extended to u > v
// through the presymmetry, [,]_q S = -[,]_q.
struct BracketTerm {
    Laurent coeff;
    Letter letter;
};
inline std::optional<BracketTerm> bracket_term(const Letter& u, const Letter& v) {
    const auto ord = compare_letters(u, v);
    if (ord == std::strong_ordering::equal) return std::nullopt;
    if (ord == std::strong_ordering::greater) {
        auto t = bracket_term(v, u);
        if (!t) return std::nullopt;
        t->coeff = -Laurent::q_power(-c_pairing(u, v)) * t->coeff;
        return t;
    }
    if (u.j != v.i) return std::nullopt;  // v.j == u.i is impossible when u < v
    return BracketTerm{Laurent(1), Letter{u.i, v.j}};
}

struct Presymmetry {
    Laurent coeff;
    Letter first, second;
};
inline Presymmetry presymmetry_S(const Letter& u, const Letter& v) {
    const auto ord = compare_letters(u, v);
    if (ord == std::strong_ordering::equal) return {Laurent(1), u, v};
    const int c = c_pairing(u, v);
    // S^2 = 1 forces the inverse coefficient on descending pairs
    return {Laurent::q_power(ord == std::strong_ordering::less ? c : -c), v, u};
}

// <u,v>: (q - q^-1) e_{aj} (x) e_{ib} on the chain i < a < j < b for
// u = e_{ij} < v = e_{ab}; extended by <,>S = -<,>.
struct PseudoTerm {
    Laurent coeff;
    Letter first, second;
};
inline std::optional<PseudoTerm> pseudobracket_term(const Letter& u, const Letter& v) {
    const auto ord = compare_letters(u, v);
    if (ord == std::strong_ordering::equal) return std::nullopt;
    if (ord == std::strong_ordering::greater) {
        auto t = pseudobracket_term(v, u);
        if (!t) return std::nullopt;
        t->coeff = -Laurent::q_power(-c_pairing(u, v)) * t->coeff;
        return t;
    }
    if (!(u.i < v.i && v.i < u.j && u.j < v.j)) return std::nullopt;
    return PseudoTerm{q_minus_q_inverse(), Letter{v.i, u.j}, Letter{u.i, v.j}};
}

// ---------------------------------------------------------------------------
// Straightening.

// The oriented rewrite for the bad product v*u, u < v.  Coefficients on the
// right-hand side already carry the q^{-c} factor.
struct StraighteningRule {
    Letter small, big;  // u < v
    int q_power = 0;    // -c(u,v); coefficient on small*big
    std::optional<std::pair<Letter, Laurent>> bracket;
    std::optional<std::pair<std::pair<Letter, Letter>, Laurent>> pseudo;
};

inline StraighteningRule straightening_rule(const Letter& u, const Letter& v) {
    if (!(u < v)) throw std::domain_error("straightening_rule: need u < v");
    StraighteningRule rule;
    rule.small = u;
    rule.big = v;
    rule.q_power = -c_pairing(u, v);
    const Laurent lead = Laurent::q_power(rule.q_power);
    if (auto b = bracket_term(u, v)) rule.bracket = {b->letter, -(lead * b->coeff)};
    if (auto p = pseudobracket_term(u, v))
        rule.pseudo = {{p->first, p->second}, -(lead * p->coeff)};
    return rule;
}

namespace detail {

using Word = std::vector<Letter>;

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const Letter& x, const Letter& y) { return x < y; });
    }
};

inline Monomial word_to_monomial(const Word& w) {
    std::vector<std::pair<Letter, int>> factors;
    for (const Letter& l : w) {
        if (!factors.empty() && factors.back().first == l)
            ++factors.back().second;
        else
            factors.emplace_back(l, 1);
    }
    return Monomial::from_factors(std::move(factors));
}

// index of the leftmost strictly descending adjacent pair, or -1
inline int first_inversion(const Word& w) {
    for (size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p + 1] < w[p]) return static_cast<int>(p);
    return -1;
}

// one application of the rule at position p; appends (word, coeff) results
inline void rewrite_at(const Word& w, const Laurent& coeff, int p,
                       std::vector<std::pair<Word, Laurent>>& out) {
    const Letter v = w[static_cast<size_t>(p)];
    const Letter u = w[static_cast<size_t>(p) + 1];
    const StraighteningRule rule = straightening_rule(u, v);

    Word swapped = w;
    swapped[static_cast<size_t>(p)] = u;
    swapped[static_cast<size_t>(p) + 1] = v;
    out.emplace_back(std::move(swapped), coeff * Laurent::q_power(rule.q_power));

    if (rule.bracket) {
        Word contracted;
        contracted.reserve(w.size() - 1);
        contracted.insert(contracted.end(), w.begin(), w.begin() + p);
        contracted.push_back(rule.bracket->first);
        contracted.insert(contracted.end(), w.begin() + p + 2, w.end());
        out.emplace_back(std::move(contracted), coeff * rule.bracket->second);
    }
    if (rule.pseudo) {
        Word replaced = w;
        replaced[static_cast<size_t>(p)] = rule.pseudo->first.first;
        replaced[static_cast<size_t>(p) + 1] = rule.pseudo->first.second;
        out.emplace_back(std::move(replaced), coeff * rule.pseudo->second);
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Elements.

class Element {
public:
    using TermMap = std::map<Monomial, Laurent, MonomialLess>;

    Element() = default;  // zero

    static Element zero() { return {}; }
    static Element one() { return monomial(Monomial{}); }
    static Element scalar(const Laurent& c) { return monomial(Monomial{}, c); }
    static Element monomial(const Monomial& m, const Laurent& c = Laurent(1)) {
        Element e;
        e.add_term(m, c);
        return e;
    }
    static Element letter(const Letter& l) { return monomial(Monomial::letter(l)); }
    static Element generator(int k) { return letter(generator_letter(k)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Laurent coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Laurent() : it->second;
    }

    void add_term(const Monomial& m, const Laurent& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }
    Element& operator-=(const Element& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }
    Element operator+(const Element& other) const {
        Element r = *this;
        r += other;
        return r;
    }
    Element operator-(const Element& other) const {
        Element r = *this;
        r -= other;
        return r;
    }
    Element operator-() const {
        Element r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    Element scaled(const Laurent& c) const {
        Element r;
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, c * k);
        return r;
    }

    bool operator==(const Element& other) const { return terms_ == other.terms_; }
    bool operator!=(const Element& other) const { return !(*this == other); }

    Element operator*(const Element& other) const;
    Element& operator*=(const Element& other) { return *this = *this * other; }

    Element power(int e) const {
        if (e < 0) throw std::domain_error("Element: negative power");
        Element r = one();
        for (int k = 0; k < e; ++k) r = r * *this;
        return r;
    }

private:
    TermMap terms_;
};

inline Element operator*(const Laurent& c, const Element& e) { return e.scaled(c); }

// Full normal form of a letter word, scaled by coeff.  Worklist keyed by
// word so that coinciding intermediates merge (and cancel) early.
inline Element normalize_word(const std::vector<Letter>& word, const Laurent& coeff = Laurent(1)) {
    Element out;
    if (coeff.is_zero()) return out;
    std::map<detail::Word, Laurent, detail::WordLess> agenda;
    agenda.emplace(word, coeff);
    std::vector<std::pair<detail::Word, Laurent>> children;
    while (!agenda.empty()) {
        auto node = agenda.extract(agenda.begin());
        const detail::Word& w = node.key();
        const Laurent& c = node.mapped();
        const int p = detail::first_inversion(w);
        if (p < 0) {
            out.add_term(detail::word_to_monomial(w), c);
            continue;
        }
        children.clear();
        detail::rewrite_at(w, c, p, children);
        for (auto& [cw, cc] : children) {
            auto [it, inserted] = agenda.emplace(std::move(cw), cc);
            if (!inserted) {
                it->second += cc;
                if (it->second.is_zero()) agenda.erase(it);
            }
        }
    }
    return out;
}

inline Element Element::operator*(const Element& other) const {
    Element r;
    for (const auto& [ma, ca] : terms_) {
        const auto wa = ma.word();
        for (const auto& [mb, cb] : other.terms_) {
            detail::Word w = wa;
            const auto wb = mb.word();
            w.insert(w.end(), wb.begin(), wb.end());
            r += normalize_word(w, ca * cb);
        }
    }
    return r;
}

// Re-run straightening on every term; the identity on well-formed elements.
inline Element renormalize(const Element& e) {
    Element r;
    for (const auto& [m, c] : e.terms()) r += normalize_word(m.word(), c);
    return r;
}

inline Element bracket(const Letter& u, const Letter& v) {
    auto t = bracket_term(u, v);
    if (!t) return Element::zero();
    return Element::monomial(Monomial::letter(t->letter), t->coeff);
}

// ---------------------------------------------------------------------------
// Root vectors.

inline Element root_vector(int i, int j) {
    if (!(1 <= i && i < j)) throw std::domain_error("root_vector: need 1 <= i < j");
    return Element::letter(Letter{i, j});
}

// e_{ij} as a combination of free generator words, via
// e_{ib} = e_{ij} e_{jb} - q^-1 e_{jb} e_{ij} split at `mid` (default i+1);
// deeper splits always use the minimal index.
inline std::map<std::vector<int>, Laurent> root_vector_expansion(int i, int j, int mid = 0) {
    if (!(1 <= i && i < j)) throw std::domain_error("root_vector_expansion: need 1 <= i < j");
    if (j == i + 1) return {{{i}, Laurent(1)}};
    if (mid == 0) mid = i + 1;
    if (!(i < mid && mid < j)) throw std::domain_error("root_vector_expansion: bad middle index");
    const auto left = root_vector_expansion(i, mid);
    const auto right = root_vector_expansion(mid, j);
    std::map<std::vector<int>, Laurent> out;
    auto emit = [&out](const std::vector<int>& a, const std::vector<int>& b, const Laurent& c) {
        std::vector<int> w = a;
        w.insert(w.end(), b.begin(), b.end());
        auto [it, inserted] = out.emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    const Laurent qinv = Laurent::q_power(-1);
    for (const auto& [wl, cl] : left)
        for (const auto& [wr, cr] : right) {
            emit(wl, wr, cl * cr);
            emit(wr, wl, -(qinv * cl * cr));
        }
    return out;
}

inline Element eval_generator_word(const std::vector<int>& word) {
    std::vector<Letter> w;
    w.reserve(word.size());
    for (int k : word) w.push_back(generator_letter(k));
    return normalize_word(w);
}

inline Element eval_free_combination(const std::map<std::vector<int>, Laurent>& comb) {
    Element r;
    for (const auto& [w, c] : comb) r += eval_generator_word(w).scaled(c);
    return r;
}

// ---------------------------------------------------------------------------
// Diamond-lemma check: for every strictly descending triple w > v > u the
// word w v u has two one-step reductions; both must reach the same normal
// form.  With termination this gives confluence, hence the PBW basis.

struct ConfluenceReport {
    int n = 0;
    long triples = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline ConfluenceReport check_confluence(int n) {
    ConfluenceReport report;
    report.n = n;
    const auto alphabet = letters(n);
    const size_t m = alphabet.size();
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b)
            for (size_t c = b + 1; c < m; ++c) {
                const detail::Word word{alphabet[c], alphabet[b], alphabet[a]};
                ++report.triples;
                std::vector<std::pair<detail::Word, Laurent>> branch;
                Element left, right;
                detail::rewrite_at(word, Laurent(1), 0, branch);
                for (const auto& [w, k] : branch) left += normalize_word(w, k);
                branch.clear();
                detail::rewrite_at(word, Laurent(1), 1, branch);
                for (const auto& [w, k] : branch) right += normalize_word(w, k);
                if (left != right) {
                    std::ostringstream msg;
                    msg << "triple e[" << alphabet[c].i << "," << alphabet[c].j << "] e["
                        << alphabet[b].i << "," << alphabet[b].j << "] e[" << alphabet[a].i << ","
                        << alphabet[a].j << "] does not resolve";
                    report.failures.push_back(msg.str());
                }
            }
    return report;
}

}  // namespace uqp
