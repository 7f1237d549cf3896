// verify.hpp
//
// Machine checks for every identity the algebra is supposed to satisfy:
// multiplicativity of the braiding, associativity of the braided product,
// the bialgebra axioms for phi and eps, the antipode convolution identities,
// the hexagon-type equations, the additional compatibility between sigma,
// sigma^-1 and phi, the Gaussian-binomial identities, confluence of the
// straightening rules, and the PBW dimension certificate.
//
// Every check is exhaustive over letters and deterministic for a given
// seed; reports carry the instance count and a list of failing instances
// (expected empty).

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "uqp/hopf.hpp"
#include "uqp/io.hpp"
#include "uqp/oracle.hpp"
#include "uqp/qbinom.hpp"

namespace uqp {

struct CheckReport {
    std::string check;
    int n = 0;
    int degree_bound = 0;
    long instances = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;  // text output only, not part of the JSON report
    bool ok() const { return failures.empty(); }
};

inline json to_json(const CheckReport& r) {
    return json{{"check", r.check},
                {"n", r.n},
                {"degree_bound", r.degree_bound},
                {"instances", r.instances},
                {"failures", r.failures}};
}

namespace detail {
constexpr size_t kMaxRecordedFailures = 100;
inline void record_failure(CheckReport& r, std::string msg) {
    if (r.failures.size() < kMaxRecordedFailures) r.failures.push_back(std::move(msg));
}
inline std::string letter_str(const Letter& l) {
    return "e[" + std::to_string(l.i) + "," + std::to_string(l.j) + "]";
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Deterministic randomness.  mt19937_64 is fully specified by the standard,
// and ranges are drawn by modulo so reports are byte-identical across
// platforms for a fixed seed.

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    uint64_t next() { return eng_(); }
    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

inline Laurent random_laurent(Rng& rng) {
    Laurent c;
    const int parts = rng.range(1, 2);
    for (int k = 0; k < parts; ++k) {
        int coeff = rng.range(-3, 3);
        if (coeff == 0) coeff = 1;
        c += Laurent::term(rng.range(-2, 2), coeff);
    }
    if (c.is_zero()) c = Laurent(1);
    return c;
}

inline Monomial random_monomial(Rng& rng, int n, int degree_bound) {
    const auto alphabet = letters(n);
    std::map<Letter, int> counts;
    int budget = rng.range(0, degree_bound);
    int guard = 0;
    while (budget > 0 && guard++ < 64) {
        const Letter l = alphabet[static_cast<size_t>(rng.range(0, static_cast<int>(alphabet.size()) - 1))];
        if (letter_degree(l) > budget) continue;
        ++counts[l];
        budget -= letter_degree(l);
    }
    std::vector<std::pair<Letter, int>> factors(counts.begin(), counts.end());
    return Monomial::from_factors(std::move(factors));
}

inline Element random_element(Rng& rng, int n, int degree_bound, int max_terms = 2) {
    Element e;
    const int terms = rng.range(1, max_terms);
    for (int k = 0; k < terms; ++k)
        e.add_term(random_monomial(rng, n, degree_bound), random_laurent(rng));
    if (e.is_zero()) e = Element::one();
    return e;
}

// ---------------------------------------------------------------------------
// The named operator expressions of the braided structure.

inline OperatorExpression expr_m1_lhs() { return OperatorExpression{}.then_multiply(2).then_sigma(1); }
inline OperatorExpression expr_m1_rhs() {
    return OperatorExpression{}.then_sigma(1).then_sigma(2).then_multiply(1);
}
inline OperatorExpression expr_m2_lhs() { return OperatorExpression{}.then_multiply(1).then_sigma(1); }
inline OperatorExpression expr_m2_rhs() {
    return OperatorExpression{}.then_sigma(2).then_sigma(1).then_multiply(2);
}
inline OperatorExpression expr_hexagon1_lhs() {
    return OperatorExpression{}.then_coproduct(1).then_sigma(2).then_sigma(1);
}
inline OperatorExpression expr_hexagon1_rhs() {
    return OperatorExpression{}.then_sigma(1).then_coproduct(2);
}
inline OperatorExpression expr_hexagon2_lhs() {
    return OperatorExpression{}.then_coproduct(2).then_sigma(1).then_sigma(2);
}
inline OperatorExpression expr_hexagon2_rhs() {
    return OperatorExpression{}.then_sigma(1).then_coproduct(1);
}
inline OperatorExpression expr_additional_lhs() {
    return OperatorExpression{}.then_coproduct(2).then_sigma_inverse(1).then_coproduct(2).then_sigma(1);
}
inline OperatorExpression expr_additional_rhs() {
    return OperatorExpression{}.then_coproduct(1).then_sigma_inverse(2).then_coproduct(2).then_sigma(3);
}
inline OperatorExpression expr_additional_mid() {
    return OperatorExpression{}.then_coproduct(1).then_coproduct(3).then_sigma_inverse(2);
}

inline Tensor evaluate_operator(const OperatorExpression& expr, Tensor t) {
    return evaluate_operator(expr, std::move(t), [](const Element&) -> Tensor {
        throw std::domain_error("operator expression without coproduct support");
    });
}

// ---------------------------------------------------------------------------
// sigma.

inline CheckReport verify_sigma_multiplicativity(int n, int degree_bound, uint64_t seed,
                                                 int random_count = 100) {
    CheckReport report{"sigma_multiplicativity", n, degree_bound};
    const auto check = [&report](const Tensor& t, const std::string& what) {
        ++report.instances;
        if (evaluate_operator(expr_m1_lhs(), t) != evaluate_operator(expr_m1_rhs(), t))
            detail::record_failure(report, what + ": sigma(1 x m) mismatch");
        if (evaluate_operator(expr_m2_lhs(), t) != evaluate_operator(expr_m2_rhs(), t))
            detail::record_failure(report, what + ": sigma(m x 1) mismatch");
    };
    const auto alphabet = letters(n);
    for (const Letter& a : alphabet)
        for (const Letter& b : alphabet)
            for (const Letter& c : alphabet)
                check(Tensor::pure({Monomial::letter(a), Monomial::letter(b), Monomial::letter(c)}),
                      "(" + detail::letter_str(a) + ", " + detail::letter_str(b) + ", " +
                          detail::letter_str(c) + ")");
    Rng rng(seed);
    for (int k = 0; k < random_count; ++k) {
        const Tensor t = Tensor::of({random_element(rng, n, degree_bound),
                                     random_element(rng, n, degree_bound),
                                     random_element(rng, n, degree_bound)});
        check(t, "random triple #" + std::to_string(k));
    }
    return report;
}

inline CheckReport verify_braided_associativity(int n, int degree_bound, uint64_t seed,
                                                int random_count = 100) {
    CheckReport report{"braided_associativity", n, degree_bound};
    Rng rng(seed);
    for (int k = 0; k < random_count; ++k) {
        const Tensor a = tensor2(random_element(rng, n, degree_bound), random_element(rng, n, degree_bound));
        const Tensor b = tensor2(random_element(rng, n, degree_bound), random_element(rng, n, degree_bound));
        const Tensor c = tensor2(random_element(rng, n, degree_bound), random_element(rng, n, degree_bound));
        ++report.instances;
        if (braided_multiply(braided_multiply(a, b), c) != braided_multiply(a, braided_multiply(b, c)))
            detail::record_failure(report, "random sextuple #" + std::to_string(k));
    }
    return report;
}

inline CheckReport verify_braid_relation(int n) {
    CheckReport report{"braid_relation", n, 0};
    const OperatorExpression lhs = OperatorExpression{}.then_sigma(1).then_sigma(2).then_sigma(1);
    const OperatorExpression rhs = OperatorExpression{}.then_sigma(2).then_sigma(1).then_sigma(2);
    const auto alphabet = letters(n);
    for (const Letter& a : alphabet)
        for (const Letter& b : alphabet)
            for (const Letter& c : alphabet) {
                ++report.instances;
                const Tensor t =
                    Tensor::pure({Monomial::letter(a), Monomial::letter(b), Monomial::letter(c)});
                if (evaluate_operator(lhs, t) != evaluate_operator(rhs, t))
                    detail::record_failure(report, "(" + detail::letter_str(a) + ", " +
                                                       detail::letter_str(b) + ", " +
                                                       detail::letter_str(c) + ")");
            }
    return report;
}

inline CheckReport verify_sigma_inverse(int n, int degree_bound, uint64_t seed, int random_count = 50) {
    CheckReport report{"sigma_inverse", n, degree_bound};
    Rng rng(seed);
    for (int k = 0; k < random_count; ++k) {
        const int arity = rng.range(2, kMaxArity);
        std::vector<Element> slots;
        for (int s = 0; s < arity; ++s) slots.push_back(random_element(rng, n, degree_bound));
        const Tensor t = Tensor::of(slots);
        for (int slot = 1; slot < arity; ++slot) {
            ++report.instances;
            if (sigma_inverse(sigma(t, slot), slot) != t || sigma(sigma_inverse(t, slot), slot) != t)
                detail::record_failure(report, "random tensor #" + std::to_string(k) + " slot " +
                                                   std::to_string(slot));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// The defining relations.

inline CheckReport verify_serre_relations(int n) {
    CheckReport report{"serre_relations", n, 0};
    const Laurent q_plus_qinv = Laurent::q_power(1) + Laurent::q_power(-1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const Element xi = Element::generator(i), xj = Element::generator(j);
            ++report.instances;
            if (std::abs(i - j) == 1) {
                const Element lhs = xi * xi * xj - q_plus_qinv * (xi * xj * xi) + xj * xi * xi;
                if (!lhs.is_zero())
                    detail::record_failure(report, "serre(" + std::to_string(i) + "," +
                                                       std::to_string(j) + ") != 0");
            } else {
                if (!(xi * xj - xj * xi).is_zero())
                    detail::record_failure(report, "commutator(" + std::to_string(i) + "," +
                                                       std::to_string(j) + ") != 0");
            }
        }
    return report;
}

inline CheckReport verify_serre_compatibility(int n) {
    CheckReport report{"serre_compatibility", n, 0};
    const HopfContext ctx(n);
    const Laurent q_plus_qinv = Laurent::q_power(1) + Laurent::q_power(-1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const Tensor fi = coproduct(ctx, Element::generator(i));
            const Tensor fj = coproduct(ctx, Element::generator(j));
            ++report.instances;
            if (std::abs(i - j) == 1) {
                const Tensor lhs = braided_multiply(braided_multiply(fi, fi), fj) +
                                   braided_multiply(fj, braided_multiply(fi, fi));
                const Tensor rhs =
                    braided_multiply(braided_multiply(fi, fj), fi).scaled(q_plus_qinv);
                if (lhs != rhs)
                    detail::record_failure(report, "phi-serre(" + std::to_string(i) + "," +
                                                       std::to_string(j) + ")");
            } else {
                if (braided_multiply(fi, fj) != braided_multiply(fj, fi))
                    detail::record_failure(report, "phi-commutator(" + std::to_string(i) + "," +
                                                       std::to_string(j) + ")");
            }
        }
    return report;
}

// ---------------------------------------------------------------------------
// Coproduct and counit.

inline CheckReport verify_coproduct_morphism(int n, int degree_bound, uint64_t seed,
                                             int random_count = 100) {
    CheckReport report{"coproduct_morphism", n, degree_bound};
    const HopfContext ctx(n);
    const auto check = [&](const Element& a, const Element& b, const std::string& what) {
        ++report.instances;
        if (coproduct(ctx, a * b) != braided_multiply(coproduct(ctx, a), coproduct(ctx, b)))
            detail::record_failure(report, what);
    };
    const auto alphabet = letters(n);
    for (const Letter& a : alphabet)
        for (const Letter& b : alphabet)
            check(Element::letter(a), Element::letter(b),
                  "(" + detail::letter_str(a) + ", " + detail::letter_str(b) + ")");
    Rng rng(seed);
    for (int k = 0; k < random_count; ++k)
        check(random_element(rng, n, degree_bound), random_element(rng, n, degree_bound),
              "random pair #" + std::to_string(k));
    return report;
}

inline CheckReport verify_coassociativity(int n, int degree_bound, uint64_t seed,
                                          int random_count = 100) {
    CheckReport report{"coassociativity", n, degree_bound};
    const HopfContext ctx(n);
    const OperatorExpression lhs = OperatorExpression{}.then_coproduct(1).then_coproduct(1);
    const OperatorExpression rhs = OperatorExpression{}.then_coproduct(1).then_coproduct(2);
    const auto check = [&](const Element& a, const std::string& what) {
        ++report.instances;
        const Tensor t = Tensor::embed(a);
        if (evaluate_operator(ctx, lhs, t) != evaluate_operator(ctx, rhs, t))
            detail::record_failure(report, what);
    };
    for (const Letter& l : letters(n)) check(Element::letter(l), detail::letter_str(l));
    Rng rng(seed);
    for (int k = 0; k < random_count; ++k)
        check(random_element(rng, n, degree_bound), "random element #" + std::to_string(k));
    return report;
}

inline CheckReport verify_counit(int n, int degree_bound, uint64_t seed, int random_count = 100) {
    CheckReport report{"counit", n, degree_bound};
    const HopfContext ctx(n);
    const auto check = [&](const Element& a, const std::string& what) {
        ++report.instances;
        const Tensor t = coproduct(ctx, a);
        if (counit_left(t) != a || counit_right(t) != a) detail::record_failure(report, what);
    };
    check(Element::one(), "1");
    for (const Letter& l : letters(n)) check(Element::letter(l), detail::letter_str(l));
    Rng rng(seed);
    for (int k = 0; k < random_count; ++k)
        check(random_element(rng, n, degree_bound), "random element #" + std::to_string(k));
    return report;
}

// ---------------------------------------------------------------------------
// Antipode.

inline CheckReport verify_antipode_axiom(int n, int degree_bound, uint64_t seed,
                                         int random_count = 100) {
    CheckReport report{"antipode_axiom", n, degree_bound};
    const HopfContext ctx(n);
    const auto check = [&](const Element& a, const std::string& what) {
        ++report.instances;
        const Element expected = Element::scalar(counit(a));
        if (antipode_convolution_left(ctx, a) != expected ||
            antipode_convolution_right(ctx, a) != expected)
            detail::record_failure(report, what);
    };
    check(Element::one(), "1");
    for (const Letter& l : letters(n)) check(Element::letter(l), detail::letter_str(l));
    Rng rng(seed);
    for (int k = 0; k < random_count; ++k)
        check(random_element(rng, n, degree_bound), "random element #" + std::to_string(k));
    return report;
}

inline CheckReport verify_antipode_closed_form(int n, int max_length) {
    CheckReport report{"antipode_closed_form", n, max_length};
    const HopfContext ctx(n);
    std::vector<int> word;
    auto rec = [&](auto&& self) -> void {
        ++report.instances;
        if (antipode_closed_form(word) != antipode(ctx, eval_generator_word(word)))
            detail::record_failure(report, "word " + word_str(word));
        if (static_cast<int>(word.size()) == max_length) return;
        for (int k = 1; k <= n; ++k) {
            word.push_back(k);
            self(self);
            word.pop_back();
        }
    };
    rec(rec);
    return report;
}

inline CheckReport verify_antipode_antimorphism(int n, int degree_bound, uint64_t seed,
                                                int random_count = 100) {
    CheckReport report{"antipode_antimorphism", n, degree_bound};
    const HopfContext ctx(n);
    Rng rng(seed);
    for (int k = 0; k < random_count; ++k) {
        const Element a = random_element(rng, n, degree_bound);
        const Element b = random_element(rng, n, degree_bound);
        ++report.instances;
        if (antipode(ctx, a * b) != opposite_multiply(antipode(ctx, a), antipode(ctx, b)))
            detail::record_failure(report, "random pair #" + std::to_string(k));
    }
    return report;
}

// opposite T-Lie data: [,]^op = [,]_q S = -[,]_q and the S-antisymmetry of
// <,>^op = sigma^-1 <,>
inline CheckReport verify_opposite_structure(int n) {
    CheckReport report{"opposite_structure", n, 0};
    const auto alphabet = letters(n);
    const auto op_pseudo = [](const Letter& u, const Letter& v) {
        return sigma_inverse(pseudobracket(u, v), 1);
    };
    for (const Letter& u : alphabet)
        for (const Letter& v : alphabet) {
            ++report.instances;
            const Presymmetry s = presymmetry_S(u, v);
            // [,]^op(u,v) = [S(u x v)] must equal -[u,v]
            const Element lhs = bracket(s.first, s.second).scaled(s.coeff);
            if (lhs != -bracket(u, v))
                detail::record_failure(report, "bracket^op at (" + detail::letter_str(u) + ", " +
                                                   detail::letter_str(v) + ")");
            // <,>^op S = -<,>^op
            const Tensor p_lhs = op_pseudo(s.first, s.second).scaled(s.coeff);
            if (p_lhs != op_pseudo(u, v).scaled(Laurent(-1)))
                detail::record_failure(report, "pseudobracket^op at (" + detail::letter_str(u) +
                                                   ", " + detail::letter_str(v) + ")");
        }
    return report;
}

// ---------------------------------------------------------------------------
// The hexagon-type equations and the additional condition.

inline CheckReport verify_hexagon(int n, int degree_bound, uint64_t seed, int random_count = 50) {
    CheckReport report{"hexagon", n, degree_bound};
    report.notes.push_back("eq1: " + expr_hexagon1_lhs().str() + "  ==  " + expr_hexagon1_rhs().str());
    report.notes.push_back("eq2: " + expr_hexagon2_lhs().str() + "  ==  " + expr_hexagon2_rhs().str());
    const HopfContext ctx(n);
    const auto check = [&](const Tensor& t, const std::string& what) {
        ++report.instances;
        if (evaluate_operator(ctx, expr_hexagon1_lhs(), t) !=
            evaluate_operator(ctx, expr_hexagon1_rhs(), t))
            detail::record_failure(report, what + ": eq1");
        if (evaluate_operator(ctx, expr_hexagon2_lhs(), t) !=
            evaluate_operator(ctx, expr_hexagon2_rhs(), t))
            detail::record_failure(report, what + ": eq2");
    };
    const auto alphabet = letters(n);
    for (const Letter& a : alphabet)
        for (const Letter& b : alphabet)
            check(Tensor::pure({Monomial::letter(a), Monomial::letter(b)}),
                  "(" + detail::letter_str(a) + ", " + detail::letter_str(b) + ")");
    Rng rng(seed);
    for (int k = 0; k < random_count; ++k)
        check(tensor2(random_element(rng, n, degree_bound), random_element(rng, n, degree_bound)),
              "random pair #" + std::to_string(k));
    return report;
}

inline CheckReport verify_additional_condition(int n, int degree_bound, uint64_t seed,
                                               int random_count = 50) {
    CheckReport report{"additional_condition", n, degree_bound};
    report.notes.push_back("lhs: " + expr_additional_lhs().str());
    report.notes.push_back("rhs: " + expr_additional_rhs().str());
    report.notes.push_back("mid: " + expr_additional_mid().str());
    const HopfContext ctx(n);
    const auto check = [&](const Tensor& t, const std::string& what) {
        ++report.instances;
        const Tensor lhs = evaluate_operator(ctx, expr_additional_lhs(), t);
        const Tensor rhs = evaluate_operator(ctx, expr_additional_rhs(), t);
        const Tensor mid = evaluate_operator(ctx, expr_additional_mid(), t);
        if (lhs != rhs) detail::record_failure(report, what + ": lhs != rhs");
        if (lhs != mid) detail::record_failure(report, what + ": lhs != mid");
    };
    const auto alphabet = letters(n);
    for (const Letter& a : alphabet)
        for (const Letter& b : alphabet)
            check(Tensor::pure({Monomial::letter(a), Monomial::letter(b)}),
                  "(" + detail::letter_str(a) + ", " + detail::letter_str(b) + ")");
    Rng rng(seed);
    for (int k = 0; k < random_count; ++k)
        check(tensor2(random_element(rng, n, degree_bound), random_element(rng, n, degree_bound)),
              "random pair #" + std::to_string(k));
    return report;
}

// ---------------------------------------------------------------------------
// Scalars.

inline CheckReport verify_qbinomial(int m_max = 12) {
    CheckReport report{"qbinomial", 0, m_max};
    for (int e : {1, 2})
        for (int m = 1; m < m_max; ++m)
            for (int i = 1; i <= m; ++i) {
                ++report.instances;
                const Laurent lhs = q_binomial(m + 1, i, e);
                const Laurent rhs = q_binomial(m, i - 1, e) +
                                    Laurent::q_power(static_cast<long>(e) * i) * q_binomial(m, i, e);
                if (lhs != rhs)
                    detail::record_failure(report, "pascal(m=" + std::to_string(m) +
                                                       ",i=" + std::to_string(i) +
                                                       ",e=" + std::to_string(e) + ")");
            }
    for (int m = 1; m <= m_max; ++m) {
        ++report.instances;
        Laurent sum;
        for (int i = 0; i <= m; ++i) {
            Laurent term = q_binomial(m, i, 2) *
                           Laurent::q_power(static_cast<long>(i) * (i - 1));
            if (i % 2 == 1) term = -term;
            sum += term;
        }
        if (!sum.is_zero())
            detail::record_failure(report, "alternating sum m=" + std::to_string(m));
    }
    return report;
}

// phi(x_j^m) = sum_i (m i)_{q^2} x_j^{m-i} (x) x_j^i
inline CheckReport verify_coproduct_power(int n, int m_max = 8) {
    CheckReport report{"coproduct_power", n, m_max};
    const HopfContext ctx(n);
    for (int j = 1; j <= n; ++j) {
        const Letter x = generator_letter(j);
        for (int m = 0; m <= m_max; ++m) {
            ++report.instances;
            Tensor expected(2);
            for (int i = 0; i <= m; ++i)
                expected.add_term({Monomial::letter(x, m - i), Monomial::letter(x, i)},
                                  q_binomial(m, i, 2));
            if (coproduct(ctx, Element::monomial(Monomial::letter(x, m))) != expected)
                detail::record_failure(report,
                                       "x" + std::to_string(j) + "^" + std::to_string(m));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Confluence and PBW certification wrappers.

inline CheckReport verify_confluence(int n) {
    const ConfluenceReport c = check_confluence(n);
    CheckReport report{"confluence", n, 0};
    report.instances = c.triples;
    report.failures = c.failures;
    return report;
}

inline CheckReport verify_pbw(const PbwReport& pbw) {
    CheckReport report{"pbw_certification", pbw.n, pbw.limit};
    report.instances = static_cast<long>(pbw.components.size());
    for (const ComponentCertificate& c : pbw.components)
        if (!c.match) {
            std::ostringstream msg;
            msg << "degree (";
            for (size_t k = 0; k < c.degree.size(); ++k) msg << (k ? "," : "") << c.degree[k];
            msg << "): words=" << c.words << " rank=" << c.rank << " quotient=" << c.quotient_dim
                << " pbw=" << c.pbw;
            detail::record_failure(report, msg.str());
        }
    return report;
}

// ---------------------------------------------------------------------------
// Suites.

struct SuiteOptions {
    int n = 2;
    int degree = 3;
    uint64_t seed = 1;
    int m_max = 12;
    int pbw_limit = -1;  // -1: per-rank default
};

struct SuiteResult {
    std::string suite;
    SuiteOptions opts;
    std::vector<CheckReport> checks;
    std::optional<PbwReport> pbw;
    bool ok() const {
        for (const CheckReport& c : checks)
            if (!c.ok()) return false;
        return true;
    }
    long total_failures() const {
        long total = 0;
        for (const CheckReport& c : checks) total += static_cast<long>(c.failures.size());
        return total;
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"sigma",    "serre",      "coassoc",
                                                "counit",   "antipode",   "hexagon",
                                                "additional", "pbw",      "qbinomial",
                                                "all"};
    return names;
}

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    SuiteResult result;
    result.suite = name;
    result.opts = opts;
    const int n = opts.n;
    const int d = opts.degree;
    const uint64_t s = opts.seed;
    const bool all = name == "all";

    if (all || name == "sigma") {
        result.checks.push_back(verify_sigma_multiplicativity(n, d, s));
        result.checks.push_back(verify_braided_associativity(n, d, s));
        result.checks.push_back(verify_braid_relation(n));
        result.checks.push_back(verify_sigma_inverse(n, d, s));
    }
    if (all || name == "serre") {
        result.checks.push_back(verify_serre_relations(n));
        result.checks.push_back(verify_serre_compatibility(n));
    }
    if (all || name == "coassoc") {
        result.checks.push_back(verify_coproduct_morphism(n, d, s));
        result.checks.push_back(verify_coassociativity(n, d, s));
    }
    if (all || name == "counit") {
        result.checks.push_back(verify_counit(n, d, s));
    }
    if (all || name == "antipode") {
        result.checks.push_back(verify_antipode_axiom(n, d, s));
        result.checks.push_back(verify_antipode_closed_form(n, 5));
        result.checks.push_back(verify_antipode_antimorphism(n, d, s));
        result.checks.push_back(verify_opposite_structure(n));
    }
    if (all || name == "hexagon") {
        result.checks.push_back(verify_hexagon(n, d, s));
    }
    if (all || name == "additional") {
        result.checks.push_back(verify_additional_condition(n, d, s));
    }
    if (all || name == "pbw") {
        result.checks.push_back(verify_confluence(n));
        result.pbw = certify_pbw(n, opts.pbw_limit >= 0 ? opts.pbw_limit : opts.degree);
        result.checks.push_back(verify_pbw(*result.pbw));
    }
    if (all || name == "qbinomial") {
        result.checks.push_back(verify_qbinomial(opts.m_max));
        result.checks.push_back(verify_coproduct_power(n, std::min(opts.m_max, 8)));
    }
    if (result.checks.empty()) throw std::domain_error("unknown suite: " + name);
    return result;
}

inline json to_json(const SuiteResult& r) {
    json checks = json::array();
    for (const CheckReport& c : r.checks) checks.push_back(to_json(c));
    json out{{"suite", r.suite}, {"n", r.opts.n},       {"degree", r.opts.degree},
             {"seed", r.opts.seed}, {"checks", checks}, {"failures", r.total_failures()}};
    if (r.pbw) out["pbw"] = to_json(*r.pbw);
    return out;
}

inline std::string to_text(const SuiteResult& r) {
    std::ostringstream out;
    out << "suite " << r.suite << "  (n=" << r.opts.n << " degree=" << r.opts.degree
        << " seed=" << r.opts.seed << ")\n";
    for (const CheckReport& c : r.checks) {
        out << "  [" << (c.ok() ? "PASS" : "FAIL") << "] " << c.check << "  instances=" << c.instances
            << " failures=" << c.failures.size() << "\n";
        for (const std::string& note : c.notes) out << "         " << note << "\n";
        for (const std::string& f : c.failures) out << "         ! " << f << "\n";
    }
    if (r.pbw) {
        out << "  pbw components (n=" << r.pbw->n << ", |d| <= " << r.pbw->limit << "):\n";
        for (const ComponentCertificate& c : r.pbw->components) {
            out << "    (";
            for (size_t k = 0; k < c.degree.size(); ++k) out << (k ? "," : "") << c.degree[k];
            out << "): words=" << c.words << " rank=" << c.rank << " dim=" << c.quotient_dim
                << " pbw=" << c.pbw << (c.match ? "" : "  MISMATCH") << "\n";
        }
    }
    out << (r.ok() ? "OK" : "FAILED") << "\n";
    return out.str();
}

}  // namespace uqp
