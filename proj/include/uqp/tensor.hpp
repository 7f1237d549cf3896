// tensor.hpp
//
// Tensor powers of the algebra, arity 1..4, together with the diagonal
// braiding and the braided product on the tensor square:
//
//   sigma(u (x) v) = q^{<wt u, wt v>} v (x) u
//   (a (x) b)(c (x) d) = a sigma(b (x) c) d
//
// Operator expressions are data: a sequence of primitive slot operators
// (sigma, sigma^-1, coproduct, multiply) that can be printed, serialized
// and replayed against any tensor.

#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "uqp/algebra.hpp"

namespace uqp {

constexpr int kMaxArity = 4;

using MonomialTuple = std::vector<Monomial>;

struct TupleLess {
    bool operator()(const MonomialTuple& a, const MonomialTuple& b) const {
        const MonomialLess less;
        for (size_t k = 0; k < a.size() && k < b.size(); ++k) {
            if (less(a[k], b[k])) return true;
            if (less(b[k], a[k])) return false;
        }
        return a.size() < b.size();
    }
};

class Tensor {
public:
    using TermMap = std::map<MonomialTuple, Laurent, TupleLess>;

    explicit Tensor(int arity) : arity_(arity) {
        if (arity < 1 || arity > kMaxArity) throw std::domain_error("Tensor: arity must be 1..4");
    }

    static Tensor unit(int arity) {
        Tensor t(arity);
        t.add_term(MonomialTuple(static_cast<size_t>(arity)), Laurent(1));
        return t;
    }
    static Tensor pure(MonomialTuple slots, const Laurent& c = Laurent(1)) {
        Tensor t(static_cast<int>(slots.size()));
        t.add_term(std::move(slots), c);
        return t;
    }
    static Tensor embed(const Element& e) {
        Tensor t(1);
        for (const auto& [m, c] : e.terms()) t.add_term({m}, c);
        return t;
    }
    // outer product of elements, one per slot
    static Tensor of(const std::vector<Element>& slots) {
        Tensor t(static_cast<int>(slots.size()));
        MonomialTuple tuple(slots.size());
        Laurent coeff(1);
        t.fill_outer(slots, 0, tuple, coeff);
        return t;
    }

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(MonomialTuple tuple, const Laurent& c) {
        if (static_cast<int>(tuple.size()) != arity_) throw std::domain_error("Tensor: arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(std::move(tuple), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Tensor& operator+=(const Tensor& other) {
        require_same_arity(other);
        for (const auto& [t, c] : other.terms_) add_term(t, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& other) {
        require_same_arity(other);
        for (const auto& [t, c] : other.terms_) add_term(t, -c);
        return *this;
    }
    Tensor operator+(const Tensor& other) const {
        Tensor r = *this;
        r += other;
        return r;
    }
    Tensor operator-(const Tensor& other) const {
        Tensor r = *this;
        r -= other;
        return r;
    }
    Tensor scaled(const Laurent& c) const {
        Tensor r(arity_);
        if (c.is_zero()) return r;
        for (const auto& [t, k] : terms_) r.terms_.emplace(t, c * k);
        return r;
    }

    bool operator==(const Tensor& other) const {
        return arity_ == other.arity_ && terms_ == other.terms_;
    }
    bool operator!=(const Tensor& other) const { return !(*this == other); }

    Element to_element() const {
        if (arity_ != 1) throw std::domain_error("Tensor: to_element needs arity 1");
        Element e;
        for (const auto& [t, c] : terms_) e.add_term(t[0], c);
        return e;
    }

private:
    void require_same_arity(const Tensor& other) const {
        if (arity_ != other.arity_) throw std::domain_error("Tensor: arity mismatch");
    }
    void fill_outer(const std::vector<Element>& slots, size_t k, MonomialTuple& tuple, Laurent coeff) {
        if (k == slots.size()) {
            add_term(tuple, coeff);
            return;
        }
        for (const auto& [m, c] : slots[k].terms()) {
            tuple[k] = m;
            fill_outer(slots, k + 1, tuple, coeff * c);
        }
    }

    int arity_;
    TermMap terms_;
};

inline Tensor tensor2(const Element& a, const Element& b) { return Tensor::of({a, b}); }

// <u,v> as an arity-2 tensor (zero tensor when the chain condition fails)
inline Tensor pseudobracket(const Letter& u, const Letter& v) {
    Tensor r(2);
    if (auto t = pseudobracket_term(u, v))
        r.add_term({Monomial::letter(t->first), Monomial::letter(t->second)}, t->coeff);
    return r;
}

// ---------------------------------------------------------------------------
// The braiding, slot by slot (1-based; acts on slots p, p+1).

namespace detail {
inline void check_slot(const Tensor& t, int slot) {
    if (slot < 1 || slot >= t.arity()) throw std::domain_error("sigma: slot out of range");
}
}  // namespace detail

inline Tensor sigma(const Tensor& t, int slot = 1) {
    detail::check_slot(t, slot);
    Tensor r(t.arity());
    for (const auto& [tuple, c] : t.terms()) {
        const size_t p = static_cast<size_t>(slot) - 1;
        const int dot = weight_dot(tuple[p].weight(), tuple[p + 1].weight());
        MonomialTuple swapped = tuple;
        std::swap(swapped[p], swapped[p + 1]);
        r.add_term(std::move(swapped), c * Laurent::q_power(dot));
    }
    return r;
}

inline Tensor sigma_inverse(const Tensor& t, int slot = 1) {
    detail::check_slot(t, slot);
    Tensor r(t.arity());
    for (const auto& [tuple, c] : t.terms()) {
        const size_t p = static_cast<size_t>(slot) - 1;
        const int dot = weight_dot(tuple[p].weight(), tuple[p + 1].weight());
        MonomialTuple swapped = tuple;
        std::swap(swapped[p], swapped[p + 1]);
        r.add_term(std::move(swapped), c * Laurent::q_power(-dot));
    }
    return r;
}

// contract slots p, p+1 with the algebra product (arity drops by one)
inline Tensor multiply_slots(const Tensor& t, int slot) {
    detail::check_slot(t, slot);
    if (t.arity() == 1) throw std::domain_error("multiply_slots: arity 1");
    Tensor r(t.arity() - 1);
    for (const auto& [tuple, c] : t.terms()) {
        const size_t p = static_cast<size_t>(slot) - 1;
        const Element prod = Element::monomial(tuple[p]) * Element::monomial(tuple[p + 1]);
        for (const auto& [m, pc] : prod.terms()) {
            MonomialTuple shrunk;
            shrunk.reserve(tuple.size() - 1);
            shrunk.insert(shrunk.end(), tuple.begin(), tuple.begin() + static_cast<long>(p));
            shrunk.push_back(m);
            shrunk.insert(shrunk.end(), tuple.begin() + static_cast<long>(p) + 2, tuple.end());
            r.add_term(std::move(shrunk), c * pc);
        }
    }
    return r;
}

// (a (x) b)(c (x) d) = a sigma(b (x) c) d on the tensor square
inline Tensor braided_multiply(const Tensor& a, const Tensor& b) {
    if (a.arity() != 2 || b.arity() != 2)
        throw std::domain_error("braided_multiply: arity 2 expected");
    Tensor r(2);
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms()) {
            const int dot = weight_dot(ta[1].weight(), tb[0].weight());
            const Laurent coeff = ca * cb * Laurent::q_power(dot);
            const Element left = Element::monomial(ta[0]) * Element::monomial(tb[0]);
            const Element right = Element::monomial(ta[1]) * Element::monomial(tb[1]);
            for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms())
                    r.add_term({ml, mr}, coeff * cl * cr);
        }
    return r;
}

inline Tensor braided_power(const Tensor& t, int e) {
    if (e < 0) throw std::domain_error("braided_power: negative exponent");
    Tensor r = Tensor::unit(2);
    for (int k = 0; k < e; ++k) r = braided_multiply(r, t);
    return r;
}

// ---------------------------------------------------------------------------
// Operator expressions.

struct OpStep {
    enum class Kind { sigma, sigma_inverse, coproduct, multiply };
    Kind kind;
    int slot;
};

// Steps are stored in application order (the rightmost factor of the usual
// composition notation comes first).
struct OperatorExpression {
    std::vector<OpStep> steps;

    OperatorExpression& then_sigma(int slot) {
        steps.push_back({OpStep::Kind::sigma, slot});
        return *this;
    }
    OperatorExpression& then_sigma_inverse(int slot) {
        steps.push_back({OpStep::Kind::sigma_inverse, slot});
        return *this;
    }
    OperatorExpression& then_coproduct(int slot) {
        steps.push_back({OpStep::Kind::coproduct, slot});
        return *this;
    }
    OperatorExpression& then_multiply(int slot) {
        steps.push_back({OpStep::Kind::multiply, slot});
        return *this;
    }

    std::string str() const {
        std::ostringstream out;
        for (size_t k = 0; k < steps.size(); ++k) {
            if (k) out << " -> ";
            switch (steps[k].kind) {
                case OpStep::Kind::sigma: out << "sigma"; break;
                case OpStep::Kind::sigma_inverse: out << "sigma^-1"; break;
                case OpStep::Kind::coproduct: out << "phi"; break;
                case OpStep::Kind::multiply: out << "mult"; break;
            }
            out << '@' << steps[k].slot;
        }
        return out.str();
    }
};

// apply the coproduct callback to one slot (arity grows by one)
inline Tensor coproduct_slot(const Tensor& t, int slot,
                             const std::function<Tensor(const Element&)>& phi) {
    if (slot < 1 || slot > t.arity()) throw std::domain_error("coproduct_slot: slot out of range");
    if (t.arity() + 1 > kMaxArity) throw std::domain_error("coproduct_slot: arity limit exceeded");
    Tensor r(t.arity() + 1);
    for (const auto& [tuple, c] : t.terms()) {
        const size_t p = static_cast<size_t>(slot) - 1;
        const Tensor image = phi(Element::monomial(tuple[p]));
        if (image.arity() != 2) throw std::domain_error("coproduct_slot: callback must have arity 2");
        for (const auto& [pair, pc] : image.terms()) {
            MonomialTuple grown;
            grown.reserve(tuple.size() + 1);
            grown.insert(grown.end(), tuple.begin(), tuple.begin() + static_cast<long>(p));
            grown.push_back(pair[0]);
            grown.push_back(pair[1]);
            grown.insert(grown.end(), tuple.begin() + static_cast<long>(p) + 1, tuple.end());
            r.add_term(std::move(grown), c * pc);
        }
    }
    return r;
}

inline Tensor evaluate_operator(const OperatorExpression& expr, Tensor t,
                                const std::function<Tensor(const Element&)>& phi) {
    for (const OpStep& step : expr.steps) {
        switch (step.kind) {
            case OpStep::Kind::sigma: t = sigma(t, step.slot); break;
            case OpStep::Kind::sigma_inverse: t = sigma_inverse(t, step.slot); break;
            case OpStep::Kind::coproduct: t = coproduct_slot(t, step.slot, phi); break;
            case OpStep::Kind::multiply: t = multiply_slots(t, step.slot); break;
        }
    }
    return t;
}

}  // namespace uqp
