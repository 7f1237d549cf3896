// laurent.hpp
//
// Exact arithmetic in Z[q, q^-1]: sparse Laurent polynomials in a single
// variable q with arbitrary-precision integer coefficients.  Canonical form
// throughout: a zero coefficient is never stored, so equality is structural.

#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace uqp {

class Laurent {
public:
    Laurent() = default;
    Laurent(long value) { set_term(0, mpz_class(value)); }
    Laurent(const mpz_class& value) { set_term(0, value); }

    // coeff * q^exponent
    static Laurent term(long exponent, const mpz_class& coeff = 1) {
        Laurent r;
        r.set_term(exponent, coeff);
        return r;
    }
    static Laurent q_power(long exponent) { return term(exponent); }

    const std::map<long, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }

    mpz_class coefficient(long exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    long min_exponent() const {
        require_nonzero("min_exponent");
        return terms_.begin()->first;
    }
    long max_exponent() const {
        require_nonzero("max_exponent");
        return terms_.rbegin()->first;
    }

    Laurent& operator+=(const Laurent& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }
    Laurent operator+(const Laurent& other) const {
        Laurent r = *this;
        r += other;
        return r;
    }
    Laurent operator-(const Laurent& other) const {
        Laurent r = *this;
        r -= other;
        return r;
    }
    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    Laurent operator*(const Laurent& other) const {
        Laurent r;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : other.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& other) { return *this = *this * other; }

    bool operator==(const Laurent& other) const { return terms_ == other.terms_; }
    bool operator!=(const Laurent& other) const { return !(*this == other); }

    // multiply by the unit q^k
    Laurent shifted(long k) const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    // Exact quotient; throws std::domain_error if the division is not exact.
    // Used by the fraction-free elimination, where exactness is guaranteed.
    static Laurent exact_div(const Laurent& a, const Laurent& b) {
        if (b.is_zero()) throw std::domain_error("Laurent: division by zero");
        if (a.is_zero()) return {};
        Laurent rem = a;
        Laurent quot;
        const long db = b.max_exponent();
        const mpz_class& lb = b.terms_.rbegin()->second;
        while (!rem.is_zero()) {
            const long da = rem.max_exponent();
            if (da - rem.min_exponent() < db - b.min_exponent())
                throw std::domain_error("Laurent: inexact division");
            const mpz_class& la = rem.terms_.rbegin()->second;
            mpz_class c, r;
            mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
            if (r != 0) throw std::domain_error("Laurent: inexact division");
            const long e = da - db;
            quot.add_term(e, c);
            rem -= b.shifted(e) * term(0, c);
        }
        return quot;
    }

    // Value at q = q_value (exact rational); q_value must be nonzero when
    // negative exponents are present.
    mpq_class evaluate(const mpq_class& q_value) const {
        mpq_class sum = 0;
        for (const auto& [e, c] : terms_) {
            if (e < 0 && q_value == 0)
                throw std::domain_error("Laurent: evaluation at q=0 with negative exponent");
            sum += mpq_class(c) * rational_power(q_value, e);
        }
        return sum;
    }

    // Terms in ascending exponent order, e.g. "q^-1 + 2 + q^3"; "0" when zero.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool neg = c < 0;
            const mpz_class mag = abs(c);
            if (first) {
                if (neg) out << '-';
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            if (e == 0) {
                out << mag.get_str();
            } else {
                if (mag != 1) out << mag.get_str() << '*';
                out << 'q';
                if (e != 1) out << '^' << e;
            }
        }
        return out.str();
    }

private:
    static mpq_class rational_power(const mpq_class& base, long e) {
        if (e == 0) return 1;
        const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
        mpq_class r = e > 0 ? mpq_class(num, den) : mpq_class(den, num);
        r.canonicalize();
        return r;
    }

    void set_term(long e, const mpz_class& c) {
        if (c != 0) terms_[e] = c;
    }
    void add_term(long e, const mpz_class& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    void require_nonzero(const char* who) const {
        if (terms_.empty()) throw std::domain_error(std::string("Laurent: ") + who + " of zero");
    }

    std::map<long, mpz_class> terms_;
};

inline Laurent operator*(const mpz_class& c, const Laurent& a) { return Laurent(c) * a; }
inline Laurent operator*(long c, const Laurent& a) { return Laurent(c) * a; }

// q - q^-1, the deformation scale of the pseudobracket terms.
inline Laurent q_minus_q_inverse() {
    return Laurent::q_power(1) - Laurent::q_power(-1);
}

}  // namespace uqp
