// io.hpp
//
// Text and JSON rendering.  Output is deterministic: scalars print in
// ascending q-exponent order, elements in (total degree, lexicographic
// word) order, tensors slot by slot.  The text forms re-parse to the same
// values through the expression parser.

#pragma once

#include <json.hpp>  // vendored nlohmann/json

#include <sstream>
#include <string>
#include <vector>

#include "uqp/algebra.hpp"
#include "uqp/oracle.hpp"
#include "uqp/tensor.hpp"

namespace uqp {

using json = nlohmann::ordered_json;

inline std::string to_text(const Laurent& a) { return a.str(); }

inline std::string to_text(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [l, e] : m.factors()) {
        if (!first) out << '*';
        first = false;
        out << "e[" << l.i << ',' << l.j << ']';
        if (e != 1) out << '^' << e;
    }
    return out.str();
}

namespace detail {

// One rendered summand: sign plus the body text.  Scalar multiples of the
// unit monomial are spliced term by term so sums stay flat and parseable.
struct Piece {
    bool negative;
    std::string body;
};

inline void scalar_pieces(const Laurent& c, std::vector<Piece>& out) {
    for (const auto& [e, k] : c.terms()) {
        std::ostringstream body;
        const mpz_class mag = abs(k);
        if (e == 0) {
            body << mag.get_str();
        } else {
            if (mag != 1) body << mag.get_str() << '*';
            body << 'q';
            if (e != 1) body << '^' << e;
        }
        out.push_back({k < 0, body.str()});
    }
}

inline void term_piece(const Laurent& c, const std::string& body, std::vector<Piece>& out) {
    if (c.terms().size() == 1) {
        const auto& [e, k] = *c.terms().begin();
        const mpz_class mag = abs(k);
        std::ostringstream text;
        if (mag != 1 || e == 0) text << mag.get_str() << '*';
        if (e != 0) {
            text << 'q';
            if (e != 1) text << '^' << e;
            text << '*';
        }
        text << body;
        std::string s = text.str();
        if (mag == 1 && e == 0) s = body;  // coefficient +-1: bare monomial
        out.push_back({k < 0, s});
    } else {
        out.push_back({false, "(" + c.str() + ")*" + body});
    }
}

inline std::string join_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::ostringstream out;
    for (size_t k = 0; k < pieces.size(); ++k) {
        if (k == 0) {
            if (pieces[k].negative) out << '-';
        } else {
            out << (pieces[k].negative ? " - " : " + ");
        }
        out << pieces[k].body;
    }
    return out.str();
}

}  // namespace detail

inline std::string to_text(const Element& a) {
    std::vector<detail::Piece> pieces;
    for (const auto& [m, c] : a.terms()) {
        if (m.is_one())
            detail::scalar_pieces(c, pieces);
        else
            detail::term_piece(c, to_text(m), pieces);
    }
    return detail::join_pieces(pieces);
}

inline std::string to_text(const Tensor& t) {
    std::vector<detail::Piece> pieces;
    for (const auto& [tuple, c] : t.terms()) {
        std::ostringstream body;
        for (size_t k = 0; k < tuple.size(); ++k) {
            if (k) body << " (x) ";
            body << to_text(tuple[k]);
        }
        detail::term_piece(c, body.str(), pieces);
    }
    return detail::join_pieces(pieces);
}

// ---------------------------------------------------------------------------
// JSON forms.

inline json to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

// array of [exponent, coefficient] in ascending exponent order
inline json to_json(const Laurent& a) {
    json arr = json::array();
    for (const auto& [e, c] : a.terms()) arr.push_back(json::array({e, to_json(c)}));
    return arr;
}

// [[i, j, exponent], ...] with letters ascending
inline json to_json(const Monomial& m) {
    json arr = json::array();
    for (const auto& [l, e] : m.factors()) arr.push_back(json::array({l.i, l.j, e}));
    return arr;
}

inline json to_json(const Element& a) {
    json arr = json::array();
    for (const auto& [m, c] : a.terms())
        arr.push_back(json{{"coeff", to_json(c)}, {"monomial", to_json(m)}});
    return arr;
}

inline json to_json(const Tensor& t) {
    json arr = json::array();
    for (const auto& [tuple, c] : t.terms()) {
        json slots = json::array();
        for (const Monomial& m : tuple) slots.push_back(to_json(m));
        arr.push_back(json{{"coeff", to_json(c)}, {"slots", slots}});
    }
    return arr;
}

inline json to_json(const OperatorExpression& expr) {
    json arr = json::array();
    for (const OpStep& s : expr.steps) {
        const char* name = nullptr;
        switch (s.kind) {
            case OpStep::Kind::sigma: name = "sigma"; break;
            case OpStep::Kind::sigma_inverse: name = "sigma_inverse"; break;
            case OpStep::Kind::coproduct: name = "coproduct"; break;
            case OpStep::Kind::multiply: name = "multiply"; break;
        }
        arr.push_back(json{{"op", name}, {"slot", s.slot}});
    }
    return arr;
}

inline json to_json(const PbwReport& report) {
    json comps = json::array();
    for (const ComponentCertificate& c : report.components)
        comps.push_back(json{{"degree", c.degree},
                             {"words", c.words},
                             {"rank", c.rank},
                             {"quotient_dim", c.quotient_dim},
                             {"pbw_count", c.pbw},
                             {"match", c.match}});
    return json{{"n", report.n}, {"limit", report.limit}, {"components", comps}};
}

}  // namespace uqp
