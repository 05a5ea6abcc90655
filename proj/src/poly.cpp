#include "cdws/poly.hpp"

#include <algorithm>
#include <cctype>

#include <nlohmann/json.hpp>

namespace cdws {

MultiPoly MultiPoly::constant(const Rational& value) {
    return monomial(0, 0, value);
}

MultiPoly MultiPoly::monomial(unsigned deg_c, unsigned deg_y, const Rational& coeff) {
    MultiPoly p;
    p.insert_term({deg_c, deg_y}, coeff);
    return p;
}

void MultiPoly::insert_term(Exponents e, const Rational& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational MultiPoly::coefficient(unsigned deg_c, unsigned deg_y) const {
    auto it = terms_.find({deg_c, deg_y});
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::degree_c() const {
    unsigned d = 0;
    for (const auto& [e, q] : terms_)
        d = std::max(d, e.deg_c);
    return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    out += rhs;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [e, q] : rhs.terms_)
        insert_term(e, q);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [e, q] : terms_)
        out.terms_.emplace(e, -q);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    return *this + (-rhs);
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    MultiPoly out;
    for (const auto& [e1, q1] : terms_)
        for (const auto& [e2, q2] : rhs.terms_)
            out.insert_term({e1.deg_c + e2.deg_c, e1.deg_y + e2.deg_y}, q1 * q2);
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

bool MultiPoly::is_quasihomogeneous(unsigned degree) const {
    for (const auto& [e, q] : terms_)
        if (e.deg_c + 2 * e.deg_y != degree)
            return false;
    return true;
}

Rational MultiPoly::evaluate_c(const Rational& x) const {
    Rational acc = 0;
    for (const auto& [e, q] : terms_) {
        if (e.deg_y != 0)
            fail("NotUnivariate", "evaluate_c on a polynomial involving y");
        Rational pw = 1;
        for (unsigned i = 0; i < e.deg_c; ++i)
            pw *= x;
        acc += q * pw;
    }
    return acc;
}

namespace {

std::string term_vars(const Exponents& e) {
    std::string s;
    if (e.deg_c > 0) {
        s += "c";
        if (e.deg_c > 1)
            s += "^" + std::to_string(e.deg_c);
    }
    if (e.deg_y > 0) {
        if (!s.empty())
            s += "*";
        s += "y";
        if (e.deg_y > 1)
            s += "^" + std::to_string(e.deg_y);
    }
    return s;
}

} // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    // map is ascending in (deg_c, deg_y); canonical order is descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, q] = *it;
        const bool negative = q < 0;
        const Rational mag = negative ? Rational(-q) : q;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string vars = term_vars(e);
        if (vars.empty())
            out += rational_to_string(mag);
        else if (mag == 1)
            out += vars;
        else
            out += rational_to_string(mag) + "*" + vars;
    }
    return out;
}

namespace {

struct PolyScanner {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    std::string integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            fail("ParseError", "expected integer at offset " + std::to_string(pos) +
                                   " in '" + s + "'");
        return s.substr(start, pos - start);
    }

    // number | c[^k] | y[^k]
    MultiPoly factor() {
        char c = peek();
        if (c == 'c' || c == 'y') {
            ++pos;
            unsigned deg = 1;
            if (eat('^'))
                deg = static_cast<unsigned>(std::stoul(integer()));
            return c == 'c' ? MultiPoly::monomial(deg, 0, 1) : MultiPoly::monomial(0, deg, 1);
        }
        std::string num = integer();
        if (eat('/'))
            return MultiPoly::constant(rational_from_string(num + "/" + integer()));
        return MultiPoly::constant(rational_from_string(num));
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (eat('*'))
            p *= factor();
        return p;
    }

    MultiPoly poly() {
        MultiPoly acc;
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        for (;;) {
            MultiPoly t = term();
            acc += negative ? -t : t;
            skip_ws();
            if (eat('-'))
                negative = true;
            else if (eat('+'))
                negative = false;
            else
                break;
        }
        skip_ws();
        if (pos != s.size())
            fail("ParseError", "trailing input in polynomial '" + s + "'");
        return acc;
    }
};

} // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
    PolyScanner scanner{text};
    return scanner.poly();
}

nlohmann::json MultiPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, q] = *it;
        terms.push_back({{"c", e.deg_c},
                         {"y", e.deg_y},
                         {"num", q.get_num().get_str()},
                         {"den", q.get_den().get_str()}});
    }
    return {{"terms", terms}};
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
    MultiPoly p;
    for (const auto& t : j.at("terms")) {
        Rational q(mpz_class(t.at("num").get<std::string>()),
                   mpz_class(t.at("den").get<std::string>()));
        q.canonicalize();
        p.insert_term({t.at("c").get<unsigned>(), t.at("y").get<unsigned>()}, q);
    }
    return p;
}

MultiPoly interpolate_in_c(const std::vector<std::pair<Rational, Rational>>& points,
                           unsigned max_degree) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                fail("DuplicateNode",
                     "repeated interpolation node " + rational_to_string(points[i].first));

    const size_t base = std::min<size_t>(points.size(), max_degree + 1);

    // Lagrange through the first `base` nodes.
    MultiPoly result;
    for (size_t i = 0; i < base; ++i) {
        MultiPoly basis = MultiPoly::constant(points[i].second);
        for (size_t j = 0; j < base; ++j) {
            if (j == i)
                continue;
            Rational denom = points[i].first - points[j].first;
            basis *= MultiPoly::var_c() - MultiPoly::constant(points[j].first);
            basis *= MultiPoly::constant(Rational(1) / denom);
        }
        result += basis;
    }

    // Every remaining node must already lie on the interpolant.
    for (size_t i = base; i < points.size(); ++i)
        if (result.evaluate_c(points[i].first) != points[i].second)
            fail("DegreeOverflow",
                 "points do not lie on a degree-" + std::to_string(max_degree) +
                     " polynomial (node " + rational_to_string(points[i].first) + ")");
    return result;
}

} // namespace cdws
