#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cdws/rational.hpp"

namespace cdws {

// Exponent pair of a monomial c^deg_c * y^deg_y.
struct Exponents {
    unsigned deg_c = 0;
    unsigned deg_y = 0;

    auto operator<=>(const Exponents&) const = default;
};

// Exact polynomial in Q[c,y].  Terms with zero coefficient are never stored,
// so operator== is semantic equality.  Values are immutable in spirit: all
// arithmetic returns new polynomials.
class MultiPoly {
public:
    MultiPoly() = default;

    static MultiPoly constant(const Rational& value);
    static MultiPoly monomial(unsigned deg_c, unsigned deg_y, const Rational& coeff);
    static MultiPoly var_c() { return monomial(1, 0, 1); }
    static MultiPoly var_y() { return monomial(0, 1, 1); }

    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(unsigned deg_c, unsigned deg_y) const;
    unsigned degree_c() const; // 0 for the zero polynomial
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);

    bool operator==(const MultiPoly&) const = default;

    // True iff every stored term has deg_c + 2*deg_y == degree.
    bool is_quasihomogeneous(unsigned degree) const;

    // Substitute c := x for a polynomial with deg_y == 0 everywhere it matters;
    // terms with deg_y > 0 are rejected.
    Rational evaluate_c(const Rational& x) const;

    // Canonical text form: terms sorted by (deg_c, deg_y) descending,
    // e.g. "c^2 - 1/2*c".
    std::string to_string() const;
    static MultiPoly parse(const std::string& text);

    nlohmann::json to_json() const;
    static MultiPoly from_json(const nlohmann::json& j);

private:
    void insert_term(Exponents e, const Rational& coeff);

    std::map<Exponents, Rational> terms_;
};

// Unique polynomial in c of degree <= max_degree through the given nodes.
// Throws DuplicateNode on repeated x values and DegreeOverflow when the
// points do not lie on any polynomial within the degree bound.
MultiPoly interpolate_in_c(const std::vector<std::pair<Rational, Rational>>& points,
                           unsigned max_degree);

} // namespace cdws
