#ifndef MOMENTKIT_POLY_HPP
#define MOMENTKIT_POLY_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "momentkit/rational.hpp"

namespace momentkit {

/// Exponent multi-index of a monomial in x_1..x_n.
using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic order: total degree first, then lexicographic
/// with x_1 > x_2 > ... . Used for storage and canonical printing.
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponents of total degree k in n variables, in increasing grlex order.
std::vector<Exponent> monomials_of_degree(std::size_t n, unsigned k);

/// Multivariate polynomial over Q in a fixed number of variables.
///
/// Polynomial degree k corresponds to equivariant cohomological degree 2k
/// (each generator x_i has degree 2); only the polynomial degree is stored.
/// Zero coefficients are never kept, so the zero polynomial has no terms and
/// degree -1.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational, GradedLex>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t i);
    static MultiPoly monomial(const Exponent& e, const Rational& c);
    /// The degree-1 form sum_i v_i x_i.
    static MultiPoly linear(const RationalVec& v);

    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int degree() const;
    /// True for the zero polynomial and for polynomials whose terms share one degree.
    bool is_homogeneous() const;
    Rational coefficient(const Exponent& e) const;

    /// Adds c * x^e, dropping the term if it cancels.
    void add_term(const Exponent& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Rational evaluate(const RationalVec& x) const;

    /// Substitutes x_var := replacement, a polynomial in the same variables.
    MultiPoly substitute(std::size_t var, const MultiPoly& replacement) const;

    /// Canonical text in decreasing grlex order, e.g. "x1^2 - 1/2*x1*x2 + 3".
    std::string str() const;

private:
    std::size_t nvars_ = 0;
    Terms terms_;
};

/// A homogeneous linear form sum_i c_i x_i with no constant term.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(RationalVec coefficients) : coeffs_(std::move(coefficients)) {}

    const RationalVec& coefficients() const noexcept { return coeffs_; }
    std::size_t nvars() const noexcept { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.is_zero(); }
    MultiPoly to_poly() const { return MultiPoly::linear(coeffs_); }
    Rational evaluate(const RationalVec& x) const { return dot(coeffs_, x); }

    /// Variable eliminated when restricting to the hyperplane {ell = 0}:
    /// the largest |coefficient|, ties broken by lowest index.
    std::size_t pivot() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    RationalVec coeffs_;
};

/// Restriction of f to the hyperplane ell = 0, realised by substituting
/// x_p = -(sum_{i != p} c_i x_i) / c_p for the pivot p. The result does not
/// involve x_p. Throws DomainError(zero_vector) for ell = 0.
MultiPoly restrict_to_hyperplane(const LinearForm& ell, const MultiPoly& f);

/// True iff f = ell * g for some polynomial g.
bool divides_linear(const LinearForm& ell, const MultiPoly& f);

/// The g with f = ell * g. Throws DomainError(not_divisible) otherwise.
MultiPoly poly_quotient_by_linear(const LinearForm& ell, const MultiPoly& f);

}  // namespace momentkit

#endif
