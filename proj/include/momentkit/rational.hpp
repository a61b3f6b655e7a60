#ifndef MOMENTKIT_RATIONAL_HPP
#define MOMENTKIT_RATIONAL_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace momentkit {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", "p" or "-p/q". Throws DomainError(invalid_argument) on
/// malformed input or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Largest integer <= q.
Integer floor(const Rational& q);
/// Smallest integer >= q.
Integer ceil(const Rational& q);

inline int sign(const Rational& q) { return q.sign(); }

/// A point or vector of Q^n. Also used as a linear form through the
/// standard pairing.
class RationalVec {
public:
    RationalVec() = default;
    explicit RationalVec(std::size_t n) : entries_(n) {}
    RationalVec(std::initializer_list<Rational> xs) : entries_(xs) {}
    explicit RationalVec(std::vector<Rational> xs) : entries_(std::move(xs)) {}

    static RationalVec from_ints(std::initializer_list<long> xs);

    std::size_t size() const noexcept { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    const std::vector<Rational>& entries() const noexcept { return entries_; }

    bool is_zero() const;

    RationalVec& operator+=(const RationalVec& rhs);
    RationalVec& operator-=(const RationalVec& rhs);
    RationalVec& operator*=(const Rational& c);

    friend RationalVec operator+(RationalVec a, const RationalVec& b) { return a += b; }
    friend RationalVec operator-(RationalVec a, const RationalVec& b) { return a -= b; }
    friend RationalVec operator*(const Rational& c, RationalVec a) { return a *= c; }
    friend RationalVec operator-(RationalVec a) { return a *= Rational(-1); }

    friend bool operator==(const RationalVec&, const RationalVec&) = default;
    friend bool operator<(const RationalVec& a, const RationalVec& b) {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<Rational> entries_;
};

/// <u, v> = sum u_i v_i. Sizes must agree.
Rational dot(const RationalVec& u, const RationalVec& v);

/// The positive multiple of v with coprime integer entries.
/// Throws DomainError(zero_vector) for v = 0.
RationalVec primitive(const RationalVec& v);

/// True iff u and v are nonzero and u = c v for some c (of either sign).
bool parallel(const RationalVec& u, const RationalVec& v);

/// "(a, b, c)" with rational entries.
std::string to_string(const RationalVec& v);
/// Parses "a,b,c" (whitespace tolerated).
RationalVec parse_rational_vec(std::string_view text);

std::ostream& operator<<(std::ostream& os, const RationalVec& v);

}  // namespace momentkit

#endif
