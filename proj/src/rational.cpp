#include "momentkit/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "momentkit/error.hpp"

namespace momentkit {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_argument: return "invalid argument";
        case ErrorKind::zero_vector: return "zero vector";
        case ErrorKind::not_divisible: return "not divisible";
        case ErrorKind::empty: return "empty";
        case ErrorKind::unbounded: return "unbounded";
        case ErrorKind::degenerate: return "degenerate";
        case ErrorKind::not_delzant: return "not Delzant";
        case ErrorKind::not_polarizing: return "not polarizing";
        case ErrorKind::non_simple_vertex: return "non-simple vertex unsupported";
        case ErrorKind::not_generic: return "not generic";
        case ErrorKind::weight_vanishes: return "weight vanishes at evaluation point";
        case ErrorKind::not_gkm: return "GKM conditions fail";
        case ErrorKind::box_too_small: return "box does not contain polytope";
        case ErrorKind::free_module_check_failed: return "free module check failed";
    }
    return "unknown";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) {
        throw DomainError(ErrorKind::invalid_argument,
                          "malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
            throw DomainError(ErrorKind::invalid_argument,
                              "malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw DomainError(ErrorKind::invalid_argument,
                          "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Integer floor(const Rational& q) {
    Integer num = numerator(q);
    const Integer& den = denominator(q);
    Integer quot = num / den;  // truncates toward zero
    if (num < 0 && quot * den != num) quot -= 1;
    return quot;
}

Integer ceil(const Rational& q) { return -floor(-q); }

RationalVec RationalVec::from_ints(std::initializer_list<long> xs) {
    RationalVec v(xs.size());
    std::size_t i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

bool RationalVec::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x == 0; });
}

RationalVec& RationalVec::operator+=(const RationalVec& rhs) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

RationalVec& RationalVec::operator-=(const RationalVec& rhs) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

RationalVec& RationalVec::operator*=(const Rational& c) {
    for (auto& x : entries_) x *= c;
    return *this;
}

Rational dot(const RationalVec& u, const RationalVec& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

RationalVec primitive(const RationalVec& v) {
    if (v.is_zero()) throw DomainError(ErrorKind::zero_vector, "primitive of the zero vector");
    Integer common_den = 1;
    for (const auto& x : v) common_den = lcm(common_den, Integer(denominator(x)));
    std::vector<Integer> ints;
    ints.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Integer k = numerator(x) * (common_den / denominator(x));
        g = gcd(g, k);
        ints.push_back(std::move(k));
    }
    RationalVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / abs(g));
    return out;
}

bool parallel(const RationalVec& u, const RationalVec& v) {
    if (u.is_zero() || v.is_zero()) return false;
    // rank-1 test: all 2x2 minors vanish
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

std::string to_string(const RationalVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

RationalVec parse_rational_vec(std::string_view text) {
    std::vector<Rational> xs;
    text = trim(text);
    if (!text.empty() && text.front() == '(' && text.back() == ')') {
        text = trim(text.substr(1, text.size() - 2));
    }
    while (true) {
        auto comma = text.find(',');
        xs.push_back(parse_rational(trim(text.substr(0, comma))));
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return RationalVec(std::move(xs));
}

std::ostream& operator<<(std::ostream& os, const RationalVec& v) { return os << to_string(v); }

}  // namespace momentkit
