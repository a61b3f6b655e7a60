#include "momentkit/poly.hpp"

#include <algorithm>
#include <numeric>

#include "momentkit/error.hpp"

namespace momentkit {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

namespace {

void fill_monomials(std::size_t pos, unsigned left, Exponent& cur, std::vector<Exponent>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e <= left; ++e) {
        cur[pos] = e;
        fill_monomials(pos + 1, left - e, cur, out);
    }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t n, unsigned k) {
    std::vector<Exponent> out;
    if (n == 0) {
        if (k == 0) out.emplace_back();
        return out;
    }
    Exponent cur(n, 0);
    fill_monomials(0, k, cur, out);
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
    Exponent e(nvars, 0);
    e.at(i) = 1;
    return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::linear(const RationalVec& v) {
    MultiPoly p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Exponent e(v.size(), 0);
        e[i] = 1;
        p.add_term(e, v[i]);
    }
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.rbegin()->first));
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Rational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    if (nvars_ == 0) nvars_ = rhs.nvars_;
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    if (nvars_ == 0) nvars_ = rhs.nvars_;
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Rational MultiPoly::evaluate(const RationalVec& x) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) term *= x[i];
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& replacement) const {
    std::vector<MultiPoly> powers{MultiPoly::constant(nvars_, 1)};
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[var]) powers.push_back(powers.back() * replacement);
        Exponent rest(e);
        rest[var] = 0;
        out += MultiPoly::monomial(rest, c) * powers[e[var]];
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            s += to_string(mag);
        } else if (mag == 1) {
            s += mono;
        } else {
            s += to_string(mag) + "*" + mono;
        }
    }
    return s;
}

std::size_t LinearForm::pivot() const {
    std::size_t best = coeffs_.size();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (best == coeffs_.size() || abs(coeffs_[i]) > abs(coeffs_[best])) best = i;
    }
    if (best == coeffs_.size()) throw DomainError(ErrorKind::zero_vector, "zero linear form");
    return best;
}

MultiPoly restrict_to_hyperplane(const LinearForm& ell, const MultiPoly& f) {
    const std::size_t p = ell.pivot();
    const auto& c = ell.coefficients();
    RationalVec solved(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != p) solved[i] = -c[i] / c[p];
    }
    return f.substitute(p, MultiPoly::linear(solved));
}

bool divides_linear(const LinearForm& ell, const MultiPoly& f) {
    return restrict_to_hyperplane(ell, f).is_zero();
}

MultiPoly poly_quotient_by_linear(const LinearForm& ell, const MultiPoly& f) {
    const std::size_t p = ell.pivot();
    const MultiPoly divisor = ell.to_poly();
    const Rational& lead = ell.coefficients()[p];
    MultiPoly rem = f;
    MultiPoly quot(f.nvars() ? f.nvars() : ell.nvars());
    // Each step cancels a term of maximal x_p-degree and only introduces
    // terms of lower x_p-degree, so the loop terminates.
    while (true) {
        const Exponent* top = nullptr;
        for (const auto& [e, coeff] : rem.terms()) {
            if (e[p] > 0 && (top == nullptr || e[p] > (*top)[p])) top = &e;
        }
        if (top == nullptr) break;
        Exponent qe(*top);
        qe[p] -= 1;
        MultiPoly step = MultiPoly::monomial(qe, rem.coefficient(*top) / lead);
        rem -= step * divisor;
        quot += step;
    }
    if (!rem.is_zero()) {
        throw DomainError(ErrorKind::not_divisible,
                          "linear form does not divide " + f.str());
    }
    return quot;
}

}  // namespace momentkit
