#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qpacs/qalgebra.hpp"

namespace qpacs {

using BigInt = boost::multiprecision::cpp_int;

/// Exact polynomial in q with big-integer coefficients, keyed by q-exponent.
/// Zero coefficients are never stored.
class QPolynomial {
public:
    QPolynomial() = default;

    static QPolynomial zero() { return QPolynomial(); }

    static QPolynomial constant(BigInt c) {
        QPolynomial p;
        if (c != 0) p.coeffs_[0] = std::move(c);
        return p;
    }

    /// c * q^e
    static QPolynomial monomial(BigInt c, int e) {
        QPolynomial p;
        if (c != 0) p.coeffs_[e] = std::move(c);
        return p;
    }

    /// [n]_q as a polynomial: 1 + q² + ... + q^{2(n-1)}.
    static QPolynomial q_integer(int n) {
        QPolynomial p;
        for (int k = 0; k < n; ++k) p.coeffs_[2 * k] = 1;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    const std::map<int, BigInt>& coefficients() const { return coeffs_; }

    BigInt coefficient(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    QPolynomial& operator+=(const QPolynomial& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }

    QPolynomial& operator-=(const QPolynomial& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        QPolynomial r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

    QPolynomial& scale(const BigInt& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [e, v] : coeffs_) v *= c;
        return *this;
    }

    /// Multiply by q^{shift}.
    QPolynomial shifted(int shift) const {
        QPolynomial r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + shift] = c;
        return r;
    }

    bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

    double evaluate(double q) const {
        double acc = 0.0;
        for (const auto& [e, c] : coeffs_) acc += c.convert_to<double>() * std::pow(q, e);
        return acc;
    }

    double evaluate(const DeformationParam& dp) const {
        if (dp.is_limit()) return evaluate_at_one().convert_to<double>();
        return evaluate(dp.q());
    }

    /// Sum of coefficients (the exact value at q = 1).
    BigInt evaluate_at_one() const {
        BigInt acc = 0;
        for (const auto& [e, c] : coeffs_) acc += c;
        return acc;
    }

    bool all_coefficients_nonnegative() const {
        for (const auto& [e, c] : coeffs_)
            if (c < 0) return false;
        return true;
    }

    /// Ascending-exponent rendering, e.g. "3 + 5 q^2 + 3 q^4 + q^6".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (e == 0) {
                os << mag.str();
            } else {
                if (mag != 1) os << mag.str() << " ";
                os << "q^" << e;
            }
        }
        return os.str();
    }

private:
    void add_term(int e, const BigInt& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_[e] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }

    std::map<int, BigInt> coeffs_;
};

}  // namespace qpacs
