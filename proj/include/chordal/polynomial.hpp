#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace chordal {

/// Dense univariate polynomial in t, coefficients stored low degree first.
template <typename Scalar>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(Scalar c) { return Polynomial({c}); }
    /// t^k
    static Polynomial monomial(int k) {
        std::vector<Scalar> c(static_cast<std::size_t>(k) + 1, Scalar(0));
        c.back() = Scalar(1);
        return Polynomial(std::move(c));
    }
    /// t - a
    static Polynomial linear_root(Scalar a) { return Polynomial({-a, Scalar(1)}); }
    /// t (t-1) ... (t-k+1)
    static Polynomial falling_factorial(int k) {
        Polynomial p = constant(Scalar(1));
        for (int i = 0; i < k; ++i) p = p * linear_root(Scalar(i));
        return p;
    }

    const std::vector<Scalar>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Scalar coefficient(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(k)] : Scalar(0);
    }

    Scalar operator()(Scalar t) const {
        Scalar acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return Polynomial();
        std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial pow(Polynomial base, int e) {
        Polynomial r = constant(Scalar(1));
        for (; e > 0; --e) r = r * base;
        return r;
    }

    bool operator==(const Polynomial&) const = default;

    /// e.g. "t^5 - 5*t^4 + 9*t^3 - 7*t^2 + 2*t"
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            Scalar c = coeffs_[static_cast<std::size_t>(k)];
            if (c == Scalar(0)) continue;
            const bool negative = c < Scalar(0);
            if (negative) c = -c;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const bool unit = c == Scalar(1);
            if (!unit || k == 0) out += std::to_string(c);
            if (k > 0) out += std::string(unit ? "" : "*") + (k == 1 ? "t" : "t^" + std::to_string(k));
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
    }
    std::vector<Scalar> coeffs_;
};

using IntPolynomial = Polynomial<std::int64_t>;

}  // namespace chordal
