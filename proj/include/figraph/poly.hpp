#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace figraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial with exact rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
        trim();
    }
    Polynomial(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }
    Rational operator()(std::int64_t x) const { return (*this)(Rational(x)); }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        std::vector<Rational> out(std::max(p.c_.size(), q.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = p.coefficient(i) + q.coefficient(i);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
        std::vector<Rational> out(std::max(p.c_.size(), q.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = p.coefficient(i) - q.coefficient(i);
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.is_zero() || q.is_zero())
            return {};
        std::vector<Rational> out(p.c_.size() + q.c_.size() - 1);
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            for (std::size_t j = 0; j < q.c_.size(); ++j)
                out[i + j] += p.c_[i] * q.c_[j];
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

    /// Human-readable form, highest degree first: "n^2/2 - n/2", "n - 1", "0".
    std::string to_string(const std::string& var = "n") const {
        if (c_.empty())
            return "0";
        std::string out;
        for (int d = degree(); d >= 0; --d) {
            const Rational& coef = c_[static_cast<std::size_t>(d)];
            if (coef == 0)
                continue;
            const bool negative = coef < 0;
            const Rational mag = negative ? Rational(-coef) : coef;
            const BigInt num = boost::multiprecision::numerator(mag);
            const BigInt den = boost::multiprecision::denominator(mag);
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            std::string mono;
            if (d >= 1)
                mono = var + (d > 1 ? "^" + std::to_string(d) : "");
            if (mono.empty() || num != 1)
                out += num.str();
            out += mono;
            if (den != 1)
                out += "/" + den.str();
        }
        return out;
    }

    /// Unique polynomial of degree < points.size() through the given (x, y)
    /// points (Newton divided differences). The x values must be distinct.
    static Polynomial interpolate(std::span<const std::pair<Rational, Rational>> points) {
        const std::size_t m = points.size();
        std::vector<Rational> dd(m);
        for (std::size_t i = 0; i < m; ++i)
            dd[i] = points[i].second;
        for (std::size_t level = 1; level < m; ++level)
            for (std::size_t i = m - 1; i >= level; --i) {
                const Rational dx = points[i].first - points[i - level].first;
                if (dx == 0)
                    throw std::invalid_argument("interpolation nodes must be distinct");
                dd[i] = (dd[i] - dd[i - 1]) / dx;
            }
        Polynomial result;
        for (std::size_t i = m; i-- > 0;) {
            // result = result * (x - x_i) + dd[i]
            result = result * Polynomial{-points[i].first, Rational(1)} + Polynomial{dd[i]};
        }
        return result;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline std::int64_t binomial64(std::int64_t n, std::int64_t k) {
    return binomial(n, k).convert_to<std::int64_t>();
}

} // namespace figraph
