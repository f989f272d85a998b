#pragma once

#include <gmpxx.h>

#include <vector>

namespace sytmaj {

/// Dense polynomial in q with arbitrary-precision integer coefficients,
/// stored from degree 0 with trailing zeros trimmed.
class QPolynomial {
public:
    QPolynomial() = default;  // the zero polynomial
    explicit QPolynomial(std::vector<mpz_class> coeffs);

    static QPolynomial constant(long value);
    static QPolynomial monomial(int degree, mpz_class coeff = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// −1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Lowest nonzero degree; −1 for the zero polynomial.
    int min_degree() const;
    /// Zero outside the stored range.
    const mpz_class& coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class value_at_one() const;
    /// Multiplies by q^k.
    QPolynomial shifted(int k) const;
    /// Degree reversal within the nonzero support window.
    QPolynomial reversed() const;

    QPolynomial& operator+=(const QPolynomial& other);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) {
        a += b;
        return a;
    }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    QPolynomial& operator*=(const QPolynomial& other) { return *this = *this * other; }

    bool operator==(const QPolynomial&) const = default;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// [n]_q = 1 + q + … + q^{n−1}.
QPolynomial q_integer(int n);

/// [n]_q! = ∏_{j=1}^{n} [j]_q; degree n(n−1)/2, value n! at q = 1.
QPolynomial q_factorial(int n);

/// [n over α]_q. Throws std::invalid_argument unless Σ α_i = n with α_i ≥ 0.
QPolynomial q_multinomial(int n, const std::vector<int>& composition);

/// Exact quotient in ℤ[q]; throws std::domain_error if the division leaves a
/// remainder, std::invalid_argument for a zero divisor.
QPolynomial exact_divide(const QPolynomial& num, const QPolynomial& den);

/// p(q^m), m ≥ 1.
QPolynomial substitute_power(const QPolynomial& p, int m);

/// Shape flags of the coefficient sequence restricted to the window between
/// the lowest and highest nonzero degrees. internal_zeros lists absolute
/// degrees with zero coefficient strictly inside that window. The parity
/// flags test the even- and odd-degree subsequences separately.
struct CoefficientShape {
    bool unimodal = false;
    bool parity_unimodal = false;
    bool log_concave = false;
    bool symmetric = false;
    std::vector<int> internal_zeros;
};

/// Throws std::invalid_argument on the zero polynomial.
CoefficientShape coefficient_shape(const QPolynomial& p);

}  // namespace sytmaj
