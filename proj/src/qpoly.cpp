#include "sytmaj/qpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sytmaj {

QPolynomial::QPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial QPolynomial::constant(long value) {
    if (value == 0) return QPolynomial{};
    return QPolynomial({mpz_class(value)});
}

QPolynomial QPolynomial::monomial(int degree, mpz_class coeff) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    if (coeff == 0) return QPolynomial{};
    std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return QPolynomial(std::move(c));
}

int QPolynomial::min_degree() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return static_cast<int>(k);
    return -1;
}

const mpz_class& QPolynomial::coeff(int k) const {
    static const mpz_class zero = 0;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
}

mpz_class QPolynomial::value_at_one() const {
    mpz_class sum = 0;
    for (const mpz_class& c : coeffs_) sum += c;
    return sum;
}

QPolynomial QPolynomial::shifted(int k) const {
    if (is_zero()) return {};
    if (k < 0) throw std::invalid_argument("shifted: negative shift");
    std::vector<mpz_class> c(coeffs_.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<std::size_t>(k)] = coeffs_[i];
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::reversed() const {
    if (is_zero()) return {};
    int lo = min_degree();
    int hi = degree();
    std::vector<mpz_class> c(coeffs_.size());
    for (int k = lo; k <= hi; ++k)
        c[static_cast<std::size_t>(lo + hi - k)] = coeffs_[static_cast<std::size_t>(k)];
    return QPolynomial(std::move(c));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QPolynomial(std::move(c));
}

QPolynomial q_integer(int n) {
    if (n < 0) throw std::invalid_argument("q_integer: negative n");
    std::vector<mpz_class> c(static_cast<std::size_t>(n), mpz_class(1));
    return QPolynomial(std::move(c));
}

QPolynomial q_factorial(int n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative n");
    QPolynomial result = QPolynomial::constant(1);
    for (int j = 2; j <= n; ++j) result *= q_integer(j);
    return result;
}

QPolynomial q_multinomial(int n, const std::vector<int>& composition) {
    long long total = 0;
    for (int part : composition) {
        if (part < 0) throw std::invalid_argument("q_multinomial: negative composition part");
        total += part;
    }
    if (total != n) throw std::invalid_argument("q_multinomial: composition does not sum to n");
    QPolynomial result = q_factorial(n);
    // Dividing by the largest factor first shrinks degrees fastest.
    std::vector<int> parts = composition;
    std::sort(parts.rbegin(), parts.rend());
    for (int part : parts) result = exact_divide(result, q_factorial(part));
    return result;
}

QPolynomial exact_divide(const QPolynomial& num, const QPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    if (num.is_zero()) return {};
    int dn = num.degree();
    int dd = den.degree();
    if (dn < dd) throw std::domain_error("exact_divide: division is not exact");
    std::vector<mpz_class> rem = num.coeffs();
    std::vector<mpz_class> quot(static_cast<std::size_t>(dn - dd) + 1);
    const mpz_class& lead = den.coeff(dd);
    for (int t = dn - dd; t >= 0; --t) {
        mpz_class& top = rem[static_cast<std::size_t>(t + dd)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("exact_divide: division is not exact");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (int s = 0; s <= dd; ++s) rem[static_cast<std::size_t>(t + s)] -= q * den.coeff(s);
        quot[static_cast<std::size_t>(t)] = std::move(q);
    }
    for (const mpz_class& c : rem)
        if (c != 0) throw std::domain_error("exact_divide: division is not exact");
    return QPolynomial(std::move(quot));
}

QPolynomial substitute_power(const QPolynomial& p, int m) {
    if (m < 1) throw std::invalid_argument("substitute_power: m must be positive");
    if (p.is_zero() || m == 1) return p;
    std::vector<mpz_class> c(static_cast<std::size_t>(p.degree()) * m + 1);
    for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(k) * m] = p.coeff(k);
    return QPolynomial(std::move(c));
}

namespace {

bool is_unimodal(const std::vector<const mpz_class*>& seq) {
    std::size_t i = 0;
    while (i + 1 < seq.size() && *seq[i] <= *seq[i + 1]) ++i;
    while (i + 1 < seq.size() && *seq[i] >= *seq[i + 1]) ++i;
    return i + 1 >= seq.size();
}

}  // namespace

CoefficientShape coefficient_shape(const QPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("coefficient_shape: zero polynomial");
    int lo = p.min_degree();
    int hi = p.degree();
    CoefficientShape shape;

    std::vector<const mpz_class*> window, even, odd;
    for (int k = lo; k <= hi; ++k) {
        const mpz_class& c = p.coeff(k);
        window.push_back(&c);
        (k % 2 == 0 ? even : odd).push_back(&c);
        if (c == 0 && k > lo && k < hi) shape.internal_zeros.push_back(k);
    }

    shape.unimodal = is_unimodal(window);
    shape.parity_unimodal = is_unimodal(even) && is_unimodal(odd);

    shape.symmetric = true;
    for (int k = lo; k <= hi; ++k)
        if (p.coeff(k) != p.coeff(lo + hi - k)) {
            shape.symmetric = false;
            break;
        }

    shape.log_concave = true;
    for (int k = lo + 1; k < hi; ++k)
        if (p.coeff(k) * p.coeff(k) < p.coeff(k - 1) * p.coeff(k + 1)) {
            shape.log_concave = false;
            break;
        }

    return shape;
}

}  // namespace sytmaj
