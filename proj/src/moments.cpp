#include "sytmaj/moments.hpp"

#include <mutex>
#include <stdexcept>

namespace sytmaj {

std::string rational_to_string(const Rational& r) { return r.get_str(); }

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

mpz_class int_pow(long long base, int exp) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return out;
}

// Σ_{j=1}^{n} j^d − Σ_{c} h_c^d.
mpz_class hook_bracket(const Shape& shape, int d) {
    mpz_class bracket = 0;
    for (int j = 1; j <= shape_cells(shape); ++j) bracket += int_pow(j, d);
    for (int h : hook_lengths(shape)) bracket -= int_pow(h, d);
    return bracket;
}

}  // namespace

Rational bernoulli(int d) {
    if (d < 0) throw std::invalid_argument("bernoulli: negative index");
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mutex);
    // B_m = −(1/(m+1)) Σ_{j<m} C(m+1, j) B_j gives the B_1 = −1/2 family.
    while (static_cast<int>(cache.size()) <= d) {
        int m = static_cast<int>(cache.size());
        Rational sum = 0;
        for (int j = 0; j < m; ++j)
            sum += Rational(binomial(static_cast<unsigned long>(m) + 1, static_cast<unsigned long>(j))) * cache[static_cast<std::size_t>(j)];
        Rational value = -sum / Rational(m + 1);
        value.canonicalize();
        cache.push_back(value);
    }
    if (d == 1) return Rational(1, 2);  // sign convention
    return cache[static_cast<std::size_t>(d)];
}

Rational cumulant_formula(const Shape& shape, int d) {
    if (d < 2) throw std::invalid_argument("cumulant_formula: d must be at least 2");
    Rational value = bernoulli(d) / Rational(d) * Rational(hook_bracket(shape, d));
    value.canonicalize();
    return value;
}

Rational mean_formula(const Shape& shape) {
    Rational value = Rational(static_cast<long>(b_stat(shape))) + Rational(hook_bracket(shape, 1)) / 2;
    value.canonicalize();
    return value;
}

MomentTable cumulants_to_moments(const std::vector<Rational>& kappa) {
    if (kappa.empty()) throw std::invalid_argument("cumulants_to_moments: empty cumulant list");
    int max_d = static_cast<int>(kappa.size());

    // μ_d = κ_d + Σ_{m=1}^{d−1} C(d−1, m−1) κ_m μ_{d−m}, with μ_0 = 1.
    auto raw_from = [max_d](const std::vector<Rational>& k) {
        std::vector<Rational> mu(static_cast<std::size_t>(max_d) + 1);
        mu[0] = 1;
        for (int d = 1; d <= max_d; ++d) {
            Rational sum = k[static_cast<std::size_t>(d - 1)];
            for (int m = 1; m < d; ++m)
                sum += Rational(binomial(static_cast<unsigned long>(d) - 1, static_cast<unsigned long>(m) - 1)) *
                       k[static_cast<std::size_t>(m - 1)] * mu[static_cast<std::size_t>(d - m)];
            sum.canonicalize();
            mu[static_cast<std::size_t>(d)] = sum;
        }
        return mu;
    };

    std::vector<Rational> raw = raw_from(kappa);
    std::vector<Rational> centered_kappa = kappa;
    centered_kappa[0] = 0;
    std::vector<Rational> central = raw_from(centered_kappa);

    MomentTable table;
    table.mean = kappa[0];
    table.variance = max_d >= 2 ? kappa[1] : Rational(0);
    table.raw.assign(raw.begin() + 1, raw.end());
    table.central.assign(central.begin() + 2, central.end());
    table.cumulants.assign(kappa.begin() + 1, kappa.end());
    return table;
}

MomentTable moments_from_gf(const QPolynomial& p, int max_d) {
    if (p.is_zero()) throw std::invalid_argument("moments_from_gf: zero polynomial");
    if (max_d < 1) throw std::invalid_argument("moments_from_gf: max_d must be at least 1");
    for (const mpz_class& c : p.coeffs())
        if (c < 0) throw std::invalid_argument("moments_from_gf: negative coefficient");
    mpz_class total = p.value_at_one();

    std::vector<Rational> raw(static_cast<std::size_t>(max_d));
    for (int d = 1; d <= max_d; ++d) {
        mpz_class sum = 0;
        for (int k = p.min_degree(); k <= p.degree(); ++k)
            if (p.coeff(k) != 0) sum += p.coeff(k) * int_pow(k, d);
        Rational value{sum, total};
        value.canonicalize();
        raw[static_cast<std::size_t>(d - 1)] = value;
    }

    // κ_d = μ_d − Σ_{m<d} C(d−1, m−1) κ_m μ_{d−m}: the recurrence inverted.
    std::vector<Rational> kappa(static_cast<std::size_t>(max_d));
    for (int d = 1; d <= max_d; ++d) {
        Rational sum = raw[static_cast<std::size_t>(d - 1)];
        for (int m = 1; m < d; ++m) {
            Rational mu_rest = d - m >= 1 ? raw[static_cast<std::size_t>(d - m - 1)] : Rational(1);
            sum -= Rational(binomial(static_cast<unsigned long>(d) - 1, static_cast<unsigned long>(m) - 1)) *
                   kappa[static_cast<std::size_t>(m - 1)] * mu_rest;
        }
        sum.canonicalize();
        kappa[static_cast<std::size_t>(d - 1)] = sum;
    }

    MomentTable table = cumulants_to_moments(kappa);
    table.raw = std::move(raw);  // keep the directly computed values
    return table;
}

Rational normalized_cumulant(const Shape& shape, int d) {
    if (d < 2) throw std::invalid_argument("normalized_cumulant: d must be at least 2");
    Rational variance = cumulant_formula(shape, 2);
    if (variance == 0) throw std::domain_error("normalized_cumulant: variance is zero");
    if (d % 2 == 1) return Rational(0);  // odd Bernoulli numbers beyond B_1 vanish
    Rational denom = 1;
    for (int half = 0; half < d / 2; ++half) denom *= variance;
    Rational value = cumulant_formula(shape, d) / denom;
    value.canonicalize();
    return value;
}

}  // namespace sytmaj
