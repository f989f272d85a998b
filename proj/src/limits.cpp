#include "sytmaj/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sytmaj/fakedeg.hpp"

namespace sytmaj {

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); }

double irwin_hall_star_cdf(int m, double t) {
    if (m < 1) throw std::invalid_argument("irwin_hall_star_cdf: m must be positive");
    double x = 0.5 * m + t * std::sqrt(m / 12.0);
    if (x <= 0) return 0.0;
    if (x >= m) return 1.0;
    // (1/m!) Σ_{k ≤ x} (−1)^k C(m,k) (x−k)^m, evaluated exactly at the dyadic x.
    Rational xr(x);
    Rational sum = 0;
    for (int k = 0; k <= static_cast<int>(std::floor(x)); ++k) {
        Rational base = xr - k;
        mpz_class num_pow, den_pow;
        mpz_pow_ui(num_pow.get_mpz_t(), mpq_numref(base.get_mpq_t()), static_cast<unsigned long>(m));
        mpz_pow_ui(den_pow.get_mpz_t(), mpq_denref(base.get_mpq_t()), static_cast<unsigned long>(m));
        Rational power(num_pow, den_pow);  // coprime stays coprime under powers
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
        if (k % 2 == 0)
            sum += Rational(binom) * power;
        else
            sum -= Rational(binom) * power;
    }
    mpz_class mfact;
    mpz_fac_ui(mfact.get_mpz_t(), static_cast<unsigned long>(m));
    sum /= Rational(mfact);
    sum.canonicalize();
    return sum.get_d();
}

double ReferenceLaw::cdf(double t) const {
    switch (kind) {
        case Kind::Normal: return normal_cdf(t);
        case Kind::IrwinHallStar: return irwin_hall_star_cdf(m, t);
        case Kind::Discrete: break;
    }
    throw std::invalid_argument("ReferenceLaw: discrete law has no reference CDF");
}

std::string ReferenceLaw::name() const {
    switch (kind) {
        case Kind::Normal: return "normal";
        case Kind::IrwinHallStar: return "ih:" + std::to_string(m);
        case Kind::Discrete: return "discrete";
    }
    return "?";
}

ReferenceLaw parse_law(const std::string& text) {
    if (text == "normal") return ReferenceLaw::normal();
    if (text.rfind("ih:", 0) == 0) {
        int m = std::stoi(text.substr(3));
        if (m < 1) throw std::invalid_argument("law: ih:M needs M ≥ 1");
        return ReferenceLaw::irwin_hall_star(m);
    }
    throw std::invalid_argument("law: expected 'normal' or 'ih:M'");
}

namespace {

// 256-bit square root of an exact rational, by value a positive one.
double sqrt_rational(const Rational& r) {
    mpf_class value(r, 256);
    mpf_class root(0, 256);
    mpf_sqrt(root.get_mpf_t(), value.get_mpf_t());
    return root.get_d();
}

mpz_class int_pow(long long base, int exp) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return out;
}

}  // namespace

NormalizedDistribution normalized_distribution_from_gf(const QPolynomial& gf) {
    if (gf.is_zero()) throw std::invalid_argument("normalized_distribution: zero polynomial");
    MomentTable table = moments_from_gf(gf, 2);
    if (table.variance == 0) throw std::domain_error("normalized_distribution: variance is zero");

    NormalizedDistribution dist;
    dist.mean = table.mean;
    dist.variance = table.variance;
    dist.sigma = sqrt_rational(table.variance);
    mpz_class total = gf.value_at_one();
    for (int k = gf.min_degree(); k <= gf.degree(); ++k) {
        if (gf.coeff(k) == 0) continue;
        Rational offset = Rational(k) - dist.mean;
        offset.canonicalize();
        Rational mass{gf.coeff(k), total};
        mass.canonicalize();
        dist.offsets.push_back(offset);
        dist.masses.push_back(mass);
        dist.points.push_back(offset.get_d() / dist.sigma);
    }
    return dist;
}

NormalizedDistribution normalized_distribution(const Shape& shape) {
    return normalized_distribution_from_gf(maj_gf(shape));
}

bool same_normalized_law(const NormalizedDistribution& a, const NormalizedDistribution& b) {
    return a.variance == b.variance && a.offsets == b.offsets && a.masses == b.masses;
}

double ks_distance(const NormalizedDistribution& dist, const ReferenceLaw& law) {
    if (law.kind == ReferenceLaw::Kind::Discrete)
        throw std::invalid_argument("ks_distance: discrete reference law is unsupported");
    double best = 0;
    Rational cumulative = 0;
    for (std::size_t i = 0; i < dist.points.size(); ++i) {
        double reference = law.cdf(dist.points[i]);
        double below = cumulative.get_d();
        cumulative += dist.masses[i];
        double above = cumulative.get_d();
        best = std::max({best, std::fabs(below - reference), std::fabs(above - reference)});
    }
    return best;
}

std::string LimitLaw::name() const {
    switch (kind) {
        case Case::Normal: return "normal";
        case Case::IrwinHall: return "ih:" + std::to_string(m);
        case Case::Discrete: return "discrete";
        case Case::Divergent: return "divergent";
    }
    return "?";
}

LimitLaw classify_limit(std::optional<long long> aft_limit, std::optional<long long> size_limit,
                        bool eventually_constant_normalized) {
    bool aft_infinite = !aft_limit.has_value();
    bool size_infinite = !size_limit.has_value();
    if (aft_infinite && !size_infinite)
        throw std::invalid_argument("classify_limit: aft cannot diverge while the size stays bounded");
    if (eventually_constant_normalized && size_infinite)
        throw std::invalid_argument(
            "classify_limit: an eventually constant normalized distribution contradicts unbounded size");
    if (aft_infinite) return {LimitLaw::Case::Normal, 0};
    if (size_infinite) {
        if (*aft_limit < 1)
            throw std::invalid_argument(
                "classify_limit: aft → 0 with unbounded size leaves the normalized variable undefined");
        return {LimitLaw::Case::IrwinHall, static_cast<int>(*aft_limit)};
    }
    if (eventually_constant_normalized) return {LimitLaw::Case::Discrete, 0};
    return {LimitLaw::Case::Divergent, 0};
}

HookBoundReport check_hook_bounds(const Shape& shape, int d) {
    if (d < 1) throw std::invalid_argument("check_hook_bounds: d must be positive");
    HookBoundReport report;
    report.n = shape_cells(shape);
    report.d = d;
    report.aft_value = aft(shape);
    std::vector<int> hooks = hook_lengths(shape);
    report.max_hook = hooks.empty() ? 0 : hooks.back();

    report.bracket = 0;
    for (int j = 1; j <= report.n; ++j) report.bracket += int_pow(j, d);
    for (int h : hooks) report.bracket -= int_pow(h, d);

    long long n = report.n;
    // Ties at exactly 0.8n belong to the large-hook regime.
    report.large_hook_regime = 5LL * report.max_hook >= 4LL * n;
    Rational bracket(report.bracket);

    Rational aft_rational(static_cast<long>(report.aft_value));
    if (report.large_hook_regime) {
        report.lemma_applicable = n >= 10;
        Rational lower = aft_rational * Rational(int_pow(n / 10, d)) / Rational(d);
        Rational upper = 2 * aft_rational *
                         Rational(int_pow(n, d) + mpz_class(d) * int_pow(n, d - 1));
        lower.canonicalize();
        upper.canonicalize();
        report.lower = lower;
        report.upper = upper;
        report.holds = lower <= bracket && bracket <= upper;
    } else {
        report.lemma_applicable = true;
        Rational pow_ratio(int_pow(4, d), int_pow(5, d));
        Rational lower = Rational(int_pow(n, d + 1)) / Rational(26 * (d + 1)) -
                         2 * pow_ratio * Rational(int_pow(n, d));
        Rational upper = Rational(int_pow(n, d + 1)) / Rational(d + 1) + Rational(int_pow(n, d));
        lower.canonicalize();
        upper.canonicalize();
        report.lower = lower;
        report.upper = upper;
        report.holds = lower < bracket && bracket < upper;
    }

    if (report.aft_value > 0) {
        Rational ratio = bracket / (aft_rational * Rational(int_pow(n, d)));
        ratio.canonicalize();
        report.theta_ratio = ratio.get_d();
    }
    return report;
}

double normalized_cumulant_scaling(const Shape& shape, int d) {
    if (d < 4 || d % 2 != 0)
        throw std::invalid_argument("normalized_cumulant_scaling: d must be even and at least 4");
    Rational star = normalized_cumulant(shape, d);  // throws when the variance vanishes
    double scale = std::pow(static_cast<double>(aft(shape)), d / 2.0 - 1.0);
    return std::fabs(star.get_d()) * scale;
}

LocalLimitReport local_limit_deviation(const Partition& p) {
    QPolynomial gf = maj_gf_hook_formula(p);
    MomentTable table = moments_from_gf(gf, 2);
    if (table.variance == 0) throw std::domain_error("local_limit_deviation: variance is zero");

    LocalLimitReport report;
    report.sigma = sqrt_rational(table.variance);
    report.aft_value = aft(p);
    double mu = table.mean.get_d();
    double var = table.variance.get_d();
    double total = mpf_class(gf.value_at_one(), 128).get_d();

    long long lo = std::min<long long>(gf.min_degree(), static_cast<long long>(std::floor(mu - 12 * report.sigma)));
    long long hi = std::max<long long>(gf.degree(), static_cast<long long>(std::ceil(mu + 12 * report.sigma)));
    for (long long k = lo; k <= hi; ++k) {
        double pmf = 0;
        if (k >= gf.min_degree() && k <= gf.degree() && gf.coeff(static_cast<int>(k)) != 0)
            pmf = mpf_class(gf.coeff(static_cast<int>(k)), 128).get_d() / total;
        double gauss = std::exp(-(k - mu) * (k - mu) / (2 * var)) /
                       std::sqrt(2 * std::numbers::pi * var);
        double deviation = std::fabs(pmf - gauss);
        if (deviation > report.max_deviation) {
            report.max_deviation = deviation;
            report.argmax_k = k;
        }
    }
    report.ratio = report.max_deviation * report.sigma * static_cast<double>(report.aft_value);
    return report;
}

}  // namespace sytmaj
