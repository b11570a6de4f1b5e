#include "smig/specfun.hpp"

#include <cmath>
#include <numbers>

#include "smig/errors.hpp"

namespace smig {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286060651209;
constexpr double kSeriesCrossover = 12.0;  // ascending series below, recurrence above
constexpr int kMaxOrder = 200;
constexpr double kMaxArgument = 500.0;

void check_domain(int order, Complex z) {
    if (std::abs(order) > kMaxOrder)
        throw ConfigError("bessel_j: order out of supported range |s| <= 200");
    if (std::abs(z) > kMaxArgument)
        throw ConfigError("bessel_j: argument out of supported range |z| <= 500");
}

/// Ascending power series, nonnegative order. Underflows cleanly to 0 for
/// orders far above the argument.
Complex bessel_j_series(int s, Complex z) {
    const Complex zh = 0.5 * z;
    Complex term = 1.0;
    for (int k = 1; k <= s; ++k) term *= zh / static_cast<double>(k);
    Complex sum = term;
    const Complex zh2 = zh * zh;
    for (int m = 1; m <= 400; ++m) {
        term *= -zh2 / static_cast<double>(m) / static_cast<double>(m + s);
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

/// All orders 0..max_order by one downward (Miller) recurrence, normalized
/// with J_0 + 2 sum_m J_{2m} = 1 (valid for complex argument).
std::vector<Complex> bessel_j_miller(int max_order, Complex z) {
    const int start = 2 * ((std::max<int>(max_order, static_cast<int>(std::abs(z)))
                            + 40) / 2 + 1);
    std::vector<Complex> out(max_order + 1);
    Complex fp1 = 0.0;  // f_{s+1}
    Complex f = 1e-30;  // f_s, arbitrary seed
    Complex norm = 0.0;
    for (int s = start; s >= 1; --s) {
        const Complex fm1 = (2.0 * s / z) * f - fp1;
        fp1 = f;
        f = fm1;
        if (s - 1 <= max_order) out[s - 1] = f;
        if ((s - 1) % 2 == 0 && s - 1 > 0) norm += 2.0 * f;
        if (std::abs(f) > 1e250) {  // rescale to avoid overflow
            const double inv = 1e-250;
            f *= inv;
            fp1 *= inv;
            norm *= inv;
            for (Complex& v : out) v *= inv;
        }
    }
    norm += f;  // f_0 term
    for (Complex& v : out) v /= norm;
    return out;
}

Complex bessel_y0(Complex z) {
    // Y_0(z) = (2/pi)[(ln(z/2)+gamma) J_0(z)
    //                 + sum_{k>=1} (-1)^{k+1} H_k (z^2/4)^k / (k!)^2],
    // principal branch of the logarithm.
    const Complex j0 = bessel_j_series(0, z);
    const Complex q = 0.25 * z * z;
    Complex term = 1.0;
    double harmonic = 0.0;
    Complex sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 400; ++k) {
        term *= q / static_cast<double>(k) / static_cast<double>(k);
        harmonic += 1.0 / k;
        sum += sign * harmonic * term;
        sign = -sign;
        if (std::abs(term) <= 1e-17 * (std::abs(sum) + 1.0)) break;
    }
    return (2.0 / kPi) * ((std::log(0.5 * z) + kEulerGamma) * j0 + sum);
}

Complex hankel1_0_asymptotic(Complex z) {
    // H_0^(1)(z) ~ sqrt(2/(pi z)) e^{i(z - pi/4)} sum_k i^k a_k / z^k,
    // a_0 = 1, a_k = a_{k-1} * (-(2k-1)^2) / (8k); 10 terms.
    Complex sum = 1.0;
    double a = 1.0;
    Complex ipow = 1.0;
    Complex zpow = 1.0;
    for (int k = 1; k <= 9; ++k) {
        a *= -static_cast<double>((2 * k - 1) * (2 * k - 1)) / (8.0 * k);
        ipow *= Complex(0.0, 1.0);
        zpow *= z;
        sum += ipow * a / zpow;
    }
    const Complex phase = std::exp(Complex(0.0, 1.0) * (z - kPi / 4.0));
    return std::sqrt(2.0 / (kPi * z)) * phase * sum;
}

}  // namespace

void validate_series_params(const SeriesParams& params) {
    if (params.truncation_L < 1)
        throw ConfigError("series truncation order must be at least 1");
    if (!(params.tolerance > 0.0))
        throw ConfigError("series tolerance must be positive");
}

std::vector<Complex> bessel_j_orders(int max_order, Complex z) {
    if (max_order < 0) throw ConfigError("bessel_j_orders: order must be nonnegative");
    check_domain(max_order, z);
    std::vector<Complex> out(max_order + 1);
    if (z == Complex(0.0, 0.0)) {
        out[0] = 1.0;
        return out;
    }
    if (std::abs(z) <= kSeriesCrossover) {
        for (int s = 0; s <= max_order; ++s) out[s] = bessel_j_series(s, z);
        return out;
    }
    return bessel_j_miller(max_order, z);
}

Complex bessel_j(int order, Complex z) {
    check_domain(order, z);
    const int s = std::abs(order);
    Complex v;
    if (std::abs(z) <= kSeriesCrossover)
        v = bessel_j_series(s, z);
    else
        v = bessel_j_miller(s, z)[s];
    if (order < 0 && (s % 2 == 1)) v = -v;  // J_{-s} = (-1)^s J_s
    return v;
}

Complex hankel1_0(Complex z) {
    if (z == Complex(0.0, 0.0))
        throw NumericalError("hankel1_0: singular at z = 0");
    if (std::abs(z) > kMaxArgument)
        throw ConfigError("hankel1_0: argument out of supported range |z| <= 500");
    if (std::abs(z) <= kSeriesCrossover)
        return bessel_j_series(0, z) + Complex(0.0, 1.0) * bessel_y0(z);
    return hankel1_0_asymptotic(z);
}

Complex hankel1_0_farfield(Complex kb, Point2 a, Point2 z) {
    const double ra = norm(a);
    if (ra == 0.0)
        throw ConfigError("hankel1_0_farfield: antenna at the origin");
    const Point2 theta{a.x / ra, a.y / ra};
    const Complex i(0.0, 1.0);
    return (1.0 + i) * std::exp(i * kb * ra) / std::sqrt(kb * kPi * ra) *
           std::exp(-i * kb * dot(theta, z));
}

namespace {

/// Common core of jacobi_anger and epsilon_sum:
/// base + sum_{s=1..L} i^s J_s(arg) (e^{-is phi} E_s + e^{+is phi} E_{-s}),
/// E_s = sum_n e^{is theta_n}. Uses J_{-s} = (-1)^s J_s and i^{-s}(-1)^s = i^s.
Complex harmonic_sum(const AntennaArray& array, Complex arg, double phi, int L,
                     bool include_j0) {
    const std::vector<Complex> js = bessel_j_orders(L, arg);
    const double n_ant = static_cast<double>(array.count());
    Complex total = include_j0 ? n_ant * js[0] : Complex(0.0, 0.0);
    const Complex i(0.0, 1.0);
    Complex ipow = 1.0;
    for (int s = 1; s <= L; ++s) {
        ipow *= i;
        Complex e_pos = 0.0, e_neg = 0.0;
        for (double th : array.angles) {
            e_pos += std::exp(Complex(0.0, s * th));
            e_neg += std::exp(Complex(0.0, -s * th));
        }
        total += ipow * js[s] *
                 (std::exp(Complex(0.0, -s * phi)) * e_pos +
                  std::exp(Complex(0.0, s * phi)) * e_neg);
    }
    return total;
}

}  // namespace

Complex jacobi_anger(const AntennaArray& array, Complex kb, Point2 d,
                     const SeriesParams& params) {
    validate_series_params(params);
    return harmonic_sum(array, kb * norm(d), polar_angle(d), params.truncation_L,
                        true);
}

Complex epsilon_sum(const AntennaArray& array, double x, double phi, int L) {
    if (L < 1) throw ConfigError("epsilon_sum: L must be at least 1");
    return harmonic_sum(array, Complex(x, 0.0), phi, L, false);
}

int default_truncation(Complex kb, double d_max) {
    const int l = static_cast<int>(std::ceil(2.0 * std::abs(kb) * d_max)) + 20;
    return std::min(kMaxOrder, std::max(30, l));
}

}  // namespace smig
