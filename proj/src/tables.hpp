#pragma once

// Fixed-precision coefficient tables (generated once at 20 significant
// digits; immutable after startup).

namespace zp::detail {

// B_{2k} / (2k)!  for k = 1..30; index 0 holds k = 1.
inline constexpr double kBernoulliOverFactorial[30] = {
    8.3333333333333333333e-02,  -1.3888888888888888889e-03,
    3.3068783068783068783e-05,  -8.2671957671957671958e-07,
    2.0876756987868098979e-08,  -5.2841901386874931848e-10,
    1.3382536530684678833e-11,  -3.3896802963225828668e-13,
    8.5860620562778445641e-15,  -2.1748686985580618730e-16,
    5.5090028283602295152e-18,  -1.3954464685812523341e-19,
    3.5347070396294674717e-21,  -8.9535174270375468504e-23,
    2.2679524523376830603e-24,  -5.7447906688722024453e-26,
    1.4551724756148649019e-27,  -3.6859949406653101782e-29,
    9.3367342570950446720e-31,  -2.3650224157006299346e-32,
    5.9906717624821343047e-34,  -1.5174548844682902617e-35,
    3.8437581254541882322e-37,  -9.7363530726466910353e-39,
    2.4662470442006809571e-40,  -6.2470767418207436931e-42,
    1.5824030244644914298e-43,  -4.0082736859489359685e-45,
    1.0153075855569556312e-46,  -2.5718041582418717499e-48,
};

inline constexpr int kBernoulliTableSize = 30;

// B_{2k} / (2k (2k-1))  for k = 1..15 (Stirling series for log Gamma).
inline constexpr double kStirlingCoeff[15] = {
    8.3333333333333333333e-02,  -2.7777777777777777778e-03,
    7.9365079365079365079e-04,  -5.9523809523809523810e-04,
    8.4175084175084175084e-04,  -1.9175269175269175269e-03,
    6.4102564102564102564e-03,  -2.9550653594771241830e-02,
    1.7964437236883057316e-01,  -1.3924322169059011164e+00,
    1.3402864044168391994e+01,  -1.5684828462600201731e+02,
    2.1931033333333333333e+03,  -3.6108771253724989357e+04,
    6.9147226885131306711e+05,
};

inline constexpr int kStirlingTableSize = 15;

inline constexpr double kPi = 3.14159265358979323846264338328;
inline constexpr double kTwoPi = 6.28318530717958647692528676656;
inline constexpr double kLogPi = 1.14472988584940017414342735135;
inline constexpr double kLog2Pi = 1.83787706640934548356065947281;
inline constexpr double kLn2 = 0.69314718055994530941723212146;

}  // namespace zp::detail
