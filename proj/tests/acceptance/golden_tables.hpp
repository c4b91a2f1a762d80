#pragma once

#include <cstddef>
#include <limits>

// Golden regression values for f at t = b/4, b/2, 3b/4 over halving steps,
// with the published empirical rates beside the middle step sizes.
namespace golden {

inline constexpr double no_rate = std::numeric_limits<double>::quiet_NaN();

struct Row {
    std::size_t n;
    double f[3];  // t = 0.25, 0.5, 0.75
    double p[3];  // rate printed beside this step; no_rate on the end rows
};

struct Block {
    double alpha;
    double lambda;
    Row rows[6];
};

// q = 0, b = 1, L = 1, lambda = -3, alpha varying
inline constexpr Block table1[] = {
    {0.3,
     -3.0,
     {{256, {1.53966755, -6.00003222, -5.30712828}, {no_rate, no_rate, no_rate}},
      {512, {1.58297521, -6.17593877, -5.50843511}, {1.08, 1.12, 1.12}},
      {1024, {1.60340765, -6.25702726, -5.60111461}, {1.18, 1.19, 1.20}},
      {2048, {1.61245514, -6.29245343, -5.64157016}, {1.22, 1.24, 1.24}},
      {4096, {1.61632922, -6.30749294, -5.65873385}, {1.25, 1.26, 1.26}},
      {8192, {1.61795763, -6.31377732, -5.66590217}, {no_rate, no_rate, no_rate}}}},
    {0.5,
     -3.0,
     {{256, {3.73516937, 4.73052344, 3.57465003}, {no_rate, no_rate, no_rate}},
      {512, {3.72842313, 4.72211467, 3.56919099}, {1.38, 1.39, 1.39}},
      {1024, {3.72583618, 4.71890721, 3.56710826}, {1.42, 1.42, 1.42}},
      {2048, {3.72486755, 4.71771054, 3.56633103}, {1.44, 1.44, 1.44}},
      {4096, {3.72451075, 4.71727084, 3.56604538}, {1.46, 1.46, 1.46}},
      {8192, {3.72438081, 4.71711100, 3.56594153}, {no_rate, no_rate, no_rate}}}},
    {0.7,
     -3.0,
     {{256, {0.94678077, 1.40241981, 1.42764144}, {no_rate, no_rate, no_rate}},
      {512, {0.94671534, 1.40231616, 1.42754955}, {1.52, 1.55, 1.57}},
      {1024, {0.94669252, 1.40228081, 1.42751850}, {1.57, 1.59, 1.60}},
      {2048, {0.94668482, 1.40226907, 1.42750826}, {1.60, 1.61, 1.62}},
      {4096, {0.94668228, 1.40226523, 1.42750493}, {1.63, 1.64, 1.64}},
      {8192, {0.94668146, 1.40226400, 1.42750386}, {no_rate, no_rate, no_rate}}}},
};

// q = 0, b = 1, L = 1, alpha = 0.6, lambda varying
inline constexpr Block table2[] = {
    {0.6,
     -5.0,
     {{256, {-2.16736188, -2.58746851, -0.79882549}, {no_rate, no_rate, no_rate}},
      {512, {-2.16934247, -2.59034981, -0.80084057}, {1.46, 1.44, 1.45}},
      {1024, {-2.17006290, -2.59140830, -0.80157662}, {1.50, 1.49, 1.49}},
      {2048, {-2.17031750, -2.59178487, -0.80183747}, {1.53, 1.52, 1.52}},
      {4096, {-2.17040578, -2.59191604, -0.80192808}, {1.55, 1.54, 1.54}},
      {8192, {-2.17043598, -2.59196106, -0.80195912}, {no_rate, no_rate, no_rate}}}},
    {0.6,
     -7.5,
     {{256, {-1.51542247, 0.06057150, 1.83620282}, {no_rate, no_rate, no_rate}},
      {512, {-1.51337627, 0.05880539, 1.83222891}, {1.46, 1.40, 1.45}},
      {1024, {-1.51263480, 0.05815391, 1.83078071}, {1.50, 1.46, 1.50}},
      {2048, {-1.51237316, 0.05792141, 1.83026791}, {1.53, 1.50, 1.53}},
      {4096, {-1.51228251, 0.05784024, 1.83008983}, {1.54, 1.53, 1.55}},
      {8192, {-1.51225151, 0.05781234, 1.83002882}, {no_rate, no_rate, no_rate}}}},
    {0.6,
     -10.0,
     {{256, {1.58290914, -1.66780189, -1.87108209}, {no_rate, no_rate, no_rate}},
      {512, {1.58736775, -1.67135428, -1.87951726}, {1.42, 1.46, 1.42}},
      {1024, {1.58904541, -1.67267356, -1.88265567}, {1.48, 1.51, 1.48}},
      {2048, {1.58965039, -1.67314544, -1.88377958}, {1.51, 1.53, 1.52}},
      {4096, {1.58986289, -1.67331027, -1.88417251}, {1.54, 1.56, 1.54}},
      {8192, {1.58993623, -1.67336695, -1.88430769}, {no_rate, no_rate, no_rate}}}},
};

}  // namespace golden
