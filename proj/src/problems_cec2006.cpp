// CEC 2006 constrained benchmark, inequality-only subset.
// Definitions follow the competition technical report (Liang et al., 2006);
// best-known points and values are the ones published there.

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <numbers>

#include "problem_sets.hpp"

namespace mvie::detail {

namespace {

using std::pow;
using X = std::span<const double>;
using G = std::span<double>;

double sq(double v) { return v * v; }
double cube(double v) { return v * v * v; }

// g01 --------------------------------------------------------------------
double g01_f(X x) {
    double f = 0.0;
    for (int i = 0; i < 4; ++i) f += 5.0 * x[i] - 5.0 * x[i] * x[i];
    for (int i = 4; i < 13; ++i) f -= x[i];
    return f;
}
void g01_g(X x, G g) {
    g[0] = 2 * x[0] + 2 * x[1] + x[9] + x[10] - 10;
    g[1] = 2 * x[0] + 2 * x[2] + x[9] + x[11] - 10;
    g[2] = 2 * x[1] + 2 * x[2] + x[10] + x[11] - 10;
    g[3] = -8 * x[0] + x[9];
    g[4] = -8 * x[1] + x[10];
    g[5] = -8 * x[2] + x[11];
    g[6] = -2 * x[3] - x[4] + x[9];
    g[7] = -2 * x[5] - x[6] + x[10];
    g[8] = -2 * x[7] - x[8] + x[11];
}

// g02 --------------------------------------------------------------------
double g02_f(X x) {
    double s4 = 0.0, p2 = 1.0, w = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double c = std::cos(x[i]);
        s4 += pow(c, 4);
        p2 *= c * c;
        w += static_cast<double>(i + 1) * x[i] * x[i];
    }
    return -std::abs(s4 - 2.0 * p2) / std::sqrt(w);
}
void g02_g(X x, G g) {
    double prod = 1.0, sum = 0.0;
    for (double v : x) {
        prod *= v;
        sum += v;
    }
    g[0] = 0.75 - prod;
    g[1] = sum - 7.5 * static_cast<double>(x.size());
}

// g04 --------------------------------------------------------------------
double g04_f(X x) {
    return 5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] - 40792.141;
}
void g04_g(X x, G g) {
    const double u = 85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] - 0.0022053 * x[2] * x[4];
    const double v = 80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * x[2] * x[2];
    const double w = 9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] + 0.0019085 * x[2] * x[3];
    g[0] = u - 92;
    g[1] = -u;
    g[2] = v - 110;
    g[3] = -v + 90;
    g[4] = w - 25;
    g[5] = -w + 20;
}

// g06 --------------------------------------------------------------------
double g06_f(X x) { return cube(x[0] - 10) + cube(x[1] - 20); }
void g06_g(X x, G g) {
    g[0] = -sq(x[0] - 5) - sq(x[1] - 5) + 100;
    g[1] = sq(x[0] - 6) + sq(x[1] - 5) - 82.81;
}

// g07 --------------------------------------------------------------------
double g07_f(X x) {
    return x[0] * x[0] + x[1] * x[1] + x[0] * x[1] - 14 * x[0] - 16 * x[1] + sq(x[2] - 10) +
           4 * sq(x[3] - 5) + sq(x[4] - 3) + 2 * sq(x[5] - 1) + 5 * x[6] * x[6] + 7 * sq(x[7] - 11) +
           2 * sq(x[8] - 10) + sq(x[9] - 7) + 45;
}
void g07_g(X x, G g) {
    g[0] = -105 + 4 * x[0] + 5 * x[1] - 3 * x[6] + 9 * x[7];
    g[1] = 10 * x[0] - 8 * x[1] - 17 * x[6] + 2 * x[7];
    g[2] = -8 * x[0] + 2 * x[1] + 5 * x[8] - 2 * x[9] - 12;
    g[3] = 3 * sq(x[0] - 2) + 4 * sq(x[1] - 3) + 2 * x[2] * x[2] - 7 * x[3] - 120;
    g[4] = 5 * x[0] * x[0] + 8 * x[1] + sq(x[2] - 6) - 2 * x[3] - 40;
    g[5] = x[0] * x[0] + 2 * sq(x[1] - 2) - 2 * x[0] * x[1] + 14 * x[4] - 6 * x[5];
    g[6] = 0.5 * sq(x[0] - 8) + 2 * sq(x[1] - 4) + 3 * x[4] * x[4] - x[5] - 30;
    g[7] = -3 * x[0] + 6 * x[1] + 12 * sq(x[8] - 8) - 7 * x[9];
}

// g08 --------------------------------------------------------------------
double g08_f(X x) {
    constexpr double tau = 2.0 * std::numbers::pi;
    return -cube(std::sin(tau * x[0])) * std::sin(tau * x[1]) / (cube(x[0]) * (x[0] + x[1]));
}
void g08_g(X x, G g) {
    g[0] = x[0] * x[0] - x[1] + 1;
    g[1] = 1 - x[0] + sq(x[1] - 4);
}

// g09 --------------------------------------------------------------------
double g09_f(X x) {
    return sq(x[0] - 10) + 5 * sq(x[1] - 12) + pow(x[2], 4) + 3 * sq(x[3] - 11) + 10 * pow(x[4], 6) +
           7 * x[5] * x[5] + pow(x[6], 4) - 4 * x[5] * x[6] - 10 * x[5] - 8 * x[6];
}
void g09_g(X x, G g) {
    g[0] = -127 + 2 * x[0] * x[0] + 3 * pow(x[1], 4) + x[2] + 4 * x[3] * x[3] + 5 * x[4];
    g[1] = -282 + 7 * x[0] + 3 * x[1] + 10 * x[2] * x[2] + x[3] - x[4];
    g[2] = -196 + 23 * x[0] + x[1] * x[1] + 6 * x[5] * x[5] - 8 * x[6];
    g[3] = 4 * x[0] * x[0] + x[1] * x[1] - 3 * x[0] * x[1] + 2 * x[2] * x[2] + 5 * x[5] - 11 * x[6];
}

// g10 --------------------------------------------------------------------
double g10_f(X x) { return x[0] + x[1] + x[2]; }
void g10_g(X x, G g) {
    g[0] = -1 + 0.0025 * (x[3] + x[5]);
    g[1] = -1 + 0.0025 * (x[4] + x[6] - x[3]);
    g[2] = -1 + 0.01 * (x[7] - x[4]);
    g[3] = -x[0] * x[5] + 833.33252 * x[3] + 100 * x[0] - 83333.333;
    g[4] = -x[1] * x[6] + 1250 * x[4] + x[1] * x[3] - 1250 * x[3];
    g[5] = -x[2] * x[7] + 1250000 + x[2] * x[4] - 2500 * x[4];
}

// g12 --------------------------------------------------------------------
// The feasible set is the union of 9^3 balls of radius 0.25; one constraint
// taking the minimum over all centres.
double g12_f(X x) { return -(100 - sq(x[0] - 5) - sq(x[1] - 5) - sq(x[2] - 5)) / 100; }
void g12_g(X x, G g) {
    double best = std::numeric_limits<double>::infinity();
    for (int p = 1; p <= 9; ++p)
        for (int q = 1; q <= 9; ++q)
            for (int r = 1; r <= 9; ++r)
                best = std::min(best, sq(x[0] - p) + sq(x[1] - q) + sq(x[2] - r) - 0.0625);
    g[0] = best;
}

// g16 --------------------------------------------------------------------
struct G16Terms {
    std::array<double, 18> y{};  // y[1..17]
    double c12 = 0, c15 = 0, c16 = 0, c17 = 0;
};

G16Terms g16_terms(X x) {
    G16Terms t;
    auto& y = t.y;
    y[1] = x[1] + x[2] + 41.6;
    const double c1 = 0.024 * x[3] - 4.62;
    y[2] = 12.5 / c1 + 12;
    const double c2 = 0.0003535 * x[0] * x[0] + 0.5311 * x[0] + 0.08705 * y[2] * x[0];
    const double c3 = 0.052 * x[0] + 78 + 0.002377 * y[2] * x[0];
    y[3] = c2 / c3;
    y[4] = 19 * y[3];
    const double c4 = 0.04782 * (x[0] - y[3]) + 0.1956 * sq(x[0] - y[3]) / x[1] + 0.6376 * y[4] + 1.594 * y[3];
    const double c5 = 100 * x[1];
    const double c6 = x[0] - y[3] - y[4];
    const double c7 = 0.950 - c4 / c5;
    y[5] = c6 * c7;
    y[6] = x[0] - y[5] - y[4] - y[3];
    const double c8 = (y[5] + y[4]) * 0.995;
    y[7] = c8 / y[1];
    y[8] = c8 / 3798;
    const double c9 = y[7] - 0.0663 * y[7] / y[8] - 0.3153;
    y[9] = 96.82 / c9 + 0.321 * y[1];
    y[10] = 1.29 * y[5] + 1.258 * y[4] + 2.29 * y[3] + 1.71 * y[6];
    y[11] = 1.71 * x[0] - 0.452 * y[4] + 0.580 * y[3];
    const double c10 = 12.3 / 752.3;
    const double c11 = (1.75 * y[2]) * (0.995 * x[0]);
    t.c12 = 0.995 * y[10] + 1998;
    y[12] = c10 * x[0] + c11 / t.c12;
    y[13] = t.c12 - 1.75 * y[2];
    y[14] = 3623 + 64.4 * x[1] + 58.4 * x[2] + 146312 / (y[9] + x[4]);
    const double c13 = 0.995 * y[10] + 60.8 * x[1] + 48 * x[3] - 0.1121 * y[14] - 5095;
    y[15] = y[13] / c13;
    y[16] = 148000 - 331000 * y[15] + 40 * y[13] - 61 * y[15] * y[13];
    const double c14 = 2324 * y[10] - 28740000 * y[2];
    y[17] = 14130000 - 1328 * y[10] - 531 * y[11] + c14 / t.c12;
    t.c15 = y[13] / y[15] - y[13] / 0.52;
    t.c16 = 1.104 - 0.72 * y[15];
    t.c17 = y[9] + x[4];
    return t;
}

double g16_f(X x) {
    const G16Terms t = g16_terms(x);
    const auto& y = t.y;
    return 0.000117 * y[14] + 0.1365 + 0.00002358 * y[13] + 0.000001502 * y[16] + 0.0321 * y[12] +
           0.004324 * y[5] + 0.0001 * t.c15 / t.c16 + 37.48 * y[2] / t.c12 - 0.0000005843 * y[17];
}

void g16_g(X x, G g) {
    static constexpr std::array<double, 17> lo{213.1,   17.505,  11.275,   214.228, 7.458,  0.961,
                                               1.612,   0.146,   107.99,   922.693, 926.832, 18.766,
                                               1072.163, 8961.448, 0.063, 71084.33, 2802713};
    static constexpr std::array<double, 17> hi{405.23,   1053.6667, 35.03,     665.585, 584.463, 265.916,
                                               7.046,    0.222,     273.366,   1286.105, 1444.046, 537.141,
                                               3247.039, 26844.086, 0.386,     140000,  12146108};
    const G16Terms t = g16_terms(x);
    const auto& y = t.y;
    g[0] = 0.28 / 0.72 * y[5] - y[4];
    g[1] = x[2] - 1.5 * x[1];
    g[2] = 3496 * y[2] / t.c12 - 21;
    g[3] = 110.6 + y[1] - 62212 / t.c17;
    for (std::size_t k = 0; k < 17; ++k) {
        g[4 + 2 * k] = lo[k] - y[k + 1];
        g[5 + 2 * k] = y[k + 1] - hi[k];
    }
}

// g18 --------------------------------------------------------------------
double g18_f(X x) {
    return -0.5 * (x[0] * x[3] - x[1] * x[2] + x[2] * x[8] - x[4] * x[8] + x[4] * x[7] - x[5] * x[6]);
}
void g18_g(X x, G g) {
    g[0] = x[2] * x[2] + x[3] * x[3] - 1;
    g[1] = x[8] * x[8] - 1;
    g[2] = x[4] * x[4] + x[5] * x[5] - 1;
    g[3] = x[0] * x[0] + sq(x[1] - x[8]) - 1;
    g[4] = sq(x[0] - x[4]) + sq(x[1] - x[5]) - 1;
    g[5] = sq(x[0] - x[6]) + sq(x[1] - x[7]) - 1;
    g[6] = sq(x[2] - x[4]) + sq(x[3] - x[5]) - 1;
    g[7] = sq(x[2] - x[6]) + sq(x[3] - x[7]) - 1;
    g[8] = x[6] * x[6] + sq(x[7] - x[8]) - 1;
    g[9] = x[1] * x[2] - x[0] * x[3];
    g[10] = -x[2] * x[8];
    g[11] = x[4] * x[8];
    g[12] = x[5] * x[6] - x[4] * x[7];
}

// g19 --------------------------------------------------------------------
constexpr double kG19c[5][5] = {{30, -20, -10, 32, -10},
                                {-20, 39, -6, -31, 32},
                                {-10, -6, 10, -6, -10},
                                {32, -31, -6, 39, -20},
                                {-10, 32, -10, -20, 30}};
constexpr double kG19d[5] = {4, 8, 10, 6, 2};
constexpr double kG19e[5] = {-15, -27, -36, -18, -12};
constexpr double kG19a[10][5] = {{-16, 2, 0, 1, 0},   {0, -2, 0, 0.4, 2},     {-3.5, 0, 2, 0, 0},
                                 {0, -2, 0, -4, -1},  {0, -9, -2, 1, -2.8},   {2, 0, -4, 0, 0},
                                 {-1, -1, -1, -1, -1}, {-1, -2, -3, -2, -1}, {1, 2, 3, 4, 5},
                                 {1, 1, 1, 1, 1}};
constexpr double kG19b[10] = {-40, -2, -0.25, -4, -4, -1, -40, -60, 5, 1};

double g19_f(X x) {
    double f = 0.0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) f += kG19c[i][j] * x[10 + i] * x[10 + j];
    for (int j = 0; j < 5; ++j) f += 2 * kG19d[j] * cube(x[10 + j]);
    for (int i = 0; i < 10; ++i) f -= kG19b[i] * x[i];
    return f;
}
void g19_g(X x, G g) {
    for (int j = 0; j < 5; ++j) {
        double v = -3 * kG19d[j] * x[10 + j] * x[10 + j] - kG19e[j];
        for (int i = 0; i < 5; ++i) v -= 2 * kG19c[i][j] * x[10 + i];
        for (int i = 0; i < 10; ++i) v += kG19a[i][j] * x[i];
        g[j] = v;
    }
}

// g24 --------------------------------------------------------------------
double g24_f(X x) { return -x[0] - x[1]; }
void g24_g(X x, G g) {
    const double a = x[0];
    g[0] = -2 * pow(a, 4) + 8 * cube(a) - 8 * a * a + x[1] - 2;
    g[1] = -4 * pow(a, 4) + 32 * cube(a) - 88 * a * a + 96 * a + x[1] - 36;
}

ProblemSpec make(std::string name, Vector lower, Vector upper, std::size_t m, ObjectiveFn f,
                 ConstraintFn g, double f_star, std::optional<Vector> x_star, int linear, int nonlinear,
                 int active) {
    ProblemSpec p;
    p.name = std::move(name);
    p.n = lower.size();
    p.m = m;
    p.lower = std::move(lower);
    p.upper = std::move(upper);
    p.objective = std::move(f);
    p.constraints = std::move(g);
    p.f_star = f_star;
    p.x_star = std::move(x_star);
    p.linear_constraints = linear;
    p.nonlinear_constraints = nonlinear;
    p.active_at_optimum = active;
    return p;
}

Vector filled(std::size_t n, double v) { return Vector(n, v); }

}  // namespace

std::vector<ProblemSpec> cec2006_problems() {
    std::vector<ProblemSpec> out;

    {
        Vector lo(13, 0.0), hi(13, 1.0);
        hi[9] = hi[10] = hi[11] = 100.0;
        out.push_back(make("g01", lo, hi, 9, g01_f, g01_g, -15.0,
                           Vector{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 1}, 9, 0, 6));
    }
    out.push_back(make("g02", filled(20, 0.0), filled(20, 10.0), 2, g02_f, g02_g, -0.80361910412559,
                       Vector{3.16246061572185, 3.12833142812967, 3.09479212988791, 3.06145059523469,
                              3.02792915885555, 2.99382606701730, 2.95866871765285, 2.92184227312450,
                              0.49482511456933, 0.48835711005490, 0.48231642711865, 0.47664475092742,
                              0.47129550835493, 0.46623099264167, 0.46142004984199, 0.45683664767217,
                              0.45245876903267, 0.44826762241853, 0.44424700958760, 0.44038285956317},
                       1, 1, 1));
    out.push_back(make("g04", {78, 33, 27, 27, 27}, {102, 45, 45, 45, 45}, 6, g04_f, g04_g,
                       -30665.538671783317,
                       Vector{78, 33, 29.9952560256815985, 45, 36.7758129057882073}, 0, 6, 2));
    out.push_back(make("g06", {13, 0}, {100, 100}, 2, g06_f, g06_g, -6961.81387558015,
                       Vector{14.09500000000000064, 0.8429607892154795668}, 0, 2, 2));
    out.push_back(make("g07", filled(10, -10.0), filled(10, 10.0), 8, g07_f, g07_g, 24.30620906818,
                       Vector{2.17199634142692, 2.3636830416034, 8.77392573913157, 5.09598443745173,
                              0.990654756560493, 1.43057392853463, 1.32164415364306, 9.82872576524495,
                              8.2800915887356, 8.3759266477347},
                       3, 5, 6));
    out.push_back(make("g08", {0, 0}, {10, 10}, 2, g08_f, g08_g, -0.0958250414180359,
                       Vector{1.22797135260752599, 4.24537336612274885}, 0, 2, 0));
    out.push_back(make("g09", filled(7, -10.0), filled(7, 10.0), 4, g09_f, g09_g, 680.630057374402,
                       Vector{2.33049935147405174, 1.95137236847114592, -0.477541399510615805,
                              4.36572624923625874, -0.624486959100388983, 1.03813099410962173,
                              1.5942266780671519},
                       0, 4, 2));
    out.push_back(make("g10", {100, 1000, 1000, 10, 10, 10, 10, 10},
                       {10000, 10000, 10000, 1000, 1000, 1000, 1000, 1000}, 6, g10_f, g10_g,
                       7049.24802052867,
                       Vector{579.306685017979589, 1359.97067807935605, 5109.97065743133317,
                              182.01769963061534, 295.601173702746792, 217.982300369384632,
                              286.41652592786852, 395.601173702746735},
                       3, 3, 6));
    out.push_back(make("g12", filled(3, 0.0), filled(3, 10.0), 1, g12_f, g12_g, -1.0, Vector{5, 5, 5}, 0, 1, 0));
    out.push_back(make("g16", {704.4148, 68.6, 0.0, 193.0, 25.0}, {906.3855, 288.88, 134.75, 287.0966, 84.1988},
                       38, g16_f, g16_g, -1.90515525853479,
                       Vector{705.174537070090537, 68.5999999999999943, 102.899999999999991,
                              282.324931593660324, 37.5841164258054832},
                       4, 34, 4));
    {
        Vector lo(9, -10.0), hi(9, 10.0);
        lo[8] = 0.0;
        hi[8] = 20.0;
        out.push_back(make("g18", lo, hi, 13, g18_f, g18_g, -0.866025403784439,
                           Vector{-0.657776192427943163, -0.153418773482438542, 0.323413871675240938,
                                  -0.946257611651304398, -0.657776194376798906, -0.753213434632691414,
                                  0.323413874123576972, -0.346462947962331735, 0.59979466285217542},
                           0, 13, 6));
    }
    out.push_back(make("g19", filled(15, 0.0), filled(15, 10.0), 5, g19_f, g19_g, 32.6555929502463,
                       Vector{1.66991341326291344e-17, 3.95378229282456509e-16, 3.94599045143233784,
                              1.06036597479721211e-16, 3.2831773458454161, 9.99999999999999822,
                              1.12829414671605333e-17, 1.2026194599794709e-17, 2.50706276000769697e-15,
                              2.24624122987970677e-15, 0.370764847417013987, 0.278456024942955571,
                              0.523838487672241171, 0.388620152510322781, 0.298156764974678579},
                       0, 5, 0));
    out.push_back(make("g24", {0, 0}, {3, 4}, 2, g24_f, g24_g, -5.50801327159536,
                       Vector{2.32952019747762, 3.17849307411774}, 0, 2, 2));
    return out;
}

}  // namespace mvie::detail
