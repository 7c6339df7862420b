#pragma once

#include <vector>

#include "k3char/series.hpp"

namespace k3char {

// Signed partial theta series: sum over l >= 1 of (-1)^(l+1) q^(l(l+2k-1)/2).
QSeries ak_series(int k, int order);

// q times the 24th power of the Euler product, the weight-12 cusp form.
QSeries delta_series(int order);

// Reciprocal 24th power of the Euler product; coefficient of q^n is the
// Euler number of the Hilbert scheme of n points on a K3 surface.
QSeries euler_series(int order);

// euler_series * (ak_series(k) - ak_series(k+1)): the coefficient of q^n is
// the dimension of H^(2n+2k) of the deformed Hilbert scheme of n points.
QSeries dim_series(int k, int order);

// Weight-4 level-2 Eisenstein-type series with divisor sums over d | n with
// n/d odd.
QSeries eps_series(int order);

// Weight-2 level-2 series -1/8 - 3 * sum of odd-divisor sums.
QSeries delta2_series(int order);

// Asserts every coefficient is integral and returns the integer values.
std::vector<Int> as_integers(const QSeries& s);

}  // namespace k3char
