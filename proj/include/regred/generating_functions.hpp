#pragma once

#include <cstddef>

#include "regred/exact.hpp"
#include "regred/series.hpp"

namespace regred {

inline constexpr std::size_t kDefaultSeriesOrder = 64;
inline constexpr std::size_t kMaxSeriesOrder = 4096;
inline constexpr std::size_t kDefaultMarkerDegree = 2;

/// z / (1 - 2z): weight of one chain created when a node is expanded.
Series chain_weight(std::size_t order);
/// z^2 / (1 - 2z)^2: the substitution that undoes one reduction (trees and paths).
Series chain_substitution(std::size_t order);

/// f(z^2/(1-2z)^2) from the closed form of the powers of the substitution;
/// equal to f.compose(chain_substitution(order)) but quadratic in the order.
Series compose_chain_substitution(const Series& f);
BivariateSeries compose_chain_substitution(const BivariateSeries& f);

/// Catalan generating function, from the algebraic equation B = 1 + z B^2.
Series series_B(std::size_t order, std::size_t bound = kMaxSeriesOrder);

/// Trees with register at most r: B_0 = 1, B_r = 1 + z/(1-2z) B_{r-1}(z^2/(1-2z)^2).
Series series_Br(unsigned r, std::size_t order, std::size_t bound = kMaxSeriesOrder);

/// All nonempty paths, 4z / (1 - 4z).
Series series_L(std::size_t order, std::size_t bound = kMaxSeriesOrder);

/// Paths with compactification degree exactly r: L_0 = 4z, L_r = 4 L_{r-1}(z^2/(1-2z)^2).
Series series_Lr(unsigned r, std::size_t order, std::size_t bound = kMaxSeriesOrder);

/// Paths with cdeg >= r, v marking the length of the r-th fringe:
/// H_0 = 4zv / (1 - 4zv), H_r(z, v) = 4 H_{r-1}((z/(1-2z))^2, v).
BivariateSeries series_Hr(unsigned r, std::size_t order, std::size_t marker_degree = kDefaultMarkerDegree,
                          std::size_t bound = kMaxSeriesOrder);

/// Trees with register >= r, v marking the number of r-branches (the leaves of
/// the r-fold reduction): F_0 = v B(zv), F_r = z/(1-2z) F_{r-1}(z^2/(1-2z)^2, v).
BivariateSeries series_branch_marked(unsigned r, std::size_t order,
                                     std::size_t marker_degree = kDefaultMarkerDegree,
                                     std::size_t bound = kMaxSeriesOrder);

struct Moments {
  Rational mean;
  Rational variance;
};

/// Mean and variance of a statistic from its marked coefficient at one size.
/// `marked[j]` is the sum of binomial(Y, j); `population` is the number of objects.
Moments moments_from_marker(const MarkerPoly& marked, const Integer& population);

/// Exact mean and variance of the number of r-branches in a uniform tree of size n.
Moments r_branch_moments(unsigned long n, unsigned r);
Rational var_r_branches_exact(unsigned long n, unsigned r);

/// Exact mean and variance of the r-th fringe size of a uniform path of length n.
Moments fringe_moments(unsigned long n, unsigned r);
Rational var_fringe_exact(unsigned long n, unsigned r);

}  // namespace regred
