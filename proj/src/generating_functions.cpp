#include "regred/generating_functions.hpp"

#include <string>

namespace regred {

namespace {

void check_bound(std::size_t order, std::size_t bound) {
  if (order > bound) {
    throw std::out_of_range("series order " + std::to_string(order) + " exceeds bound " + std::to_string(bound));
  }
}

Series geometric(std::size_t order, long ratio) {
  // 1 / (1 - ratio z)
  Series s = series_zero(order);
  Integer term = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    s[n] = term;
    term *= ratio;
  }
  return s;
}

// f(z^2 / (1 - 2z)^2) in O(order^2): [z^m] (z^2/(1-2z)^2)^j = binomial(m-1, 2j-1) 2^(m-2j).
template <class Coeff>
TruncatedSeries<Coeff> substitute(const TruncatedSeries<Coeff>& f) {
  TruncatedSeries<Coeff> out(f.order(), f.zero());
  out[0] = f[0];
  for (std::size_t m = 2; m <= f.order(); ++m) {
    const BinomialRow row(m - 1);
    for (std::size_t j = 1; 2 * j <= m; ++j) {
      if (f[j] == f.zero()) continue;
      const Integer weight = row(static_cast<long>(2 * j - 1)) << static_cast<mp_bitcnt_t>(m - 2 * j);
      detail::add_scaled(out[m], f[j], Rational(weight));
    }
  }
  return out;
}

// z / (1 - 2z) * f: h_n = f_{n-1} + 2 h_{n-1}.
template <class Coeff>
TruncatedSeries<Coeff> times_chain_weight(const TruncatedSeries<Coeff>& f) {
  TruncatedSeries<Coeff> out(f.order(), f.zero());
  for (std::size_t n = 1; n <= f.order(); ++n) {
    out[n] = out[n - 1];
    out[n] *= Rational(2);
    out[n] += f[n - 1];
  }
  return out;
}

}  // namespace

Series compose_chain_substitution(const Series& f) { return substitute(f); }
BivariateSeries compose_chain_substitution(const BivariateSeries& f) { return substitute(f); }

Series chain_weight(std::size_t order) { return series_product(series_z(order), geometric(order, 2)); }

Series chain_substitution(std::size_t order) {
  const Series w = chain_weight(order);
  return series_product(w, w);
}

Series series_B(std::size_t order, std::size_t bound) {
  check_bound(order, bound);
  // B = 1 + z B^2 read coefficientwise: b_{n+1} = sum_k b_k b_{n-k}.
  Series b = series_zero(order);
  b[0] = 1;
  for (std::size_t n = 0; n < order; ++n) {
    for (std::size_t k = 0; k <= n; ++k) b[n + 1] += b[k] * b[n - k];
  }
  return b;
}

Series series_Br(unsigned r, std::size_t order, std::size_t bound) {
  check_bound(order, bound);
  Series b = series_one(order);
  for (unsigned level = 1; level <= r; ++level) {
    Series next = times_chain_weight(substitute(b));
    next[0] += 1;
    b = std::move(next);
  }
  return b;
}

Series series_L(std::size_t order, std::size_t bound) {
  check_bound(order, bound);
  Series s = series_product(series_z(order), geometric(order, 4));
  return s * Rational(4);
}

Series series_Lr(unsigned r, std::size_t order, std::size_t bound) {
  check_bound(order, bound);
  Series l = series_z(order) * Rational(4);
  for (unsigned level = 1; level <= r; ++level) l = substitute(l) * Rational(4);
  return l;
}

BivariateSeries series_Hr(unsigned r, std::size_t order, std::size_t marker_degree, std::size_t bound) {
  check_bound(order, bound);
  BivariateSeries h(order, MarkerPoly(marker_degree));
  // [z^n] 4zv / (1 - 4zv) = 4^n v^n, n >= 1.
  Integer four_power = 4;
  for (std::size_t n = 1; n <= order; ++n) {
    h[n] = MarkerPoly::one_plus_w_power(marker_degree, n);
    h[n] *= Rational(four_power);
    four_power *= 4;
  }
  for (unsigned level = 1; level <= r; ++level) h = substitute(h) * Rational(4);
  return h;
}

BivariateSeries series_branch_marked(unsigned r, std::size_t order, std::size_t marker_degree,
                                     std::size_t bound) {
  check_bound(order, bound);
  BivariateSeries f(order, MarkerPoly(marker_degree));
  // [z^n] v B(zv) = C_n v^(n+1).
  for (std::size_t n = 0; n <= order; ++n) {
    f[n] = MarkerPoly::one_plus_w_power(marker_degree, n + 1);
    f[n] *= Rational(catalan(static_cast<unsigned>(n)));
  }
  for (unsigned level = 1; level <= r; ++level) f = times_chain_weight(substitute(f));
  return f;
}

Moments moments_from_marker(const MarkerPoly& marked, const Integer& population) {
  if (marked.degree() < 2) throw std::invalid_argument("moments_from_marker: marker degree must be at least 2");
  const Rational total(population);
  Moments m;
  m.mean = marked[1] / total;
  // E[Y(Y-1)] = 2 * sum binomial(Y, 2) / population.
  const Rational second_factorial = 2 * marked[2] / total;
  m.variance = second_factorial + m.mean - m.mean * m.mean;
  return m;
}

Moments r_branch_moments(unsigned long n, unsigned r) {
  const auto f = series_branch_marked(r, n);
  return moments_from_marker(f[n], catalan(static_cast<unsigned>(n)));
}

Rational var_r_branches_exact(unsigned long n, unsigned r) { return r_branch_moments(n, r).variance; }

Moments fringe_moments(unsigned long n, unsigned r) {
  const auto h = series_Hr(r, n);
  return moments_from_marker(h[n], power(4, n));
}

Rational var_fringe_exact(unsigned long n, unsigned r) { return fringe_moments(n, r).variance; }

}  // namespace regred
