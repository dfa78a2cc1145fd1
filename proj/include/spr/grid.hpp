#ifndef SPR_GRID_HPP
#define SPR_GRID_HPP

#include <cstddef>
#include <memory>
#include <vector>

namespace spr {

// Finite time grid 0 = t_0 < t_1 < ... < t_N = T. Paths interacting with
// each other must hold the *same* TimeGrid object; grid compatibility is
// checked by identity, never by comparing point values.
class TimeGrid {
 public:
  explicit TimeGrid(std::vector<double> points);

  static std::shared_ptr<const TimeGrid> uniform(double horizon, std::size_t steps);
  static std::shared_ptr<const TimeGrid> make(std::vector<double> points);

  double horizon() const { return points_.back(); }
  std::size_t size() const { return points_.size(); }        // N + 1 points
  std::size_t steps() const { return points_.size() - 1; }   // N
  double operator[](std::size_t k) const { return points_[k]; }
  double dt(std::size_t k) const { return points_[k + 1] - points_[k]; }  // t_{k+1} - t_k
  const std::vector<double>& points() const { return points_; }

 private:
  std::vector<double> points_;
};

using GridPtr = std::shared_ptr<const TimeGrid>;

// Right-continuous step path on a grid: value v_k on [t_k, t_{k+1}).
// The left limit at t_k is v_{k-1}; at t_0 it is v_0.
class GridPath {
 public:
  GridPath(GridPtr grid, std::vector<double> values);

  static GridPath constant(GridPtr grid, double value);
  static GridPath zero(GridPtr grid) { return constant(std::move(grid), 0.0); }

  const GridPtr& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  const std::vector<double>& values() const { return values_; }
  double front() const { return values_.front(); }
  double back() const { return values_.back(); }

  double left_limit(std::size_t k) const;
  double jump(std::size_t k) const { return values_[k] - left_limit(k); }

 private:
  GridPtr grid_;
  std::vector<double> values_;
};

// Minimal Jordan decomposition K = plus - minus: both parts nondecreasing,
// zero at t_0, and at every step at most one of the two increments is nonzero.
class BoundedVariationPath {
 public:
  BoundedVariationPath(GridPath plus, GridPath minus);

  const GridPath& plus() const { return plus_; }
  const GridPath& minus() const { return minus_; }
  GridPath combined() const;

 private:
  GridPath plus_;
  GridPath minus_;
};

// Minimal decomposition of an arbitrary step path by forward scan of its
// increments.
BoundedVariationPath jordan_decompose(const GridPath& k);

void require_same_grid(const GridPath& a, const GridPath& b);

double left_limit(const GridPath& p, std::size_t k);

// Discrete Stieltjes integral sum_{k>=1} f_k * (K_k - K_{k-1}) for a
// nondecreasing K; the integrand is evaluated at the jump time.
double stieltjes_sum(const GridPath& f, const GridPath& k);

double total_variation(const BoundedVariationPath& k);

// Sup-norm distance max_k |p_k - q_k|.
double sup_distance(const GridPath& p, const GridPath& q);

double sup_abs(const GridPath& p);

}  // namespace spr

#endif
