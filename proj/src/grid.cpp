#include "spr/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spr {

TimeGrid::TimeGrid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw std::invalid_argument("TimeGrid: need at least two points");
  }
  if (points_.front() != 0.0) {
    throw std::invalid_argument("TimeGrid: first point must be exactly 0");
  }
  for (std::size_t k = 0; k + 1 < points_.size(); ++k) {
    if (!(points_[k] < points_[k + 1])) {
      throw std::invalid_argument("TimeGrid: points must be strictly increasing (index " +
                                  std::to_string(k + 1) + ")");
    }
  }
  if (!std::isfinite(points_.back()) || points_.back() <= 0.0) {
    throw std::invalid_argument("TimeGrid: horizon must be finite and positive");
  }
}

std::shared_ptr<const TimeGrid> TimeGrid::uniform(double horizon, std::size_t steps) {
  if (steps < 1 || !(horizon > 0.0)) {
    throw std::invalid_argument("TimeGrid::uniform: need steps >= 1 and horizon > 0");
  }
  std::vector<double> pts(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    pts[k] = horizon * static_cast<double>(k) / static_cast<double>(steps);
  }
  pts[0] = 0.0;
  pts[steps] = horizon;
  return std::make_shared<const TimeGrid>(std::move(pts));
}

std::shared_ptr<const TimeGrid> TimeGrid::make(std::vector<double> points) {
  return std::make_shared<const TimeGrid>(std::move(points));
}

GridPath::GridPath(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw std::invalid_argument("GridPath: null grid");
  if (values_.size() != grid_->size()) {
    throw std::invalid_argument("GridPath: values length does not match grid");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("GridPath: non-finite value");
  }
}

GridPath GridPath::constant(GridPtr grid, double value) {
  if (!grid) throw std::invalid_argument("GridPath::constant: null grid");
  std::vector<double> vals(grid->size(), value);
  return GridPath(std::move(grid), std::move(vals));
}

double GridPath::left_limit(std::size_t k) const {
  if (k >= values_.size()) {
    throw std::out_of_range("GridPath::left_limit: index out of range");
  }
  return k == 0 ? values_[0] : values_[k - 1];
}

void require_same_grid(const GridPath& a, const GridPath& b) {
  if (a.grid().get() != b.grid().get()) {
    throw std::invalid_argument("paths do not share a grid");
  }
}

double left_limit(const GridPath& p, std::size_t k) { return p.left_limit(k); }

double stieltjes_sum(const GridPath& f, const GridPath& k) {
  require_same_grid(f, k);
  double sum = 0.0;
  for (std::size_t j = 1; j < k.size(); ++j) {
    const double dk = k[j] - k[j - 1];
    if (dk < 0.0) {
      throw std::invalid_argument("stieltjes_sum: integrator decreasing at index " +
                                  std::to_string(j));
    }
    sum += f[j] * dk;
  }
  return sum;
}

namespace {

void check_increasing_from_zero(const GridPath& k, const char* which) {
  if (k[0] != 0.0) {
    throw std::invalid_argument(std::string("BoundedVariationPath: ") + which +
                                " must start at 0");
  }
  for (std::size_t j = 1; j < k.size(); ++j) {
    if (k[j] < k[j - 1]) {
      throw std::invalid_argument(std::string("BoundedVariationPath: ") + which +
                                  " decreasing at index " + std::to_string(j));
    }
  }
}

}  // namespace

BoundedVariationPath::BoundedVariationPath(GridPath plus, GridPath minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  require_same_grid(plus_, minus_);
  check_increasing_from_zero(plus_, "plus part");
  check_increasing_from_zero(minus_, "minus part");
  for (std::size_t j = 1; j < plus_.size(); ++j) {
    const double dp = plus_[j] - plus_[j - 1];
    const double dm = minus_[j] - minus_[j - 1];
    if (dp > 0.0 && dm > 0.0) {
      throw std::invalid_argument(
          "BoundedVariationPath: both parts charge index " + std::to_string(j));
    }
  }
}

GridPath BoundedVariationPath::combined() const {
  std::vector<double> vals(plus_.size());
  for (std::size_t j = 0; j < vals.size(); ++j) vals[j] = plus_[j] - minus_[j];
  return GridPath(plus_.grid(), std::move(vals));
}

BoundedVariationPath jordan_decompose(const GridPath& k) {
  std::vector<double> plus(k.size(), 0.0), minus(k.size(), 0.0);
  for (std::size_t j = 1; j < k.size(); ++j) {
    const double dk = k[j] - k[j - 1];
    plus[j] = plus[j - 1] + (dk > 0.0 ? dk : 0.0);
    minus[j] = minus[j - 1] + (dk < 0.0 ? -dk : 0.0);
  }
  return BoundedVariationPath(GridPath(k.grid(), std::move(plus)),
                              GridPath(k.grid(), std::move(minus)));
}

double total_variation(const BoundedVariationPath& k) {
  return k.plus().back() + k.minus().back();
}

double sup_distance(const GridPath& p, const GridPath& q) {
  require_same_grid(p, q);
  double m = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double d = std::fabs(p[j] - q[j]);
    if (d > m) m = d;
  }
  return m;
}

double sup_abs(const GridPath& p) {
  double m = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double d = std::fabs(p[j]);
    if (d > m) m = d;
  }
  return m;
}

}  // namespace spr
