#include "kserver/metric.hpp"

#include <algorithm>
#include <sstream>

#include "kserver/rng.hpp"

namespace kserver {

const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kZeroDiagonal: return "zero-diagonal";
    case Axiom::kSymmetry: return "symmetry";
    case Axiom::kPositivity: return "positivity";
    case Axiom::kTriangle: return "triangle";
  }
  return "unknown";
}

std::string AxiomViolation::describe() const {
  std::ostringstream out;
  out << axiom_name(axiom) << " violated at (" << i << "," << j << ")";
  if (via >= 0) out << " via " << via;
  return out.str();
}

MetricValidation validate_metric(const std::vector<std::vector<Cost>>& dist) {
  const auto n = dist.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) {
      throw InputError("distance matrix is not square: row " + std::to_string(i) + " has " +
                       std::to_string(dist[i].size()) + " entries, expected " +
                       std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[i][j] < 0) {
        throw InputError("negative distance at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
  }

  MetricValidation result;
  auto add = [&](Axiom a, std::size_t i, std::size_t j, int via = -1) {
    result.violations.push_back({a, static_cast<int>(i), static_cast<int>(j), via});
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i][i] != 0) add(Axiom::kZeroDiagonal, i, i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist[i][j] != dist[j][i]) add(Axiom::kSymmetry, i, j);
      if (dist[i][j] == 0 || dist[j][i] == 0) add(Axiom::kPositivity, i, j);
    }
  }
  // One witness per violated ordered pair (smallest intermediate point).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        if (dist[i][j] > dist[i][l] + dist[l][j]) {
          if (i < j || dist[i][j] != dist[j][i]) add(Axiom::kTriangle, i, j, static_cast<int>(l));
          break;
        }
      }
    }
  }
  return result;
}

MetricSpace::MetricSpace(std::vector<std::vector<Cost>> dist, std::vector<std::string> labels)
    : n_(static_cast<int>(dist.size())), labels_(std::move(labels)) {
  if (n_ < 2 || n_ > kMaxPoints) {
    throw InputError("metric must have between 2 and " + std::to_string(kMaxPoints) +
                     " points, got " + std::to_string(n_));
  }
  const auto check = validate_metric(dist);
  if (!check.ok()) throw InputError("invalid metric: " + check.violations.front().describe());
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_) {
    throw InputError("expected " + std::to_string(n_) + " labels, got " +
                     std::to_string(labels_.size()));
  }
  dist_.reserve(static_cast<std::size_t>(n_ * n_));
  for (const auto& row : dist) dist_.insert(dist_.end(), row.begin(), row.end());
}

std::vector<std::vector<Cost>> MetricSpace::matrix() const {
  std::vector<std::vector<Cost>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    out[static_cast<std::size_t>(i)].assign(dist_.begin() + i * n_, dist_.begin() + (i + 1) * n_);
  }
  return out;
}

MetricSpace uniform_metric(int n, Cost weight) {
  std::vector<std::vector<Cost>> d(static_cast<std::size_t>(n),
                                   std::vector<Cost>(static_cast<std::size_t>(n), weight));
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
  return MetricSpace(std::move(d));
}

MetricSpace random_metric(int n, Rng& rng, std::pair<Cost, Cost> weight_range) {
  const auto [lo, hi] = weight_range;
  if (n < 2 || n > kMaxPoints) throw InputError("random_metric: n out of range");
  if (lo < 1 || hi < lo) throw InputError("random_metric: weight range must be positive and nonempty");
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<Cost>> d(un, std::vector<Cost>(un, 0));
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = i + 1; j < un; ++j) d[i][j] = d[j][i] = rng.uniform_int(lo, hi);
  }
  for (std::size_t via = 0; via < un; ++via) {
    for (std::size_t i = 0; i < un; ++i) {
      for (std::size_t j = 0; j < un; ++j) d[i][j] = std::min(d[i][j], d[i][via] + d[via][j]);
    }
  }
  return MetricSpace(std::move(d));
}

MetricSpace random_metric(int n, std::uint64_t seed, std::pair<Cost, Cost> weight_range) {
  Rng rng(seed);
  return random_metric(n, rng, weight_range);
}

Configuration::Configuration(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] < 0 || points_[i] >= kMaxPoints) {
      throw InputError("configuration point " + std::to_string(points_[i]) + " out of range");
    }
    if (i > 0 && points_[i] == points_[i - 1]) {
      throw InputError("configuration repeats point " + std::to_string(points_[i]));
    }
    mask_ |= 1u << points_[i];
  }
}

Configuration Configuration::from_mask(std::uint32_t mask) {
  std::vector<Point> pts;
  for (Point p = 0; mask != 0; ++p, mask >>= 1) {
    if (mask & 1u) pts.push_back(p);
  }
  return Configuration(std::move(pts));
}

Configuration Configuration::replace(Point remove, Point add) const {
  if (!contains(remove)) throw InputError("replace: point " + std::to_string(remove) + " not present");
  if (remove == add) return *this;
  if (contains(add)) throw InputError("replace: point " + std::to_string(add) + " already present");
  return from_mask((mask_ & ~(1u << remove)) | (1u << add));
}

std::string Configuration::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < points_.size(); ++i) out << (i ? "," : "") << points_[i];
  out << '}';
  return out.str();
}

void require_in_metric(const Configuration& c, const MetricSpace& metric) {
  for (Point p : c) {
    if (!metric.contains(p)) {
      throw InputError("point " + std::to_string(p) + " outside metric of size " +
                       std::to_string(metric.size()));
    }
  }
}

Cost min_pairwise_distance(const Configuration& a0, const MetricSpace& metric) {
  if (a0.size() < 2) throw InputError("min pairwise distance needs at least two points (k >= 2)");
  require_in_metric(a0, metric);
  Cost best = -1;
  for (int i = 0; i < a0.size(); ++i) {
    for (int j = i + 1; j < a0.size(); ++j) {
      const Cost d = metric(a0[static_cast<std::size_t>(i)], a0[static_cast<std::size_t>(j)]);
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

void Instance::validate() const {
  if (k < 1) throw InputError("k must be at least 1");
  if (k > metric.size()) {
    throw InputError("k exceeds n (" + std::to_string(k) + " > " + std::to_string(metric.size()) + ")");
  }
  if (initial.size() != k) {
    throw InputError("initial configuration has " + std::to_string(initial.size()) +
                     " points, expected k = " + std::to_string(k));
  }
  require_in_metric(initial, metric);
  for (std::size_t t = 0; t < requests.size(); ++t) {
    if (!metric.contains(requests[t])) {
      throw InputError("request " + std::to_string(t) + " names point " +
                       std::to_string(requests[t]) + " outside [0, " +
                       std::to_string(metric.size()) + ")");
    }
  }
}

}  // namespace kserver
