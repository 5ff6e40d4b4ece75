#pragma once

#include "types.hpp"

#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ftclust {

/// Anything that can report its point count and the distance between two indexed points.
template<class M>
concept MetricSpace = requires(const M& metric, PointId a, PointId b) {
    { metric.size() } -> std::convertible_to<std::size_t>;
    { metric.distance(a, b) } -> std::convertible_to<double>;
};

/// Points stored row-major in a flat buffer, measured with an l_p norm.
struct CoordinateBackend {
    std::size_t dim = 0;
    double p = 2.0;
    std::vector<double> coords;
};

/// Explicit n x n distance matrix, row-major.
struct MatrixBackend {
    std::vector<double> values;
};

/**
 * The point set together with its distance function.
 *
 * Construction only checks shapes. Use validate() for the metric invariants
 * (finiteness, zero diagonal, symmetry, optionally the triangle inequality).
 * Immutable after construction.
 */
class Instance {
public:
    /// n points of dimension dim, flattened row-major. p may be +infinity for the max norm.
    static Instance from_coordinates(std::size_t dim, std::vector<double> coords, double p = 2.0) {
        if (dim == 0) {
            throw std::invalid_argument("coordinate dimension must be positive");
        }
        if (coords.empty() || coords.size() % dim != 0) {
            throw std::invalid_argument("coordinate buffer size must be a positive multiple of dim");
        }
        if (!(p >= 1.0)) {
            throw std::invalid_argument("p-norm exponent must be >= 1");
        }
        Instance out;
        out.n_ = coords.size() / dim;
        out.backend_ = CoordinateBackend{dim, p, std::move(coords)};
        return out;
    }

    static Instance from_points(const std::vector<std::vector<double>>& points, double p = 2.0) {
        if (points.empty()) {
            throw std::invalid_argument("instance needs at least one point");
        }
        const std::size_t dim = points.front().size();
        std::vector<double> flat;
        flat.reserve(points.size() * dim);
        for (const auto& row : points) {
            if (row.size() != dim) {
                throw std::invalid_argument("points must share one dimension");
            }
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return from_coordinates(dim, std::move(flat), p);
    }

    /// Convenience for 1D fixtures.
    static Instance on_line(const std::vector<double>& xs) { return from_coordinates(1, xs); }

    static Instance from_matrix(std::size_t n, std::vector<double> values) {
        if (n == 0) {
            throw std::invalid_argument("instance needs at least one point");
        }
        if (values.size() != n * n) {
            throw std::invalid_argument("distance matrix must be n x n");
        }
        Instance out;
        out.n_ = n;
        out.backend_ = MatrixBackend{std::move(values)};
        return out;
    }

    std::size_t size() const { return n_; }

    bool is_matrix() const { return std::holds_alternative<MatrixBackend>(backend_); }
    const CoordinateBackend* coordinates() const { return std::get_if<CoordinateBackend>(&backend_); }
    const MatrixBackend* matrix() const { return std::get_if<MatrixBackend>(&backend_); }

    double distance(PointId a, PointId b) const {
        if (a >= n_ || b >= n_) {
            throw std::invalid_argument("point index out of range");
        }
        return raw_distance(a, b);
    }

    /// distance() without the range check; callers guarantee a, b < size().
    double raw_distance(PointId a, PointId b) const {
        if (const auto* mat = std::get_if<MatrixBackend>(&backend_)) {
            return mat->values[a * n_ + b];
        }
        const auto& cb = std::get<CoordinateBackend>(backend_);
        if (a == b) {
            return 0.0;
        }
        const double* x = cb.coords.data() + a * cb.dim;
        const double* y = cb.coords.data() + b * cb.dim;
        if (cb.p == 2.0) {
            double acc = 0.0;
            for (std::size_t d = 0; d < cb.dim; ++d) {
                const double diff = x[d] - y[d];
                acc += diff * diff;
            }
            return std::sqrt(acc);
        }
        if (cb.p == 1.0) {
            double acc = 0.0;
            for (std::size_t d = 0; d < cb.dim; ++d) {
                acc += std::abs(x[d] - y[d]);
            }
            return acc;
        }
        if (std::isinf(cb.p)) {
            double acc = 0.0;
            for (std::size_t d = 0; d < cb.dim; ++d) {
                acc = std::max(acc, std::abs(x[d] - y[d]));
            }
            return acc;
        }
        double acc = 0.0;
        for (std::size_t d = 0; d < cb.dim; ++d) {
            acc += std::pow(std::abs(x[d] - y[d]), cb.p);
        }
        return std::pow(acc, 1.0 / cb.p);
    }

private:
    Instance() = default;

    std::size_t n_ = 0;
    std::variant<CoordinateBackend, MatrixBackend> backend_;
};

static_assert(MetricSpace<Instance>);

enum class ViolationKind { NonFinite, Negative, NonZeroDiagonal, Asymmetric, Triangle };

inline const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::NonFinite: return "non-finite";
    case ViolationKind::Negative: return "negative";
    case ViolationKind::NonZeroDiagonal: return "nonzero-diagonal";
    case ViolationKind::Asymmetric: return "asymmetry";
    case ViolationKind::Triangle: return "triangle";
    }
    return "unknown";
}

/// One violated invariant. Unused index slots hold the point itself or are zero.
struct Diagnostic {
    ViolationKind kind;
    std::vector<PointId> indices;

    std::string describe() const {
        std::ostringstream out;
        out << to_string(kind) << " at (";
        for (std::size_t i = 0; i < indices.size(); ++i) {
            out << (i ? "," : "") << indices[i];
        }
        out << ")";
        return out.str();
    }
};

/**
 * Reports every violated invariant of the instance; an empty list means ok.
 *
 * The triangle check is O(n^3) and therefore opt-in. A triple (i, j, k) is
 * reported when d(i,k) > d(i,j) + d(j,k) + tol.
 */
inline std::vector<Diagnostic> validate(const Instance& inst, bool check_triangle = false, double tol = 0.0) {
    std::vector<Diagnostic> out;
    const std::size_t n = inst.size();

    if (const auto* cb = inst.coordinates()) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t d = 0; d < cb->dim; ++d) {
                if (!std::isfinite(cb->coords[i * cb->dim + d])) {
                    out.push_back({ViolationKind::NonFinite, {i}});
                    break;
                }
            }
        }
    } else {
        const auto& v = inst.matrix()->values;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double x = v[i * n + j];
                if (!std::isfinite(x)) {
                    out.push_back({ViolationKind::NonFinite, {i, j}});
                } else if (x < 0) {
                    out.push_back({ViolationKind::Negative, {i, j}});
                }
            }
            if (v[i * n + i] != 0.0) {
                out.push_back({ViolationKind::NonZeroDiagonal, {i}});
            }
            for (std::size_t j = i + 1; j < n; ++j) {
                if (v[i * n + j] != v[j * n + i]) {
                    out.push_back({ViolationKind::Asymmetric, {i, j}});
                }
            }
        }
    }

    if (check_triangle && out.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    if (i == j || j == k || i == k) {
                        continue;
                    }
                    if (i < k && inst.raw_distance(i, k) > inst.raw_distance(i, j) + inst.raw_distance(j, k) + tol) {
                        out.push_back({ViolationKind::Triangle, {i, j, k}});
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace ftclust
