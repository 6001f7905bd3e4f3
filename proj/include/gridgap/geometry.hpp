#pragma once

#include "gridgap/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gridgap {

/// A point in Q^d.
struct Point {
    std::vector<Rational> coords;

    Point() = default;
    explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}

    std::size_t dimension() const { return coords.size(); }

    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational& operator[](std::size_t i) { return coords[i]; }

    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
    friend bool operator<(const Point& a, const Point& b) { return a.coords < b.coords; }
};

/// Exact squared Euclidean distance.
inline Rational squared_distance(const Point& p, const Point& q) {
    if (p.dimension() != q.dimension())
        throw std::invalid_argument("squared_distance: dimension mismatch");
    Rational acc;
    for (std::size_t i = 0; i < p.dimension(); ++i) {
        const Rational diff = p[i] - q[i];
        acc += diff * diff;
    }
    return acc;
}

enum class Ordering { Less, Equal, Greater };

inline Ordering compare(const Rational& a, const Rational& b) {
    if (a < b) return Ordering::Less;
    if (a == b) return Ordering::Equal;
    return Ordering::Greater;
}

/// Orders dist(p, q) against a nonnegative threshold, decided exactly on
/// squares so no square root is ever taken.
inline Ordering cmp_sq_dist(const Point& p, const Point& q, const Rational& threshold) {
    if (threshold.sign() < 0)
        throw std::invalid_argument("cmp_sq_dist: negative threshold");
    return compare(squared_distance(p, q), threshold * threshold);
}

}  // namespace gridgap
