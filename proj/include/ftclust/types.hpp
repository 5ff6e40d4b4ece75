#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftclust {

/// Index of a point in its owning instance. Identity is the index, never the coordinates.
using PointId = std::size_t;

/// Raised when the enumeration budget of an exact solver would be exceeded.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the file loaders; carries the 1-based line number (0 when not line-specific).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/**
 * An ordered list of distinct point indices.
 *
 * Order is preserved (Gonzalez selection order, for instance) but carries no
 * meaning for any cost function.
 */
class CenterSet {
public:
    CenterSet() = default;

    explicit CenterSet(std::vector<PointId> members) : members_(std::move(members)) {
        std::vector<PointId> sorted = members_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("CenterSet members must be distinct");
        }
    }

    CenterSet(std::initializer_list<PointId> members) : CenterSet(std::vector<PointId>(members)) {}

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    PointId operator[](std::size_t i) const { return members_[i]; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    const std::vector<PointId>& members() const { return members_; }

    bool contains(PointId p) const {
        return std::find(members_.begin(), members_.end(), p) != members_.end();
    }

    /// Appends p if absent; returns whether it was added.
    bool insert(PointId p) {
        if (contains(p)) {
            return false;
        }
        members_.push_back(p);
        return true;
    }

    std::vector<PointId> sorted() const {
        std::vector<PointId> out = members_;
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Set equality, ignoring order.
    bool same_members(const CenterSet& other) const { return sorted() == other.sorted(); }

    friend bool operator==(const CenterSet&, const CenterSet&) = default;

private:
    std::vector<PointId> members_;
};

/// The triple (k, ell, m = floor(k / ell)).
struct FtParams {
    std::size_t k = 0;
    std::size_t ell = 0;
    std::size_t m = 0;

    /// Validates 1 <= ell <= k <= n and derives m.
    static FtParams make(std::size_t k, std::size_t ell, std::size_t n) {
        if (ell < 1) {
            throw std::invalid_argument("ell must be at least 1");
        }
        if (ell > k) {
            throw std::invalid_argument("ell (" + std::to_string(ell) + ") exceeds k (" + std::to_string(k) + ")");
        }
        if (k > n) {
            throw std::invalid_argument("k (" + std::to_string(k) + ") exceeds n (" + std::to_string(n) + ")");
        }
        return FtParams{k, ell, k / ell};
    }

    bool divides() const { return k % ell == 0; }
};

}  // namespace ftclust
