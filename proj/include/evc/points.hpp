#pragma once

#include <set>
#include <vector>

#include "evc/field.hpp"

namespace evc {

// Ordered set of distinct points in GF(q)^s; the order fixes codeword
// coordinates for every code built on the set.
class PointSet {
public:
    PointSet(const Field& field, std::vector<std::vector<Fq>> points)
        : field_(&field), points_(std::move(points)) {
        if (points_.empty()) throw DomainError("points/empty", "point set is empty");
        dim_ = static_cast<int>(points_[0].size());
        if (dim_ < 1) throw DomainError("points/dimension", "points need at least one coordinate");
        std::set<std::vector<Fq>> seen;
        for (const auto& p : points_) {
            if (static_cast<int>(p.size()) != dim_)
                throw DomainError("points/dimension", "points have inconsistent dimensions");
            for (Fq c : p)
                if (c.code >= field.q())
                    throw DomainError("points/element", "coordinate outside the field");
            if (!seen.insert(p).second)
                throw DomainError("points/duplicate", "points must be distinct");
        }
    }

    const Field& field() const { return *field_; }
    int dim() const { return dim_; }
    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<Fq>& operator[](int i) const { return points_[i]; }
    const std::vector<std::vector<Fq>>& points() const { return points_; }

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return *a.field_ == *b.field_ && a.points_ == b.points_;
    }

private:
    const Field* field_;
    int dim_;
    std::vector<std::vector<Fq>> points_;
};

}  // namespace evc
