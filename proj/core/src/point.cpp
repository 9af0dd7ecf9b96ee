#include "shy/point.hpp"

#include "shy/error.hpp"

#include <ostream>

namespace shy {

Point Point::concat(const Point& right) const
{
    std::vector<int> out;
    out.reserve(coords_.size() + right.coords_.size());
    out.insert(out.end(), coords_.begin(), coords_.end());
    out.insert(out.end(), right.coords_.begin(), right.coords_.end());
    return Point(std::move(out));
}

Point Point::slice(std::size_t first, std::size_t count) const
{
    if (first + count > coords_.size())
        throw InvalidInput("point slice [" + std::to_string(first) + ", " +
                           std::to_string(first + count) + ") out of range for " + to_string());
    return Point(std::vector<int>(coords_.begin() + static_cast<std::ptrdiff_t>(first),
                                  coords_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

std::string Point::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(coords_[i]);
    }
    s += ')';
    return s;
}

std::ostream& operator<<(std::ostream& os, const Point& p)
{
    return os << p.to_string();
}

std::string to_string(const PointSet& s)
{
    std::string out = "{";
    bool first = true;
    for (const auto& p : s) {
        if (!first)
            out += ',';
        first = false;
        out += p.to_string();
    }
    out += '}';
    return out;
}

} // namespace shy
