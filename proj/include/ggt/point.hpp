#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace ggt {

// A point (ray, position) of the set X_n = {1..n} x {1,2,3,...}.
struct RayPoint {
    int ray = 1;       // 1-based ray index
    int position = 1;  // >= 1

    auto operator<=>(const RayPoint&) const = default;
};

inline std::string to_string(const RayPoint& p)
{
    return "(" + std::to_string(p.ray) + "," + std::to_string(p.position) + ")";
}

}  // namespace ggt

template <>
struct std::hash<ggt::RayPoint> {
    std::size_t operator()(const ggt::RayPoint& p) const noexcept
    {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.ray)) << 32) ^
            static_cast<std::uint32_t>(p.position));
    }
};
