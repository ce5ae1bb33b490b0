#include "svr/coord.hpp"

#include <fmt/format.h>

namespace svr {

std::string Coord::str() const {
    if (eps == 0) return fmt::format("{}", base);
    if (eps == 1) return fmt::format("{}+e", base);
    if (eps == -1) return fmt::format("{}-e", base);
    return fmt::format("{}{:+}e", base, eps);
}

std::ostream& operator<<(std::ostream& os, Coord c) { return os << c.str(); }

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << '[' << iv.lo << ", " << iv.hi << ']';
}

}  // namespace svr
