#include "memcost/units.hpp"

#include <cmath>
#include <sstream>

#include "memcost/errors.hpp"

namespace memcost {

double gbytes_to_gbps(double gbytes_per_s) {
    if (!std::isfinite(gbytes_per_s) || gbytes_per_s < 0.0) {
        std::ostringstream os;
        os << "must be a finite nonnegative bandwidth, got " << gbytes_per_s;
        throw ValidationError({{"bandwidth_gbytes_per_s", os.str()}});
    }
    return gbytes_per_s * 8.0;
}

}  // namespace memcost
