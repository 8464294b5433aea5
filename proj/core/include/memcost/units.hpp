#pragma once

namespace memcost {

// Gigabytes/s to gigabits/s: exactly 8 bits per byte, no line-coding overhead.
// Throws ValidationError on negative or non-finite input.
double gbytes_to_gbps(double gbytes_per_s);

}  // namespace memcost
