#pragma once

#include <iosfwd>

namespace qgw {

/* Built-in verification: the worked-example golden values, the conifold
 * closed form, Picard-Fuchs and vertex/loop checks across a fixed geometry
 * matrix, structural invariants, and randomized series-kernel round trips.
 * Prints one line per check; returns true only if everything passes. */
bool run_verification(std::ostream& out);

} // namespace qgw
