#pragma once

#include <cstdint>
#include <vector>

#include "vnum/ideal.hpp"

namespace vnum::kernels {

/// Flags the monomials not strictly divisible by another list entry.
/// Input must be canonically sorted and deduplicated; under that premise an
/// element is dominated by a kept element iff it is dominated by any
/// element, so the serial and parallel variants agree bit for bit.
/// The serial variant is the reference implementation; the parallel one is
/// the OpenMP kernel used for large inputs.
std::vector<std::uint8_t> nondominated_serial(const std::vector<Monomial>& sorted);
std::vector<std::uint8_t> nondominated_parallel(const std::vector<Monomial>& sorted);

/// Dispatches on input size and the configured job cap.
std::vector<std::uint8_t> nondominated(const std::vector<Monomial>& sorted);

} // namespace vnum::kernels
