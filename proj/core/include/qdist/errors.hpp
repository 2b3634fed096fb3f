#pragma once

#include <stdexcept>

namespace qdist {

/* Thrown when a request exceeds a configured guard: enumeration limits,
 * series truncation caps, numeric-product factor caps. Maps to CLI exit
 * code 3. */
class capacity_error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

} // namespace qdist
