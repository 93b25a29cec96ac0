#ifndef TWOBRIDGE_ERRORS_HPP
#define TWOBRIDGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twobridge {

struct RangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GcdError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// q odd where an operation requires a 2-component link (q even), or vice versa.
struct KindError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroPolynomial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace twobridge

#endif
