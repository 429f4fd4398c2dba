#ifndef angulation_errors_hpp
#define angulation_errors_hpp

#include <stdexcept>
#include <string>

namespace angulation {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// complex fails structural validation (details carried in the message)
struct InvalidComplex : Error {
    using Error::Error;
};

// queried arc id does not occur in the complex
struct UnknownArc : Error {
    using Error::Error;
};

// mutation vertex not present in the quiver
struct UnknownVertex : Error {
    using Error::Error;
};

// quiver violates the r <-> m-r pairing required by mutation / doubling
struct AsymmetricInput : Error {
    using Error::Error;
};

// signature breaks its own invariants (b < 1, c < b, negative entries)
struct InvalidSignature : Error {
    using Error::Error;
};

// the congruence condition rules out any (m+2)-angulation
struct NoAngulation : Error {
    using Error::Error;
};

// the count formula is exact but lands below zero (degenerate small surface)
struct NegativeCount : Error {
    using Error::Error;
};

// disc constructors: c fails the c = 2 (mod m) requirement or is too small
struct BadCount : Error {
    using Error::Error;
};

// enumeration refused: c above the configured bound
struct BoundExceeded : Error {
    using Error::Error;
};

// malformed interchange JSON; message carries a field path
struct SchemaError : Error {
    using Error::Error;
};

// generic bad call (wrong argument combination, empty walk source, ...)
struct InvalidArgument : Error {
    using Error::Error;
};

}

#endif
