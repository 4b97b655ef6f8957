#pragma once

#include <stdexcept>
#include <string>

namespace aic {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// 64-bit arithmetic left the representable range. Raised instead of
/// wrapping around; all kernels are exact or loud.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(what) {}
};

/// Input pair is (0,0) or has a common factor.
class NotPrimitiveError : public Error {
public:
    explicit NotPrimitiveError(const std::string& what) : Error(what) {}
};

/// Curve has no tree word (it is (1,0)) or lies outside the positive quadrant.
class NotInPositiveQuadrantError : public Error {
public:
    explicit NotInPositiveQuadrantError(const std::string& what) : Error(what) {}
};

/// The (1,0) vertex has no children.
class SpecialVertexError : public Error {
public:
    explicit SpecialVertexError(const std::string& what) : Error(what) {}
};

class PaletteSizeError : public Error {
public:
    explicit PaletteSizeError(const std::string& what) : Error(what) {}
};

class DuplicateColorError : public Error {
public:
    explicit DuplicateColorError(const std::string& what) : Error(what) {}
};

/// A two-class split whose classes are not both infinite.
class TrivialSplitError : public Error {
public:
    explicit TrivialSplitError(const std::string& what) : Error(what) {}
};

class IndexOutOfRangeError : public Error {
public:
    explicit IndexOutOfRangeError(const std::string& what) : Error(what) {}
};

/// A twist that is required to move its multicurve does not (m_k = 0).
class NotInterestingError : public Error {
public:
    explicit NotInterestingError(const std::string& what) : Error(what) {}
};

/// A lattice coloring whose shift defect is infinite on some axis.
class NotAlmostInvariantError : public Error {
public:
    explicit NotAlmostInvariantError(const std::string& what) : Error(what) {}
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Genus/boundary combination outside the supported family.
class InvalidSurfaceError : public Error {
public:
    explicit InvalidSurfaceError(const std::string& what) : Error(what) {}
};

} // namespace aic
