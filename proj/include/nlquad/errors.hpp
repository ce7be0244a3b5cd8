#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nlquad {

using integer = std::int64_t;

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class MismatchedLattice : public Error { public: using Error::Error; };
class ParityViolation : public Error { public: using Error::Error; };
class NotNef : public Error { public: using Error::Error; };
class DegenerateModel : public Error { public: using Error::Error; };
class SpanTooSmall : public Error { public: using Error::Error; };
class SpanTooLarge : public Error { public: using Error::Error; };
class NotProjectable : public Error { public: using Error::Error; };
class InvalidInvariants : public Error { public: using Error::Error; };
class NegativeCount : public Error { public: using Error::Error; };
class DivisibilityViolation : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class Inconsistent : public Error { public: using Error::Error; };
class Underdetermined : public Error { public: using Error::Error; };
class UnknownPreset : public Error { public: using Error::Error; };
class DatasetMissing : public Error { public: using Error::Error; };
class RowMismatch : public Error { public: using Error::Error; };
class Overflow : public Error { public: using Error::Error; };

class ParseError : public Error
{
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position)
    {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Overflow is reported, never wrapped.
namespace checked {

inline integer add(integer a, integer b)
{
    integer r;
    if (__builtin_add_overflow(a, b, &r))
        throw Overflow("integer overflow in addition");
    return r;
}

inline integer sub(integer a, integer b)
{
    integer r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Overflow("integer overflow in subtraction");
    return r;
}

inline integer mul(integer a, integer b)
{
    integer r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow("integer overflow in multiplication");
    return r;
}

} // namespace checked
} // namespace nlquad
