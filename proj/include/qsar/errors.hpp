#pragma once

#include <stdexcept>
#include <string>

namespace qsar {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Register or problem size outside what the simulator supports.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Qubit, bin or cell index outside its valid range.
class IndexError : public Error {
public:
    using Error::Error;
};

// Malformed argument value (non-finite angle, control == target, duplicates).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Dimension mismatch between operands, or a non-power-of-two size where one is required.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Input that cannot be normalized (all-zero matrix).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

// Point target whose echo leaves the sampled range window.
class BoundsError : public Error {
public:
    using Error::Error;
};

// Doppler frequency at or beyond 2V/lambda, where the Doppler factor is imaginary.
class EvanescentDopplerError : public Error {
public:
    using Error::Error;
};

// Chirp replica does not fit into the range window.
class FilterLengthError : public Error {
public:
    using Error::Error;
};

// Pipeline stage called on a matrix in the wrong domain.
class PipelineOrderError : public Error {
public:
    using Error::Error;
};

// A filter with non-unit-modulus entries requested as a diagonal unitary.
class NonUnitaryFilterError : public Error {
public:
    using Error::Error;
};

// Invalid SAR parameter set.
class ParamsError : public Error {
public:
    using Error::Error;
};

// Bad matrix/params file contents. Carries the byte offset where parsing stopped.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace qsar
