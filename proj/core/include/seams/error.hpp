#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seams {

// Error kinds drive the CLI exit-code mapping: usage errors are caught by the
// argument parser, DataError-derived conditions exit 2, anything else 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DataError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

class DecodeError : public DataError {
public:
    using DataError::DataError;
};

class EmptyImage : public DataError {
public:
    EmptyImage() : DataError("image has no adjacent pixel pair") {}
};

class EmptyStream : public DataError {
public:
    EmptyStream() : DataError("distance stream is empty") {}
};

class OutOfRange : public DataError {
public:
    using DataError::DataError;
};

class InvalidTarget : public DataError {
public:
    using DataError::DataError;
};

class SchemaError : public DataError {
public:
    SchemaError(std::size_t row, const std::string& what)
        : DataError("manifest row " + std::to_string(row) + ": " + what), row_(row) {}
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

class DuplicateId : public DataError {
public:
    using DataError::DataError;
};

class DegenerateAbscissae : public DataError {
public:
    DegenerateAbscissae() : DataError("all abscissae are equal, slope undefined") {}
};

class EmptySample : public DataError {
public:
    EmptySample() : DataError("empty sample") {}
};

class ZeroVariance : public DataError {
public:
    ZeroVariance() : DataError("zero variance in a coordinate") {}
};

class ZeroSpread : public DataError {
public:
    ZeroSpread() : DataError("population has zero spread") {}
};

class SingleYearCareer : public DataError {
public:
    SingleYearCareer() : DataError("career spans a single year, cannot normalize") {}
};

class TargetUnreachable : public DataError {
public:
    using DataError::DataError;
};

class StoreCorruption : public DataError {
public:
    using DataError::DataError;
};

}  // namespace seams
