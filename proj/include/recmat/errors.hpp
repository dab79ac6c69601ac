#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace recmat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatchError : Error {
    FieldMismatchError() : Error("field mismatch: operands live in different fields") {}
    explicit FieldMismatchError(const std::string& msg) : Error(msg) {}
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct NotPrimeError : Error {
    explicit NotPrimeError(std::int64_t p)
        : Error("modulus " + std::to_string(p) + " is not prime") {}
};

struct OutOfRangeError : Error {
    using Error::Error;
};

struct IndexOutOfRangeError : Error {
    using Error::Error;
};

struct OddSizeError : Error {
    OddSizeError() : Error("matrix size is odd; cannot take interleaved submatrix") {}
};

struct NonDyadicSizeError : Error {
    NonDyadicSizeError() : Error("tensor factor must be square of size 2^K") {}
};

struct NotDiagonalError : Error {
    NotDiagonalError() : Error("presentation does not materialize to diagonal matrices") {}
};

struct CapExceededError : Error {
    explicit CapExceededError(const std::string& which)
        : Error("cap exceeded: " + which) {}
};

struct InsufficientDataError : Error {
    explicit InsufficientDataError(int level)
        : Error("truncation exhausted: level " + std::to_string(level) + " requested"),
          level(level) {}
    int level;
};

struct SingularAtLevelError : Error {
    explicit SingularAtLevelError(int level)
        : Error("matrix A[" + std::to_string(level) + "] is singular"), level(level) {}
    int level;
};

struct NotConvergentError : Error {
    NotConvergentError() : Error("element is not convergent (rho(0,0)A != A)") {}
};

struct SingularMinorAtError : Error {
    explicit SingularMinorAtError(int k)
        : Error("leading principal minor of order " + std::to_string(k + 1) + " vanishes"),
          index(k) {}
    int index;
};

struct ValidationMismatchError : Error {
    ValidationMismatchError(int level, std::uint64_t i, std::uint64_t j)
        : Error("inferred presentation disagrees with oracle at level " +
                std::to_string(level) + ", entry (" + std::to_string(i) + "," +
                std::to_string(j) + ")"),
          level(level), row(i), col(j) {}
    int level;
    std::uint64_t row;
    std::uint64_t col;
};

struct UnknownKindError : Error {
    explicit UnknownKindError(const std::string& kind) : Error("unknown kind: " + kind) {}
};

struct UnsupportedOrderError : Error {
    explicit UnsupportedOrderError(int n)
        : Error("unsupported root-of-unity order " + std::to_string(n) +
                " (supported: 1, 2, 4)") {}
};

struct UnknownPresetError : Error {
    explicit UnknownPresetError(const std::string& name) : Error("unknown preset: " + name) {}
};

struct SingularSpecializationError : Error {
    using Error::Error;
};

struct UnknownGeneratorError : Error {
    explicit UnknownGeneratorError(const std::string& g) : Error("unknown generator: " + g) {}
};

}  // namespace recmat
