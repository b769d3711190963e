#pragma once

#include <stdexcept>
#include <string>

namespace filar {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- graph construction / enumeration ----
struct NotSimple : Error {
    using Error::Error;
};

struct NotRegular : Error {
    NotRegular(int vertex, int degree, int expected)
        : Error("vertex " + std::to_string(vertex) + " has degree " +
                std::to_string(degree) + ", expected " + std::to_string(expected)),
          vertex(vertex), degree(degree), expected(expected) {}
    int vertex;
    int degree;
    int expected;
};

struct Disconnected : Error {
    using Error::Error;
};

struct OddHandshake : Error {
    using Error::Error;
};

struct InfeasibleParameters : Error {
    using Error::Error;
};

struct SizeLimitExceeded : Error {
    using Error::Error;
};

// ---- graph6 codec ----
struct MalformedGraph6 : Error {
    using Error::Error;
};

struct UnsupportedLength : Error {
    using Error::Error;
};

// ---- spectral ----
struct ConvergenceFailure : Error {
    using Error::Error;
};

// ---- geodesics ----
struct OverflowGuard : Error {
    using Error::Error;
};

struct InversionInconsistency : Error {
    using Error::Error;
};

struct NonIntegral : Error {
    using Error::Error;
};

// ---- trace formula numerics ----
struct DomainError : Error {
    using Error::Error;
};

struct TailBoundNotMet : Error {
    using Error::Error;
};

struct AsymmetricTestFunction : Error {
    using Error::Error;
};

// ---- pipeline ----
struct SourceUnavailable : Error {
    using Error::Error;
};

struct CacheCorrupt : Error {
    using Error::Error;
};

struct IoFailure : Error {
    using Error::Error;
};

} // namespace filar
