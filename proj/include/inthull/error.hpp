#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace inthull {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error
{
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Matrix shape does not fit the operation (e.g. determinant of a non-square matrix). */
class DimensionError : public Error
{
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

class SingularMatrixError : public Error
{
public:
    explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

/** A row with an all-zero left-hand side was passed where a proper inequality was expected. */
class DegenerateRowError : public Error
{
public:
    explicit DegenerateRowError(const std::string& what) : Error(what) {}
};

/** A vertex whose tight rows have rank below the dimension; the DD state is inconsistent. */
class DegenerateVertexError : public Error
{
public:
    explicit DegenerateVertexError(const std::string& what) : Error(what) {}
};

/** A configured size limit (determinant, box volume, residue count) was exceeded. */
class ResourceError : public Error
{
public:
    explicit ResourceError(const std::string& what) : Error(what) {}
};

class UnboundedError : public Error
{
public:
    explicit UnboundedError(const std::string& what) : Error(what) {}
};

class PreconditionError : public Error
{
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

class UnsupportedStateError : public Error
{
public:
    explicit UnsupportedStateError(const std::string& what) : Error(what) {}
};

class TimeoutError : public Error
{
public:
    explicit TimeoutError(const std::string& what) : Error(what) {}
};

/** Malformed input file. Carries the 1-based line number (0 when unknown). */
class ParseError : public Error
{
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/** A coefficient of the wrong numeric kind, e.g. a rational in an H-representation. */
class TypeError : public ParseError
{
public:
    TypeError(const std::string& what, std::size_t line) : ParseError(what, line) {}
};

/**
 * Cooperative wall-clock limit. Long-running loops call check() periodically;
 * once the limit has passed it throws TimeoutError and the computation unwinds.
 */
class Deadline
{
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;
    explicit Deadline(Clock::time_point at) : at_(at) {}

    static Deadline after(std::chrono::duration<double> budget)
    {
        return Deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget));
    }

    bool expired() const { return at_ && Clock::now() >= *at_; }

    void check() const
    {
        if (expired())
            throw TimeoutError("time limit exceeded");
    }

private:
    std::optional<Clock::time_point> at_;
};

}  // namespace inthull
