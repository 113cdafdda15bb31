/** @file defs.hpp
 *  Common error types and the cooperative per-case deadline used by the
 *  verification runner.
 */
#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace orelax {

enum class ErrKind {
    DivisionByZero,
    UnknownSymbol,
    PoleAtPoint,
    NonNormalizableInverse,
    NotPolynomialIn,
    PoleAtEpsilon2,
    NonInvertibleLeader,
    NonInvertibleChange,
    UnknownName,
    CapExceeded,
    NoSolution,
    SyntaxError,
    Timeout,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrKind kind() const { return kind_; }

  private:
    ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

/// Cooperative deadline: long-running kernels (polynomial multiplication,
/// GCD) poll this so a runaway case can be cut off without killing threads.
class Deadline {
  public:
    /// Install a deadline for the current thread; 0 seconds disables it.
    static void set(double seconds) {
        if (seconds <= 0) {
            armed() = false;
            return;
        }
        armed() = true;
        when() = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(seconds));
    }
    static void clear() { armed() = false; }
    static void check() {
        if (armed() && std::chrono::steady_clock::now() > when())
            fail(ErrKind::Timeout, "case deadline exceeded");
    }

  private:
    static bool& armed() {
        thread_local bool a = false;
        return a;
    }
    static std::chrono::steady_clock::time_point& when() {
        thread_local std::chrono::steady_clock::time_point t;
        return t;
    }
};

} // namespace orelax
