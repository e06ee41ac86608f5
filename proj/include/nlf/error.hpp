#ifndef NLF_ERROR_HPP
#define NLF_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlf {

/// Process exit codes used by the command line front end.
enum class ExitCode : int {
    ok = 0,
    parse = 2,
    invariant = 3,
    unsupported = 4,
    inconclusive = 5,
};

/// Root of the library's exception hierarchy. Every error knows which exit
/// code the CLI should report for it.
class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

/// Malformed input text. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : Error(ExitCode::parse, line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A violated mathematical or structural invariant (non-primitive class,
/// undeclared disjointness, pair that does not cancel, ...).
class InvariantError : public Error {
public:
    explicit InvariantError(const std::string& what) : Error(ExitCode::invariant, what) {}
};

class DimensionError : public InvariantError {
public:
    using InvariantError::InvariantError;
};

/// Input outside the hypotheses the library supports (e.g. lifting for g < 3).
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& what) : Error(ExitCode::unsupported, what) {}
};

/// A certificate step that cannot be replayed. `step()` is the 0-based move index,
/// or npos for header problems such as a start hash mismatch.
class ReplayError : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    ReplayError(std::size_t step, const std::string& what)
        : Error(ExitCode::invariant,
                step == npos ? what : "step " + std::to_string(step) + ": " + what),
          step_(step) {}
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

} // namespace nlf

#endif // NLF_ERROR_HPP
