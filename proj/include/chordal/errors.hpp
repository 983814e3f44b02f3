#pragma once

#include <stdexcept>
#include <string>

namespace chordal {

/// Malformed input file or string; `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// An exhaustive computation was asked to run beyond a configured size limit.
class SizeGuardError : public std::runtime_error {
public:
    SizeGuardError(const std::string& guard, long long limit, long long actual)
        : std::runtime_error("size guard '" + guard + "' exceeded: " + std::to_string(actual) + " > " +
                             std::to_string(limit)),
          guard_(guard) {}
    const std::string& guard() const { return guard_; }

private:
    std::string guard_;
};

/// Hard limits for the exponential algorithms. Defaults are the documented ones.
struct SizeGuards {
    int hochster_max_n = 16;
    int homology_max_n = 20;
    int extendable_max_facets = 25;
    int deletion_contraction_max_n = 10;
    int induced_cycle_max_n = 12;
};

inline void check_guard(const char* name, long long limit, long long actual) {
    if (actual > limit) throw SizeGuardError(name, limit, actual);
}

}  // namespace chordal
