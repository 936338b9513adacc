#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fqcensus {

// Default cap on enumeration states for exhaustive searches. Keeps an
// accidental q^{n^2} blowup from hanging a run; callers may raise it.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

// An enumeration space exceeds the configured budget guard.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Two independent routes that must agree did not. This is never resolved
// silently; it aborts the computation that detected it.
class verification_error : public std::logic_error {
public:
    explicit verification_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fqcensus
