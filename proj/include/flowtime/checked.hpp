#ifndef FLOWTIME_CHECKED_HPP
#define FLOWTIME_CHECKED_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flowtime {

/// Error codes surfaced by library operations.
enum class Errc {
    overflow,
    infeasible,
    too_large,
    no_schedule,
    capacity,
    too_long,
    bad_partition,
    invalid_instance,
    unknown_job,
    incomplete,
    parse
};

const char* to_string(Errc code);

/// Exception carrying a machine-readable error code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Reduction parameters grow like n^6*y^2, so all arithmetic on instance
// data is overflow-checked 64-bit.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(Errc::overflow, "integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(Errc::overflow, "integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(Errc::overflow, "integer overflow in multiplication");
    return r;
}

} // namespace flowtime

#endif
