#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace netmap {

enum class ErrorKind { usage, parse, domain, infeasible };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// exit codes: 1 usage, 2 parse, 3 domain, 4 infeasible
int exit_code(ErrorKind kind);
const char* kind_name(ErrorKind kind);

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::domain, "integer overflow");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::domain, "integer overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::domain, "integer overflow");
    return r;
}

// floor-style residue in [0, m)
inline Int mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace netmap
