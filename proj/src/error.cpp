#include "netmap/error.hpp"

namespace netmap {

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::usage: return 1;
    case ErrorKind::parse: return 2;
    case ErrorKind::domain: return 3;
    case ErrorKind::infeasible: return 4;
    }
    return 3;
}

const char* kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::usage: return "usage";
    case ErrorKind::parse: return "parse";
    case ErrorKind::domain: return "domain";
    case ErrorKind::infeasible: return "infeasible";
    }
    return "domain";
}

}  // namespace netmap
