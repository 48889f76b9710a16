#pragma once

#include <stdexcept>
#include <string>

namespace mgeo {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed tables, files, or arguments (non-square input, bad grammar).
struct input_error : error {
    using error::error;
};

// Valid input outside an operation's domain (empty set, alpha > 1, ...).
struct domain_error : error {
    using error::error;
};

// The mesh is too coarse to carry out the requested construction.
struct resolution_error : error {
    using error::error;
};

// A stated precondition of a lemma-level construction failed.
struct precondition_error : error {
    using error::error;
};

struct io_error : error {
    using error::error;
};

struct config_error : error {
    using error::error;
};

} // namespace mgeo
