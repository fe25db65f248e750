#pragma once

#include <stdexcept>
#include <string>

namespace surgeon {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An infinite coefficient showed up where only finite arithmetic is defined.
struct invalid_coefficient : error {
    using error::error;
};

// cf_zero_absorb found no interior zero to remove.
struct no_rewrite_applies : error {
    using error::error;
};

struct not_coprime : error {
    using error::error;
};

// A chain segment kept a non-integral interior coefficient after splitting
// and head expansion.
struct invalid_chain : error {
    using error::error;
};

struct unsupported_parameters : error {
    using error::error;
};

// Two magic-manifold patterns matched the same triple but disagree.
struct magic_inconsistency : error {
    using error::error;
};

struct invalid_cusp : error {
    using error::error;
};

struct invalid_multislope : error {
    using error::error;
};

struct unknown_table : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

} // namespace surgeon
