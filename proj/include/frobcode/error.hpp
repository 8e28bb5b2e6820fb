// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace frobcode {

enum class Errc {
    invalid_spec,
    syntax,
    cap_exceeded,
    malformed_character,
    not_rational,
    not_local,
    not_chain_ring,
    structure_violation,
    dimension_mismatch,
    not_in_code,
    wrong_ring,
    bad_literal,
    internal,
};

const char* errc_name(Errc code) noexcept;

/// Single exception type for the library; `code()` tells the failures apart.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Parse error with a byte offset into the offending text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(Errc::syntax, what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace frobcode
