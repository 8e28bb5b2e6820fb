// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "frobcode/error.hpp"

namespace frobcode {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_spec: return "invalid-spec";
        case Errc::syntax: return "syntax";
        case Errc::cap_exceeded: return "cap-exceeded";
        case Errc::malformed_character: return "malformed-character";
        case Errc::not_rational: return "not-rational";
        case Errc::not_local: return "not-local";
        case Errc::not_chain_ring: return "not-chain-ring";
        case Errc::structure_violation: return "structure-violation";
        case Errc::dimension_mismatch: return "dimension-mismatch";
        case Errc::not_in_code: return "not-in-code";
        case Errc::wrong_ring: return "wrong-ring";
        case Errc::bad_literal: return "bad-literal";
        case Errc::internal: return "internal";
    }
    return "unknown";
}

}  // namespace frobcode
