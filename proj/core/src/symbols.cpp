// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#include "zonoset/symbols.hpp"

namespace zonoset {

std::string SymbolId::str() const { return (kind == SymbolKind::Central ? "e" : "n") + std::to_string(index); }

SymbolId SymbolRegistry::fresh(SymbolKind kind) {
    if (kind == SymbolKind::Central) {
        return {kind, next_central_++};
    }
    return {kind, next_perturbation_++};
}

} // namespace zonoset
