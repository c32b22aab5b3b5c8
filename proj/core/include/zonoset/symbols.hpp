// Copyright (c) zonoset contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace zonoset {

/// Central symbols (printed `e<i>`) model inputs and nonlinear remainders; perturbation
/// symbols (printed `n<j>`) model uncertainty introduced by control-flow joins.
enum class SymbolKind : std::uint8_t { Central, Perturbation };

struct SymbolId {
    SymbolKind kind = SymbolKind::Central;
    std::uint32_t index = 0;

    friend auto operator<=>(const SymbolId&, const SymbolId&) = default;

    [[nodiscard]] std::string str() const;
};

/// Allocator for noise symbols. Indices start at 1 and only grow. One registry per analysis;
/// it is the only mutable object of the domain and is not thread-safe.
class SymbolRegistry {
  public:
    SymbolId fresh(SymbolKind kind);

    /// Index the next allocation of `kind` will receive.
    [[nodiscard]] std::uint32_t next_index(SymbolKind kind) const {
        return kind == SymbolKind::Central ? next_central_ : next_perturbation_;
    }

  private:
    std::uint32_t next_central_ = 1;
    std::uint32_t next_perturbation_ = 1;
};

inline SymbolId fresh_symbol(SymbolRegistry& reg, SymbolKind kind) { return reg.fresh(kind); }

} // namespace zonoset
