// Copyright 2026 The betauav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace betauav {

/// Tally of cryptographic primitive invocations. sign/verify are counted in
/// addition to the scalar multiplications and hashes they perform internally,
/// so delay models price only the three base primitives.
struct OpCounts {
    std::uint64_t scalar_mul = 0;
    std::uint64_t point_add = 0;
    std::uint64_t hash = 0;
    std::uint64_t sign = 0;
    std::uint64_t verify = 0;

    OpCounts& operator+=(const OpCounts& o) {
        scalar_mul += o.scalar_mul;
        point_add += o.point_add;
        hash += o.hash;
        sign += o.sign;
        verify += o.verify;
        return *this;
    }
    friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

namespace detail {
inline thread_local OpCounts* g_op_counts = nullptr;

inline void bump_scalar_mul() { if (g_op_counts) ++g_op_counts->scalar_mul; }
inline void bump_point_add() { if (g_op_counts) ++g_op_counts->point_add; }
inline void bump_hash() { if (g_op_counts) ++g_op_counts->hash; }
inline void bump_sign() { if (g_op_counts) ++g_op_counts->sign; }
inline void bump_verify() { if (g_op_counts) ++g_op_counts->verify; }
}  // namespace detail

/// Routes primitive counting to `target` for the lifetime of the scope.
/// Scopes nest; the previous target is restored on exit. Thread-local, so
/// concurrent callers never observe each other's counts.
class OpCountScope {
public:
    explicit OpCountScope(OpCounts& target) : prev_(detail::g_op_counts) {
        detail::g_op_counts = &target;
    }
    ~OpCountScope() { detail::g_op_counts = prev_; }
    OpCountScope(const OpCountScope&) = delete;
    OpCountScope& operator=(const OpCountScope&) = delete;

private:
    OpCounts* prev_;
};

}  // namespace betauav
