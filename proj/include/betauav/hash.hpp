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

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <cstring>
#include <span>

#include "betauav/bytes.hpp"
#include "betauav/opcount.hpp"

namespace betauav {

/// 256-bit hash output.
using Digest = std::array<std::uint8_t, 32>;

constexpr std::size_t kDigestBytes = 32;

/// The system hash H1: SHA-256.
inline Digest h1(std::span<const std::uint8_t> data) {
    detail::bump_hash();
    Digest out{};
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr);
    return out;
}

inline Digest h1(const Bytes& data) { return h1(as_span(data)); }
inline Digest h1(std::string_view data) { return h1(as_span(data)); }

inline std::string to_hex(const Digest& d) {
    return to_hex(std::span<const std::uint8_t>(d.data(), d.size()));
}

struct DigestHash {
    std::size_t operator()(const Digest& d) const {
        std::size_t v;
        std::memcpy(&v, d.data(), sizeof(v));
        return v;
    }
};

}  // namespace betauav
