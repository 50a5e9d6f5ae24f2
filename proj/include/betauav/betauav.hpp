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

#include "betauav/bigint.hpp"
#include "betauav/bytes.hpp"
#include "betauav/curve.hpp"
#include "betauav/ecdsa.hpp"
#include "betauav/errors.hpp"
#include "betauav/hash.hpp"
#include "betauav/ledger.hpp"
#include "betauav/metrics.hpp"
#include "betauav/opcount.hpp"
#include "betauav/pki.hpp"
#include "betauav/protocol.hpp"
#include "betauav/report.hpp"
#include "betauav/rng.hpp"
#include "betauav/simnet.hpp"
