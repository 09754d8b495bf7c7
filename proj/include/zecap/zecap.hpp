// Copyright 2026 The zecap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "zecap/certificates.hpp"
#include "zecap/error.hpp"
#include "zecap/graph.hpp"
#include "zecap/io.hpp"
#include "zecap/log.hpp"
#include "zecap/nonsignalling.hpp"
#include "zecap/numerics.hpp"
#include "zecap/numtheory.hpp"
#include "zecap/reproduce.hpp"
#include "zecap/sdp_solver.hpp"
#include "zecap/spectra.hpp"
#include "zecap/theta.hpp"
#include "zecap/upsilon.hpp"
