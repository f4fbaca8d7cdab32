// Copyright 2026 The tsirelson-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Everything except the JSON views (tsirelson/json.hpp), which pull in
// nlohmann/json.

#pragma once

#include "tsirelson/context.hpp"
#include "tsirelson/error.hpp"
#include "tsirelson/harness.hpp"
#include "tsirelson/isometry.hpp"
#include "tsirelson/norm.hpp"
#include "tsirelson/oracle.hpp"
#include "tsirelson/ordinal.hpp"
#include "tsirelson/rational.hpp"
#include "tsirelson/schreier.hpp"
#include "tsirelson/vector.hpp"
