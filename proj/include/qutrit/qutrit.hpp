// Copyright 2026 The qutrit-witnesses Authors
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

// Umbrella header. serialize.hpp is left out so that users of the numerics
// do not need the JSON dependency.

#include "gellmann.hpp"
#include "linalg.hpp"
#include "maps.hpp"
#include "oracles.hpp"
#include "rational.hpp"
#include "spa.hpp"
#include "states.hpp"
#include "witnesses.hpp"
