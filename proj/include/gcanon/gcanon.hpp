// Copyright 2026 The gcanon Authors
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

// Umbrella header.

#ifndef GCANON_GCANON_HPP_
#define GCANON_GCANON_HPP_

#include "gcanon/canon.hpp"
#include "gcanon/codec.hpp"
#include "gcanon/error.hpp"
#include "gcanon/filter.hpp"
#include "gcanon/generate.hpp"
#include "gcanon/graph.hpp"
#include "gcanon/properties.hpp"
#include "gcanon/refine.hpp"
#include "gcanon/repro.hpp"

#endif  // GCANON_GCANON_HPP_
