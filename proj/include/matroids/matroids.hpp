// Copyright 2026 The Authors.
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

#ifndef MATROIDS_MATROIDS_HPP_
#define MATROIDS_MATROIDS_HPP_

#include "matroids/connectivity.hpp"
#include "matroids/constructions.hpp"
#include "matroids/core.hpp"
#include "matroids/errors.hpp"
#include "matroids/exchange.hpp"
#include "matroids/flats.hpp"
#include "matroids/isomorphism.hpp"
#include "matroids/matroid.hpp"
#include "matroids/minor_search.hpp"
#include "matroids/rep_types.hpp"
#include "matroids/representations.hpp"
#include "matroids/subset.hpp"
#include "matroids/tangle.hpp"
#include "matroids/verify.hpp"

#endif  // MATROIDS_MATROIDS_HPP_
